#ifndef SFANO_BOUNDS_HPP
#define SFANO_BOUNDS_HPP

#include <gmpxx.h>

#include <vector>

namespace sfano {

using DegreeTuple = std::vector<unsigned>;

// Sorted, with 0s and 1s removed.
DegreeTuple normalize_degrees(DegreeTuple ds);

mpz_class binomial(unsigned long n, unsigned long k);

// U() = 1, U(d) = 1 + 2 sum_i C(U(d - 1) + d_i + 1, d_i) on normalized tuples.
mpz_class u_str(const DegreeTuple& ds);

// 1 + 2 sum C(k + d_i, k)
mpz_class theorem_3_6_threshold(const DegreeTuple& ds, unsigned k);
// smallest n with n - k - 1 >= sum C(k + 1 + d_i, k + 1)
mpz_class lemma_4_3_bound(const DegreeTuple& ds, unsigned k);
// smallest n with n >= k + 1 + sum C(k + d_i - 1, k)
mpz_class prop_4_4_bound(const DegreeTuple& ds, unsigned k);
// 1 + 2 sum C(d_i + k + 1, k + 1)
mpz_class cor_4_5_bound(const DegreeTuple& ds, unsigned k);
// 2c + 1
mpz_class cor_2_13_bound(unsigned c);

}  // namespace sfano

#endif
