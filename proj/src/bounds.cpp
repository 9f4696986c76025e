#include "sfano/bounds.hpp"

#include "sfano/errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace sfano {

DegreeTuple normalize_degrees(DegreeTuple ds) {
    ds.erase(std::remove_if(ds.begin(), ds.end(), [](unsigned d) { return d <= 1; }), ds.end());
    std::sort(ds.begin(), ds.end());
    return ds;
}

mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

namespace {

mpz_class binomial(const mpz_class& n, unsigned long k) {
    mpz_class out;
    mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), k);
    return out;
}

std::mutex memo_mutex;
std::map<DegreeTuple, mpz_class> memo;

mpz_class u_str_normalized(const DegreeTuple& ds) {
    if (ds.empty()) return 1;
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo.find(ds);
        if (it != memo.end()) return it->second;
    }
    DegreeTuple lowered;
    for (auto d : ds) lowered.push_back(d - 1);
    const mpz_class inner = u_str_normalized(normalize_degrees(lowered));
    mpz_class sum = 0;
    for (auto d : ds) sum += binomial(mpz_class(inner + d + 1), d);
    mpz_class out = 1 + 2 * sum;
    std::lock_guard<std::mutex> lock(memo_mutex);
    memo.emplace(ds, out);
    return out;
}

}  // namespace

mpz_class u_str(const DegreeTuple& ds) {
    return u_str_normalized(normalize_degrees(ds));
}

mpz_class theorem_3_6_threshold(const DegreeTuple& ds, unsigned k) {
    mpz_class sum = 0;
    for (auto d : ds) sum += binomial(k + d, k);
    return 1 + 2 * sum;
}

mpz_class lemma_4_3_bound(const DegreeTuple& ds, unsigned k) {
    mpz_class sum = 0;
    for (auto d : ds) sum += binomial(k + 1 + d, k + 1);
    return sum + k + 1;
}

mpz_class prop_4_4_bound(const DegreeTuple& ds, unsigned k) {
    mpz_class sum = 0;
    for (auto d : ds) {
        if (d == 0) throw InputError("degrees must be positive");
        sum += binomial(k + d - 1, k);
    }
    return sum + k + 1;
}

mpz_class cor_4_5_bound(const DegreeTuple& ds, unsigned k) {
    mpz_class sum = 0;
    for (auto d : ds) sum += binomial(d + k + 1, k + 1);
    return 1 + 2 * sum;
}

mpz_class cor_2_13_bound(unsigned c) {
    return 2 * mpz_class(c) + 1;
}

}  // namespace sfano
