#ifndef SFANO_FIELD_HPP
#define SFANO_FIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace sfano {

// Field elements are always carried as mpq_class. Over a prime field the
// value is an integer in [0, p) and all operations reduce with 64-bit words.
using Scalar = mpq_class;

enum class FieldKind { Rationals, PrimeField };

bool is_prime(std::uint64_t n);

class Field {
public:
    Field() = default;  // rationals

    static Field rationals() { return Field(); }
    static Field prime(std::uint64_t p);
    // "rat" | "fp:<p>"
    static Field from_string(const std::string& spec);

    FieldKind kind() const { return kind_; }
    bool is_prime_field() const { return kind_ == FieldKind::PrimeField; }
    std::uint32_t modulus() const { return modulus_; }
    std::uint32_t characteristic() const { return modulus_; }

    Scalar zero() const { return Scalar(0); }
    Scalar one() const { return Scalar(1); }
    Scalar from_int(long v) const;
    Scalar from_mpz(const mpz_class& v) const;
    // Throws InputError when the denominator is not invertible mod p.
    Scalar from_rational(const mpq_class& v) const;

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const;
    Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }
    Scalar pow(const Scalar& a, unsigned e) const;
    static bool is_zero(const Scalar& a) { return sgn(a) == 0; }

    // Square root in the field if one exists (rationals: both numerator and
    // denominator perfect squares; prime field: Tonelli-Shanks).
    bool sqrt(const Scalar& a, Scalar& root) const;

    std::string to_string() const;
    static std::string format(const Scalar& a);

    bool operator==(const Field& o) const { return kind_ == o.kind_ && modulus_ == o.modulus_; }
    bool operator!=(const Field& o) const { return !(*this == o); }

private:
    std::uint64_t residue(const Scalar& a) const { return mpz_get_ui(a.get_num_mpz_t()); }
    Scalar make(std::uint64_t r) const { return Scalar(static_cast<unsigned long>(r)); }

    FieldKind kind_ = FieldKind::Rationals;
    std::uint32_t modulus_ = 0;
};

}  // namespace sfano

#endif
