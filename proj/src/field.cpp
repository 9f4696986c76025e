#include "sfano/field.hpp"

#include "sfano/errors.hpp"

namespace sfano {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

// Deterministic Miller-Rabin; these bases are exact for all 64-bit inputs.
bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Field Field::prime(std::uint64_t p) {
    if (p >= (1ull << 31)) throw InputError("prime modulus must be < 2^31, got " + std::to_string(p));
    if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
    Field f;
    f.kind_ = FieldKind::PrimeField;
    f.modulus_ = static_cast<std::uint32_t>(p);
    return f;
}

Field Field::from_string(const std::string& spec) {
    if (spec == "rat" || spec == "Q" || spec == "rationals") return rationals();
    if (spec.rfind("fp:", 0) == 0) {
        const std::string digits = spec.substr(3);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw InputError("bad field spec '" + spec + "'");
        return prime(std::stoull(digits));
    }
    throw InputError("bad field spec '" + spec + "' (expected rat or fp:<p>)");
}

Scalar Field::from_int(long v) const {
    return from_mpz(mpz_class(v));
}

Scalar Field::from_mpz(const mpz_class& v) const {
    if (kind_ == FieldKind::Rationals) return Scalar(v);
    mpz_class r = v % modulus_;
    if (r < 0) r += modulus_;
    return Scalar(r);
}

Scalar Field::from_rational(const mpq_class& v) const {
    if (kind_ == FieldKind::Rationals) return v;
    Scalar num = from_mpz(v.get_num());
    Scalar den = from_mpz(v.get_den());
    if (is_zero(den))
        throw InputError("denominator " + v.get_den().get_str() + " is not invertible mod " +
                         std::to_string(modulus_));
    return div(num, den);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
    if (kind_ == FieldKind::Rationals) return a + b;
    std::uint64_t r = residue(a) + residue(b);
    if (r >= modulus_) r -= modulus_;
    return make(r);
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
    if (kind_ == FieldKind::Rationals) return a - b;
    std::uint64_t x = residue(a), y = residue(b);
    return make(x >= y ? x - y : x + modulus_ - y);
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
    if (kind_ == FieldKind::Rationals) return a * b;
    return make(residue(a) * residue(b) % modulus_);
}

Scalar Field::neg(const Scalar& a) const {
    if (kind_ == FieldKind::Rationals) return -a;
    std::uint64_t x = residue(a);
    return make(x == 0 ? 0 : modulus_ - x);
}

Scalar Field::inv(const Scalar& a) const {
    if (is_zero(a)) throw Error("division by zero in field " + to_string());
    if (kind_ == FieldKind::Rationals) return 1 / a;
    return make(powmod(residue(a), modulus_ - 2, modulus_));
}

Scalar Field::pow(const Scalar& a, unsigned e) const {
    Scalar r = one();
    Scalar b = a;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

bool Field::sqrt(const Scalar& a, Scalar& root) const {
    if (is_zero(a)) {
        root = 0;
        return true;
    }
    if (kind_ == FieldKind::Rationals) {
        if (sgn(a) < 0) return false;
        if (!mpz_perfect_square_p(a.get_num_mpz_t()) || !mpz_perfect_square_p(a.get_den_mpz_t())) return false;
        mpz_class n = ::sqrt(a.get_num()), d = ::sqrt(a.get_den());
        root = mpq_class(n, d);
        root.canonicalize();
        return true;
    }
    const std::uint64_t p = modulus_;
    const std::uint64_t x = residue(a);
    if (p == 2) {
        root = a;
        return true;
    }
    if (powmod(x, (p - 1) / 2, p) != 1) return false;
    std::uint64_t q = p - 1;
    unsigned s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    std::uint64_t z = 2;
    while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
    std::uint64_t m = s, c = powmod(z, q, p), t = powmod(x, q, p), r = powmod(x, (q + 1) / 2, p);
    while (t != 1) {
        std::uint64_t i = 0, tt = t;
        while (tt != 1) {
            tt = mulmod(tt, tt, p);
            ++i;
        }
        std::uint64_t b = c;
        for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = mulmod(b, b, p);
        m = i;
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        r = mulmod(r, b, p);
    }
    root = make(r);
    return true;
}

std::string Field::to_string() const {
    if (kind_ == FieldKind::Rationals) return "rat";
    return "fp:" + std::to_string(modulus_);
}

std::string Field::format(const Scalar& a) {
    return a.get_str();
}

}  // namespace sfano
