#ifndef SFANO_STRENGTH_HPP
#define SFANO_STRENGTH_HPP

#include "sfano/ideals.hpp"
#include "sfano/matrix.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sfano {

// Integer extended by -inf and +inf.
class ExtendedInt {
public:
    enum class Kind { NegInfinity, Finite, Infinity };

    constexpr ExtendedInt(long long v = 0) : kind_(Kind::Finite), value_(v) {}
    static constexpr ExtendedInt infinity() { return ExtendedInt(Kind::Infinity); }
    static constexpr ExtendedInt neg_infinity() { return ExtendedInt(Kind::NegInfinity); }

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::Finite; }
    long long value() const;  // throws for the infinities

    std::string to_string() const;  // "inf", "-inf" or the number

    friend bool operator==(const ExtendedInt& a, const ExtendedInt& b) {
        return a.kind_ == b.kind_ && (a.kind_ != Kind::Finite || a.value_ == b.value_);
    }
    friend bool operator<(const ExtendedInt& a, const ExtendedInt& b) {
        if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) < static_cast<int>(b.kind_);
        return a.kind_ == Kind::Finite && a.value_ < b.value_;
    }
    friend bool operator<=(const ExtendedInt& a, const ExtendedInt& b) { return !(b < a); }

private:
    constexpr explicit ExtendedInt(Kind k) : kind_(k), value_(0) {}
    Kind kind_;
    long long value_;
};

struct ProductPair {
    Polynomial g, h;
};

enum class CertificateKind { ExactQuadric, UpperBoundDecomposition };

struct StrengthCertificate {
    CertificateKind kind = CertificateKind::UpperBoundDecomposition;
    int value = 0;
    std::vector<ProductPair> decomposition;
    std::optional<std::size_t> rank;  // quadrics only
    // false when the explicit decomposition over the base field uses more
    // pairs than value + 1 (the value itself holds over the algebraic closure)
    bool decomposition_minimal = true;
};

// Symmetric Gram matrix of a quadratic form (characteristic != 2).
Matrix gram_matrix(const Polynomial& q);

StrengthCertificate quadric_strength(const Polynomial& f);
// Throws VerificationError carrying the nonzero difference, or InputError on
// degree violations.
StrengthCertificate verify_decomposition(const Polynomial& f, const std::vector<ProductPair>& pairs);

struct SmoothStrengthReport {
    std::optional<ExtendedInt> value;  // nullopt when the dimension was inconclusive
    DimensionReport dimension;         // of the singular-locus ideal

    bool inconclusive() const { return !value.has_value(); }
};

SmoothStrengthReport smooth_strength(const Polynomial& f, const GroebnerLimits& limits = {});

struct SampleOptions {
    std::size_t trials = 20;
    std::uint64_t seed = 1;
    bool exhaustive_grid = true;  // coefficients in {-2..2} when there are at most 3 forms
    GroebnerLimits limits;
};

struct CollectiveSample {
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::optional<ExtendedInt> min_observed;  // nullopt when inconclusive
    std::vector<Scalar> witness;              // empty when the forms are dependent
    std::size_t combinations = 0;
    std::string note;

    bool inconclusive() const { return !min_observed.has_value(); }
};

// Axis vectors first, then the optional small grid, then `trials` seeded
// random vectors with nonzero entries in [-16, 16].
CollectiveSample collective_smooth_strength_sample(const std::vector<Polynomial>& fs, const SampleOptions& options);

// k x k minors of the Jacobian of fs (k = |fs| <= 5).
std::vector<Polynomial> jacobian_maximal_minors(const std::vector<Polynomial>& fs);

struct Lemma212Report {
    ExtendedInt claimed;
    ExtendedInt bound;        // n - s + k - 1
    DimensionReport locus;    // non-smooth locus of V(fs)
    std::optional<bool> pass; // nullopt when inconclusive
};

Lemma212Report lemma_2_12_check(const std::vector<Polynomial>& fs, ExtendedInt s, const GroebnerLimits& limits = {});

}  // namespace sfano

#endif
