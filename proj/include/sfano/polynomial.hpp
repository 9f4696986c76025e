#ifndef SFANO_POLYNOMIAL_HPP
#define SFANO_POLYNOMIAL_HPP

#include "sfano/field.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace sfano {

// An ordered list of variable names over a fixed coefficient field.
class Ring {
public:
    Ring(std::vector<std::string> vars, Field field);

    const std::vector<std::string>& vars() const { return vars_; }
    std::size_t size() const { return vars_.size(); }
    const Field& field() const { return field_; }
    const std::string& name(std::size_t i) const { return vars_[i]; }
    std::optional<std::size_t> index_of(const std::string& name) const;

    bool operator==(const Ring& o) const { return field_ == o.field_ && vars_ == o.vars_; }

private:
    std::vector<std::string> vars_;
    Field field_;
    std::unordered_map<std::string, std::size_t> index_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> vars, const Field& field);
// x0..x{n-1} style names: prefix + index.
RingPtr indexed_ring(const std::string& prefix, std::size_t count, const Field& field);
bool same_ring(const RingPtr& a, const RingPtr& b);

// Natural ordering of names: digit runs compare numerically, so x2 < x10.
bool natural_less(const std::string& a, const std::string& b);

class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps);

    static Monomial unit(std::size_t nvars, std::size_t var, std::uint32_t power = 1);

    std::size_t size() const { return exps_.size(); }
    std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
    const std::vector<std::uint32_t>& exponents() const { return exps_; }
    std::uint32_t degree() const { return degree_; }
    bool is_one() const { return degree_ == 0; }

    void set(std::size_t i, std::uint32_t e);

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    // Requires divides(o) to hold for *this by `d`: returns this / d.
    Monomial quotient(const Monomial& d) const;
    Monomial lcm(const Monomial& o) const;
    bool coprime(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return degree_ == o.degree_ && exps_ == o.exps_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

private:
    std::vector<std::uint32_t> exps_;
    std::uint32_t degree_ = 0;
};

// Graded reverse lexicographic comparison: negative if a < b.
int grevlex_compare(const Monomial& a, const Monomial& b);

struct GrevlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_compare(a, b) > 0; }
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const;
};

struct Term {
    Monomial monomial;
    Scalar coeff;
};

// Sparse polynomial in canonical form: terms sorted by descending grevlex,
// no zero coefficients.
class Polynomial {
public:
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
    Polynomial(RingPtr ring, std::vector<Term> terms);

    static Polynomial constant(RingPtr ring, const Scalar& c);
    static Polynomial variable(RingPtr ring, std::size_t index);
    static Polynomial variable(RingPtr ring, const std::string& name);
    static Polynomial monomial(RingPtr ring, Monomial m, const Scalar& c);

    const RingPtr& ring() const { return ring_; }
    const Field& field() const { return ring_->field(); }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }

    // -1 for the zero polynomial.
    int degree() const;
    int degree_in(std::size_t var) const;
    bool is_homogeneous() const;
    const Term& leading_term() const { return terms_.front(); }
    const Monomial& leading_monomial() const { return terms_.front().monomial; }
    const Scalar& leading_coeff() const { return terms_.front().coeff; }
    Scalar coefficient(const Monomial& m) const;
    std::vector<std::size_t> variables_used() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial scaled(const Scalar& c) const;
    Polynomial mul_term(const Monomial& m, const Scalar& c) const;
    Polynomial pow(unsigned e) const;
    Polynomial monic() const;

    // Re-express in another ring by matching variable names. Throws
    // InputError if a used variable is missing from the target.
    Polynomial embed(const RingPtr& target) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    void require_same_ring(const Polynomial& o) const;

    RingPtr ring_;
    std::vector<Term> terms_;
};

std::string format_monomial(const Ring& ring, const Monomial& m);

// Parsing. Without a declared ring, the ring is the naturally sorted set of
// variables that occur in the input.
Polynomial parse(const std::string& text, const Field& field);
Polynomial parse(const std::string& text, const RingPtr& ring);
// Parses several polynomials into one shared ring (declared, or the union of
// the variables that occur).
std::vector<Polynomial> parse_all(const std::vector<std::string>& texts, const Field& field,
                                  const std::optional<std::vector<std::string>>& declared_vars = std::nullopt);

// Maps variable names of the source ring to polynomials in a common target ring.
class Substitution {
public:
    explicit Substitution(RingPtr target) : target_(std::move(target)) {}

    Substitution& assign(const std::string& var, Polynomial image);
    const RingPtr& target() const { return target_; }
    const Polynomial* find(const std::string& var) const;

private:
    RingPtr target_;
    std::map<std::string, Polynomial> assignments_;
};

Polynomial substitute(const Polynomial& f, const Substitution& s);
// Substitution by position: variable i of f's ring goes to images[i].
Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images);

Polynomial partial_derivative(const Polynomial& f, std::size_t var);
Polynomial partial_derivative(const Polynomial& f, const std::string& var);

// f = sum over entries of (monomial in `vars`) * (coefficient in the other
// variables). Entries are in descending grevlex order of the var-monomial.
struct CoefficientMap {
    RingPtr var_ring;    // the collected variables, in f's ring order
    RingPtr coeff_ring;  // the remaining variables
    std::vector<std::pair<Monomial, Polynomial>> entries;

    const Polynomial* find(const Monomial& m) const;
};

CoefficientMap collect_coefficients(const Polynomial& f, const std::vector<std::string>& vars);
// Inverse of collect_coefficients, into the given ring.
Polynomial reassemble(const CoefficientMap& cm, const RingPtr& ring);

Scalar evaluate(const Polynomial& f, std::span<const Scalar> point);

// Exponent vectors of total degree d in n variables, descending grevlex.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t d);

}  // namespace sfano

#endif
