#ifndef SFANO_IDEALS_HPP
#define SFANO_IDEALS_HPP

#include "sfano/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sfano {

// Generators of an ideal in one common ring; zero generators are dropped, so
// an empty generator list is the zero ideal.
class IdealBasis {
public:
    IdealBasis(RingPtr ring, std::vector<Polynomial> generators);
    explicit IdealBasis(std::vector<Polynomial> generators);

    const RingPtr& ring() const { return ring_; }
    const Field& field() const { return ring_->field(); }
    const std::vector<Polynomial>& generators() const { return gens_; }

private:
    RingPtr ring_;
    std::vector<Polynomial> gens_;
};

struct GroebnerLimits {
    std::size_t max_basis_size = 4000;
    std::uint32_t max_pair_degree = 40;
};

struct GroebnerOutcome {
    // nullopt when a limit was exceeded
    std::optional<std::vector<Polynomial>> basis;
    std::string inconclusive_reason;
    std::size_t pairs_reduced = 0;

    bool complete() const { return basis.has_value(); }
};

// Reduced grevlex Groebner basis (monic, sorted by ascending leading monomial).
GroebnerOutcome groebner_basis(const IdealBasis& ideal, const GroebnerLimits& limits = {});

// Full reduction of f modulo `divisors` (leading and tail terms).
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& divisors);
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);
// Every S-pair reduces to zero.
bool is_groebner_basis(const std::vector<Polynomial>& basis);

enum class DimensionMethod { Groebner, PointCount };

struct PointCount {
    std::uint32_t prime;
    std::uint64_t count;
};

struct DimensionReport {
    std::optional<int> dimension;  // nullopt = inconclusive; -1 = empty variety
    DimensionMethod method = DimensionMethod::Groebner;
    std::vector<Monomial> leading_monomials;  // groebner evidence
    std::vector<PointCount> counts;           // point-count evidence, by prime order
    std::string note;

    bool inconclusive() const { return !dimension.has_value(); }
};

// Combinatorial dimension from a set of leading monomials: the largest set of
// variables containing the support of none of them. -1 if a monomial is 1.
int dimension_from_leading_monomials(std::size_t nvars, const std::vector<Monomial>& lms);

DimensionReport affine_dimension(const IdealBasis& ideal, const GroebnerLimits& limits = {});

// Heuristic oracle: counts F_p-points of V(ideal) for each prime and reports
// round(log_p N_p) for the largest prime. Generators must have coefficients
// that reduce mod every p. Enumeration runs over all but the last variable
// (the last is handled by counting roots of a univariate gcd), and gives up
// when p^(nvars-1) exceeds `budget`.
DimensionReport point_count_dimension(const IdealBasis& ideal, std::span<const std::uint32_t> primes,
                                      std::uint64_t budget = 100'000'000);

// Number of points of V(gens) over F_p. Returns nullopt over budget.
std::optional<std::uint64_t> count_points(const IdealBasis& ideal, std::uint32_t p, std::uint64_t budget);

}  // namespace sfano

#endif
