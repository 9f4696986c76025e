#ifndef SFANO_UNIRAT_HPP
#define SFANO_UNIRAT_HPP

#include "sfano/residual.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sfano {

struct MapVerification {
    bool substitution_ok = false;
    std::optional<std::size_t> jacobian_rank;  // projective rank at rank_point
    std::vector<Scalar> rank_point;
    int dominance_target_dim = 0;
    std::uint64_t seed = 0;
    int attempts = 0;

    bool dominant() const { return jacobian_rank && static_cast<int>(*jacobian_rank) == dominance_target_dim; }
};

// A rational map given by homogeneous components of one common degree.
struct RationalMapRecord {
    RingPtr source;
    std::vector<Polynomial> components;
    std::vector<Polynomial> target_constraints;  // each must pull back to zero
    int degree = 0;
    MapVerification verification;
    std::vector<std::string> notes;
};

// Pulls every constraint back along the components; throws VerificationError
// with the first nonzero residue.
void verify_substitution(RationalMapRecord& rec);

// Rank of [d components / d source | components] minus one at seeded random
// points off the base locus, at most 16 attempts.
void jacobian_rank_evidence(RationalMapRecord& rec, int target_dim, std::uint64_t seed);

// rho(v) = f(v) p - (grad f(p) . v) v in variables v0..vn.
RationalMapRecord quadric_parametrization(const Polynomial& f, const std::vector<Scalar>& point,
                                          std::uint64_t seed = 0);

// Cubic hypersurface containing a line: point q on the line, a direction in
// the linear incidence {a : sum a_i df/dx_i(q) = 0}, and the residual conic
// through q projected from q. Source variables q, c1..c(n-3), m, h.
RationalMapRecord cubic_with_line_parametrization(const Polynomial& f, const PlaneChart& line,
                                                  std::uint64_t seed = 0);

// F(g_0, ..., g_n).
Polynomial compose_substitution(const Polynomial& F, const std::vector<Polynomial>& gs);

// Fibers X_p = {g(y) proportional to p} for quadrics g_i in pairwise disjoint
// variable blocks. Source variables w<i>_<j> and coefficient variables
// p0..pn; constraints p_j g_i - p_i g_j.
RationalMapRecord quadric_fiber_family(const std::vector<Polynomial>& gs);

// Plugs z_param (a parametrization of V(F)) into the p-slots of the fiber
// family and verifies F(gs) o rho == 0.
RationalMapRecord pullback_parametrization(const Polynomial& F, const std::vector<Polynomial>& gs,
                                           const RationalMapRecord& family, const RationalMapRecord& z_param,
                                           std::uint64_t seed = 0);

}  // namespace sfano

#endif
