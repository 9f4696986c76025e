#ifndef SFANO_FANO_HPP
#define SFANO_FANO_HPP

#include "sfano/ideals.hpp"
#include "sfano/residual.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sfano {

struct FanoEquation {
    std::size_t source;  // index into FanoSystem::sources
    Monomial alpha;      // exponents over s0..sk
    Polynomial g;        // in the u-variables; may be zero in positive characteristic
};

// Coefficients of s^alpha in f_l(X_0..X_n), X_j = sum_i s_i u_{i,j}.
struct FanoSystem {
    std::size_t k = 0;
    std::vector<Polynomial> sources;
    RingPtr u_ring;  // u0_0..u0_n, u1_0.., ..., uk_n
    std::vector<FanoEquation> equations;

    std::size_t zero_slots() const;
    std::string alpha_string(const Monomial& alpha) const;  // "(2,2)"
};

FanoSystem fano_equations(const std::vector<Polynomial>& fs, std::size_t k);

// sum_alpha s^alpha g_{l,alpha} == f_l(X) for every l.
bool verify_reassembly(const FanoSystem& sys);

// multinomial(d; alpha) as an integer
mpz_class multinomial(const Monomial& alpha);

struct TransferRecord {
    std::size_t source;
    Monomial alpha;
    Polynomial image;      // g under u_{i,j} -> lambda_i x_j
    Polynomial predicted;  // lambda^alpha * multinomial * f
    bool equal;
};

std::vector<TransferRecord> transfer_specialize(const FanoSystem& sys, const std::vector<Scalar>& lambda);

struct TransferRankReport {
    std::size_t source_min_rank = 0;   // sampled minimum Gram rank over source combinations
    std::vector<Scalar> source_witness;
    std::size_t min_observed_rank = 0;  // over combinations of the Fano equations
    std::vector<Scalar> witness;
    std::size_t combinations = 0;
    bool pass = false;
};

// Quadrics only. Axis vectors first, then `trials` seeded random vectors.
TransferRankReport transfer_rank_check(const FanoSystem& sys, std::size_t trials, std::uint64_t seed);

struct FanoDimensionReport {
    long long expected = 0;  // (k+1)(n+1) - sum C(d+k, k)
    DimensionReport computed;
    std::size_t equation_count = 0;
    std::optional<bool> match;  // nullopt when inconclusive
};

FanoDimensionReport fano_dimension_check(const std::vector<Polynomial>& fs, std::size_t k,
                                         const GroebnerLimits& limits = {});

struct FlagEquation {
    std::size_t source;
    Monomial monomial;  // over the plane coordinates and t, positive t-degree
    std::string label;
    Polynomial equation;  // in the direction variables
};

struct FlagFanoSystem {
    ChartFrame frame;
    RingPtr direction_ring;
    std::vector<FlagEquation> equations;
    std::size_t binomial_count = 0;  // sum C(k + 1 + d, k + 1), t-degree 0 included

    // a in chart coordinates
    bool satisfied_by(const std::vector<Scalar>& a) const;
};

FlagFanoSystem flag_fano_equations(const std::vector<Polynomial>& fs, const PlaneChart& plane);

}  // namespace sfano

#endif
