#include "sfano/fano.hpp"

#include "sfano/bounds.hpp"
#include "sfano/errors.hpp"
#include "sfano/strength.hpp"

#include <random>

namespace sfano {

std::size_t FanoSystem::zero_slots() const {
    std::size_t n = 0;
    for (const auto& e : equations) n += e.g.is_zero();
    return n;
}

std::string FanoSystem::alpha_string(const Monomial& alpha) const {
    std::string out = "(";
    for (std::size_t i = 0; i < alpha.size(); ++i) out += (i ? "," : "") + std::to_string(alpha[i]);
    return out + ")";
}

namespace {

void require_common_ring(const std::vector<Polynomial>& fs) {
    if (fs.empty()) throw InputError("need at least one polynomial");
    for (const auto& f : fs)
        if (!same_ring(f.ring(), fs.front().ring())) throw InputError("polynomials must share one ring");
}

std::string u_name(std::size_t i, std::size_t j) {
    return "u" + std::to_string(i) + "_" + std::to_string(j);
}

struct Lift {
    RingPtr su_ring;  // u-variables then s0..sk
    std::vector<Polynomial> images;  // X_j
};

Lift lift(const RingPtr& x_ring, std::size_t k) {
    const std::size_t n1 = x_ring->size();
    std::vector<std::string> names;
    for (std::size_t i = 0; i <= k; ++i)
        for (std::size_t j = 0; j < n1; ++j) names.push_back(u_name(i, j));
    for (std::size_t i = 0; i <= k; ++i) names.push_back("s" + std::to_string(i));
    Lift out{make_ring(names, x_ring->field()), {}};
    for (std::size_t j = 0; j < n1; ++j) {
        Polynomial x(out.su_ring);
        for (std::size_t i = 0; i <= k; ++i)
            x += Polynomial::variable(out.su_ring, (k + 1) * n1 + i) * Polynomial::variable(out.su_ring, i * n1 + j);
        out.images.push_back(std::move(x));
    }
    return out;
}

std::vector<std::string> s_names(std::size_t k) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i <= k; ++i) out.push_back("s" + std::to_string(i));
    return out;
}

}  // namespace

FanoSystem fano_equations(const std::vector<Polynomial>& fs, std::size_t k) {
    require_common_ring(fs);
    const auto& x_ring = fs.front().ring();
    const std::size_t n1 = x_ring->size();
    if (k < 1 || k + 1 >= n1) throw InputError("need 1 <= k < n");
    for (const auto& f : fs)
        if (f.is_zero() || !f.is_homogeneous()) throw InputError("Fano equations need nonzero homogeneous forms");

    FanoSystem sys;
    sys.k = k;
    sys.sources = fs;
    std::vector<std::string> unames;
    for (std::size_t i = 0; i <= k; ++i)
        for (std::size_t j = 0; j < n1; ++j) unames.push_back(u_name(i, j));
    sys.u_ring = make_ring(unames, x_ring->field());

    const Lift L = lift(x_ring, k);
    for (std::size_t l = 0; l < fs.size(); ++l) {
        const Polynomial lifted = substitute(fs[l], L.images);
        const CoefficientMap cm = collect_coefficients(lifted, s_names(k));
        for (auto& alpha : monomials_of_degree(k + 1, static_cast<unsigned>(fs[l].degree()))) {
            const Polynomial* c = cm.find(alpha);
            Polynomial g = c ? Polynomial(sys.u_ring, c->terms()) : Polynomial(sys.u_ring);
            sys.equations.push_back(FanoEquation{l, std::move(alpha), std::move(g)});
        }
    }
    return sys;
}

bool verify_reassembly(const FanoSystem& sys) {
    const Lift L = lift(sys.sources.front().ring(), sys.k);
    const std::size_t nu = sys.u_ring->size();
    for (std::size_t l = 0; l < sys.sources.size(); ++l) {
        Polynomial sum(L.su_ring);
        for (const auto& e : sys.equations) {
            if (e.source != l) continue;
            std::vector<Term> terms;
            for (const auto& t : e.g.terms()) {
                Monomial m(L.su_ring->size());
                for (std::size_t i = 0; i < nu; ++i) m.set(i, t.monomial[i]);
                for (std::size_t i = 0; i <= sys.k; ++i) m.set(nu + i, e.alpha[i]);
                terms.push_back(Term{std::move(m), t.coeff});
            }
            sum += Polynomial(L.su_ring, std::move(terms));
        }
        if (sum != substitute(sys.sources[l], L.images)) return false;
    }
    return true;
}

mpz_class multinomial(const Monomial& alpha) {
    mpz_class out = 1;
    unsigned long total = 0;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        total += alpha[i];
        out *= binomial(total, alpha[i]);
    }
    return out;
}

std::vector<TransferRecord> transfer_specialize(const FanoSystem& sys, const std::vector<Scalar>& lambda) {
    if (lambda.size() != sys.k + 1) throw InputError("lambda needs k + 1 entries");
    const auto& x_ring = sys.sources.front().ring();
    const Field& F = x_ring->field();
    const std::size_t n1 = x_ring->size();
    std::vector<Scalar> lam;
    for (const auto& v : lambda) lam.push_back(F.from_rational(v));
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i <= sys.k; ++i)
        for (std::size_t j = 0; j < n1; ++j) images.push_back(Polynomial::variable(x_ring, j).scaled(lam[i]));
    std::vector<TransferRecord> out;
    for (const auto& e : sys.equations) {
        Polynomial image = substitute(e.g, images);
        Scalar c = F.from_mpz(multinomial(e.alpha));
        for (std::size_t i = 0; i <= sys.k; ++i) c = F.mul(c, F.pow(lam[i], e.alpha[i]));
        Polynomial predicted = sys.sources[e.source].scaled(c);
        const bool equal = image == predicted;
        out.push_back(TransferRecord{e.source, e.alpha, std::move(image), std::move(predicted), equal});
    }
    return out;
}

namespace {

std::vector<Scalar> random_vector(std::mt19937_64& rng, std::size_t len, const Field& F) {
    std::vector<Scalar> v(len);
    bool nonzero = false;
    while (!nonzero) {
        for (auto& x : v) {
            x = F.from_int(static_cast<long>(rng() % 33) - 16);
            nonzero = nonzero || !Field::is_zero(x);
        }
    }
    return v;
}

template <class Eval>
void sample_min(std::size_t len, std::size_t trials, std::mt19937_64& rng, const Field& F, Eval eval,
                std::size_t& best, std::vector<Scalar>& witness, std::size_t& count) {
    std::vector<std::vector<Scalar>> vectors;
    for (std::size_t i = 0; i < len; ++i) {
        std::vector<Scalar> v(len, Scalar(0));
        v[i] = 1;
        vectors.push_back(std::move(v));
    }
    for (std::size_t t = 0; t < trials; ++t) vectors.push_back(random_vector(rng, len, F));
    bool first = true;
    for (const auto& v : vectors) {
        const std::size_t r = eval(v);
        if (first || r < best) {
            best = r;
            witness = v;
            first = false;
        }
    }
    count = vectors.size();
}

std::size_t gram_rank(const Polynomial& q) {
    return q.is_zero() ? 0 : gram_matrix(q).rank();
}

}  // namespace

TransferRankReport transfer_rank_check(const FanoSystem& sys, std::size_t trials, std::uint64_t seed) {
    for (const auto& f : sys.sources)
        if (f.degree() != 2) throw InputError("transfer rank check needs quadrics");
    const Field& F = sys.u_ring->field();
    if (F.is_prime_field() && F.modulus() == 2) throw InputError("transfer rank check needs characteristic other than 2");
    std::mt19937_64 rng(seed);
    TransferRankReport rep;
    std::size_t unused = 0;
    sample_min(
        sys.sources.size(), trials, rng, F,
        [&](const std::vector<Scalar>& c) {
            Polynomial comb(sys.sources.front().ring());
            for (std::size_t i = 0; i < c.size(); ++i) comb += sys.sources[i].scaled(c[i]);
            return gram_rank(comb);
        },
        rep.source_min_rank, rep.source_witness, unused);
    sample_min(
        sys.equations.size(), trials, rng, F,
        [&](const std::vector<Scalar>& c) {
            Polynomial comb(sys.u_ring);
            for (std::size_t i = 0; i < c.size(); ++i) comb += sys.equations[i].g.scaled(c[i]);
            return gram_rank(comb);
        },
        rep.min_observed_rank, rep.witness, rep.combinations);
    rep.pass = rep.min_observed_rank >= rep.source_min_rank;
    return rep;
}

FanoDimensionReport fano_dimension_check(const std::vector<Polynomial>& fs, std::size_t k, const GroebnerLimits& limits) {
    FanoSystem sys = fano_equations(fs, k);
    FanoDimensionReport rep;
    const long long n1 = static_cast<long long>(fs.front().ring()->size());
    rep.expected = static_cast<long long>(k + 1) * n1;
    for (const auto& f : fs) rep.expected -= binomial(f.degree() + k, k).get_si();
    std::vector<Polynomial> gens;
    for (const auto& e : sys.equations)
        if (!e.g.is_zero()) gens.push_back(e.g);
    rep.equation_count = sys.equations.size();
    rep.computed = affine_dimension(IdealBasis(sys.u_ring, std::move(gens)), limits);
    if (!rep.computed.inconclusive()) rep.match = *rep.computed.dimension == rep.expected;
    return rep;
}

bool FlagFanoSystem::satisfied_by(const std::vector<Scalar>& a) const {
    for (const auto& e : equations)
        if (!Field::is_zero(evaluate(e.equation, a))) return false;
    return true;
}

FlagFanoSystem flag_fano_equations(const std::vector<Polynomial>& fs, const PlaneChart& plane) {
    require_common_ring(fs);
    ChartFrame frame(plane, fs.front().ring());
    std::vector<std::string> collected;
    for (std::size_t i = 0; i <= plane.k(); ++i) collected.push_back(frame.chart_ring->name(i));
    collected.push_back("t");
    const std::size_t t = plane.k() + 1;
    FlagFanoSystem out{frame, make_ring(frame.direction_vars, frame.chart_ring->field()), {}, 0};
    for (std::size_t l = 0; l < fs.size(); ++l) {
        const auto& f = fs[l];
        if (!f.is_homogeneous() || f.degree() < 1) throw InputError("flag Fano equations need homogeneous forms");
        require_contains(f, frame);
        out.binomial_count += binomial(plane.k() + 1 + f.degree(), plane.k() + 1).get_ui();
        const CoefficientMap cm = collect_coefficients(chart_image(f, frame), collected);
        for (const auto& [m, coeff] : cm.entries) {
            if (m[t] == 0) continue;
            out.equations.push_back(FlagEquation{l, m, "f" + std::to_string(l) + ":" + format_monomial(*cm.var_ring, m),
                                                 Polynomial(out.direction_ring, coeff.terms())});
        }
    }
    return out;
}

}  // namespace sfano
