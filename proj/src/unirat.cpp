#include "sfano/unirat.hpp"

#include "sfano/errors.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace sfano {

namespace {

Scalar random_value(std::mt19937_64& rng, const Field& field) {
    if (field.is_prime_field()) return field.from_int(static_cast<long>(rng() % field.modulus()));
    return field.from_int(static_cast<long>(rng() % 19) - 9);
}

std::string fresh_name(const RingPtr& ring, std::string name) {
    while (ring->index_of(name)) name += "_";
    return name;
}

// Common content and monomial factor removed; over Q the result has integer
// coefficients with gcd 1 and a positive leading coefficient.
void remove_common_factors(std::vector<Polynomial>& comps) {
    const auto lead = std::find_if(comps.begin(), comps.end(), [](const Polynomial& c) { return !c.is_zero(); });
    if (lead == comps.end()) return;
    const RingPtr ring = lead->ring();
    const Field& field = ring->field();

    Monomial common;
    bool first = true;
    for (const auto& c : comps)
        for (const auto& t : c.terms()) {
            if (first) {
                common = t.monomial;
                first = false;
                continue;
            }
            for (std::size_t v = 0; v < common.size(); ++v) common.set(v, std::min(common[v], t.monomial[v]));
        }

    Scalar scale;
    if (field.is_prime_field()) {
        scale = field.inv(lead->leading_coeff());
    } else {
        mpz_class den = 1, num = 0;
        for (const auto& c : comps)
            for (const auto& t : c.terms()) {
                mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
                mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coeff.get_num_mpz_t());
            }
        scale = mpq_class(den, num);
        scale.canonicalize();
        if (sgn(lead->leading_coeff()) < 0) scale = -scale;
    }

    for (auto& c : comps) {
        std::vector<Term> terms;
        for (const auto& t : c.terms()) terms.push_back(Term{t.monomial.quotient(common), field.mul(t.coeff, scale)});
        c = Polynomial(ring, std::move(terms));
    }
}

// Affine components -> homogeneous components of one degree in ring + h.
std::vector<Polynomial> homogenize(const std::vector<Polynomial>& comps, const RingPtr& affine, RingPtr& out_ring) {
    auto names = affine->vars();
    names.push_back(fresh_name(affine, "h"));
    out_ring = make_ring(names, affine->field());
    int deg = 0;
    for (const auto& c : comps) deg = std::max(deg, c.degree());
    std::vector<Polynomial> out;
    for (const auto& c : comps) {
        std::vector<Term> terms;
        for (const auto& t : c.terms()) {
            auto e = t.monomial.exponents();
            e.push_back(static_cast<std::uint32_t>(deg) - t.monomial.degree());
            terms.push_back(Term{Monomial(std::move(e)), t.coeff});
        }
        out.emplace_back(out_ring, std::move(terms));
    }
    return out;
}

void finish_degree(RationalMapRecord& rec) {
    rec.degree = -1;
    for (const auto& c : rec.components) {
        if (c.is_zero()) continue;
        if (!c.is_homogeneous()) throw VerificationError("map components are not homogeneous", c.to_string());
        if (rec.degree >= 0 && rec.degree != c.degree())
            throw VerificationError("map components have different degrees");
        rec.degree = c.degree();
    }
    if (rec.degree < 0) throw DegenerateError("all map components vanish");
}

std::vector<Polynomial> ring_variables(const RingPtr& ring) {
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < ring->size(); ++i) out.push_back(Polynomial::variable(ring, i));
    return out;
}

std::vector<Scalar> gradient_at(const Polynomial& f, const std::vector<Scalar>& pt) {
    std::vector<Scalar> out;
    for (std::size_t i = 0; i < f.ring()->size(); ++i) out.push_back(evaluate(partial_derivative(f, i), pt));
    return out;
}

}  // namespace

void verify_substitution(RationalMapRecord& rec) {
    for (std::size_t i = 0; i < rec.target_constraints.size(); ++i) {
        const auto& c = rec.target_constraints[i];
        if (c.ring()->size() != rec.components.size())
            throw InputError("constraint has " + std::to_string(c.ring()->size()) + " variables but the map has " +
                             std::to_string(rec.components.size()) + " components");
        Polynomial back = substitute(c, rec.components);
        if (!back.is_zero()) {
            rec.verification.substitution_ok = false;
            throw VerificationError("pullback of constraint " + std::to_string(i) + " is nonzero", back.to_string());
        }
    }
    rec.verification.substitution_ok = true;
}

void jacobian_rank_evidence(RationalMapRecord& rec, int target_dim, std::uint64_t seed) {
    const RingPtr& src = rec.source;
    const Field& field = src->field();
    std::vector<std::vector<Polynomial>> jac;
    for (const auto& c : rec.components) {
        std::vector<Polynomial> row;
        for (std::size_t v = 0; v < src->size(); ++v) row.push_back(partial_derivative(c, v));
        jac.push_back(std::move(row));
    }
    auto& ver = rec.verification;
    ver.dominance_target_dim = target_dim;
    ver.seed = seed;
    ver.attempts = 0;
    ver.jacobian_rank.reset();
    ver.rank_point.clear();
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 16; ++attempt) {
        ++ver.attempts;
        std::vector<Scalar> pt;
        for (std::size_t v = 0; v < src->size(); ++v) pt.push_back(random_value(rng, field));
        Matrix m(rec.components.size(), src->size() + 1, field);
        bool base = true;
        for (std::size_t i = 0; i < rec.components.size(); ++i) {
            m(i, src->size()) = evaluate(rec.components[i], pt);
            if (!Field::is_zero(m(i, src->size()))) base = false;
            for (std::size_t v = 0; v < src->size(); ++v) m(i, v) = evaluate(jac[i][v], pt);
        }
        if (base) continue;
        const std::size_t r = m.rank() - 1;
        if (!ver.jacobian_rank || r > *ver.jacobian_rank) {
            ver.jacobian_rank = r;
            ver.rank_point = pt;
        }
        if (static_cast<int>(r) >= target_dim) break;
    }
}

RationalMapRecord quadric_parametrization(const Polynomial& f, const std::vector<Scalar>& point, std::uint64_t seed) {
    if (f.degree() != 2 || !f.is_homogeneous()) throw InputError("expected a quadratic form");
    const RingPtr& ring = f.ring();
    const Field& field = ring->field();
    if (point.size() != ring->size())
        throw InputError("point has " + std::to_string(point.size()) + " coordinates, expected " +
                         std::to_string(ring->size()));
    std::vector<Scalar> p;
    for (const auto& c : point) p.push_back(field.from_rational(c));
    if (std::all_of(p.begin(), p.end(), [](const Scalar& c) { return Field::is_zero(c); }))
        throw InputError("point must be nonzero");
    if (!Field::is_zero(evaluate(f, p))) throw InputError("point is not on the quadric");
    const auto grad = gradient_at(f, p);
    if (std::all_of(grad.begin(), grad.end(), [](const Scalar& c) { return Field::is_zero(c); }))
        throw InputError("point is a singular point of the quadric");

    RationalMapRecord rec;
    rec.source = indexed_ring("v", ring->size(), field);
    const auto v = ring_variables(rec.source);
    const Polynomial fv = substitute(f, v);
    Polynomial lin(rec.source);
    for (std::size_t i = 0; i < v.size(); ++i) lin += v[i].scaled(grad[i]);
    for (std::size_t i = 0; i < v.size(); ++i) rec.components.push_back(fv.scaled(p[i]) - lin * v[i]);
    rec.target_constraints = {f};
    finish_degree(rec);
    verify_substitution(rec);
    jacobian_rank_evidence(rec, static_cast<int>(ring->size()) - 2, seed);
    return rec;
}

RationalMapRecord cubic_with_line_parametrization(const Polynomial& f, const PlaneChart& line, std::uint64_t seed) {
    if (f.degree() != 3 || !f.is_homogeneous()) throw InputError("expected a cubic form");
    if (line.k() != 1) throw InputError("expected a line (a 2 x (n+1) matrix)");
    const std::size_t n = line.n();
    if (n < 3) throw InputError("need at least four variables");
    const Field& field = f.field();
    if (field.is_prime_field() && field.modulus() == 2) throw InputError("characteristic 2 is not supported");

    ChartFrame fr(line, f.ring());
    const ResidualResult res = residual(f, line);
    const Polynomial& G = res.residual;
    const RingPtr& cr = fr.chart_ring;
    const std::size_t nd = n - 1;  // direction variables, chart index 3 + m

    std::vector<std::string> names{"q"};
    for (std::size_t j = 1; j + 2 < n; ++j) names.push_back("c" + std::to_string(j));
    names.push_back("m");
    const RingPtr A = make_ring(names, field);
    const Polynomial one = Polynomial::constant(A, field.one());
    const Polynomial zero(A);
    const Polynomial q = Polynomial::variable(A, 0);
    const Polynomial m = Polynomial::variable(A, names.size() - 1);

    // q~ = (1, q) on the line; w_m(q~) are the coefficients of the linear incidence.
    std::vector<Polynomial> at_q{one, q, zero};
    for (std::size_t i = 0; i < nd; ++i) at_q.push_back(zero);
    std::vector<Polynomial> w;
    for (std::size_t i = 0; i < nd; ++i) w.push_back(substitute(partial_derivative(res.restriction, 3 + i), at_q));
    const auto piv = std::find_if(w.begin(), w.end(), [](const Polynomial& p) { return !p.is_zero(); });
    if (piv == w.end()) throw DegenerateError("the incidence map has rank 0 at every point q of the line");
    const std::size_t pv = static_cast<std::size_t>(piv - w.begin());

    std::vector<Polynomial> a(nd, zero);
    std::size_t cidx = 0;
    for (std::size_t j = 0; j < nd; ++j) {
        if (j == pv) continue;
        const Polynomial c = cidx == 0 ? one : Polynomial::variable(A, cidx);
        ++cidx;
        a[pv] += c * w[j];
        a[j] -= c * w[pv];
    }

    // Residual conic in the plane span(line, a).
    const std::vector<std::string> conic_vars{cr->name(0), cr->name(1), "t"};
    const CoefficientMap cm = collect_coefficients(G, conic_vars);
    std::vector<std::pair<Monomial, Polynomial>> conic;
    for (const auto& [mono, coeff] : cm.entries) {
        std::vector<Polynomial> imgs;
        for (const auto& name : cm.coeff_ring->vars()) {
            const auto it = std::find(fr.direction_vars.begin(), fr.direction_vars.end(), name);
            imgs.push_back(a[static_cast<std::size_t>(it - fr.direction_vars.begin())]);
        }
        Polynomial c = substitute(coeff, imgs);
        if (!c.is_zero()) conic.emplace_back(mono, std::move(c));
    }
    if (conic.empty())
        throw DegenerateError("span(line, a) lies in the cubic for every point of the section (Phi in X locus hit)");

    {
        std::mt19937_64 rng(seed);
        bool smooth = false;
        for (int attempt = 0; attempt < 16 && !smooth; ++attempt) {
            std::vector<Scalar> pt;
            for (std::size_t v = 0; v < A->size(); ++v) pt.push_back(random_value(rng, field));
            Matrix gram(3, 3, field);
            const Scalar half = field.inv(field.from_int(2));
            for (const auto& [mono, c] : conic) {
                const Scalar val = evaluate(c, pt);
                std::vector<std::size_t> idx;
                for (std::size_t v = 0; v < 3; ++v)
                    for (std::uint32_t e = 0; e < mono[v]; ++e) idx.push_back(v);
                if (idx[0] == idx[1]) {
                    gram(idx[0], idx[0]) = field.add(gram(idx[0], idx[0]), val);
                } else {
                    gram(idx[0], idx[1]) = field.add(gram(idx[0], idx[1]), field.mul(val, half));
                    gram(idx[1], idx[0]) = field.add(gram(idx[1], idx[0]), field.mul(val, half));
                }
            }
            smooth = gram.rank() == 3;
        }
        if (!smooth) throw DegenerateError("the residual conics are singular along the section");
    }

    // Project the conic from q~ = (1, q, 0) along m^ = (1, 0, m).
    std::vector<Polynomial> at_qa{one, q, zero}, at_m{one, zero, m};
    at_qa.insert(at_qa.end(), a.begin(), a.end());
    at_m.insert(at_m.end(), a.begin(), a.end());
    const Polynomial Gm = substitute(G, at_m);
    const Polynomial dG = substitute(partial_derivative(G, 0), at_qa) + substitute(partial_derivative(G, 2), at_qa) * m;
    const std::vector<Polynomial> r{Gm - dG, Gm * q, -(dG * m)};

    std::vector<Polynomial> x;
    for (std::size_t j = 0; j <= n; ++j) {
        Polynomial xj = r[0].scaled(line.reduced()(0, j)) + r[1].scaled(line.reduced()(1, j));
        const auto it = std::find(line.nonpivots().begin(), line.nonpivots().end(), j);
        if (it != line.nonpivots().end()) xj += r[2] * a[static_cast<std::size_t>(it - line.nonpivots().begin())];
        x.push_back(std::move(xj));
    }

    RationalMapRecord rec;
    rec.components = homogenize(x, A, rec.source);
    remove_common_factors(rec.components);
    rec.target_constraints = {f};
    rec.notes.push_back("incidence pivot direction " + fr.direction_vars[pv]);
    finish_degree(rec);
    verify_substitution(rec);
    jacobian_rank_evidence(rec, static_cast<int>(n) - 1, seed);
    return rec;
}

Polynomial compose_substitution(const Polynomial& F, const std::vector<Polynomial>& gs) {
    if (gs.empty()) throw InputError("need at least one inner polynomial");
    if (F.ring()->size() != gs.size())
        throw InputError("outer polynomial has " + std::to_string(F.ring()->size()) + " variables but " +
                         std::to_string(gs.size()) + " inner polynomials were given");
    int deg = -1;
    for (const auto& g : gs) {
        if (!same_ring(g.ring(), gs.front().ring())) throw InputError("inner polynomials must share one ring");
        if (g.is_zero()) continue;
        if (!g.is_homogeneous()) throw InputError("inner polynomial is not homogeneous: " + g.to_string());
        if (deg >= 0 && g.degree() != deg) throw InputError("inner polynomials have mixed degrees");
        deg = g.degree();
    }
    return substitute(F, gs);
}

RationalMapRecord quadric_fiber_family(const std::vector<Polynomial>& gs) {
    if (gs.empty()) throw InputError("need at least one quadric");
    const RingPtr Y = gs.front().ring();
    const Field& field = Y->field();
    std::vector<std::vector<std::size_t>> blocks;
    std::vector<int> owner(Y->size(), -1);
    for (std::size_t i = 0; i < gs.size(); ++i) {
        const auto& g = gs[i];
        if (!same_ring(g.ring(), Y)) throw InputError("quadrics must share one ring");
        if (g.degree() != 2 || !g.is_homogeneous()) throw InputError("expected quadratic forms: " + g.to_string());
        blocks.push_back(g.variables_used());
        for (auto v : blocks.back()) {
            if (owner[v] >= 0) throw InputError("quadrics must use disjoint variables; " + Y->name(v) + " is shared");
            owner[v] = static_cast<int>(i);
        }
    }
    for (std::size_t v = 0; v < Y->size(); ++v)
        if (owner[v] < 0) throw InputError("variable " + Y->name(v) + " occurs in no quadric");

    std::vector<std::string> names;
    for (std::size_t i = 0; i < gs.size(); ++i)
        for (std::size_t j = 0; j <= blocks[i].size(); ++j)
            names.push_back("w" + std::to_string(i) + "_" + std::to_string(j));
    for (std::size_t i = 0; i < gs.size(); ++i) names.push_back("p" + std::to_string(i));
    RationalMapRecord rec;
    rec.source = make_ring(names, field);

    std::vector<std::vector<Polynomial>> Ys;
    std::vector<Polynomial> Zs;
    std::size_t offset = 0;
    for (std::size_t i = 0; i < gs.size(); ++i) {
        const auto& B = blocks[i];
        // A smooth rational zero of g_i among small integer vectors.
        std::vector<Scalar> full(Y->size(), field.zero());
        auto try_point = [&](const std::vector<long>& vals) {
            std::fill(full.begin(), full.end(), field.zero());
            for (std::size_t j = 0; j < B.size(); ++j) full[B[j]] = field.from_int(vals[j]);
            if (!Field::is_zero(evaluate(gs[i], full))) return false;
            const auto grad = gradient_at(gs[i], full);
            return std::any_of(grad.begin(), grad.end(), [](const Scalar& c) { return !Field::is_zero(c); });
        };
        bool found = false;
        std::vector<long> vals(B.size(), 0);
        for (std::size_t a = 0; a < B.size() && !found; ++a) {
            for (std::size_t b = a; b < B.size() && !found; ++b)
                for (long c : {0L, 1L, -1L, 2L, -2L}) {
                    if (b == a && c != 0) continue;
                    std::fill(vals.begin(), vals.end(), 0L);
                    vals[a] = 1;
                    if (b != a) vals[b] = c;
                    if ((found = try_point(vals))) break;
                }
        }
        if (!found && B.size() <= 6) {
            std::vector<long> digits(B.size(), -2);
            while (!found) {
                if (std::any_of(digits.begin(), digits.end(), [](long d) { return d != 0; }))
                    found = try_point(vals = digits);
                std::size_t pos = 0;
                while (pos < digits.size() && digits[pos] == 2) digits[pos++] = -2;
                if (pos == digits.size()) break;
                ++digits[pos];
            }
        }
        if (!found) throw InputError("no smooth rational point found on " + gs[i].to_string());
        const auto grad = gradient_at(gs[i], full);

        // Q_i(y_B, z) = g_i(y_B) - p_i z^2 projected from (pt, 0).
        std::vector<Polynomial> v;
        for (std::size_t j = 0; j <= B.size(); ++j) v.push_back(Polynomial::variable(rec.source, offset + j));
        std::vector<Polynomial> yimg(Y->size(), Polynomial(rec.source));
        for (std::size_t j = 0; j < B.size(); ++j) yimg[B[j]] = v[j];
        const Polynomial p = Polynomial::variable(rec.source, "p" + std::to_string(i));
        const Polynomial Q = substitute(gs[i], yimg) - p * v.back() * v.back();
        Polynomial lin(rec.source);
        for (std::size_t j = 0; j < B.size(); ++j) lin += v[j].scaled(grad[B[j]]);
        std::vector<Polynomial> yb;
        for (std::size_t j = 0; j < B.size(); ++j) yb.push_back(Q.scaled(field.from_int(vals[j])) - lin * v[j]);
        Ys.push_back(std::move(yb));
        Zs.push_back(-(lin * v.back()));
        offset += B.size() + 1;
    }

    rec.components.assign(Y->size(), Polynomial(rec.source));
    for (std::size_t i = 0; i < gs.size(); ++i) {
        Polynomial s = Polynomial::constant(rec.source, field.one());
        for (std::size_t j = 0; j < gs.size(); ++j)
            if (j != i) s *= Zs[j];
        for (std::size_t j = 0; j < blocks[i].size(); ++j) rec.components[blocks[i][j]] = Ys[i][j] * s;
    }

    // g_i(y) = p_i * (prod Z)^2
    Polynomial zz = Polynomial::constant(rec.source, field.one());
    for (const auto& z : Zs) zz *= z;
    zz *= zz;
    for (std::size_t i = 0; i < gs.size(); ++i) {
        const Polynomial lhs = substitute(gs[i], rec.components);
        const Polynomial rhs = Polynomial::variable(rec.source, "p" + std::to_string(i)) * zz;
        if (lhs != rhs) throw VerificationError("fiber identity fails for quadric " + std::to_string(i), (lhs - rhs).to_string());
    }
    rec.verification.substitution_ok = true;
    rec.degree = -1;  // not homogeneous until the p-slots are filled
    rec.notes.push_back("g_i(y) = p_i * (prod of block normalizers)^2");
    return rec;
}

RationalMapRecord pullback_parametrization(const Polynomial& F, const std::vector<Polynomial>& gs,
                                           const RationalMapRecord& family, const RationalMapRecord& z_param,
                                           std::uint64_t seed) {
    const Polynomial composite = compose_substitution(F, gs);
    if (z_param.components.size() != gs.size())
        throw InputError("parametrization of V(F) has " + std::to_string(z_param.components.size()) +
                         " components, expected " + std::to_string(gs.size()));
    const RingPtr Y = gs.front().ring();
    if (family.components.size() != Y->size()) throw InputError("fiber family does not match the inner ring");

    std::vector<std::string> names = z_param.source->vars();
    std::vector<std::size_t> free_vars;
    for (std::size_t v = 0; v < family.source->size(); ++v) {
        const auto& name = family.source->name(v);
        if (name.size() > 1 && name[0] == 'p' && name.find_first_not_of("0123456789", 1) == std::string::npos) continue;
        if (std::find(names.begin(), names.end(), name) != names.end())
            throw InputError("variable name " + name + " is used by both parametrizations");
        names.push_back(name);
        free_vars.push_back(v);
    }
    const RingPtr S = make_ring(names, Y->field());
    std::vector<Polynomial> imgs(family.source->size(), Polynomial(S));
    for (auto v : free_vars) imgs[v] = Polynomial::variable(S, family.source->name(v));
    for (std::size_t i = 0; i < gs.size(); ++i) {
        const auto idx = family.source->index_of("p" + std::to_string(i));
        if (!idx) throw InputError("fiber family has no slot p" + std::to_string(i));
        imgs[*idx] = z_param.components[i].embed(S);
    }
    std::vector<Polynomial> comps;
    for (const auto& c : family.components) comps.push_back(substitute(c, imgs));

    RationalMapRecord rec;
    rec.components = homogenize(comps, S, rec.source);
    remove_common_factors(rec.components);
    rec.target_constraints = {composite};
    rec.notes.push_back("fiber family over a parametrization of V(F)");
    finish_degree(rec);
    verify_substitution(rec);
    jacobian_rank_evidence(rec, static_cast<int>(Y->size()) - 2, seed);
    return rec;
}

}  // namespace sfano
