#include "sfano/strength.hpp"

#include "sfano/errors.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <future>
#include <random>
#include <thread>

namespace sfano {

long long ExtendedInt::value() const {
    if (kind_ != Kind::Finite) throw Error("infinite value has no integer representation");
    return value_;
}

std::string ExtendedInt::to_string() const {
    switch (kind_) {
        case Kind::NegInfinity: return "-inf";
        case Kind::Infinity: return "inf";
        default: return std::to_string(value_);
    }
}

namespace {

Monomial quadratic_monomial(std::size_t n, std::size_t i, std::size_t j) {
    Monomial m(n);
    m.set(i, m[i] + 1);
    m.set(j, m[j] + 1);
    return m;
}

void require_quadric(const Polynomial& f) {
    if (f.degree() != 2 || !f.is_homogeneous()) throw InputError("expected a homogeneous quadric");
    if (f.field().is_prime_field() && f.field().modulus() == 2)
        throw InputError("quadric strength needs characteristic other than 2");
}

struct Diagonalization {
    std::vector<ProductPair> products;
    std::vector<std::pair<Scalar, Polynomial>> squares;  // a * l^2
};

// Completing squares, with a hyperbolic split when no square term is left.
Diagonalization diagonalize(Polynomial q) {
    const auto& ring = q.ring();
    const Field& F = q.field();
    const std::size_t n = ring->size();
    Diagonalization out;
    const Scalar two = F.from_int(2);
    while (!q.is_zero()) {
        std::optional<std::size_t> sq;
        for (std::size_t i = 0; i < n && !sq; ++i)
            if (!Field::is_zero(q.coefficient(quadratic_monomial(n, i, i)))) sq = i;
        if (sq) {
            const std::size_t i = *sq;
            const Scalar a = q.coefficient(quadratic_monomial(n, i, i));
            const Scalar half_inv = F.inv(F.mul(two, a));
            Polynomial ell = Polynomial::variable(ring, i);
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                const Scalar c = q.coefficient(quadratic_monomial(n, i, j));
                if (!Field::is_zero(c)) ell += Polynomial::variable(ring, j).scaled(F.mul(c, half_inv));
            }
            q -= (ell * ell).scaled(a);
            out.squares.emplace_back(a, std::move(ell));
            continue;
        }
        const Monomial& lm = q.leading_monomial();
        std::size_t i = n, j = n;
        for (std::size_t k = 0; k < n; ++k) {
            if (!lm[k]) continue;
            (i == n ? i : j) = k;
        }
        const Scalar b = q.leading_coeff();
        const Scalar b_inv = F.inv(b);
        Polynomial g = Polynomial::variable(ring, i).scaled(b);
        Polynomial h = Polynomial::variable(ring, j);
        for (std::size_t k = 0; k < n; ++k) {
            if (k == i || k == j) continue;
            const Scalar ck = q.coefficient(quadratic_monomial(n, j, k));
            if (!Field::is_zero(ck)) g += Polynomial::variable(ring, k).scaled(ck);
            const Scalar ci = q.coefficient(quadratic_monomial(n, i, k));
            if (!Field::is_zero(ci)) h += Polynomial::variable(ring, k).scaled(F.mul(ci, b_inv));
        }
        q -= g * h;
        out.products.push_back(ProductPair{std::move(g), std::move(h)});
    }
    return out;
}

// Nonzero (x, y, z) with a x^2 + b y^2 + c z^2 = 0, by a small search.
std::optional<std::array<Scalar, 3>> isotropic_vector(const Field& F, const Scalar& a, const Scalar& b,
                                                      const Scalar& c) {
    long limit = 40;
    if (F.is_prime_field()) limit = static_cast<long>(std::min<std::uint64_t>(F.modulus() - 1, 40));
    for (long s = 1; s <= 2 * limit; ++s)
        for (long x = 0; x <= std::min(s, limit); ++x) {
            const long y = s - x;
            if (y > limit) continue;
            const Scalar X = F.from_int(x), Y = F.from_int(y);
            const Scalar rhs = F.neg(F.div(F.add(F.mul(a, F.mul(X, X)), F.mul(b, F.mul(Y, Y))), c));
            Scalar z;
            if (F.sqrt(rhs, z)) return std::array<Scalar, 3>{X, Y, z};
        }
    return std::nullopt;
}

}  // namespace

Matrix gram_matrix(const Polynomial& q) {
    require_quadric(q);
    const Field& F = q.field();
    const std::size_t n = q.ring()->size();
    Matrix g(n, n, F);
    const Scalar half = F.inv(F.from_int(2));
    for (const auto& t : q.terms()) {
        std::size_t i = n, j = n;
        for (std::size_t k = 0; k < n; ++k) {
            if (t.monomial[k] == 2) i = j = k;
            else if (t.monomial[k] == 1) (i == n ? i : j) = k;
        }
        if (i == j) {
            g(i, i) = t.coeff;
        } else {
            g(i, j) = F.mul(t.coeff, half);
            g(j, i) = g(i, j);
        }
    }
    return g;
}

StrengthCertificate quadric_strength(const Polynomial& f) {
    const Matrix gram = gram_matrix(f);
    const Field& F = f.field();
    const std::size_t r = gram.rank();
    const std::size_t target = (r + 1) / 2;

    Diagonalization d = diagonalize(f);
    auto& squares = d.squares;
    std::vector<ProductPair> pairs = std::move(d.products);

    auto try_pair = [&]() {
        for (std::size_t k = 0; k < squares.size(); ++k)
            for (std::size_t l = k + 1; l < squares.size(); ++l) {
                Scalar m;
                if (!F.sqrt(F.neg(F.div(squares[l].first, squares[k].first)), m)) continue;
                const auto& [ak, lk] = squares[k];
                const auto& ll = squares[l].second;
                pairs.push_back(ProductPair{(lk - ll.scaled(m)).scaled(ak), lk + ll.scaled(m)});
                squares.erase(squares.begin() + l);
                squares.erase(squares.begin() + k);
                return true;
            }
        return false;
    };
    auto try_ternary = [&]() {
        if (squares.size() < 3) return false;
        const std::array<Scalar, 3> a{squares[0].first, squares[1].first, squares[2].first};
        auto v = isotropic_vector(F, a[0], a[1], a[2]);
        if (!v) return false;
        std::size_t k = 0;
        while (Field::is_zero((*v)[k])) ++k;
        std::array<Scalar, 3> w{Scalar(0), Scalar(0), Scalar(0)};
        w[k] = F.inv(F.mul(a[k], (*v)[k]));
        const Scalar t = F.div(F.mul(a[k], F.mul(w[k], w[k])), F.from_int(2));
        for (std::size_t i = 0; i < 3; ++i) w[i] = F.sub(w[i], F.mul(t, (*v)[i]));
        Polynomial lambda(f.ring()), bw(f.ring()), form(f.ring());
        for (std::size_t i = 0; i < 3; ++i) {
            const auto& li = squares[i].second;
            lambda += li.scaled(F.mul(a[i], (*v)[i]));
            bw += li.scaled(F.mul(F.from_int(2), F.mul(a[i], w[i])));
            form += (li * li).scaled(a[i]);
        }
        Diagonalization rest = diagonalize(form - bw * lambda);
        pairs.push_back(ProductPair{std::move(bw), std::move(lambda)});
        squares.erase(squares.begin(), squares.begin() + 3);
        for (auto& p : rest.products) pairs.push_back(std::move(p));
        for (auto& s : rest.squares) squares.push_back(std::move(s));
        return true;
    };
    while (squares.size() >= 2 && (try_pair() || try_ternary())) {
    }
    for (auto& [a, l] : squares) pairs.push_back(ProductPair{l.scaled(a), l});

    StrengthCertificate cert;
    cert.kind = CertificateKind::ExactQuadric;
    cert.rank = r;
    cert.value = static_cast<int>(target) - 1;
    cert.decomposition = std::move(pairs);
    cert.decomposition_minimal = cert.decomposition.size() == target;
    verify_decomposition(f, cert.decomposition);
    return cert;
}

StrengthCertificate verify_decomposition(const Polynomial& f, const std::vector<ProductPair>& pairs) {
    if (pairs.empty()) throw InputError("decomposition needs at least one pair");
    const int d = f.degree();
    Polynomial sum(f.ring());
    for (const auto& [g, h] : pairs) {
        if (!same_ring(g.ring(), f.ring()) || !same_ring(h.ring(), f.ring()))
            throw InputError("decomposition factors must live in the ring of f");
        const int dg = g.degree(), dh = h.degree();
        if (dg < 1 || dh < 1 || dg > d - 1 || dh > d - 1)
            throw InputError("factor degrees must lie between 1 and deg f - 1");
        sum += g * h;
    }
    const Polynomial diff = f - sum;
    if (!diff.is_zero()) throw VerificationError("decomposition does not reproduce f", diff.to_string());
    StrengthCertificate cert;
    cert.kind = CertificateKind::UpperBoundDecomposition;
    cert.value = static_cast<int>(pairs.size()) - 1;
    cert.decomposition = pairs;
    return cert;
}

SmoothStrengthReport smooth_strength(const Polynomial& f, const GroebnerLimits& limits) {
    SmoothStrengthReport rep;
    if (f.is_zero()) {
        rep.value = ExtendedInt::neg_infinity();
        rep.dimension.note = "zero polynomial";
        return rep;
    }
    const std::size_t n = f.ring()->size();
    std::vector<Polynomial> gens{f};
    for (std::size_t i = 0; i < n; ++i) gens.push_back(partial_derivative(f, i));
    rep.dimension = affine_dimension(IdealBasis(f.ring(), std::move(gens)), limits);
    if (rep.dimension.inconclusive()) return rep;
    const int dim = *rep.dimension.dimension;
    rep.value = dim < 0 ? ExtendedInt::infinity() : ExtendedInt(static_cast<long long>(n) - dim);
    return rep;
}

namespace {

Polynomial combine(const std::vector<Polynomial>& fs, const std::vector<Scalar>& c) {
    Polynomial out(fs.front().ring());
    for (std::size_t i = 0; i < fs.size(); ++i)
        if (!Field::is_zero(c[i])) out += fs[i].scaled(c[i]);
    return out;
}

std::vector<std::vector<Scalar>> candidate_vectors(std::size_t c, const Field& F, const SampleOptions& opt) {
    std::vector<std::vector<Scalar>> out;
    for (std::size_t i = 0; i < c; ++i) {
        std::vector<Scalar> v(c, Scalar(0));
        v[i] = 1;
        out.push_back(std::move(v));
    }
    if (opt.exhaustive_grid && c <= 3) {
        std::vector<int> e(c, -2);
        while (true) {
            // skip zero, axis vectors and vectors whose first nonzero entry is negative
            int nonzero = 0, first = 0;
            for (int x : e)
                if (x) {
                    if (!nonzero) first = x;
                    ++nonzero;
                }
            if (nonzero >= 2 && first > 0) {
                std::vector<Scalar> v;
                for (int x : e) v.push_back(F.from_int(x));
                if (std::any_of(v.begin(), v.end(), [](const Scalar& s) { return !Field::is_zero(s); })) out.push_back(v);
            }
            std::size_t i = 0;
            while (i < c && ++e[i] > 2) e[i++] = -2;
            if (i == c) break;
        }
    }
    std::mt19937_64 rng(opt.seed);
    for (std::size_t t = 0; t < opt.trials; ++t) {
        std::vector<Scalar> v(c);
        for (auto& x : v) {
            do {
                const long u = static_cast<long>(rng() % 32);
                x = F.from_int(u < 16 ? u - 16 : u - 15);
            } while (Field::is_zero(x));
        }
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

CollectiveSample collective_smooth_strength_sample(const std::vector<Polynomial>& fs, const SampleOptions& options) {
    if (fs.empty()) throw InputError("need at least one form");
    for (const auto& f : fs)
        if (!same_ring(f.ring(), fs.front().ring())) throw InputError("forms must share one ring");
    const Field& F = fs.front().field();
    CollectiveSample out;
    out.trials = options.trials;
    out.seed = options.seed;

    // linear independence via the coefficient matrix
    std::map<Monomial, std::size_t, GrevlexGreater> columns;
    for (const auto& f : fs)
        for (const auto& t : f.terms()) columns.emplace(t.monomial, 0);
    std::size_t col = 0;
    for (auto& [m, idx] : columns) idx = col++;
    Matrix coeffs(columns.size(), fs.size(), F);
    for (std::size_t i = 0; i < fs.size(); ++i)
        for (const auto& t : fs[i].terms()) coeffs(columns.at(t.monomial), i) = t.coeff;
    if (coeffs.rank() < fs.size()) {
        out.min_observed = ExtendedInt::neg_infinity();
        out.witness = coeffs.kernel().front();
        out.note = "forms are linearly dependent";
        return out;
    }

    const auto vectors = candidate_vectors(fs.size(), F, options);
    out.combinations = vectors.size();
    std::vector<std::optional<ExtendedInt>> values(vectors.size());
    const std::size_t workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    std::vector<std::future<void>> jobs;
    for (std::size_t w = 0; w < workers; ++w)
        jobs.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t i = w; i < vectors.size(); i += workers)
                values[i] = smooth_strength(combine(fs, vectors[i]), options.limits).value;
        }));
    for (auto& j : jobs) j.get();

    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!values[i]) {
            out.note = "smooth strength inconclusive for combination " + std::to_string(i);
            out.min_observed.reset();
            out.witness.clear();
            return out;
        }
        if (!best || *values[i] < *values[*best]) best = i;
    }
    out.min_observed = values[*best];
    out.witness = vectors[*best];
    out.note = "sampled minimum: evidence, not a certificate";
    return out;
}

namespace {

Polynomial determinant(const std::vector<std::vector<Polynomial>>& m) {
    const std::size_t k = m.size();
    if (k == 1) return m[0][0];
    Polynomial det(m[0][0].ring());
    for (std::size_t c = 0; c < k; ++c) {
        if (m[0][c].is_zero()) continue;
        std::vector<std::vector<Polynomial>> minor;
        for (std::size_t r = 1; r < k; ++r) {
            std::vector<Polynomial> row;
            for (std::size_t j = 0; j < k; ++j)
                if (j != c) row.push_back(m[r][j]);
            minor.push_back(std::move(row));
        }
        Polynomial term = m[0][c] * determinant(minor);
        det = (c % 2 == 0) ? det + term : det - term;
    }
    return det;
}

}  // namespace

std::vector<Polynomial> jacobian_maximal_minors(const std::vector<Polynomial>& fs) {
    const std::size_t k = fs.size();
    if (k == 0 || k > 5) throw InputError("jacobian minors support between 1 and 5 forms");
    const std::size_t n = fs.front().ring()->size();
    std::vector<std::vector<Polynomial>> jac(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j) jac[i].push_back(partial_derivative(fs[i], j));
    std::vector<Polynomial> out;
    if (k > n) return out;
    std::vector<std::size_t> cols(k);
    for (std::size_t i = 0; i < k; ++i) cols[i] = i;
    while (true) {
        std::vector<std::vector<Polynomial>> sub(k);
        for (std::size_t i = 0; i < k; ++i)
            for (auto c : cols) sub[i].push_back(jac[i][c]);
        Polynomial d = determinant(sub);
        if (!d.is_zero()) out.push_back(std::move(d));
        std::size_t i = k;
        while (i > 0 && cols[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++cols[i - 1];
        for (std::size_t j = i; j < k; ++j) cols[j] = cols[j - 1] + 1;
    }
    return out;
}

Lemma212Report lemma_2_12_check(const std::vector<Polynomial>& fs, ExtendedInt s, const GroebnerLimits& limits) {
    if (fs.empty()) throw InputError("need at least one form");
    const auto& ring = fs.front().ring();
    const long long n = static_cast<long long>(ring->size());
    const long long k = static_cast<long long>(fs.size());
    Lemma212Report rep;
    rep.claimed = s;
    switch (s.kind()) {
        case ExtendedInt::Kind::Finite: rep.bound = ExtendedInt(n - s.value() + k - 1); break;
        case ExtendedInt::Kind::Infinity: rep.bound = ExtendedInt(-1); break;
        case ExtendedInt::Kind::NegInfinity: rep.bound = ExtendedInt::infinity(); break;
    }
    std::vector<Polynomial> gens = fs;
    for (auto& m : jacobian_maximal_minors(fs)) gens.push_back(std::move(m));
    rep.locus = affine_dimension(IdealBasis(ring, std::move(gens)), limits);
    if (rep.locus.inconclusive()) return rep;
    rep.pass = ExtendedInt(*rep.locus.dimension) <= rep.bound;
    return rep;
}

}  // namespace sfano
