#include "doctest.h"
#include "support.hpp"

#include "sfano/errors.hpp"
#include "sfano/strength.hpp"

using namespace sfano;
using namespace sfano::testing;

namespace {

// rank of a quadric from the dimension of the common zero set of its partials
std::size_t rank_via_partials(const Polynomial& q) {
    std::vector<Polynomial> partials;
    for (std::size_t i = 0; i < q.ring()->size(); ++i) partials.push_back(partial_derivative(q, i));
    auto rep = affine_dimension(IdealBasis(q.ring(), partials));
    REQUIRE(rep.dimension);
    return q.ring()->size() - *rep.dimension;
}

Polynomial random_quadric(std::mt19937_64& rng, const RingPtr& r, unsigned terms) {
    return random_poly(rng, r, 2, terms, true);
}

// specialization x_i -> random linear forms in `target`
Polynomial specialize(std::mt19937_64& rng, const Polynomial& f, const RingPtr& target) {
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < f.ring()->size(); ++i) images.push_back(random_linear_form(rng, target));
    return substitute(f, images);
}

}  // namespace

TEST_CASE("extended integers") {
    CHECK(ExtendedInt::neg_infinity() < ExtendedInt(-100));
    CHECK(ExtendedInt(7) < ExtendedInt::infinity());
    CHECK(ExtendedInt(3) <= ExtendedInt(3));
    CHECK(ExtendedInt::infinity().to_string() == "inf");
    CHECK(ExtendedInt::neg_infinity().to_string() == "-inf");
    CHECK_THROWS_AS(ExtendedInt::infinity().value(), Error);
}

TEST_CASE("quadric strength examples") {
    auto r4 = xs(4);
    auto c = quadric_strength(P("x0*x1 + x2*x3", r4));
    CHECK(c.kind == CertificateKind::ExactQuadric);
    CHECK(c.value == 1);
    CHECK(c.rank == 4u);
    REQUIRE(c.decomposition.size() == 2);
    CHECK(c.decomposition[0].g == P("x0", r4));
    CHECK(c.decomposition[0].h == P("x1", r4));
    CHECK(c.decomposition[1].g == P("x2", r4));
    CHECK(c.decomposition[1].h == P("x3", r4));
    CHECK(c.decomposition_minimal);

    auto sq = quadric_strength(P("x0^2", xs(3)));
    CHECK(sq.value == 0);
    CHECK(sq.decomposition.size() == 1);

    auto r6 = xs(6);
    auto sum = P("x0^2 + x1^2 + x2^2 + x3^2 + x4^2 + x5^2", r6);
    auto s6 = quadric_strength(sum);
    CHECK(s6.rank == 6u);
    CHECK(s6.value == 2);
    // positive definite over the rationals: no product of rational linear forms splits off
    CHECK_FALSE(s6.decomposition_minimal);
    CHECK(verify_decomposition(sum, s6.decomposition).value + 1 == static_cast<int>(s6.decomposition.size()));

    for (std::uint64_t p : {3u, 5u, 7u, 101u}) {
        auto rp = xs(6, Field::prime(p));
        auto s = quadric_strength(P("x0^2 + x1^2 + x2^2 + x3^2 + x4^2 + x5^2", rp));
        CHECK(s.value == 2);
        // three hyperbolic planes over F_p exactly when -1 is a square
        const bool split = p % 4 == 1;
        CHECK(s.decomposition.size() == (split ? 3u : 4u));
        CHECK(s.decomposition_minimal == split);
    }

    CHECK_THROWS_AS(quadric_strength(P("x0^3", xs(2))), InputError);
    CHECK_THROWS_AS(quadric_strength(P("x0^2 + x1", xs(2))), InputError);
    CHECK_THROWS_AS(quadric_strength(P("x0*x1", xs(2, Field::prime(2)))), InputError);
}

TEST_CASE("verify decomposition examples") {
    auto r4 = xs(4);
    auto c = verify_decomposition(P("x0*x1 + x2*x3", r4), {{P("x0", r4), P("x1", r4)}, {P("x2", r4), P("x3", r4)}});
    CHECK(c.kind == CertificateKind::UpperBoundDecomposition);
    CHECK(c.value == 1);

    auto r2 = xs(2);
    auto cubic = verify_decomposition(P("x0^3 + x1^3", r2), {{P("x0", r2), P("x0^2", r2)}, {P("x1", r2), P("x1^2", r2)}});
    CHECK(cubic.value == 1);

    try {
        verify_decomposition(P("x0^3", r2), {{P("x0", r2), P("x1^2", r2)}});
        FAIL("expected a verification error");
    } catch (const VerificationError& e) {
        CHECK(e.residue() == "x0^3 - x0*x1^2");
    }
    CHECK_THROWS_AS(verify_decomposition(P("x0^3", r2), {{P("1", r2), P("x0^3", r2)}}), InputError);
    CHECK_THROWS_AS(verify_decomposition(P("x0^2", r2), {{P("x0", r2), P("x0^2", r2)}}), InputError);
}

TEST_CASE("property: quadric certificates re-verify and match an independent rank") {
    std::mt19937_64 rng(29);
    for (const Field& field : {Field::rationals(), Field::prime(101), Field::prime(3)}) {
        auto r = xs(5, field);
        for (int trial = 0; trial < 25; ++trial) {
            auto q = random_quadric(rng, r, 1 + trial % 7);
            if (q.is_zero()) continue;
            auto c = quadric_strength(q);
            const std::size_t rk = rank_via_partials(q);
            CHECK(*c.rank == rk);
            CHECK(c.value == static_cast<int>((rk + 1) / 2) - 1);
            CHECK(verify_decomposition(q, c.decomposition).value >= c.value);
            // over a finite field odd rank always splits down to one square,
            // even rank leaves at most one anisotropic plane
            if (field.is_prime_field()) {
                if (rk % 2 == 1) CHECK(c.decomposition_minimal);
                else CHECK(c.decomposition.size() <= (rk + 1) / 2 + 1);
            }
        }
    }
}

TEST_CASE("smooth strength examples") {
    auto r4 = xs(4);
    CHECK(smooth_strength(P("x0*x1 + x2*x3", r4)).value == ExtendedInt(4));
    CHECK(smooth_strength(P("x0^2", r4)).value == ExtendedInt(1));
    for (std::size_t r = 1; r <= 5; ++r) {
        auto ring = xs(6);
        Polynomial f(ring);
        for (std::size_t i = 0; i < r; ++i) f += Polynomial::variable(ring, i).pow(2);
        CHECK(smooth_strength(f).value == ExtendedInt(static_cast<long long>(r)));
    }
    CHECK(smooth_strength(Polynomial(r4)).value == ExtendedInt::neg_infinity());
    CHECK(smooth_strength(P("x0 + x1", r4)).value == ExtendedInt::infinity());
    CHECK(smooth_strength(P("x0^3 + x1^3 + x2^3 + x3^3", r4)).value == ExtendedInt(4));
    auto tight = smooth_strength(P("x0^3 + x1^3 + x2^3 + x3^3", r4), GroebnerLimits{2, 40});
    CHECK(tight.inconclusive());
}

TEST_CASE("property: smooth strength is at most 2s + 2 for verified decompositions") {
    std::mt19937_64 rng(31);
    auto r = xs(5);
    for (int trial = 0; trial < 20; ++trial) {
        const int pairs = 1 + trial % 2;
        std::vector<ProductPair> dec;
        Polynomial f(r);
        for (int k = 0; k < pairs; ++k) {
            auto g = random_linear_form(rng, r);
            auto h = random_poly(rng, r, 2, 3, true);
            if (g.is_zero() || h.is_zero()) continue;
            f += g * h;
            dec.push_back({g, h});
        }
        if (dec.empty() || f.is_zero()) continue;
        auto cert = verify_decomposition(f, dec);
        auto ss = smooth_strength(f);
        REQUIRE(ss.value);
        CHECK(*ss.value <= ExtendedInt(2 * cert.value + 2));
    }
}

TEST_CASE("property: strengths only decrease under specialization") {
    std::mt19937_64 rng(37);
    auto big = xs(4);
    auto small = make_ring({"y0", "y1", "y2"}, Field());
    for (int trial = 0; trial < 20; ++trial) {
        auto f = random_poly(rng, big, 2 + trial % 2, 4, true);
        if (f.is_zero()) continue;
        auto g = specialize(rng, f, trial % 3 == 0 ? big : small);
        auto sf = smooth_strength(f), sg = smooth_strength(g);
        REQUIRE(sf.value);
        REQUIRE(sg.value);
        CHECK(*sg.value <= *sf.value);
        if (f.degree() == 2 && !g.is_zero()) CHECK(quadric_strength(g).value <= quadric_strength(f).value);
    }
}

TEST_CASE("collective sample examples") {
    auto r8 = xs(8);
    std::vector<Polynomial> fs{P("x0*x1 + x2*x3", r8), P("x4*x5 + x6*x7", r8)};
    SampleOptions opt;
    opt.trials = 5;
    opt.seed = 42;
    auto s = collective_smooth_strength_sample(fs, opt);
    CHECK(s.min_observed == ExtendedInt(4));
    CHECK(s.witness == std::vector<Scalar>{1, 0});
    CHECK(*smooth_strength(fs[0] + fs[1].scaled(0)).value == *s.min_observed);

    // brute force over the 5 x 5 grid: 4 on the axes, 8 elsewhere
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b) {
            if (!a && !b) continue;
            auto v = smooth_strength(fs[0].scaled(a) + fs[1].scaled(b)).value;
            CHECK(*v == ExtendedInt(a && b ? 8 : 4));
        }

    auto dep = collective_smooth_strength_sample({fs[0], fs[0].scaled(2)}, opt);
    CHECK(dep.min_observed == ExtendedInt::neg_infinity());
    REQUIRE(dep.witness.size() == 2);
    CHECK((fs[0].scaled(dep.witness[0]) + fs[0].scaled(2).scaled(dep.witness[1])).is_zero());

    auto r2 = xs(2);
    opt.trials = 25;
    auto squares = collective_smooth_strength_sample({P("x0^2", r2), P("x1^2", r2)}, opt);
    CHECK(squares.min_observed == ExtendedInt(1));
    CHECK(smooth_strength(P("x0^2 + x1^2", r2)).value == ExtendedInt(2));
}

TEST_CASE("collective sample is deterministic and its witness reproduces the minimum") {
    std::mt19937_64 rng(41);
    auto r = xs(4);
    for (int trial = 0; trial < 4; ++trial) {
        std::vector<Polynomial> fs{random_poly(rng, r, 2, 4, true), random_poly(rng, r, 2, 4, true)};
        SampleOptions opt;
        opt.trials = 6;
        opt.seed = 1000 + trial;
        opt.exhaustive_grid = trial % 2 == 0;
        auto a = collective_smooth_strength_sample(fs, opt);
        auto b = collective_smooth_strength_sample(fs, opt);
        REQUIRE(a.min_observed);
        CHECK(a.min_observed == b.min_observed);
        CHECK(a.witness == b.witness);
        Polynomial comb(r);
        for (std::size_t i = 0; i < fs.size(); ++i) comb += fs[i].scaled(a.witness[i]);
        CHECK(smooth_strength(comb).value == a.min_observed);
    }
}

TEST_CASE("property: invertible recombination gives the same sampled values") {
    std::mt19937_64 rng(43);
    auto r8 = xs(8);
    std::vector<Polynomial> fs{P("x0*x1 + x2*x3", r8), P("x4^2 + x5*x6 - x7^2", r8)};
    const Field Q;
    for (int trial = 0; trial < 3; ++trial) {
        std::uniform_int_distribution<int> d(-3, 3);
        Matrix m(2, 2, Q);
        do {
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j) m(i, j) = d(rng);
        } while (m.rank() < 2);
        std::vector<Polynomial> gs{fs[0].scaled(m(0, 0)) + fs[1].scaled(m(0, 1)),
                                   fs[0].scaled(m(1, 0)) + fs[1].scaled(m(1, 1))};
        // combination c of the g's is combination m^T c of the f's
        const Matrix mt_inv = m.transpose().inverse();
        ExtendedInt min_f = ExtendedInt::infinity(), min_g = ExtendedInt::infinity();
        for (int a = -2; a <= 2; ++a)
            for (int b = -2; b <= 2; ++b) {
                if (!a && !b) continue;
                auto c = mt_inv.apply({Scalar(a), Scalar(b)});
                auto vf = *smooth_strength(fs[0].scaled(a) + fs[1].scaled(b)).value;
                auto vg = *smooth_strength(gs[0].scaled(c[0]) + gs[1].scaled(c[1])).value;
                CHECK(vf == vg);
                min_f = std::min(min_f, vf);
                min_g = std::min(min_g, vg);
            }
        CHECK(min_f == min_g);
    }
}

TEST_CASE("lemma 2.12 examples") {
    auto r4 = xs(4);
    auto a = lemma_2_12_check({P("x0*x1 + x2*x3", r4)}, ExtendedInt(4));
    CHECK(a.bound == ExtendedInt(0));
    CHECK(a.locus.dimension == 0);
    CHECK(a.pass == true);

    auto r2 = xs(2);
    auto b = lemma_2_12_check({P("x0^2", r2)}, ExtendedInt(1));
    CHECK(b.bound == ExtendedInt(1));
    CHECK(b.locus.dimension == 1);
    CHECK(b.pass == true);

    auto c = lemma_2_12_check({P("x0", r2), P("x1", r2)}, ExtendedInt::infinity());
    CHECK(c.locus.dimension == -1);
    CHECK(c.pass == true);

    // overclaiming fails
    auto d = lemma_2_12_check({P("x0^2", r2)}, ExtendedInt(2));
    CHECK(d.pass == false);
}

TEST_CASE("lemma 2.12 on disjoint families with sampled strength") {
    auto r8 = xs(8);
    std::vector<Polynomial> fs{P("x0*x1 + x2*x3", r8), P("x4*x5 + x6*x7", r8)};
    SampleOptions opt;
    opt.trials = 4;
    auto s = collective_smooth_strength_sample(fs, opt);
    auto rep = lemma_2_12_check(fs, *s.min_observed);
    CHECK(rep.bound == ExtendedInt(8 - 4 + 2 - 1));
    CHECK(rep.pass == true);
    CHECK(jacobian_maximal_minors(fs).size() > 0);
}

TEST_CASE("regular sequence when strength is at least 2c + 1") {
    struct Case {
        std::size_t nvars;
        std::vector<std::string> gens;
    };
    const std::vector<Case> suite{
        {4, {"x0*x1 + x2*x3"}},
        {4, {"x0^3 + x1^3 + x2^3 + x3^3"}},
        {12, {"x0*x1 + x2*x3 + x4*x5", "x6*x7 + x8*x9 + x10*x11"}},
        {10, {"x0^2 + x1^2 + x2^2 + x3^2 + x4^2", "x5^2 + x6^2 + x7^2 + x8^2 + x9^2"}},
    };
    for (const auto& c : suite) {
        auto r = xs(c.nvars);
        std::vector<Polynomial> fs;
        for (const auto& g : c.gens) fs.push_back(P(g, r));
        SampleOptions opt;
        opt.trials = 3;
        auto s = collective_smooth_strength_sample(fs, opt);
        REQUIRE(s.min_observed);
        const long long cc = static_cast<long long>(fs.size());
        REQUIRE(ExtendedInt(2 * cc + 1) <= *s.min_observed);
        auto dim = affine_dimension(IdealBasis(r, fs));
        CHECK(dim.dimension == static_cast<int>(c.nvars) - static_cast<int>(cc));
    }
}
