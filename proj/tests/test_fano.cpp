#include "doctest.h"
#include "support.hpp"

#include "sfano/bounds.hpp"
#include "sfano/errors.hpp"
#include "sfano/fano.hpp"
#include "sfano/strength.hpp"

#include <map>

using namespace sfano;
using namespace sfano::testing;

namespace {

Polynomial sum_of_powers(const RingPtr& r, unsigned e) {
    Polynomial f(r);
    for (std::size_t i = 0; i < r->size(); ++i) f += Polynomial::variable(r, i).pow(e);
    return f;
}

std::string u_sum(std::size_t n1, const std::string& pattern) {
    std::string out;
    for (std::size_t i = 0; i < n1; ++i) {
        std::string term = pattern;
        for (std::size_t pos; (pos = term.find('#')) != std::string::npos;) term.replace(pos, 1, std::to_string(i));
        out += (i ? " + " : "") + term;
    }
    return out;
}

}  // namespace

TEST_CASE("fano equations of a sum of squares") {
    for (std::size_t n : {2u, 5u, 10u}) {
        auto r = xs(n + 1);
        auto sys = fano_equations({sum_of_powers(r, 2)}, 1);
        REQUIRE(sys.equations.size() == 3);
        CHECK(sys.equations[0].g == P(u_sum(n + 1, "u0_#^2"), sys.u_ring));
        CHECK(sys.equations[1].g == P(u_sum(n + 1, "2*u0_#*u1_#"), sys.u_ring));
        CHECK(sys.equations[2].g == P(u_sum(n + 1, "u1_#^2"), sys.u_ring));
        CHECK(sys.alpha_string(sys.equations[0].alpha) == "(2,0)");
        CHECK(verify_reassembly(sys));
    }
}

TEST_CASE("fano equation counts") {
    auto r = xs(5);
    for (unsigned d = 1; d <= 4; ++d) {
        std::mt19937_64 rng(d);
        auto f = random_poly(rng, r, d, 4, true);
        if (f.is_zero()) f = Polynomial::variable(r, 0).pow(d);
        CHECK(fano_equations({f}, 1).equations.size() == d + 1);
    }
    CHECK(fano_equations({P("x0*x1 + x2^2", r)}, 2).equations.size() == 6);
    auto two = fano_equations({P("x0*x1", r), P("x2^3 - x3^3", r)}, 2);
    CHECK(two.equations.size() == binomial(4, 2) + binomial(5, 2));
    CHECK_THROWS_AS(fano_equations({P("x0^2 + x1", r)}, 1), InputError);
    CHECK_THROWS_AS(fano_equations({P("x0^2", r)}, 4), InputError);
}

TEST_CASE("characteristic p zero slots") {
    auto r = xs(4, Field::prime(3));
    auto sys = fano_equations({sum_of_powers(r, 4)}, 1);
    REQUIRE(sys.equations.size() == 5);
    CHECK(sys.zero_slots() == 1);
    CHECK(sys.equations[2].g.is_zero());
    CHECK(sys.alpha_string(sys.equations[2].alpha) == "(2,2)");
    CHECK(verify_reassembly(sys));

    for (std::uint64_t p : {3u, 5u, 7u}) {
        auto rp = xs(3, Field::prime(p));
        auto s = fano_equations({sum_of_powers(rp, static_cast<unsigned>(p + 1))}, 1);
        std::size_t expected = 0;
        for (unsigned j = 0; j <= p + 1; ++j) expected += binomial(p + 1, j) % p == 0;
        CHECK(s.zero_slots() == expected);
        CHECK(s.zero_slots() == p - 2);
        auto rec = transfer_specialize(s, {Scalar(2), Scalar(5)});
        for (const auto& t : rec) CHECK(t.equal);
    }
    CHECK(fano_equations({sum_of_powers(xs(3), 4)}, 1).zero_slots() == 0);
}

TEST_CASE("transfer specialization examples") {
    auto r = xs(3);
    auto f = sum_of_powers(r, 2);
    auto sys = fano_equations({f}, 1);
    auto ones = transfer_specialize(sys, {Scalar(1), Scalar(1)});
    CHECK(ones[1].image == f.scaled(2));
    auto zeros = transfer_specialize(sys, {Scalar(0), Scalar(0)});
    for (const auto& t : zeros) {
        CHECK(t.image.is_zero());
        CHECK(t.equal);
    }
    auto twothree = transfer_specialize(sys, {Scalar(2), Scalar(3)});
    CHECK(twothree[1].image == f.scaled(12));
    for (const auto& t : twothree) CHECK(t.equal);
    CHECK_THROWS_AS(transfer_specialize(sys, {Scalar(1)}), InputError);
}

TEST_CASE("property: reassembly and transfer on random systems") {
    std::mt19937_64 rng(211);
    for (const Field& field : {Field::rationals(), Field::prime(101)}) {
        for (int trial = 0; trial < 15; ++trial) {
            auto r = xs(4 + trial % 3, field);
            const std::size_t k = 1 + trial % 2;
            std::vector<Polynomial> fs;
            for (int l = 0; l < 1 + trial % 2; ++l) {
                auto f = random_poly(rng, r, 1 + (trial + l) % 4, 4, true);
                if (!f.is_zero()) fs.push_back(f);
            }
            if (fs.empty()) continue;
            auto sys = fano_equations(fs, k);
            CHECK(verify_reassembly(sys));
            for (const auto& e : sys.equations)
                if (!e.g.is_zero()) {
                    CHECK(e.g.is_homogeneous());
                    CHECK(e.g.degree() == sys.sources[e.source].degree());
                }
            std::vector<Scalar> lambda;
            for (std::size_t i = 0; i <= k; ++i) lambda.push_back(static_cast<long>(rng() % 11) - 5);
            for (const auto& t : transfer_specialize(sys, lambda)) CHECK(t.equal);
        }
    }
}

TEST_CASE("transfer rank check") {
    auto r10 = xs(10);
    auto big = transfer_rank_check(fano_equations({sum_of_powers(r10, 2)}, 1), 30, 5);
    CHECK(big.source_min_rank == 10);
    CHECK(big.min_observed_rank >= 10);
    CHECK(big.pass);
    // brute force over a small grid of combinations
    auto sys = fano_equations({sum_of_powers(xs(4), 2)}, 1);
    for (int a = -1; a <= 1; ++a)
        for (int b = -1; b <= 1; ++b)
            for (int c = -1; c <= 1; ++c) {
                if (!a && !b && !c) continue;
                auto q = sys.equations[0].g.scaled(a) + sys.equations[1].g.scaled(b) + sys.equations[2].g.scaled(c);
                CHECK(gram_matrix(q).rank() >= 4);
            }

    auto r2 = xs(3);
    auto sq = fano_equations({P("x0^2", r2)}, 1);
    CHECK(sq.equations[0].g.to_string() == "u0_0^2");
    CHECK(sq.equations[1].g.to_string() == "2*u0_0*u1_0");
    CHECK(sq.equations[2].g.to_string() == "u1_0^2");
    CHECK(gram_matrix(sq.equations[0].g + sq.equations[2].g).rank() == 2);
    auto rep = transfer_rank_check(sq, 10, 1);
    CHECK(rep.source_min_rank == 1);
    CHECK(rep.min_observed_rank == 1);
    CHECK(rep.witness == std::vector<Scalar>{1, 0, 0});
    CHECK_THROWS_AS(transfer_rank_check(fano_equations({P("x0^3", r2)}, 1), 3, 1), InputError);
}

TEST_CASE("theorem 3.6 dimension checks") {
    auto r = xs(4);
    auto quad = fano_dimension_check({P("x0*x1 + x2*x3", r)}, 1);
    CHECK(quad.equation_count == 3);
    CHECK(quad.expected == 5);
    CHECK(quad.computed.dimension == 5);
    CHECK(quad.match == true);

    auto hyper = fano_dimension_check({P("x0", xs(5))}, 1);
    CHECK(hyper.equation_count == 2);
    CHECK(hyper.expected == 2 * 5 - 2);
    CHECK(hyper.match == true);

    auto cubic = fano_dimension_check({P("x0^3 + x1^3 + x2^3 + x3^3", r)}, 1);
    CHECK(cubic.expected == 4);
    CHECK(cubic.computed.dimension == 4);

    CHECK(theorem_3_6_threshold({2}, 1) == 7);
}

TEST_CASE("flag fano equations examples") {
    auto r4 = xs(4);
    auto plane = PlaneChart::coordinate(4, {2, 3});
    auto flag = flag_fano_equations({P("x0^2*x2 + x1^2*x3", r4)}, plane);
    REQUIRE(flag.equations.size() == 2);
    CHECK(flag.equations[0].label == "f0:x0^2*t");
    CHECK(flag.equations[0].equation.to_string() == "a2");
    CHECK(flag.equations[1].equation.to_string() == "a3");
    CHECK(flag.binomial_count == 10);
    CHECK_FALSE(flag.satisfied_by({Scalar(1), Scalar(0)}));

    auto r5 = xs(5);
    auto h = flag_fano_equations({P("x2", r5)}, PlaneChart::coordinate(5, {2, 3, 4}));
    REQUIRE(h.equations.size() == 1);
    CHECK(h.equations[0].equation.to_string() == "a2");
    CHECK(h.satisfied_by({Scalar(0), Scalar(1), Scalar(-3)}));

    auto q = flag_fano_equations({P("x0*x1 + x2*x3", r4)}, PlaneChart::coordinate(4, {1, 3}));
    REQUIRE(q.equations.size() == 2);
    CHECK(q.equations[0].equation.to_string() == "a1");
    CHECK(q.equations[1].equation.to_string() == "a3");
    CHECK_THROWS_AS(flag_fano_equations({P("x0^2", r4)}, plane), InputError);
}

TEST_CASE("property: flag equations decide containment of the spanned plane") {
    std::mt19937_64 rng(223);
    const Field F = Field::prime(5);
    int hits = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 4, k = 1;
        auto r = xs(n + 1, F);
        auto plane = random_plane(rng, k, n, F);
        auto f = random_form_containing(rng, plane, r, 2, 2);
        if (f.is_zero()) continue;
        auto flag = flag_fano_equations({f}, plane);
        std::vector<Scalar> a(n - k);
        for (auto& v : a) v = static_cast<long>(rng() % 5);
        if (std::all_of(a.begin(), a.end(), [](const Scalar& s) { return s == 0; })) continue;
        // direct substitution of the span of the plane and the direction
        auto res = residual(f, plane, a);
        const bool contained = res.extension_contained;
        hits += contained;
        CHECK(flag.satisfied_by(a) == contained);
    }
    CHECK(hits > 0);
}

TEST_CASE("flag equations of combinations lie in the span of the full system") {
    std::mt19937_64 rng(227);
    auto r = xs(6);
    auto plane = PlaneChart::coordinate(6, {2, 3, 4, 5});
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Polynomial> fs{random_form_containing(rng, plane, r, 2), random_form_containing(rng, plane, r, 2)};
        auto full = flag_fano_equations(fs, plane);
        auto sub = flag_fano_equations({fs[0].scaled(3) + fs[1].scaled(-2)}, plane);
        // coefficient vectors over the direction monomials
        std::map<Monomial, std::size_t, GrevlexGreater> cols;
        for (const auto* s : {&full, &sub})
            for (const auto& e : s->equations)
                for (const auto& t : e.equation.terms()) cols.emplace(t.monomial, 0);
        std::size_t c = 0;
        for (auto& [m, i] : cols) i = c++;
        auto rows_of = [&](const FlagFanoSystem& s) {
            std::vector<std::vector<Scalar>> rows;
            for (const auto& e : s.equations) {
                std::vector<Scalar> row(cols.size(), Scalar(0));
                for (const auto& t : e.equation.terms()) row[cols.at(t.monomial)] = t.coeff;
                rows.push_back(row);
            }
            return rows;
        };
        auto a = rows_of(full);
        auto both = a;
        for (auto& row : rows_of(sub)) both.push_back(row);
        if (a.empty()) continue;
        CHECK(Matrix(both, Field()).rank() == Matrix(a, Field()).rank());
    }
}
