#include "doctest.h"
#include "support.hpp"

#include "sfano/errors.hpp"
#include "sfano/matrix.hpp"

using namespace sfano;
using namespace sfano::testing;

TEST_CASE("field construction and primality") {
    CHECK(is_prime(2));
    CHECK(is_prime(101));
    CHECK(is_prime(2147483647));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(561));
    CHECK_THROWS_AS(Field::prime(100), InputError);
    CHECK_THROWS_AS(Field::prime(4294967291ull), InputError);
    CHECK(Field::from_string("fp:7").modulus() == 7);
    CHECK(Field::from_string("rat").kind() == FieldKind::Rationals);
    CHECK_THROWS_AS(Field::from_string("fp:x"), InputError);

    const Field f5 = Field::prime(5);
    CHECK(f5.mul(Scalar(3), Scalar(4)) == 2);
    CHECK(f5.inv(Scalar(2)) == 3);
    CHECK(f5.from_rational(mpq_class(1, 2)) == 3);
    CHECK(f5.from_int(-1) == 4);
    Scalar r;
    CHECK(f5.sqrt(Scalar(4), r));
    CHECK(f5.mul(r, r) == 4);
    CHECK_FALSE(f5.sqrt(Scalar(2), r));
    CHECK(Field::rationals().sqrt(mpq_class(9, 4), r));
    CHECK(r == mpq_class(3, 2));
    CHECK_FALSE(Field::rationals().sqrt(Scalar(-1), r));
    const Field big = Field::prime(1000003);
    for (long v : {2L, 3L, 5L, 12345L}) {
        Scalar sq = big.mul(Scalar(v), Scalar(v));
        REQUIRE(big.sqrt(sq, r));
        CHECK(big.mul(r, r) == sq);
    }
}

TEST_CASE("parse examples") {
    const Field Q;
    auto f = parse("x0^2 + x1^2", Q);
    CHECK(f.size() == 2);
    CHECK(f.degree() == 2);
    CHECK(f.to_string() == "x0^2 + x1^2");

    auto z = parse("0", Q);
    CHECK(z.is_zero());
    CHECK(z.terms().empty());

    auto m = parse("6*x0^4", Field::prime(3));
    CHECK(m.is_zero());

    auto g = parse("-1/2*u0_3^2 + 3x1*x2 - 4", Q);
    CHECK(g.to_string() == "-1/2*u0_3^2 + 3*x1*x2 - 4");
    CHECK(g.ring()->vars() == std::vector<std::string>{"u0_3", "x1", "x2"});
}

TEST_CASE("parse errors carry positions") {
    const Field Q;
    try {
        parse("x0 + * x1", Q);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 5);
    }
    CHECK_THROWS_AS(parse("", Q), ParseError);
    CHECK_THROWS_AS(parse("x0 +", Q), ParseError);
    CHECK_THROWS_AS(parse("1/0*x", Q), ParseError);
    CHECK_THROWS_AS(parse("x0 ) x1", Q), ParseError);
    CHECK_THROWS_AS(parse("y", xs(2)), InputError);
    CHECK_THROWS_AS(parse("1/3*x0", Field::prime(3)), InputError);
}

TEST_CASE("natural variable order") {
    CHECK(natural_less("x2", "x10"));
    CHECK_FALSE(natural_less("x10", "x2"));
    CHECK(natural_less("u0_9", "u0_10"));
    CHECK(natural_less("u0_10", "u1_0"));
    CHECK(natural_less("x", "x0"));
    auto f = parse("x10 + x2 + x1", Field());
    CHECK(f.ring()->vars() == std::vector<std::string>{"x1", "x2", "x10"});
}

TEST_CASE("grevlex order") {
    auto r = xs(3);
    // x0^2 > x0*x1 > x1^2 > x0*x2 > x1*x2 > x2^2
    auto f = P("x2^2 + x1*x2 + x0*x2 + x1^2 + x0*x1 + x0^2", r);
    CHECK(f.to_string() == "x0^2 + x0*x1 + x1^2 + x0*x2 + x1*x2 + x2^2");
    auto ms = monomials_of_degree(2, 2);
    REQUIRE(ms.size() == 3);
    CHECK(ms[0].exponents() == std::vector<std::uint32_t>{2, 0});
    CHECK(ms[1].exponents() == std::vector<std::uint32_t>{1, 1});
    CHECK(ms[2].exponents() == std::vector<std::uint32_t>{0, 2});
    CHECK(monomials_of_degree(3, 4).size() == 15);
}

TEST_CASE("substitute examples") {
    const Field Q;
    // n = 1 slice of the Fano construction for x0^2 + x1^2
    auto target = make_ring({"u0_0", "u0_1", "u1_0", "u1_1", "s0", "s1"}, Q);
    auto f = parse("x0^2 + x1^2", Q);
    Substitution s(target);
    s.assign("x0", P("s0*u0_0 + s1*u1_0", target));
    s.assign("x1", P("s0*u0_1 + s1*u1_1", target));
    auto image = substitute(f, s);
    auto want = P("u0_0^2*s0^2 + u0_1^2*s0^2 + 2*u0_0*u1_0*s0*s1 + 2*u0_1*u1_1*s0*s1 + u1_0^2*s1^2 + u1_1^2*s1^2",
                  target);
    CHECK(image == want);

    auto x0 = parse("x0", Q);
    Substitution id(x0.ring());
    id.assign("x0", x0);
    CHECK(substitute(x0, id) == x0);

    auto y = make_ring({"y"}, Q);
    auto prod = parse("x0*x1", Q);
    Substitution d(y);
    d.assign("x0", P("y + 1", y)).assign("x1", P("y - 1", y));
    CHECK(substitute(prod, d).to_string() == "y^2 - 1");

    Substitution missing(y);
    missing.assign("x0", P("y", y));
    CHECK_THROWS_AS(substitute(prod, missing), InputError);
}

TEST_CASE("partial derivative examples") {
    auto r = xs(4);
    CHECK(partial_derivative(P("x0^2*x2", r), "x2") == P("x0^2", r));
    auto r3 = xs(1, Field::prime(3));
    CHECK(partial_derivative(P("x0^3", r3), "x0").is_zero());
    CHECK(partial_derivative(P("x0*x1 + x2*x3", r), "x1") == P("x0", r));
    CHECK_THROWS_AS(partial_derivative(P("x0", r), "q"), InputError);
}

TEST_CASE("collect coefficients examples") {
    const Field Q;
    auto f = parse("s^2*u + s*t*v", Q);
    auto cm = collect_coefficients(f, {"s", "t"});
    REQUIRE(cm.entries.size() == 2);
    CHECK(cm.entries[0].first.exponents() == std::vector<std::uint32_t>{2, 0});
    CHECK(cm.entries[0].second.to_string() == "u");
    CHECK(cm.entries[1].first.exponents() == std::vector<std::uint32_t>{1, 1});
    CHECK(cm.entries[1].second.to_string() == "v");
    CHECK(reassemble(cm, f.ring()) == f);

    auto r = make_ring({"s", "t", "x"}, Q);
    auto g = P("x^2 + 3", r);
    auto cg = collect_coefficients(g, {"s", "t"});
    REQUIRE(cg.entries.size() == 1);
    CHECK(cg.entries[0].first.is_one());
    CHECK(cg.entries[0].second.to_string() == "x^2 + 3");
    CHECK(collect_coefficients(Polynomial(r), {"s"}).entries.empty());
}

TEST_CASE("evaluate examples") {
    auto r = xs(4);
    const std::vector<Scalar> pt{1, -1, 1, 1};
    CHECK(evaluate(P("x0*x1 + x2*x3", r), pt) == 0);
    const std::vector<Scalar> zero(4, Scalar(0));
    CHECK(evaluate(P("x0^3 - 2*x1*x2*x3 + x3^3", r), zero) == 0);
    auto r5 = xs(1, Field::prime(5));
    const std::vector<Scalar> three{3};
    CHECK(evaluate(P("x0^2", r5), three) == 4);
    CHECK_THROWS_AS(evaluate(P("x0", r5), pt), InputError);
}

TEST_CASE("property: print/parse round trip and ring laws") {
    std::mt19937_64 rng(7);
    for (const Field& field : {Field::rationals(), Field::prime(101)}) {
        auto r = xs(4, field);
        for (int trial = 0; trial < 40; ++trial) {
            auto a = random_poly(rng, r, 4, 6);
            auto b = random_poly(rng, r, 3, 5);
            auto c = random_poly(rng, r, 3, 4);
            CHECK(parse(a.to_string(), r) == a);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a - a).is_zero());
        }
    }
}

TEST_CASE("property: Euler relation for homogeneous polynomials") {
    std::mt19937_64 rng(11);
    auto r = xs(4);
    for (int trial = 0; trial < 30; ++trial) {
        const unsigned d = 1 + trial % 4;
        auto f = random_poly(rng, r, d, 5, true);
        Polynomial lhs(r);
        for (std::size_t i = 0; i < r->size(); ++i) lhs += Polynomial::variable(r, i) * partial_derivative(f, i);
        CHECK(lhs == f.scaled(Scalar(d)));
    }
}

TEST_CASE("property: substitution is a ring homomorphism and collect reassembles") {
    std::mt19937_64 rng(13);
    auto src = xs(3);
    auto dst = make_ring({"y0", "y1"}, Field());
    for (int trial = 0; trial < 25; ++trial) {
        Substitution s(dst);
        for (std::size_t i = 0; i < 3; ++i) s.assign(src->name(i), random_poly(rng, dst, 2, 3));
        auto f = random_poly(rng, src, 3, 4);
        auto g = random_poly(rng, src, 2, 4);
        CHECK(substitute(f * g, s) == substitute(f, s) * substitute(g, s));
        CHECK(substitute(f + g, s) == substitute(f, s) + substitute(g, s));
        auto cm = collect_coefficients(f, {"x0", "x2"});
        CHECK(reassemble(cm, src) == f);
    }
}

TEST_CASE("embedding between rings") {
    const Field Q;
    auto f = parse("x1*x3", Q);
    auto big = xs(5);
    auto e = f.embed(big);
    CHECK(e.to_string() == "x1*x3");
    CHECK(e.ring()->size() == 5);
    CHECK_THROWS_AS(parse("y", Q).embed(big), InputError);
}

TEST_CASE("matrix rank, kernel, inverse") {
    const Field Q;
    Matrix m({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}, Q);
    CHECK(m.rank() == 2);
    auto ker = m.kernel();
    REQUIRE(ker.size() == 1);
    auto img = m.apply(ker[0]);
    for (const auto& v : img) CHECK(v == 0);
    Matrix h({{mpq_class(1, 2), mpq_class(1, 3)}, {mpq_class(1, 3), mpq_class(1, 4)}}, Q);
    CHECK(h.rank() == 2);
    auto hi = h.inverse();
    auto id = h * hi;
    CHECK(id(0, 0) == 1);
    CHECK(id(0, 1) == 0);
    CHECK(id(1, 1) == 1);
    CHECK(Matrix(3, 4).rank() == 0);
    Matrix p({{1, 1}, {1, 1}}, Field::prime(2));
    CHECK(p.rank() == 1);
    Matrix q({{2, 1}, {1, 3}}, Field::prime(5));  // det 5 = 0 mod 5
    CHECK(q.rank() == 1);
    CHECK_THROWS(q.inverse());

    // Bareiss rank agrees with field elimination on random integer matrices
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> d(-2, 2);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<std::vector<Scalar>> rows(4, std::vector<Scalar>(5));
        for (auto& row : rows)
            for (auto& v : row) v = d(rng);
        if (trial % 3 == 0) rows[3] = rows[0];
        Matrix a(rows, Q);
        CHECK(a.rank() == a.rref().pivots.size());
    }
}
