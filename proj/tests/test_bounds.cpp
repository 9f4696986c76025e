#include "doctest.h"

#include "sfano/bounds.hpp"

#include <algorithm>
#include <functional>

using namespace sfano;

namespace {

mpz_class choose(const mpz_class& n, unsigned k) {
    mpz_class num = 1, den = 1;
    for (unsigned i = 0; i < k; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return num / den;
}

// Straight-line re-derivation: strip entries below 2 at every level.
mpz_class oracle(std::vector<unsigned> ds) {
    std::vector<unsigned> kept;
    for (auto d : ds)
        if (d >= 2) kept.push_back(d);
    if (kept.empty()) return 1;
    std::vector<unsigned> lower;
    for (auto d : kept) lower.push_back(d - 1);
    const mpz_class r = oracle(lower);
    mpz_class total = 1;
    for (auto d : kept) total += 2 * choose(r + d + 1, d);
    return total;
}

void for_each_tuple(unsigned max_entry, std::size_t max_len, const std::function<void(const DegreeTuple&)>& fn) {
    std::function<void(DegreeTuple&)> rec = [&](DegreeTuple& cur) {
        fn(cur);
        if (cur.size() == max_len) return;
        for (unsigned d = cur.empty() ? 0 : cur.back(); d <= max_entry; ++d) {
            cur.push_back(d);
            rec(cur);
            cur.pop_back();
        }
    };
    DegreeTuple start;
    rec(start);
}

}  // namespace

TEST_CASE("u_str examples") {
    CHECK(u_str({}) == 1);
    CHECK(u_str({2}) == 13);
    CHECK(u_str({2, 2}) == 25);
    CHECK(u_str({3}) == 1361);
    CHECK(u_str({1, 1, 3}) == u_str({3}));
    CHECK(u_str({0, 2}) == 13);
    CHECK(u_str({3, 2}) == u_str({2, 3}));
}

TEST_CASE("u_str matches the independent recursion") {
    for_each_tuple(4, 3, [](const DegreeTuple& ds) { CHECK(u_str(ds) == oracle(ds)); });
    // nesting beyond 64 bits
    CHECK(u_str({4}) == mpz_class("288876577991"));
    CHECK(u_str({5}) > mpz_class("18446744073709551616"));
}

TEST_CASE("u_str is monotone") {
    for_each_tuple(4, 3, [](const DegreeTuple& ds) {
        for (std::size_t i = 0; i < ds.size(); ++i) {
            if (ds[i] == 4) continue;
            DegreeTuple up = ds;
            ++up[i];
            CHECK(u_str(ds) <= u_str(up));
        }
        if (ds.size() < 3)
            for (unsigned d = 2; d <= 4; ++d) {
                DegreeTuple ext = ds;
                ext.push_back(d);
                CHECK(u_str(ds) <= u_str(ext));
            }
    });
}

TEST_CASE("normalization is idempotent") {
    for_each_tuple(4, 3, [](const DegreeTuple& ds) {
        auto once = normalize_degrees(ds);
        CHECK(normalize_degrees(once) == once);
        CHECK(std::is_sorted(once.begin(), once.end()));
    });
}

TEST_CASE("threshold examples") {
    CHECK(theorem_3_6_threshold({2}, 1) == 7);
    CHECK(theorem_3_6_threshold({2, 2}, 1) == 13);
    CHECK(theorem_3_6_threshold({3}, 2) == 21);
    CHECK(lemma_4_3_bound({2}, 1) == 8);
    CHECK(lemma_4_3_bound({1}, 1) == 5);
    CHECK(lemma_4_3_bound({}, 1) == 2);
    CHECK(cor_4_5_bound({2}, 1) == 13);
    CHECK(cor_4_5_bound({3}, 1) == 21);
    CHECK(cor_4_5_bound({}, 3) == 1);
    CHECK(cor_2_13_bound(0) == 1);
    CHECK(cor_2_13_bound(1) == 3);
    CHECK(cor_2_13_bound(5) == 11);
    CHECK(prop_4_4_bound({2}, 1) == 4);
    CHECK(prop_4_4_bound({3}, 1) == 5);
    CHECK(prop_4_4_bound({3}, 2) == 9);
}

TEST_CASE("consistency inequality behind the residual corollary") {
    for_each_tuple(5, 3, [](const DegreeTuple& ds) {
        if (ds.empty() || ds.front() < 2) return;
        for (unsigned k = 1; k <= 4; ++k) {
            mpz_class lhs = 1, rhs = k + 2;
            for (auto d : ds) {
                lhs += 2 * binomial(d + k + 1, k + 1);
                rhs += binomial(k + d, k + 1);
            }
            CHECK(lhs > rhs);
        }
    });
}
