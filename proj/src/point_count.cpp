#include "sfano/errors.hpp"
#include "sfano/ideals.hpp"

#include <cmath>
#include <future>

namespace sfano {

namespace {

using u64 = std::uint64_t;
using Uni = std::vector<u64>;  // coefficients, low degree first

struct CompiledTerm {
    u64 coeff;
    std::vector<std::uint32_t> exps;
};

void trim(Uni& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

u64 inv_mod(u64 a, u64 p) {
    u64 r = 1, e = p - 2;
    a %= p;
    while (e) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return r;
}

void make_monic(Uni& a, u64 p) {
    if (a.empty() || a.back() == 1) return;
    const u64 inv = inv_mod(a.back(), p);
    for (auto& c : a) c = c * inv % p;
}

// a mod m, m monic and nonempty
void reduce(Uni& a, const Uni& m, u64 p) {
    const std::size_t dm = m.size() - 1;
    trim(a);
    while (a.size() > dm) {
        const u64 lead = a.back();
        const std::size_t shift = a.size() - 1 - dm;
        if (lead) {
            for (std::size_t i = 0; i < dm; ++i) a[shift + i] = (a[shift + i] + (p - lead) * m[i]) % p;
        }
        a.pop_back();
        trim(a);
    }
}

Uni mul_mod(const Uni& a, const Uni& b, const Uni& m, u64 p) {
    if (a.empty() || b.empty()) return {};
    Uni r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    reduce(r, m, p);
    return r;
}

Uni gcd(Uni a, Uni b, u64 p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        make_monic(b, p);
        reduce(a, b, p);
        std::swap(a, b);
    }
    make_monic(a, p);
    return a;
}

// Number of distinct roots in F_p of a nonzero univariate polynomial.
u64 distinct_roots(Uni g, u64 p) {
    trim(g);
    if (g.size() <= 1) return 0;
    make_monic(g, p);
    // x^p mod g
    Uni result{1}, base{0, 1};
    reduce(base, g, p);
    u64 e = p;
    while (e) {
        if (e & 1) result = mul_mod(result, base, g, p);
        e >>= 1;
        if (e) base = mul_mod(base, base, g, p);
    }
    // x^p - x
    if (result.size() < 2) result.resize(2, 0);
    result[1] = (result[1] + p - 1) % p;
    trim(result);
    Uni d = gcd(g, result, p);
    return d.empty() ? 0 : d.size() - 1;
}

std::vector<std::vector<CompiledTerm>> compile(const IdealBasis& ideal, u64 p) {
    const Field fp = Field::prime(p);
    std::vector<std::vector<CompiledTerm>> out;
    for (const auto& g : ideal.generators()) {
        std::vector<CompiledTerm> terms;
        for (const auto& t : g.terms()) {
            Scalar c = fp.from_rational(t.coeff);  // throws if the denominator vanishes mod p
            if (Field::is_zero(c)) continue;
            terms.push_back(CompiledTerm{c.get_num().get_ui(), t.monomial.exponents()});
        }
        out.push_back(std::move(terms));
    }
    return out;
}

}  // namespace

std::optional<std::uint64_t> count_points(const IdealBasis& ideal, std::uint32_t prime, std::uint64_t budget) {
    const u64 p = prime;
    const std::size_t n = ideal.ring()->size();
    auto gens = compile(ideal, p);
    if (n == 0) {
        for (const auto& g : gens)
            if (!g.empty()) return 0;
        return 1;
    }
    const std::size_t enumerated = n - 1;
    long double work = std::pow(static_cast<long double>(p), static_cast<long double>(enumerated));
    if (work > static_cast<long double>(budget)) return std::nullopt;

    std::vector<u64> point(enumerated, 0);
    std::uint32_t max_last = 0;
    for (const auto& g : gens)
        for (const auto& t : g) max_last = std::max(max_last, t.exps[n - 1]);
    Uni acc, uni;
    u64 total = 0;
    while (true) {
        acc.clear();
        bool all_zero = true;
        for (const auto& g : gens) {
            uni.assign(max_last + 1, 0);
            for (const auto& t : g) {
                u64 v = t.coeff;
                for (std::size_t i = 0; i < enumerated && v; ++i)
                    for (std::uint32_t e = 0; e < t.exps[i]; ++e) v = v * point[i] % p;
                uni[t.exps[n - 1]] = (uni[t.exps[n - 1]] + v) % p;
            }
            trim(uni);
            if (uni.empty()) continue;
            all_zero = false;
            acc = acc.empty() ? uni : gcd(acc, uni, p);
            if (acc.size() == 1) break;  // nonzero constant: no roots
        }
        if (all_zero) {
            total += p;
        } else if (acc.size() > 1) {
            total += distinct_roots(acc, p);
        }
        // next point
        std::size_t i = 0;
        while (i < enumerated && ++point[i] == p) point[i++] = 0;
        if (i == enumerated) break;
    }
    return total;
}

DimensionReport point_count_dimension(const IdealBasis& ideal, std::span<const std::uint32_t> primes,
                                      std::uint64_t budget) {
    DimensionReport rep;
    rep.method = DimensionMethod::PointCount;
    if (primes.empty()) throw InputError("point counting needs at least one prime");
    for (auto p : primes)
        if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");

    std::vector<std::future<std::optional<u64>>> jobs;
    for (auto p : primes)
        jobs.push_back(std::async(std::launch::async, [&ideal, p, budget] { return count_points(ideal, p, budget); }));
    bool over_budget = false;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        auto c = jobs[i].get();
        if (!c) {
            over_budget = true;
            continue;
        }
        rep.counts.push_back(PointCount{primes[i], *c});
    }
    if (over_budget) {
        rep.note = "enumeration budget exceeded";
        return rep;
    }
    std::size_t largest = 0;
    for (std::size_t i = 1; i < rep.counts.size(); ++i)
        if (rep.counts[i].prime > rep.counts[largest].prime) largest = i;
    const auto& ref = rep.counts[largest];
    bool all_zero = true;
    for (const auto& c : rep.counts) all_zero = all_zero && c.count == 0;
    if (all_zero) {
        rep.dimension = -1;
    } else if (ref.count == 0) {
        rep.note = "no points over the largest prime but points over smaller ones";
    } else {
        const long double est = std::log(static_cast<long double>(ref.count)) / std::log(static_cast<long double>(ref.prime));
        rep.dimension = static_cast<int>(std::lround(est));
    }
    rep.note = rep.note.empty() ? "heuristic: round(log_p N_p) for the largest prime" : rep.note;
    return rep;
}

}  // namespace sfano
