#include "sfano/errors.hpp"
#include "sfano/ideals.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace sfano {

IdealBasis::IdealBasis(RingPtr ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
    for (auto& g : generators) {
        if (!same_ring(g.ring(), ring_)) throw InputError("ideal generators must share one ring");
        if (!g.is_zero()) gens_.push_back(std::move(g));
    }
}

IdealBasis::IdealBasis(std::vector<Polynomial> generators)
    : IdealBasis(generators.empty() ? throw InputError("ideal needs at least one generator") : generators[0].ring(),
                 std::move(generators)) {}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& divisors) {
    const Field& field = f.field();
    std::map<Monomial, Scalar, GrevlexGreater> h;
    for (const auto& t : f.terms()) h.emplace(t.monomial, t.coeff);
    std::vector<Term> rem;
    while (!h.empty()) {
        auto top = h.begin();
        const Polynomial* div = nullptr;
        for (const auto& g : divisors) {
            if (!g.is_zero() && g.leading_monomial().divides(top->first)) {
                div = &g;
                break;
            }
        }
        if (!div) {
            rem.push_back(Term{top->first, top->second});
            h.erase(top);
            continue;
        }
        const Monomial q = top->first.quotient(div->leading_monomial());
        const Scalar c = field.div(top->second, div->leading_coeff());
        h.erase(top);
        const auto& gt = div->terms();
        for (std::size_t k = 1; k < gt.size(); ++k) {
            Monomial m = gt[k].monomial * q;
            Scalar delta = field.neg(field.mul(c, gt[k].coeff));
            auto [it, inserted] = h.try_emplace(std::move(m), delta);
            if (!inserted) {
                it->second = field.add(it->second, delta);
                if (Field::is_zero(it->second)) h.erase(it);
            }
        }
    }
    return Polynomial(f.ring(), std::move(rem));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    const Field& field = f.field();
    const Monomial l = f.leading_monomial().lcm(g.leading_monomial());
    Polynomial a = f.mul_term(l.quotient(f.leading_monomial()), field.inv(f.leading_coeff()));
    Polynomial b = g.mul_term(l.quotient(g.leading_monomial()), field.inv(g.leading_coeff()));
    return a - b;
}

bool is_groebner_basis(const std::vector<Polynomial>& basis) {
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            if (!normal_form(s_polynomial(basis[i], basis[j]), basis).is_zero()) return false;
        }
    return true;
}

namespace {

struct Pair {
    std::uint32_t degree;
    Monomial lcm;
    std::size_t i, j;
};

struct PairOrder {
    bool operator()(const Pair& a, const Pair& b) const {
        if (a.degree != b.degree) return a.degree < b.degree;
        int c = grevlex_compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    }
};

class Buchberger {
public:
    Buchberger(const GroebnerLimits& limits) : limits_(limits) {}

    // false when a limit was exceeded
    bool add(Polynomial h) {
        if (basis_.size() >= limits_.max_basis_size) {
            reason_ = "basis size exceeded " + std::to_string(limits_.max_basis_size);
            return false;
        }
        const std::size_t idx = basis_.size();
        basis_.push_back(h.monic());
        const Monomial& lm = basis_.back().leading_monomial();
        for (std::size_t i = 0; i < idx; ++i) {
            const Monomial& other = basis_[i].leading_monomial();
            if (other.coprime(lm)) continue;  // product criterion
            Monomial l = other.lcm(lm);
            const auto d = l.degree();
            queue_.insert(Pair{d, std::move(l), i, idx});
            pending_.insert({i, idx});
        }
        return true;
    }

    bool run() {
        while (!queue_.empty()) {
            Pair p = *queue_.begin();
            queue_.erase(queue_.begin());
            pending_.erase({p.i, p.j});
            if (p.degree > limits_.max_pair_degree) {
                reason_ = "pair degree " + std::to_string(p.degree) + " exceeded " +
                          std::to_string(limits_.max_pair_degree);
                return false;
            }
            if (chain_criterion(p)) continue;
            ++reduced_;
            Polynomial r = normal_form(s_polynomial(basis_[p.i], basis_[p.j]), basis_);
            if (!r.is_zero() && !add(std::move(r))) return false;
        }
        return true;
    }

    std::vector<Polynomial> reduced_basis() const {
        std::vector<Polynomial> sorted = basis_;
        std::stable_sort(sorted.begin(), sorted.end(), [](const Polynomial& a, const Polynomial& b) {
            return grevlex_compare(a.leading_monomial(), b.leading_monomial()) < 0;
        });
        std::vector<Polynomial> minimal;
        for (const auto& g : sorted) {
            bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const Polynomial& m) {
                return m.leading_monomial().divides(g.leading_monomial());
            });
            if (!redundant) minimal.push_back(g);
        }
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Polynomial> others;
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            minimal[i] = normal_form(minimal[i], others).monic();
        }
        return minimal;
    }

    const std::string& reason() const { return reason_; }
    std::size_t reduced() const { return reduced_; }

private:
    bool has_pending(std::size_t a, std::size_t b) const {
        return pending_.count({std::min(a, b), std::max(a, b)}) != 0;
    }

    bool chain_criterion(const Pair& p) const {
        for (std::size_t k = 0; k < basis_.size(); ++k) {
            if (k == p.i || k == p.j) continue;
            if (!basis_[k].leading_monomial().divides(p.lcm)) continue;
            if (!has_pending(p.i, k) && !has_pending(p.j, k)) return true;
        }
        return false;
    }

    GroebnerLimits limits_;
    std::vector<Polynomial> basis_;
    std::set<Pair, PairOrder> queue_;
    std::set<std::pair<std::size_t, std::size_t>> pending_;
    std::string reason_;
    std::size_t reduced_ = 0;
};

}  // namespace

GroebnerOutcome groebner_basis(const IdealBasis& ideal, const GroebnerLimits& limits) {
    GroebnerOutcome out;
    Buchberger bb(limits);
    for (const auto& g : ideal.generators()) {
        if (!bb.add(g)) {
            out.inconclusive_reason = bb.reason();
            return out;
        }
    }
    if (!bb.run()) {
        out.inconclusive_reason = bb.reason();
        out.pairs_reduced = bb.reduced();
        return out;
    }
    out.pairs_reduced = bb.reduced();
    out.basis = bb.reduced_basis();
    return out;
}

int dimension_from_leading_monomials(std::size_t nvars, const std::vector<Monomial>& lms) {
    if (nvars > 64) throw InputError("dimension search supports at most 64 variables");
    std::vector<std::uint64_t> masks;
    for (const auto& m : lms) {
        std::uint64_t mask = 0;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i]) mask |= 1ull << i;
        if (mask == 0) return -1;
        masks.push_back(mask);
    }
    int best = -1;
    auto admissible = [&](std::uint64_t set) {
        return std::none_of(masks.begin(), masks.end(), [set](std::uint64_t m) { return (m & ~set) == 0; });
    };
    auto rec = [&](auto&& self, std::size_t i, std::uint64_t set, int size) -> void {
        if (size + static_cast<int>(nvars - i) <= best) return;
        if (i == nvars) {
            best = size;
            return;
        }
        const std::uint64_t with = set | (1ull << i);
        if (admissible(with)) self(self, i + 1, with, size + 1);
        self(self, i + 1, set, size);
    };
    rec(rec, 0, 0, 0);
    return best;
}

DimensionReport affine_dimension(const IdealBasis& ideal, const GroebnerLimits& limits) {
    DimensionReport rep;
    rep.method = DimensionMethod::Groebner;
    const std::size_t n = ideal.ring()->size();
    if (ideal.generators().empty()) {
        rep.dimension = static_cast<int>(n);
        rep.note = "zero ideal";
        return rep;
    }
    GroebnerOutcome gb = groebner_basis(ideal, limits);
    if (!gb.complete()) {
        rep.note = gb.inconclusive_reason;
        return rep;
    }
    for (const auto& g : *gb.basis) rep.leading_monomials.push_back(g.leading_monomial());
    rep.dimension = dimension_from_leading_monomials(n, rep.leading_monomials);
    return rep;
}

}  // namespace sfano
