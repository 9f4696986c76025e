#include "sfano/polynomial.hpp"

#include "sfano/errors.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace sfano {

// ---------------------------------------------------------------- Ring

Ring::Ring(std::vector<std::string> vars, Field field) : vars_(std::move(vars)), field_(field) {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (!index_.emplace(vars_[i], i).second) throw InputError("duplicate variable '" + vars_[i] + "'");
    }
}

std::optional<std::size_t> Ring::index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

RingPtr make_ring(std::vector<std::string> vars, const Field& field) {
    return std::make_shared<const Ring>(std::move(vars), field);
}

RingPtr indexed_ring(const std::string& prefix, std::size_t count, const Field& field) {
    std::vector<std::string> names;
    names.reserve(count);
    for (std::size_t i = 0; i < count; ++i) names.push_back(prefix + std::to_string(i));
    return make_ring(std::move(names), field);
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || *a == *b;
}

bool natural_less(const std::string& a, const std::string& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        const bool da = std::isdigit(static_cast<unsigned char>(a[i]));
        const bool db = std::isdigit(static_cast<unsigned char>(b[j]));
        if (da && db) {
            std::size_t ei = i, ej = j;
            while (ei < a.size() && std::isdigit(static_cast<unsigned char>(a[ei]))) ++ei;
            while (ej < b.size() && std::isdigit(static_cast<unsigned char>(b[ej]))) ++ej;
            // compare numerically without overflow: strip leading zeros, then length, then text
            std::size_t si = i, sj = j;
            while (si + 1 < ei && a[si] == '0') ++si;
            while (sj + 1 < ej && b[sj] == '0') ++sj;
            if (ei - si != ej - sj) return ei - si < ej - sj;
            int c = a.compare(si, ei - si, b, sj, ej - sj);
            if (c != 0) return c < 0;
            i = ei;
            j = ej;
        } else {
            if (a[i] != b[j]) return a[i] < b[j];
            ++i;
            ++j;
        }
    }
    if (i < a.size() || j < b.size()) return a.size() - i < b.size() - j;
    return a < b;
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
    for (auto e : exps_) degree_ += e;
}

Monomial Monomial::unit(std::size_t nvars, std::size_t var, std::uint32_t power) {
    Monomial m(nvars);
    m.set(var, power);
    return m;
}

void Monomial::set(std::size_t i, std::uint32_t e) {
    degree_ = degree_ - exps_[i] + e;
    exps_[i] = e;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += o.exps_[i];
    r.degree_ = degree_ + o.degree_;
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    if (degree_ > o.degree_) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > o.exps_[i]) return false;
    return true;
}

Monomial Monomial::quotient(const Monomial& d) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= d.exps_[i];
    r.degree_ = degree_ - d.degree_;
    return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
    std::vector<std::uint32_t> e(exps_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(exps_[i], o.exps_[i]);
    return Monomial(std::move(e));
}

bool Monomial::coprime(const Monomial& o) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] && o.exps_[i]) return false;
    return true;
}

int grevlex_compare(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
    std::size_t h = 1469598103934665603ull;
    for (auto e : m.exponents()) {
        h ^= e + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

// ---------------------------------------------------------------- helpers

namespace {

using TermMap = std::unordered_map<Monomial, Scalar, MonomialHash>;

void accumulate(TermMap& acc, const Field& field, const Monomial& m, const Scalar& c) {
    auto [it, inserted] = acc.try_emplace(m, c);
    if (!inserted) it->second = field.add(it->second, c);
}

std::vector<Term> drain(TermMap& acc) {
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc) {
        if (!Field::is_zero(c)) out.push_back(Term{m, std::move(c)});
    }
    std::sort(out.begin(), out.end(),
              [](const Term& a, const Term& b) { return grevlex_compare(a.monomial, b.monomial) > 0; });
    return out;
}

}  // namespace

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
    const Field& field = ring_->field();
    TermMap acc;
    for (auto& t : terms) {
        if (t.monomial.size() != ring_->size()) throw Error("monomial length does not match ring");
        accumulate(acc, field, t.monomial, field.from_rational(t.coeff));
    }
    terms_ = drain(acc);
}

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
    const std::size_t n = ring->size();
    return monomial(std::move(ring), Monomial(n), c);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
    const std::size_t n = ring->size();
    if (index >= n) throw InputError("variable index out of range");
    return monomial(std::move(ring), Monomial::unit(n, index), Scalar(1));
}

Polynomial Polynomial::variable(RingPtr ring, const std::string& name) {
    auto idx = ring->index_of(name);
    if (!idx) throw InputError("unknown variable '" + name + "'");
    return variable(std::move(ring), *idx);
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, const Scalar& c) {
    Polynomial p(std::move(ring));
    Scalar v = p.field().from_rational(c);
    if (!Field::is_zero(v)) p.terms_.push_back(Term{std::move(m), std::move(v)});
    return p;
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max<int>(d, static_cast<int>(t.monomial.degree()));
    return d;
}

int Polynomial::degree_in(std::size_t var) const {
    int d = -1;
    for (const auto& t : terms_) d = std::max<int>(d, static_cast<int>(t.monomial[var]));
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    const auto d = terms_.front().monomial.degree();
    return std::all_of(terms_.begin(), terms_.end(), [d](const Term& t) { return t.monomial.degree() == d; });
}

Scalar Polynomial::coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& key) {
        return grevlex_compare(t.monomial, key) > 0;
    });
    if (it != terms_.end() && it->monomial == m) return it->coeff;
    return Scalar(0);
}

std::vector<std::size_t> Polynomial::variables_used() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < ring_->size(); ++i) {
        for (const auto& t : terms_) {
            if (t.monomial[i]) {
                out.push_back(i);
                break;
            }
        }
    }
    return out;
}

void Polynomial::require_same_ring(const Polynomial& o) const {
    if (!same_ring(ring_, o.ring_)) throw Error("polynomials live in different rings");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    require_same_ring(o);
    const Field& field = this->field();
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = grevlex_compare(terms_[i].monomial, o.terms_[j].monomial);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            Scalar s = field.add(terms_[i].coeff, o.terms_[j].coeff);
            if (!Field::is_zero(s)) r.terms_.push_back(Term{terms_[i].monomial, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ring_);
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.coeff = field().neg(t.coeff);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    return *this + (-o);
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_same_ring(o);
    Polynomial r(ring_);
    if (is_zero() || o.is_zero()) return r;
    if (terms_.size() == 1) return o.mul_term(terms_[0].monomial, terms_[0].coeff);
    if (o.terms_.size() == 1) return mul_term(o.terms_[0].monomial, o.terms_[0].coeff);
    const Field& field = this->field();
    TermMap acc;
    acc.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) accumulate(acc, field, a.monomial * b.monomial, field.mul(a.coeff, b.coeff));
    r.terms_ = drain(acc);
    return r;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
    Polynomial r(ring_);
    Scalar v = field().from_rational(c);
    if (Field::is_zero(v)) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.coeff = field().mul(t.coeff, v);
    return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Scalar& c) const {
    Polynomial r(ring_);
    if (Field::is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    // multiplying by a monomial preserves grevlex order
    for (const auto& t : terms_) r.terms_.push_back(Term{t.monomial * m, field().mul(t.coeff, c)});
    return r;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r = constant(ring_, Scalar(1));
    Polynomial b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(field().inv(leading_coeff()));
}

Polynomial Polynomial::embed(const RingPtr& target) const {
    if (same_ring(ring_, target)) return Polynomial(target, terms_);
    if (!(ring_->field() == target->field())) throw InputError("cannot embed across fields");
    std::vector<std::optional<std::size_t>> map(ring_->size());
    for (std::size_t i = 0; i < ring_->size(); ++i) map[i] = target->index_of(ring_->name(i));
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial m(target->size());
        for (std::size_t i = 0; i < ring_->size(); ++i) {
            if (!t.monomial[i]) continue;
            if (!map[i]) throw InputError("variable '" + ring_->name(i) + "' missing from target ring");
            m.set(*map[i], t.monomial[i]);
        }
        out.push_back(Term{std::move(m), t.coeff});
    }
    return Polynomial(target, std::move(out));
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (!same_ring(ring_, o.ring_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].monomial != o.terms_[i].monomial || terms_[i].coeff != o.terms_[i].coeff) return false;
    }
    return true;
}

std::string format_monomial(const Ring& ring, const Monomial& m) {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (!m[i]) continue;
        if (!s.empty()) s += '*';
        s += ring.name(i);
        if (m[i] > 1) s += '^' + std::to_string(m[i]);
    }
    return s.empty() ? "1" : s;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        Scalar c = t.coeff;
        const bool negative = sgn(c) < 0;
        if (negative) c = -c;
        if (first) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        if (t.monomial.is_one()) {
            out += c.get_str();
        } else {
            if (c != 1) out += c.get_str() + '*';
            out += format_monomial(*ring_, t.monomial);
        }
    }
    return out;
}

// ---------------------------------------------------------------- parsing

namespace {

struct RawTerm {
    mpq_class coeff{1};
    std::vector<std::pair<std::string, std::uint32_t>> powers;
};

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    std::vector<RawTerm> run() {
        std::vector<RawTerm> terms;
        skip();
        if (pos_ >= s_.size()) throw ParseError("empty polynomial", pos_);
        bool negate = false;
        if (peek() == '+' || peek() == '-') {
            negate = peek() == '-';
            ++pos_;
            skip();
        }
        terms.push_back(term(negate));
        skip();
        while (pos_ < s_.size()) {
            char c = peek();
            if (c != '+' && c != '-') throw ParseError(std::string("unexpected '") + c + "'", pos_);
            ++pos_;
            skip();
            terms.push_back(term(c == '-'));
            skip();
        }
        return terms;
    }

private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    static bool is_var_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
    static bool is_var_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
    }

    mpz_class integer() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected integer", pos_);
        return mpz_class(s_.substr(start, pos_ - start));
    }

    RawTerm term(bool negate) {
        RawTerm t;
        bool expect_factor = true;
        while (true) {
            skip();
            const char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                mpz_class num = integer();
                mpz_class den = 1;
                skip();
                if (peek() == '/') {
                    ++pos_;
                    skip();
                    const std::size_t at = pos_;
                    den = integer();
                    if (den == 0) throw ParseError("zero denominator", at);
                }
                mpq_class q(num, den);
                q.canonicalize();
                t.coeff *= q;
            } else if (is_var_start(c)) {
                const std::size_t start = pos_;
                while (pos_ < s_.size() && is_var_char(s_[pos_])) ++pos_;
                std::string name = s_.substr(start, pos_ - start);
                skip();
                std::uint32_t e = 1;
                if (peek() == '^') {
                    ++pos_;
                    skip();
                    const std::size_t at = pos_;
                    mpz_class v = integer();
                    if (v > 100000) throw ParseError("exponent too large", at);
                    e = static_cast<std::uint32_t>(v.get_ui());
                }
                t.powers.emplace_back(std::move(name), e);
            } else {
                if (expect_factor) throw ParseError("expected coefficient or variable", pos_);
                break;
            }
            expect_factor = false;
            skip();
            if (peek() == '*') {
                ++pos_;
                expect_factor = true;
                continue;
            }
            // juxtaposition such as "3x0" is accepted; anything else ends the term
            if (is_var_start(peek()) || std::isdigit(static_cast<unsigned char>(peek()))) continue;
            break;
        }
        if (negate) t.coeff = -t.coeff;
        return t;
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

Polynomial build(const std::vector<RawTerm>& raw, const RingPtr& ring) {
    std::vector<Term> terms;
    terms.reserve(raw.size());
    for (const auto& r : raw) {
        Monomial m(ring->size());
        for (const auto& [name, e] : r.powers) {
            auto idx = ring->index_of(name);
            if (!idx) throw InputError("unknown variable '" + name + "'");
            m.set(*idx, m[*idx] + e);
        }
        terms.push_back(Term{std::move(m), r.coeff});
    }
    return Polynomial(ring, std::move(terms));
}

void collect_names(const std::vector<RawTerm>& raw, std::set<std::string>& names) {
    for (const auto& r : raw)
        for (const auto& p : r.powers) names.insert(p.first);
}

std::vector<std::string> sorted_names(const std::set<std::string>& names) {
    std::vector<std::string> v(names.begin(), names.end());
    std::sort(v.begin(), v.end(), natural_less);
    return v;
}

}  // namespace

Polynomial parse(const std::string& text, const Field& field) {
    auto raw = Parser(text).run();
    std::set<std::string> names;
    collect_names(raw, names);
    return build(raw, make_ring(sorted_names(names), field));
}

Polynomial parse(const std::string& text, const RingPtr& ring) {
    return build(Parser(text).run(), ring);
}

std::vector<Polynomial> parse_all(const std::vector<std::string>& texts, const Field& field,
                                  const std::optional<std::vector<std::string>>& declared_vars) {
    std::vector<std::vector<RawTerm>> raws;
    raws.reserve(texts.size());
    for (const auto& t : texts) raws.push_back(Parser(t).run());
    RingPtr ring;
    if (declared_vars) {
        ring = make_ring(*declared_vars, field);
    } else {
        std::set<std::string> names;
        for (const auto& r : raws) collect_names(r, names);
        ring = make_ring(sorted_names(names), field);
    }
    std::vector<Polynomial> out;
    out.reserve(raws.size());
    for (const auto& r : raws) out.push_back(build(r, ring));
    return out;
}

// ---------------------------------------------------------------- substitution

Substitution& Substitution::assign(const std::string& var, Polynomial image) {
    if (!same_ring(image.ring(), target_)) image = image.embed(target_);
    assignments_.insert_or_assign(var, std::move(image));
    return *this;
}

const Polynomial* Substitution::find(const std::string& var) const {
    auto it = assignments_.find(var);
    return it == assignments_.end() ? nullptr : &it->second;
}

namespace {

Polynomial substitute_images(const Polynomial& f, const std::vector<const Polynomial*>& images,
                             const RingPtr& target) {
    const std::size_t n = f.ring()->size();
    const Field& field = target->field();
    // powers[i][e] = images[i]^e, filled lazily
    std::vector<std::vector<Polynomial>> powers(n);
    auto power = [&](std::size_t i, std::uint32_t e) -> const Polynomial& {
        auto& tab = powers[i];
        if (tab.empty()) tab.push_back(Polynomial::constant(target, Scalar(1)));
        while (tab.size() <= e) tab.push_back(tab.back() * *images[i]);
        return tab[e];
    };
    TermMap acc;
    for (const auto& t : f.terms()) {
        Polynomial prod = Polynomial::constant(target, field.from_rational(t.coeff));
        for (std::size_t i = 0; i < n && !prod.is_zero(); ++i) {
            if (t.monomial[i]) prod = prod * power(i, t.monomial[i]);
        }
        for (const auto& pt : prod.terms()) accumulate(acc, field, pt.monomial, pt.coeff);
    }
    return Polynomial(target, drain(acc));
}

}  // namespace

Polynomial substitute(const Polynomial& f, const Substitution& s) {
    const RingPtr& src = f.ring();
    if (!(src->field() == s.target()->field())) throw InputError("substitution changes the field");
    std::vector<const Polynomial*> images(src->size(), nullptr);
    for (std::size_t i : f.variables_used()) {
        images[i] = s.find(src->name(i));
        if (!images[i]) throw InputError("no assignment for variable '" + src->name(i) + "'");
    }
    return substitute_images(f, images, s.target());
}

Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images) {
    if (images.size() != f.ring()->size())
        throw InputError("substitution needs " + std::to_string(f.ring()->size()) + " images, got " +
                         std::to_string(images.size()));
    if (images.empty()) {
        throw InputError("cannot substitute into a polynomial ring without variables");
    }
    const RingPtr& target = images[0].ring();
    std::vector<const Polynomial*> ptrs;
    for (const auto& g : images) {
        if (!same_ring(g.ring(), target)) throw InputError("substitution images live in different rings");
        ptrs.push_back(&g);
    }
    return substitute_images(f, ptrs, target);
}

// ---------------------------------------------------------------- calculus

Polynomial partial_derivative(const Polynomial& f, std::size_t var) {
    if (var >= f.ring()->size()) throw InputError("variable index out of range");
    const Field& field = f.field();
    std::vector<Term> out;
    for (const auto& t : f.terms()) {
        const auto e = t.monomial[var];
        if (!e) continue;
        Scalar c = field.mul(t.coeff, field.from_int(static_cast<long>(e)));
        if (Field::is_zero(c)) continue;
        Monomial m = t.monomial;
        m.set(var, e - 1);
        out.push_back(Term{std::move(m), std::move(c)});
    }
    return Polynomial(f.ring(), std::move(out));
}

Polynomial partial_derivative(const Polynomial& f, const std::string& var) {
    auto idx = f.ring()->index_of(var);
    if (!idx) throw InputError("unknown variable '" + var + "'");
    return partial_derivative(f, *idx);
}

const Polynomial* CoefficientMap::find(const Monomial& m) const {
    for (const auto& [k, v] : entries)
        if (k == m) return &v;
    return nullptr;
}

CoefficientMap collect_coefficients(const Polynomial& f, const std::vector<std::string>& vars) {
    const Ring& ring = *f.ring();
    if (vars.empty()) throw InputError("collect_coefficients needs at least one variable");
    std::vector<bool> selected(ring.size(), false);
    for (const auto& v : vars) {
        auto idx = ring.index_of(v);
        if (!idx) throw InputError("unknown variable '" + v + "'");
        selected[*idx] = true;
    }
    std::vector<std::string> vnames, cnames;
    std::vector<std::size_t> vidx, cidx;
    for (std::size_t i = 0; i < ring.size(); ++i) {
        if (selected[i]) {
            vnames.push_back(ring.name(i));
            vidx.push_back(i);
        } else {
            cnames.push_back(ring.name(i));
            cidx.push_back(i);
        }
    }
    CoefficientMap cm;
    cm.var_ring = make_ring(vnames, ring.field());
    cm.coeff_ring = make_ring(cnames, ring.field());
    std::map<Monomial, std::vector<Term>, GrevlexGreater> groups;
    for (const auto& t : f.terms()) {
        Monomial key(vidx.size()), rest(cidx.size());
        for (std::size_t j = 0; j < vidx.size(); ++j) key.set(j, t.monomial[vidx[j]]);
        for (std::size_t j = 0; j < cidx.size(); ++j) rest.set(j, t.monomial[cidx[j]]);
        groups[key].push_back(Term{std::move(rest), t.coeff});
    }
    for (auto& [key, terms] : groups) cm.entries.emplace_back(key, Polynomial(cm.coeff_ring, std::move(terms)));
    return cm;
}

Polynomial reassemble(const CoefficientMap& cm, const RingPtr& ring) {
    Polynomial out(ring);
    for (const auto& [key, coeff] : cm.entries) {
        Polynomial mono = Polynomial::monomial(cm.var_ring, key, Scalar(1)).embed(ring);
        out += mono * coeff.embed(ring);
    }
    return out;
}

Scalar evaluate(const Polynomial& f, std::span<const Scalar> point) {
    const std::size_t n = f.ring()->size();
    if (point.size() != n)
        throw InputError("evaluation point has " + std::to_string(point.size()) + " coordinates, ring has " +
                         std::to_string(n));
    const Field& field = f.field();
    std::vector<Scalar> pt(point.begin(), point.end());
    for (auto& v : pt) v = field.from_rational(v);
    Scalar acc = 0;
    for (const auto& t : f.terms()) {
        Scalar v = t.coeff;
        for (std::size_t i = 0; i < n; ++i)
            if (t.monomial[i]) v = field.mul(v, field.pow(pt[i], t.monomial[i]));
        acc = field.add(acc, v);
    }
    return acc;
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t d) {
    std::vector<Monomial> out;
    if (nvars == 0) {
        if (d == 0) out.emplace_back(0);
        return out;
    }
    std::vector<std::uint32_t> e(nvars, 0);
    // enumerate compositions recursively
    auto rec = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
        if (i + 1 == nvars) {
            e[i] = left;
            out.emplace_back(e);
            return;
        }
        for (std::uint32_t v = 0; v <= left; ++v) {
            e[i] = v;
            self(self, i + 1, left - v);
        }
    };
    rec(rec, 0, d);
    std::sort(out.begin(), out.end(), GrevlexGreater{});
    return out;
}

}  // namespace sfano
