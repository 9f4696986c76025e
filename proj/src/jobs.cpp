#include "sfano/jobs.hpp"

#include "sfano/bounds.hpp"
#include "sfano/errors.hpp"
#include "sfano/fano.hpp"
#include "sfano/residual.hpp"
#include "sfano/strength.hpp"
#include "sfano/unirat.hpp"

#include <json.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace sfano {

using json = nlohmann::ordered_json;

namespace {

const std::set<std::string> kCommandOptions{"k",       "plane", "point", "lambda", "direction", "vars",
                                            "primes",  "p",     "n",     "table",  "max-len",   "s"};

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, sep)) {
        cur.erase(0, cur.find_first_not_of(" \t"));
        cur.erase(cur.find_last_not_of(" \t") + 1);
        out.push_back(cur);
    }
    return out;
}

unsigned long long parse_unsigned(const std::string& key, const std::string& value) {
    if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos)
        throw InputError("--" + key + " expects a non-negative integer, got '" + value + "'");
    try {
        return std::stoull(value);
    } catch (const std::out_of_range&) {
        throw InputError("--" + key + " value out of range: " + value);
    }
}

Scalar parse_scalar(const std::string& text, const Field& field) {
    mpq_class q;
    if (text.empty() || q.set_str(text, 10) != 0) throw InputError("bad number '" + text + "'");
    if (q.get_den() == 0) throw InputError("zero denominator in '" + text + "'");
    q.canonicalize();
    return field.from_rational(q);
}

std::vector<Scalar> parse_vector(const std::string& text, const Field& field) {
    std::vector<Scalar> out;
    for (const auto& part : split(text, ',')) out.push_back(parse_scalar(part, field));
    if (out.empty()) throw InputError("empty vector");
    return out;
}

json scalars(const std::vector<Scalar>& v) {
    json out = json::array();
    for (const auto& c : v) out.push_back(Field::format(c));
    return out;
}

json polys(const std::vector<Polynomial>& ps) {
    json out = json::array();
    for (const auto& p : ps) out.push_back(p.to_string());
    return out;
}

json big(const mpz_class& z) {
    if (z.fits_slong_p()) return json(z.get_si());
    return json(z.get_str());
}

json dimension_json(const DimensionReport& d) {
    json out;
    out["dimension"] = d.dimension ? json(*d.dimension) : json(nullptr);
    out["method"] = d.method == DimensionMethod::Groebner ? "groebner" : "point-count";
    if (!d.leading_monomials.empty()) {
        out["leading_monomial_count"] = d.leading_monomials.size();
    }
    if (!d.counts.empty()) {
        json counts = json::array();
        for (const auto& c : d.counts) counts.push_back({{"prime", c.prime}, {"count", c.count}});
        out["counts"] = counts;
    }
    if (!d.note.empty()) out["note"] = d.note;
    return out;
}

json map_json(const RationalMapRecord& rec) {
    json out;
    out["source_vars"] = rec.source->vars();
    out["degree"] = rec.degree;
    out["components"] = polys(rec.components);
    out["target_constraints"] = polys(rec.target_constraints);
    const auto& v = rec.verification;
    out["verification"] = {
        {"substitution_ok", v.substitution_ok},
        {"jacobian_rank", v.jacobian_rank ? json(*v.jacobian_rank) : json(nullptr)},
        {"rank_point", scalars(v.rank_point)},
        {"dominance_target_dim", v.dominance_target_dim},
        {"seed", v.seed},
        {"attempts", v.attempts},
    };
    if (!rec.notes.empty()) out["notes"] = rec.notes;
    return out;
}

struct Ctx {
    const JobConfig& cfg;
    Field field;
    json result = json::object();
    json checks = json::array();
    bool inconclusive = false;

    void check(const std::string& name, bool pass) { checks.push_back({{"name", name}, {"pass", pass}}); }

    std::optional<std::string> opt(const std::string& key) const {
        const auto it = cfg.options.find(key);
        if (it == cfg.options.end()) return std::nullopt;
        return it->second;
    }
    std::string require(const std::string& key) const {
        auto v = opt(key);
        if (!v) throw InputError(cfg.command + " requires --" + key);
        return *v;
    }
    unsigned long long number(const std::string& key, unsigned long long fallback) const {
        const auto v = opt(key);
        return v ? parse_unsigned(key, *v) : fallback;
    }

    std::optional<std::vector<std::string>> vars() const {
        const auto v = opt("vars");
        if (!v) return std::nullopt;
        return split(*v, ',');
    }

    std::vector<Polynomial> load(std::size_t min_count) const {
        if (cfg.polynomials.size() < min_count)
            throw InputError(cfg.command + " needs at least " + std::to_string(min_count) + " polynomial(s) (-f)");
        return parse_all(cfg.polynomials, field, vars());
    }

    PlaneChart plane() const { return PlaneChart::parse(require("plane"), field); }
};

// Commands -------------------------------------------------------------------

void cmd_fano_eqs(Ctx& c) {
    const auto fs = c.load(1);
    const auto k = c.number("k", 1);
    const auto sys = fano_equations(fs, k);
    c.result["k"] = k;
    c.result["u_vars"] = sys.u_ring->vars();
    json eqs = json::array();
    for (const auto& e : sys.equations)
        eqs.push_back({{"source", e.source}, {"alpha", sys.alpha_string(e.alpha)}, {"g", e.g.to_string()}});
    c.result["equation_count"] = sys.equations.size();
    c.result["zero_slots"] = sys.zero_slots();
    c.result["equations"] = eqs;
    c.check("reassembly", verify_reassembly(sys));
}

void cmd_transfer_check(Ctx& c) {
    const auto fs = c.load(1);
    const auto k = c.number("k", 1);
    const auto sys = fano_equations(fs, k);
    std::vector<std::vector<Scalar>> lambdas;
    if (const auto l = c.opt("lambda")) {
        lambdas.push_back(parse_vector(*l, c.field));
        if (lambdas.back().size() != k + 1)
            throw InputError("--lambda needs " + std::to_string(k + 1) + " entries");
    } else {
        std::mt19937_64 rng(c.cfg.seed);
        for (std::size_t t = 0; t < c.cfg.trials; ++t) {
            std::vector<Scalar> l;
            for (std::size_t i = 0; i <= k; ++i) {
                long v = 0;
                while (v == 0) v = static_cast<long>(rng() % 33) - 16;
                l.push_back(c.field.from_int(v));
            }
            lambdas.push_back(std::move(l));
        }
    }
    std::size_t slots = 0, failures = 0;
    json first_failure = nullptr;
    for (const auto& l : lambdas)
        for (const auto& r : transfer_specialize(sys, l)) {
            ++slots;
            if (!r.equal && failures++ == 0)
                first_failure = {{"lambda", scalars(l)},
                                 {"source", r.source},
                                 {"alpha", sys.alpha_string(r.alpha)},
                                 {"image", r.image.to_string()},
                                 {"predicted", r.predicted.to_string()}};
        }
    c.result["k"] = k;
    c.result["equation_count"] = sys.equations.size();
    c.result["zero_slots"] = sys.zero_slots();
    c.result["lambdas"] = lambdas.size();
    if (lambdas.size() == 1) c.result["lambda"] = scalars(lambdas.front());
    c.result["slots_checked"] = slots;
    c.result["failures"] = failures;
    if (failures) c.result["first_failure"] = first_failure;
    c.check("transfer identity", failures == 0);

    const bool quadrics = std::all_of(fs.begin(), fs.end(), [](const Polynomial& f) { return f.degree() == 2; });
    if (quadrics && !(c.field.is_prime_field() && c.field.modulus() == 2)) {
        const auto rep = transfer_rank_check(sys, c.cfg.trials, c.cfg.seed);
        c.result["rank_transfer"] = {{"source_min_rank", rep.source_min_rank},
                                     {"min_observed_rank", rep.min_observed_rank},
                                     {"witness", scalars(rep.witness)},
                                     {"combinations", rep.combinations}};
        c.check("quadric rank transfer", rep.pass);
    }
}

void cmd_flag_fano(Ctx& c) {
    const auto fs = c.load(1);
    const auto sys = flag_fano_equations(fs, c.plane());
    c.result["direction_vars"] = sys.direction_ring->vars();
    json eqs = json::array();
    for (const auto& e : sys.equations) eqs.push_back({{"label", e.label}, {"equation", e.equation.to_string()}});
    c.result["equation_count"] = sys.equations.size();
    c.result["binomial_count"] = sys.binomial_count;
    c.result["equations"] = eqs;
    if (const auto d = c.opt("direction")) {
        const auto a = parse_vector(*d, c.field);
        const auto chart = a.size() == sys.frame.plane.n() + 1 ? sys.frame.plane.chart_direction(a) : a;
        const bool sat = sys.satisfied_by(chart);
        c.result["direction"] = scalars(chart);
        c.result["extension_contained"] = sat;
        // Direct substitution must agree with the equations.
        bool direct = true;
        for (const auto& f : fs) direct = direct && residual(f, sys.frame.plane, chart).extension_contained;
        c.check("equations agree with direct substitution", direct == sat);
    }
}

void cmd_residual(Ctx& c) {
    const auto fs = c.load(1);
    const auto plane = c.plane();
    std::optional<std::vector<Scalar>> dir;
    if (const auto d = c.opt("direction")) dir = parse_vector(*d, c.field);
    const auto ci = residual_ci(fs, plane, dir);
    json comps = json::array();
    bool formula = true;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        const auto& r = ci.components[i];
        comps.push_back({{"residual", r.residual.to_string()},
                         {"restriction", r.restriction.to_string()},
                         {"extension_contained", r.extension_contained}});
        formula = formula && first_order_formula(fs[i], plane, dir) == r.restriction;
    }
    c.result["direction"] = ci.components.front().direction;
    c.result["components"] = comps;
    c.result["all_nonzero"] = ci.all_nonzero;
    c.result["extension_contained"] = ci.extension_contained;
    c.check("first-order formula", formula);
}

void cmd_psi_rank(Ctx& c) {
    const auto fs = c.load(1);
    const auto psi = psi_matrix(fs, c.plane());
    const auto rep = psi_surjective(psi);
    c.result["rows"] = psi.row_labels;
    c.result["columns"] = psi.column_labels;
    c.result["matrix"] = psi.matrix.to_strings();
    c.result["rank"] = rep.rank;
    c.result["target_dimension"] = rep.target_dimension;
    c.result["surjective"] = rep.surjective;
}

void cmd_smooth_strength(Ctx& c) {
    const auto fs = c.load(1);
    json out = json::array();
    std::optional<ExtendedInt> min_value;
    for (const auto& f : fs) {
        const auto rep = smooth_strength(f, c.cfg.limits);
        json entry = {{"polynomial", f.to_string()},
                      {"smooth_strength", rep.value ? json(rep.value->to_string()) : json(nullptr)},
                      {"singular_locus", dimension_json(rep.dimension)}};
        if (rep.inconclusive()) c.inconclusive = true;
        out.push_back(entry);
        if (rep.value && (!min_value || *rep.value < *min_value)) min_value = rep.value;
    }
    c.result["polynomials"] = out;
    if (const auto s = c.opt("s")) {
        ExtendedInt claimed = *s == "inf"    ? ExtendedInt::infinity()
                              : *s == "-inf" ? ExtendedInt::neg_infinity()
                                             : ExtendedInt(static_cast<long long>(parse_unsigned("s", *s)));
        const auto rep = lemma_2_12_check(fs, claimed, c.cfg.limits);
        c.result["lemma_2_12"] = {{"claimed", rep.claimed.to_string()},
                                  {"bound", rep.bound.to_string()},
                                  {"locus", dimension_json(rep.locus)}};
        if (rep.pass)
            c.check("non-smooth locus dimension bound", *rep.pass);
        else
            c.inconclusive = true;
    }
}

void cmd_collective_sample(Ctx& c) {
    const auto fs = c.load(1);
    SampleOptions opts;
    opts.trials = c.cfg.trials;
    opts.seed = c.cfg.seed;
    opts.limits = c.cfg.limits;
    const auto s = collective_smooth_strength_sample(fs, opts);
    c.result["trials"] = s.trials;
    c.result["combinations"] = s.combinations;
    c.result["min_observed"] = s.min_observed ? json(s.min_observed->to_string()) : json(nullptr);
    c.result["witness"] = scalars(s.witness);
    if (!s.note.empty()) c.result["note"] = s.note;
    if (s.inconclusive()) c.inconclusive = true;
}

void cmd_quadric_strength(Ctx& c) {
    const auto fs = c.load(1);
    json out = json::array();
    for (const auto& f : fs) {
        const auto cert = quadric_strength(f);
        json pairs = json::array();
        for (const auto& p : cert.decomposition) pairs.push_back({p.g.to_string(), p.h.to_string()});
        out.push_back({{"polynomial", f.to_string()},
                       {"strength", cert.value},
                       {"gram_rank", cert.rank ? json(*cert.rank) : json(nullptr)},
                       {"decomposition", pairs},
                       {"decomposition_minimal", cert.decomposition_minimal}});
        bool ok = true;
        try {
            verify_decomposition(f, cert.decomposition);
        } catch (const VerificationError&) {
            ok = false;
        }
        c.check("decomposition reassembles: " + f.to_string(), ok);
    }
    c.result["polynomials"] = out;
}

void cmd_dim(Ctx& c) {
    const auto fs = c.load(1);
    const IdealBasis ideal(fs.front().ring(), fs);
    const auto rep = affine_dimension(ideal, c.cfg.limits);
    c.result["ring"] = ideal.ring()->vars();
    c.result["groebner"] = dimension_json(rep);
    if (rep.inconclusive()) c.inconclusive = true;
    if (const auto p = c.opt("primes")) {
        std::vector<std::uint32_t> primes;
        for (const auto& s : split(*p, ',')) primes.push_back(static_cast<std::uint32_t>(parse_unsigned("primes", s)));
        const auto pc = point_count_dimension(ideal, primes);
        c.result["point_count"] = dimension_json(pc);
        if (rep.dimension && pc.dimension) c.check("oracles agree", *rep.dimension == *pc.dimension);
    }
}

DegreeTuple degrees(const Ctx& c) {
    DegreeTuple ds;
    for (const auto& a : c.cfg.arguments) ds.push_back(static_cast<unsigned>(parse_unsigned("degree", a)));
    return ds;
}

std::string tuple_string(const DegreeTuple& ds) {
    std::string s = "(";
    for (std::size_t i = 0; i < ds.size(); ++i) s += (i ? "," : "") + std::to_string(ds[i]);
    return s + ")";
}

void cmd_ustr(Ctx& c) {
    if (const auto t = c.opt("table")) {
        const unsigned max_entry = static_cast<unsigned>(parse_unsigned("table", *t));
        const unsigned max_len = static_cast<unsigned>(c.number("max-len", 2));
        if (max_entry > 8 || max_len > 4) throw InputError("table limited to entries <= 8 and length <= 4");
        json rows = json::array();
        std::vector<DegreeTuple> frontier{{}};
        rows.push_back({{"degrees", "()"}, {"value", big(u_str({}))}});
        for (unsigned len = 1; len <= max_len; ++len) {
            std::vector<DegreeTuple> next;
            for (const auto& base : frontier)
                for (unsigned d = base.empty() ? 2 : base.back(); d <= max_entry; ++d) {
                    DegreeTuple ds = base;
                    ds.push_back(d);
                    rows.push_back({{"degrees", tuple_string(ds)}, {"value", big(u_str(ds))}});
                    next.push_back(std::move(ds));
                }
            frontier = std::move(next);
        }
        c.result["table"] = rows;
        return;
    }
    const auto ds = degrees(c);
    c.result["degrees"] = tuple_string(ds);
    c.result["normalized"] = tuple_string(normalize_degrees(ds));
    c.result["value"] = big(u_str(ds));
}

void cmd_thresholds(Ctx& c) {
    const auto ds = degrees(c);
    if (ds.empty()) throw InputError("thresholds needs a degree tuple");
    const auto k = static_cast<unsigned>(c.number("k", 1));
    c.result["degrees"] = tuple_string(ds);
    c.result["k"] = k;
    c.result["theorem_3_6_strength"] = big(theorem_3_6_threshold(ds, k));
    c.result["lemma_4_3_n"] = big(lemma_4_3_bound(ds, k));
    c.result["prop_4_4_n"] = big(prop_4_4_bound(ds, k));
    c.result["cor_4_5_strength"] = big(cor_4_5_bound(ds, k));
    c.result["cor_2_13_strength"] = big(cor_2_13_bound(static_cast<unsigned>(ds.size())));
    c.result["u_str"] = big(u_str(ds));
}

void record_map(Ctx& c, const RationalMapRecord& rec) {
    c.result["map"] = map_json(rec);
    c.check("substitution", rec.verification.substitution_ok);
    c.check("dominance", rec.verification.dominant());
}

void cmd_parametrize_quadric(Ctx& c) {
    const auto fs = c.load(1);
    const auto p = parse_vector(c.require("point"), c.field);
    record_map(c, quadric_parametrization(fs.front(), p, c.cfg.seed));
}

void cmd_parametrize_cubic(Ctx& c) {
    const auto fs = c.load(1);
    record_map(c, cubic_with_line_parametrization(fs.front(), c.plane(), c.cfg.seed));
}

std::pair<Polynomial, std::vector<Polynomial>> outer_inner(const Ctx& c) {
    if (c.cfg.polynomials.size() < 2) throw InputError(c.cfg.command + " needs F and at least one g (-f F -f g0 ...)");
    const std::size_t count = c.cfg.polynomials.size() - 1;
    const auto outer = indexed_ring("x", count, c.field);
    Polynomial F = parse(c.cfg.polynomials.front(), outer);
    std::vector<std::string> rest(c.cfg.polynomials.begin() + 1, c.cfg.polynomials.end());
    return {F, parse_all(rest, c.field, c.vars())};
}

void cmd_compose(Ctx& c) {
    const auto [F, gs] = outer_inner(c);
    const auto comp = compose_substitution(F, gs);
    c.result["outer"] = F.to_string();
    c.result["inner"] = polys(gs);
    c.result["composite"] = comp.to_string();
    c.result["degree"] = comp.degree();
}

void cmd_pullback(Ctx& c) {
    const auto [F, gs] = outer_inner(c);
    std::vector<Scalar> point;
    if (const auto p = c.opt("point")) {
        point = parse_vector(*p, c.field);
    } else {
        point.assign(gs.size(), c.field.zero());
        point[0] = c.field.one();
    }
    const auto z = quadric_parametrization(F, point, c.cfg.seed);
    const auto fam = quadric_fiber_family(gs);
    c.result["z_param"] = map_json(z);
    const auto rec = pullback_parametrization(F, gs, fam, z, c.cfg.seed);
    c.result["composite"] = compose_substitution(F, gs).to_string();
    record_map(c, rec);
}

void cmd_charp_demo(Ctx& c) {
    const auto p = c.number("p", 3);
    const auto n = c.number("n", 3);
    if (p < 2 || p > 13 || !is_prime(p)) throw InputError("--p must be a prime <= 13");
    if (n < 2 || n > 8) throw InputError("--n must be between 2 and 8");
    const Field field = Field::prime(p);
    const auto ring = indexed_ring("x", n + 1, field);
    Polynomial f(ring);
    for (std::size_t i = 0; i <= n; ++i)
        f += Polynomial::monomial(ring, Monomial::unit(n + 1, i, static_cast<std::uint32_t>(p + 1)), field.one());
    const auto sys = fano_equations({f}, 1);
    json zero = json::array();
    for (const auto& e : sys.equations)
        if (e.g.is_zero()) zero.push_back(sys.alpha_string(e.alpha));
    std::size_t predicted = 0;
    for (unsigned long j = 2; j + 1 <= p; ++j)
        if (binomial(p + 1, j) % static_cast<unsigned long>(p) == 0) ++predicted;
    c.result["polynomial"] = f.to_string();
    c.result["slots"] = sys.equations.size();
    c.result["zero_slots"] = sys.zero_slots();
    c.result["zero_slot_alphas"] = zero;
    c.result["predicted_zero_slots"] = predicted;
    std::mt19937_64 rng(c.cfg.seed);
    bool transfer = true;
    for (int t = 0; t < 8; ++t) {
        std::vector<Scalar> l{field.from_int(static_cast<long>(rng() % (p - 1)) + 1),
                              field.from_int(static_cast<long>(rng() % (p - 1)) + 1)};
        for (const auto& r : transfer_specialize(sys, l)) transfer = transfer && r.equal;
    }
    c.check("zero-slot count", sys.zero_slots() == predicted);
    c.check("transfer identity on nonzero slots", transfer);
}

using Handler = void (*)(Ctx&);

const std::vector<std::pair<std::string, Handler>>& handlers() {
    static const std::vector<std::pair<std::string, Handler>> table{
        {"fano-eqs", cmd_fano_eqs},
        {"transfer-check", cmd_transfer_check},
        {"flag-fano", cmd_flag_fano},
        {"residual", cmd_residual},
        {"psi-rank", cmd_psi_rank},
        {"smooth-strength", cmd_smooth_strength},
        {"collective-sample", cmd_collective_sample},
        {"quadric-strength", cmd_quadric_strength},
        {"dim", cmd_dim},
        {"ustr", cmd_ustr},
        {"thresholds", cmd_thresholds},
        {"parametrize-quadric", cmd_parametrize_quadric},
        {"parametrize-cubic", cmd_parametrize_cubic},
        {"compose", cmd_compose},
        {"pullback", cmd_pullback},
        {"charp-demo", cmd_charp_demo},
    };
    return table;
}

// Text rendering ---------------------------------------------------------------

void render(std::ostringstream& out, const json& v, const std::string& indent) {
    if (v.is_object()) {
        for (const auto& [key, value] : v.items()) {
            if (value.is_structured() && !value.empty()) {
                out << indent << key << ":\n";
                render(out, value, indent + "  ");
            } else {
                out << indent << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
            }
        }
    } else if (v.is_array()) {
        const bool flat = std::none_of(v.begin(), v.end(), [](const json& e) { return e.is_structured(); });
        const bool long_items =
            std::any_of(v.begin(), v.end(), [](const json& e) { return e.is_string() && e.get<std::string>().size() > 40; });
        if (flat && !long_items) {
            out << indent;
            for (std::size_t i = 0; i < v.size(); ++i)
                out << (i ? ", " : "") << (v[i].is_string() ? v[i].get<std::string>() : v[i].dump());
            out << "\n";
            return;
        }
        for (const auto& e : v) {
            if (e.is_object()) {
                out << indent << "-\n";
                render(out, e, indent + "  ");
            } else {
                render(out, e, indent + "  ");
            }
        }
    } else {
        out << indent << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
}

std::string text_report(const json& report) {
    std::ostringstream out;
    out << "strength-fano " << report["tool_version"].get<std::string>() << "  " << report["command"].get<std::string>()
        << "\n";
    out << "field: " << report["field"].get<std::string>() << "  seed: " << report["seed"].dump() << "\n";
    if (report.contains("result") && !report["result"].empty()) render(out, report["result"], "");
    for (const auto& ch : report["checks"])
        out << (ch["pass"].get<bool>() ? "PASS " : "FAIL ") << ch["name"].get<std::string>() << "\n";
    if (report.contains("error")) out << "error: " << report["error"].get<std::string>() << "\n";
    out << "status: " << report["status"].get<std::string>() << "\n";
    return out.str();
}

}  // namespace

const std::vector<std::string>& job_commands() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, h] : handlers()) out.push_back(name);
        return out;
    }();
    return names;
}

bool is_job_option(const std::string& key) {
    static const std::set<std::string> generic{"field", "seed", "trials", "max-basis", "max-pair-deg", "out"};
    return generic.count(key) || kCommandOptions.count(key);
}

void set_job_option(JobConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "field") {
        Field::from_string(value);
        cfg.field = value;
    } else if (key == "seed") {
        cfg.seed = parse_unsigned(key, value);
    } else if (key == "trials") {
        cfg.trials = parse_unsigned(key, value);
        if (cfg.trials == 0) throw InputError("--trials must be positive");
    } else if (key == "max-basis") {
        cfg.limits.max_basis_size = parse_unsigned(key, value);
    } else if (key == "max-pair-deg") {
        cfg.limits.max_pair_degree = static_cast<std::uint32_t>(parse_unsigned(key, value));
    } else if (key == "out") {
        if (value != "json" && value != "text") throw InputError("--out must be json or text");
        cfg.format = value;
    } else if (kCommandOptions.count(key)) {
        cfg.options[key] = value;
    } else {
        throw InputError("unknown option '" + key + "'");
    }
}

JobReport run_job(const JobConfig& cfg) {
    json report;
    report["schema"] = kReportSchema;
    report["tool_version"] = kToolVersion;
    report["command"] = cfg.command;
    report["field"] = cfg.field;
    if (cfg.command == "charp-demo") {
        // The demo fixes its own prime field.
        const auto p = cfg.options.find("p");
        report["field"] = "fp:" + (p == cfg.options.end() ? std::string("3") : p->second);
    }
    report["seed"] = cfg.seed;
    json input;
    input["polynomials"] = cfg.polynomials;
    if (!cfg.arguments.empty()) input["arguments"] = cfg.arguments;
    json options = json::object();
    for (const auto& [k, v] : cfg.options) options[k] = v;
    options["trials"] = cfg.trials;
    options["max-basis"] = cfg.limits.max_basis_size;
    options["max-pair-deg"] = cfg.limits.max_pair_degree;
    input["options"] = options;
    report["input"] = input;

    JobReport out;
    std::string status = "ok";
    json checks = json::array();
    json result = json::object();
    try {
        const auto it = std::find_if(handlers().begin(), handlers().end(),
                                     [&](const auto& h) { return h.first == cfg.command; });
        if (it == handlers().end()) throw InputError("unknown command '" + cfg.command + "'");
        Ctx ctx{cfg, Field::from_string(cfg.field)};
        try {
            it->second(ctx);
        } catch (...) {
            result = std::move(ctx.result);
            checks = std::move(ctx.checks);
            throw;
        }
        result = std::move(ctx.result);
        checks = std::move(ctx.checks);
        const bool failed = std::any_of(checks.begin(), checks.end(), [](const json& c) { return !c["pass"].get<bool>(); });
        if (failed) {
            out.exit_code = kExitVerification;
            status = "verification_failed";
        } else if (ctx.inconclusive) {
            out.exit_code = kExitInconclusive;
            status = "inconclusive";
        }
    } catch (const DegenerateError& e) {
        out.exit_code = kExitVerification;
        status = "degenerate";
        report["error"] = e.what();
    } catch (const VerificationError& e) {
        out.exit_code = kExitVerification;
        status = "verification_failed";
        report["error"] = e.what();
        if (!e.residue().empty()) report["residue"] = e.residue();
    } catch (const InputError& e) {
        out.exit_code = kExitInput;
        status = "input_error";
        report["error"] = e.what();
    } catch (const std::exception& e) {
        out.exit_code = kExitInternal;
        status = "internal_error";
        report["error"] = e.what();
    }
    report["checks"] = checks;
    report["result"] = result;
    report["status"] = status;
    report["exit_code"] = out.exit_code;
    out.json = report.dump(2) + "\n";
    out.text = text_report(report);
    return out;
}

}  // namespace sfano
