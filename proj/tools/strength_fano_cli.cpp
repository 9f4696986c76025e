// strength-fano: command-line front end over the C API.

#include "strength_fano.h"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace {

struct Command {
    const char* name;
    const char* help;
    std::vector<std::string> extra;  // option keys beyond the common set
    bool positional = false;
};

const std::vector<Command> kCommands{
    {"fano-eqs", "Fano-scheme coefficient equations g_{l,alpha}", {"k"}},
    {"transfer-check", "Check the specialization identity u_ij -> lambda_i x_j", {"k", "lambda"}},
    {"flag-fano", "Equations on directions a with span(plane, a) inside V(f)", {"plane", "direction"}},
    {"residual", "Residual hypersurface / complete intersection of a plane", {"plane", "direction"}},
    {"psi-rank", "Matrix and rank of the first-order residual map", {"plane"}},
    {"smooth-strength", "Codimension of the singular locus", {"s"}},
    {"collective-sample", "Sampled collective smooth strength", {}},
    {"quadric-strength", "Exact strength of a quadratic form with a decomposition", {}},
    {"dim", "Affine dimension of V(f_1, ..., f_r)", {"primes"}},
    {"ustr", "U_str recursion value", {"table", "max-len"}, true},
    {"thresholds", "Strength and dimension thresholds for a degree tuple", {"k"}, true},
    {"parametrize-quadric", "Projection of a quadric from a smooth point", {"point"}},
    {"parametrize-cubic", "Parametrization of a cubic containing a line", {"plane"}},
    {"compose", "F(g_0, ..., g_n); first -f is F in x0..xn", {}},
    {"pullback", "Parametrize V(F(g)) for quadrics g in disjoint variables", {"point"}},
    {"charp-demo", "Vanishing Fano slots of the Fermat x_i^(p+1) over F_p", {"p", "n"}},
};

const std::map<std::string, std::string> kOptionHelp{
    {"k", "Plane dimension"},
    {"lambda", "Comma-separated lambda vector (k+1 entries)"},
    {"plane", "Plane matrix 'r0c0,r0c1,...;r1c0,...'"},
    {"direction", "Direction vector (chart or ambient coordinates)"},
    {"s", "Claimed collective smooth strength for the non-smooth locus check (int, inf, -inf)"},
    {"primes", "Comma-separated primes for the point-count oracle"},
    {"table", "Tabulate U_str for entries up to this value"},
    {"max-len", "Tuple length for --table (default 2)"},
    {"point", "Comma-separated point"},
    {"p", "Prime (default 3)"},
    {"n", "Projective dimension (default 3)"},
};

int die(const std::string& msg) {
    std::cerr << "strength-fano: " << msg << "\n";
    return 1;
}

std::vector<std::string> read_poly_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        out.push_back(line.substr(first));
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Strength, Fano schemes and unirational parametrizations"};
    app.set_version_flag("--version", std::string(sf_version()));
    app.require_subcommand(1);

    struct Settings {
        std::string field = "rat", out = "json", file;
        std::vector<std::string> polys, positional;
        std::optional<std::uint64_t> seed;
        std::optional<std::size_t> trials, max_basis, max_pair_deg;
        std::map<std::string, std::string> extra;
        std::map<std::string, CLI::Option*> extra_opts;
        std::string vars;
    };
    std::map<std::string, Settings> settings;

    for (const auto& cmd : kCommands) {
        auto& s = settings[cmd.name];
        auto* sub = app.add_subcommand(cmd.name, cmd.help);
        sub->add_option("--field", s.field, "rat or fp:<p>")->capture_default_str();
        sub->add_option("--seed", s.seed, "Random seed (default 0, or STRENGTH_FANO_SEED)");
        sub->add_option("--trials", s.trials, "Random trials (default 100)");
        sub->add_option("--max-basis", s.max_basis, "Groebner basis size limit");
        sub->add_option("--max-pair-deg", s.max_pair_deg, "Groebner S-pair degree limit");
        sub->add_option("--out", s.out, "json or text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
        sub->add_option("-f,--poly", s.polys, "Polynomial (repeatable)");
        sub->add_option("--file", s.file, "File with one polynomial per line");
        sub->add_option("--vars", s.vars, "Declared variables, comma-separated");
        for (const auto& key : cmd.extra) {
            const std::string flag = key == "k" ? "-k" : key.size() == 1 ? "-" + key + ",--" + key : "--" + key;
            s.extra_opts[key] = sub->add_option(flag, s.extra[key], kOptionHelp.at(key));
        }
        if (cmd.positional) sub->add_option("degrees", s.positional, "Degree tuple");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    const auto* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    auto& s = settings[name];

    sf_job* raw = nullptr;
    if (sf_job_create(name.c_str(), &raw) != SF_OK) return die(sf_last_error());
    std::unique_ptr<sf_job, decltype(&sf_job_destroy)> job(raw, sf_job_destroy);

    auto set = [&](const std::string& key, const std::string& value) {
        if (sf_job_set_option(job.get(), key.c_str(), value.c_str()) != SF_OK) throw std::runtime_error(sf_last_error());
    };
    try {
        set("field", s.field);
        set("out", s.out);
        if (s.seed) {
            set("seed", std::to_string(*s.seed));
        } else if (const char* env = std::getenv("STRENGTH_FANO_SEED"); env && *env) {
            set("seed", env);
        }
        if (s.trials) set("trials", std::to_string(*s.trials));
        if (s.max_basis) set("max-basis", std::to_string(*s.max_basis));
        if (s.max_pair_deg) set("max-pair-deg", std::to_string(*s.max_pair_deg));
        if (!s.vars.empty()) set("vars", s.vars);
        for (const auto& [key, value] : s.extra)
            if (s.extra_opts.at(key)->count()) set(key, value);
        auto polys = s.polys;
        if (!s.file.empty())
            for (auto& line : read_poly_file(s.file)) polys.push_back(std::move(line));
        for (const auto& p : polys)
            if (sf_job_add_polynomial(job.get(), p.c_str()) != SF_OK) throw std::runtime_error(sf_last_error());
        for (const auto& a : s.positional)
            if (sf_job_add_argument(job.get(), a.c_str()) != SF_OK) throw std::runtime_error(sf_last_error());
    } catch (const std::exception& e) {
        return die(e.what());
    }

    sf_report* report = nullptr;
    if (sf_job_run(job.get(), &report) != SF_OK) return die(sf_last_error());
    std::fputs(s.out == "text" ? sf_report_text(report) : sf_report_json(report), stdout);
    const int code = sf_report_exit_code(report);
    sf_report_destroy(report);
    return code;
}
