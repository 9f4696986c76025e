#ifndef SFANO_JOBS_HPP
#define SFANO_JOBS_HPP

#include "sfano/ideals.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace sfano {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kReportSchema = "strength-fano/1";

enum ExitCode : int {
    kExitOk = 0,
    kExitInput = 1,
    kExitVerification = 2,
    kExitInconclusive = 3,
    kExitInternal = 4,
};

struct JobConfig {
    std::string command;
    std::string field = "rat";
    std::uint64_t seed = 0;
    std::size_t trials = 100;
    GroebnerLimits limits;
    std::vector<std::string> polynomials;
    std::vector<std::string> arguments;         // positional, e.g. degree tuples
    std::map<std::string, std::string> options;  // k, plane, point, lambda, direction, vars, primes, p, n, ...
    std::string format = "json";
};

struct JobReport {
    int exit_code = kExitOk;
    std::string json;
    std::string text;

    const std::string& output(const std::string& format) const { return format == "text" ? text : json; }
};

const std::vector<std::string>& job_commands();
bool is_job_option(const std::string& key);

// Accepts the generic keys (field, seed, trials, max-basis, max-pair-deg, out)
// and the per-command options. Throws InputError on unknown keys or bad values.
void set_job_option(JobConfig& config, const std::string& key, const std::string& value);

// Never throws: errors become a report with the matching exit code.
JobReport run_job(const JobConfig& config);

}  // namespace sfano

#endif
