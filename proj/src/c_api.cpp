#include "strength_fano.h"

#include "sfano/errors.hpp"
#include "sfano/jobs.hpp"
#include "sfano/polynomial.hpp"

#include <cstring>
#include <new>
#include <sstream>

struct sf_field {
    sfano::Field field;
};

struct sf_poly {
    sfano::Polynomial poly;
};

struct sf_job {
    sfano::JobConfig config;
};

struct sf_report {
    sfano::JobReport report;
};

namespace {

thread_local std::string last_error;

sf_status fail(sf_status code, const std::string& msg) {
    last_error = msg;
    return code;
}

template <typename F>
sf_status guarded(F&& body) {
    try {
        last_error.clear();
        return body();
    } catch (const sfano::VerificationError& e) {
        return fail(SF_ERR_VERIFICATION, e.what());
    } catch (const sfano::InputError& e) {
        return fail(SF_ERR_INPUT, e.what());
    } catch (const std::bad_alloc&) {
        return fail(SF_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(SF_ERR_INTERNAL, e.what());
    }
}

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

sf_status same_ring(const sf_poly* a, const sf_poly* b) {
    if (!sfano::same_ring(a->poly.ring(), b->poly.ring())) return fail(SF_ERR_INPUT, "operands live in different rings");
    return SF_OK;
}

sf_status new_poly(sfano::Polynomial p, sf_poly** out) {
    *out = new sf_poly{std::move(p)};
    return SF_OK;
}

}  // namespace

extern "C" {

const char* sf_version(void) { return sfano::kToolVersion; }

const char* sf_last_error(void) { return last_error.c_str(); }

sf_status sf_field_create(const char* spec, sf_field** out) {
    if (!spec || !out) return fail(SF_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        *out = new sf_field{sfano::Field::from_string(spec)};
        return SF_OK;
    });
}

void sf_field_destroy(sf_field* field) { delete field; }

sf_status sf_poly_parse(const sf_field* field, const char* text, const char* vars, sf_poly** out) {
    if (!field || !text || !out) return fail(SF_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        if (!vars) return new_poly(sfano::parse(text, field->field), out);
        std::vector<std::string> names;
        std::string name;
        std::istringstream in(vars);
        while (std::getline(in, name, ','))
            if (!name.empty()) names.push_back(name);
        return new_poly(sfano::parse(text, sfano::make_ring(names, field->field)), out);
    });
}

void sf_poly_free(sf_poly* poly) { delete poly; }

sf_status sf_poly_print(const sf_poly* poly, char** out) {
    if (!poly || !out) return fail(SF_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        *out = copy_string(poly->poly.to_string());
        return SF_OK;
    });
}

sf_status sf_poly_add(const sf_poly* a, const sf_poly* b, sf_poly** out) {
    if (!a || !b || !out) return fail(SF_ERR_ARGUMENT, "null argument");
    if (same_ring(a, b) != SF_OK) return SF_ERR_INPUT;
    return guarded([&] { return new_poly(a->poly + b->poly, out); });
}

sf_status sf_poly_mul(const sf_poly* a, const sf_poly* b, sf_poly** out) {
    if (!a || !b || !out) return fail(SF_ERR_ARGUMENT, "null argument");
    if (same_ring(a, b) != SF_OK) return SF_ERR_INPUT;
    return guarded([&] { return new_poly(a->poly * b->poly, out); });
}

sf_status sf_poly_derivative(const sf_poly* p, const char* var, sf_poly** out) {
    if (!p || !var || !out) return fail(SF_ERR_ARGUMENT, "null argument");
    return guarded([&] { return new_poly(sfano::partial_derivative(p->poly, std::string(var)), out); });
}

void sf_string_free(char* s) { delete[] s; }

sf_status sf_job_create(const char* command, sf_job** out) {
    if (!command || !out) return fail(SF_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        *out = new sf_job{};
        (*out)->config.command = command;
        return SF_OK;
    });
}

void sf_job_destroy(sf_job* job) { delete job; }

sf_status sf_job_set_option(sf_job* job, const char* key, const char* value) {
    if (!job || !key || !value) return fail(SF_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        sfano::set_job_option(job->config, key, value);
        return SF_OK;
    });
}

sf_status sf_job_add_polynomial(sf_job* job, const char* text) {
    if (!job || !text) return fail(SF_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        job->config.polynomials.emplace_back(text);
        return SF_OK;
    });
}

sf_status sf_job_add_argument(sf_job* job, const char* arg) {
    if (!job || !arg) return fail(SF_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        job->config.arguments.emplace_back(arg);
        return SF_OK;
    });
}

sf_status sf_job_run(const sf_job* job, sf_report** out) {
    if (!job || !out) return fail(SF_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        *out = new sf_report{sfano::run_job(job->config)};
        return SF_OK;
    });
}

int sf_report_exit_code(const sf_report* report) { return report ? report->report.exit_code : SF_ERR_ARGUMENT; }

const char* sf_report_json(const sf_report* report) { return report ? report->report.json.c_str() : ""; }

const char* sf_report_text(const sf_report* report) { return report ? report->report.text.c_str() : ""; }

void sf_report_destroy(sf_report* report) { delete report; }

}  // extern "C"
