#include "qeuler.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "qeuler/dirichlet.hpp"
#include "qeuler/fermionic.hpp"
#include "qeuler/qeuler_numbers.hpp"
#include "qeuler/verify.hpp"
#include "qeuler/zeta.hpp"

struct qe_character {
    qeuler::DirichletCharacter chi;
};

struct qe_report {
    std::vector<qeuler::CheckResult> checks;
};

namespace {

thread_local std::string g_last_error;

qe_status fail(qe_status status, const std::string& message) {
    g_last_error = message;
    return status;
}

qe_series_value to_c(const qeuler::SeriesValue& v) {
    qe_method method = QE_METHOD_CONTINUATION;
    switch (v.method) {
        case qeuler::SeriesMethod::direct:
            method = QE_METHOD_DIRECT;
            break;
        case qeuler::SeriesMethod::continuation:
            method = QE_METHOD_CONTINUATION;
            break;
        case qeuler::SeriesMethod::exact_negative_integer:
            method = QE_METHOD_EXACT_NEGATIVE_INTEGER;
            break;
    }
    return {v.value.real(), v.value.imag(), v.abs_error_estimate, v.terms_used, method};
}

qeuler::PrecisionPolicy to_cpp(const qe_policy* policy) {
    if (policy == nullptr) {
        return qeuler::PrecisionPolicy::from_environment();
    }
    return {policy->eps, policy->max_terms, policy->consecutive_small};
}

qeuler::BigRational parse(const char* text) {
    if (text == nullptr) {
        throw qeuler::ParseError("null rational");
    }
    return qeuler::BigRational::parse(text);
}

char* dup(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) {
        throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// Runs body, translating exceptions into status codes.
template <typename Body>
qe_status guarded(Body&& body) {
    g_last_error.clear();
    try {
        body();
        return QE_OK;
    } catch (const qeuler::ParseError& e) {
        return fail(QE_ERR_INVALID_ARGUMENT, e.what());
    } catch (const qeuler::DomainError& e) {
        return fail(QE_ERR_DOMAIN, e.what());
    } catch (const qeuler::ResourceError& e) {
        return fail(QE_ERR_RESOURCE, e.what());
    } catch (const std::bad_alloc&) {
        return fail(QE_ERR_RESOURCE, "out of memory");
    } catch (const std::exception& e) {
        return fail(QE_ERR_INTERNAL, e.what());
    }
}

template <typename Eval>
qe_status series(qe_series_value* out, Eval&& eval) {
    if (out == nullptr) {
        return fail(QE_ERR_INVALID_ARGUMENT, "null output pointer");
    }
    g_last_error.clear();
    try {
        *out = to_c(eval());
        return QE_OK;
    } catch (const qeuler::NonConvergenceError& e) {
        *out = to_c(e.partial());
        return fail(QE_ERR_NONCONVERGENCE, e.what());
    } catch (...) {
        return guarded([] { throw; });
    }
}

template <typename Eval>
qe_status exact(char** out, Eval&& eval) {
    if (out == nullptr) {
        return fail(QE_ERR_INVALID_ARGUMENT, "null output pointer");
    }
    return guarded([&] { *out = dup(eval().to_string()); });
}

#define QE_REQUIRE(ptr)                                               \
    do {                                                              \
        if ((ptr) == nullptr) {                                       \
            return fail(QE_ERR_INVALID_ARGUMENT, "null " #ptr);       \
        }                                                             \
    } while (0)

}  // namespace

extern "C" {

const char* qe_last_error(void) { return g_last_error.c_str(); }

const char* qe_status_name(qe_status status) {
    switch (status) {
        case QE_OK:
            return "ok";
        case QE_ERR_INVALID_ARGUMENT:
            return "invalid-argument";
        case QE_ERR_DOMAIN:
            return "domain";
        case QE_ERR_NONCONVERGENCE:
            return "nonconvergence";
        case QE_ERR_RESOURCE:
            return "resource";
        case QE_ERR_INTERNAL:
            return "internal";
    }
    return "unknown";
}

const char* qe_method_name(qe_method method) {
    switch (method) {
        case QE_METHOD_DIRECT:
            return qeuler::to_string(qeuler::SeriesMethod::direct);
        case QE_METHOD_CONTINUATION:
            return qeuler::to_string(qeuler::SeriesMethod::continuation);
        case QE_METHOD_EXACT_NEGATIVE_INTEGER:
            return qeuler::to_string(qeuler::SeriesMethod::exact_negative_integer);
    }
    return "unknown";
}

void qe_string_free(char* s) { std::free(s); }

qe_status qe_policy_default(qe_policy* out) {
    QE_REQUIRE(out);
    return guarded([&] {
        const auto p = qeuler::PrecisionPolicy::from_environment();
        *out = {p.eps, p.max_terms, p.consecutive_small};
    });
}

qe_status qe_rational_canonical(const char* r, char** out) {
    return exact(out, [&] { return parse(r); });
}

qe_status qe_rational_to_double(const char* r, double* out) {
    QE_REQUIRE(out);
    return guarded([&] { *out = parse(r).to_double(); });
}

qe_status qe_p_valuation(const char* r, uint64_t p, int64_t* out, int* infinite) {
    QE_REQUIRE(out);
    QE_REQUIRE(infinite);
    return guarded([&] {
        if (!qeuler::is_prime(p)) {
            throw qeuler::DomainError("p must be prime");
        }
        const auto v = qeuler::p_valuation(parse(r), p);
        *infinite = v ? 0 : 1;
        if (v) {
            *out = *v;
        }
    });
}

qe_status qe_qeuler_higher_exact(uint32_t m, uint32_t k, const char* q, char** out) {
    return exact(out, [&] { return qeuler::qeuler_higher(m, k, parse(q)); });
}

qe_status qe_qeuler_higher_numeric(uint32_t m, uint32_t k, double q, double* out) {
    QE_REQUIRE(out);
    return guarded([&] { *out = qeuler::qeuler_higher(m, k, q); });
}

qe_status qe_qeuler_mixed_exact(uint32_t kdeg, uint32_t m, const char* q, char** out) {
    return exact(out, [&] { return qeuler::qeuler_mixed(kdeg, m, parse(q)); });
}

qe_status qe_qeuler_poly_exact(uint32_t m, const char* r, uint32_t d, uint32_t a, char** out) {
    return exact(out, [&] { return qeuler::qeuler_poly_exact(m, parse(r), d, a); });
}

qe_status qe_qeuler_poly_numeric(uint32_t m, double q, double x, double* out) {
    QE_REQUIRE(out);
    return guarded([&] { *out = qeuler::qeuler_poly_numeric(m, q, x); });
}

qe_status qe_euler_classical(uint32_t n, uint32_t k, char** out) {
    return exact(out, [&] { return qeuler::euler_classical(n, k); });
}

qe_status qe_integral_stage(uint32_t m, uint32_t k, uint32_t p, const char* q, uint32_t level,
                            char** out) {
    return exact(out, [&] {
        const qeuler::PAdicQParam ctx(p, parse(q));
        return qeuler::higher_order_stage(m, k, ctx, level);
    });
}

qe_status qe_zeta_neg_int_exact(uint32_t m, const char* q, char** out) {
    return exact(out, [&] {
        const qeuler::BigRational qr = parse(q);
        const qeuler::QReal checked(qr);
        return qeuler::euler_zeta_neg_int_exact(m, qr);
    });
}

qe_status qe_hurwitz_neg_int_exact(uint32_t m, const char* r, uint32_t d, uint32_t a,
                                   char** out) {
    return exact(out, [&] { return qeuler::hurwitz_neg_int_exact(m, parse(r), d, a); });
}

qe_status qe_lseries_neg_int_exact(uint32_t k, const qe_character* chi, const char* r,
                                   char** out) {
    QE_REQUIRE(chi);
    return exact(out, [&] { return qeuler::l_neg_int_exact(k, chi->chi, parse(r)); });
}

qe_status qe_lseries_neg_int_value(uint32_t k, const qe_character* chi, const char* r,
                                   double* re, double* im) {
    QE_REQUIRE(chi);
    QE_REQUIRE(re);
    QE_REQUIRE(im);
    return guarded([&] {
        const auto v = qeuler::l_neg_int_value(k, chi->chi, parse(r));
        *re = v.real();
        *im = v.imag();
    });
}

qe_status qe_partial_neg_int_exact(uint32_t n, uint32_t a, uint32_t F, const char* r,
                                   char** out) {
    return exact(out, [&] { return qeuler::partial_zeta_neg_int_exact(n, a, F, parse(r)); });
}

qe_status qe_zeta(double s_re, double s_im, double q, const qe_policy* policy,
                  qe_series_value* out) {
    return series(out, [&] {
        return qeuler::euler_zeta_q({s_re, s_im}, qeuler::QReal(q), to_cpp(policy));
    });
}

qe_status qe_zeta_direct(double s_re, double s_im, double q, const qe_policy* policy,
                         qe_series_value* out) {
    return series(out, [&] {
        return qeuler::euler_zeta_direct({s_re, s_im}, qeuler::QReal(q), to_cpp(policy));
    });
}

qe_status qe_hurwitz(double s_re, double s_im, double x, double q, const qe_policy* policy,
                     qe_series_value* out) {
    return series(out, [&] {
        return qeuler::hurwitz_zeta_q({s_re, s_im}, x, qeuler::QReal(q), to_cpp(policy));
    });
}

qe_status qe_hurwitz_direct(double s_re, double s_im, double x, double q,
                            const qe_policy* policy, qe_series_value* out) {
    return series(out, [&] {
        return qeuler::hurwitz_zeta_direct({s_re, s_im}, x, qeuler::QReal(q), to_cpp(policy));
    });
}

qe_status qe_lseries(double s_re, double s_im, const qe_character* chi, double q,
                     const qe_policy* policy, qe_series_value* out) {
    QE_REQUIRE(chi);
    return series(out, [&] {
        return qeuler::l_series({s_re, s_im}, chi->chi, qeuler::QReal(q), to_cpp(policy));
    });
}

qe_status qe_lseries_direct(double s_re, double s_im, const qe_character* chi, double q,
                            const qe_policy* policy, qe_series_value* out) {
    QE_REQUIRE(chi);
    return series(out, [&] {
        return qeuler::l_series_direct({s_re, s_im}, chi->chi, qeuler::QReal(q), to_cpp(policy));
    });
}

qe_status qe_partial(double s_re, double s_im, uint32_t a, uint32_t F, double q,
                     const qe_policy* policy, qe_series_value* out) {
    return series(out, [&] {
        return qeuler::partial_zeta({s_re, s_im}, a, F, qeuler::QReal(q), to_cpp(policy));
    });
}

qe_status qe_partial_direct(double s_re, double s_im, uint32_t a, uint32_t F, double q,
                            const qe_policy* policy, qe_series_value* out) {
    return series(out, [&] {
        return qeuler::partial_zeta_direct({s_re, s_im}, a, F, qeuler::QReal(q),
                                           to_cpp(policy));
    });
}

qe_status qe_character_count(uint64_t d, uint64_t* out) {
    QE_REQUIRE(out);
    return guarded([&] {
        if (d == 0 || d % 2 == 0) {
            throw qeuler::DomainError("character modulus must be odd and positive");
        }
        *out = qeuler::euler_phi(d);
    });
}

qe_status qe_character_create(uint64_t d, uint64_t index, qe_character** out) {
    QE_REQUIRE(out);
    return guarded([&] { *out = new qe_character{qeuler::character_by_index(d, index)}; });
}

void qe_character_destroy(qe_character* chi) { delete chi; }

uint64_t qe_character_modulus(const qe_character* chi) {
    return chi != nullptr ? chi->chi.modulus() : 0;
}

uint64_t qe_character_order(const qe_character* chi) {
    return chi != nullptr ? chi->chi.order() : 0;
}

uint64_t qe_character_conductor(const qe_character* chi) {
    return chi != nullptr ? chi->chi.conductor() : 0;
}

int qe_character_is_primitive(const qe_character* chi) {
    return chi != nullptr && chi->chi.is_primitive() ? 1 : 0;
}

int qe_character_is_real(const qe_character* chi) {
    return chi != nullptr && chi->chi.is_real() ? 1 : 0;
}

qe_status qe_character_eval(const qe_character* chi, int64_t n, int* is_zero, uint64_t* num,
                            uint64_t* den) {
    QE_REQUIRE(chi);
    QE_REQUIRE(is_zero);
    QE_REQUIRE(num);
    QE_REQUIRE(den);
    return guarded([&] {
        const qeuler::CharValue v = chi->chi(n);
        *is_zero = v ? 0 : 1;
        *num = v ? v->num() : 0;
        *den = v ? v->den() : 1;
    });
}

qe_status qe_verify_run(const char* suites, uint64_t seed, int inject_failure, qe_report** out) {
    QE_REQUIRE(out);
    return guarded([&] {
        qeuler::VerifyOptions options;
        options.seed = seed;
        options.inject_failure = inject_failure != 0;
        if (suites != nullptr) {
            std::string list(suites);
            std::size_t start = 0;
            while (start <= list.size()) {
                const auto comma = list.find(',', start);
                const auto item = list.substr(start, comma == std::string::npos
                                                         ? std::string::npos
                                                         : comma - start);
                if (!item.empty()) {
                    options.suites.push_back(item);
                }
                if (comma == std::string::npos) {
                    break;
                }
                start = comma + 1;
            }
        }
        *out = new qe_report{qeuler::run_verification(options)};
    });
}

void qe_report_destroy(qe_report* report) { delete report; }

size_t qe_report_count(const qe_report* report) {
    return report != nullptr ? report->checks.size() : 0;
}

int qe_report_all_passed(const qe_report* report) {
    if (report == nullptr) {
        return 0;
    }
    for (const auto& c : report->checks) {
        if (!c.passed) {
            return 0;
        }
    }
    return 1;
}

qe_status qe_report_check(const qe_report* report, size_t i, const char** suite,
                          const char** name, int* passed, const char** detail) {
    QE_REQUIRE(report);
    if (i >= report->checks.size()) {
        return fail(QE_ERR_INVALID_ARGUMENT, "check index out of range");
    }
    const auto& c = report->checks[i];
    if (suite != nullptr) {
        *suite = c.suite.c_str();
    }
    if (name != nullptr) {
        *name = c.name.c_str();
    }
    if (passed != nullptr) {
        *passed = c.passed ? 1 : 0;
    }
    if (detail != nullptr) {
        *detail = c.detail.c_str();
    }
    return QE_OK;
}

}  // extern "C"
