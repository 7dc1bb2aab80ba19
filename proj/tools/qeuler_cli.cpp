// qeuler: command-line front end over the qeuler C API.
//
//   qeuler eval <function> [parameters]     one record
//   qeuler table <function> [parameters]    sweep over --m, --s-grid or --q-list
//   qeuler verify [suites...]               verification suites
//
// Exit codes: 0 success, 1 verification failure, 2 usage or domain error,
// 3 non-convergence.

#include <cerrno>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qeuler.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNonConvergence = 3;

const std::vector<std::string> kFunctions = {"zeta",    "hurwitz",     "lseries",   "partial",
                                             "qeuler",  "qeuler-poly", "classical", "integral-stage"};

struct CliError {
    int code;
    std::string message;
};

[[noreturn]] void usage_error(const std::string& message) { throw CliError{kExitUsage, message}; }

void check(qe_status status) {
    if (status == QE_OK) {
        return;
    }
    const int code = status == QE_ERR_NONCONVERGENCE ? kExitNonConvergence : kExitUsage;
    throw CliError{code, std::string(qe_status_name(status)) + ": " + qe_last_error()};
}

struct CString {
    char* ptr = nullptr;
    ~CString() { qe_string_free(ptr); }
    std::string str() const { return ptr != nullptr ? ptr : ""; }
};

struct CharacterHandle {
    qe_character* ptr = nullptr;
    CharacterHandle() = default;
    CharacterHandle(const CharacterHandle&) = delete;
    CharacterHandle& operator=(const CharacterHandle&) = delete;
    ~CharacterHandle() { qe_character_destroy(ptr); }
};

// Parameter parsing ---------------------------------------------------------

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    const auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep)) {
        out.push_back(trim(item));
    }
    return out;
}

long long parse_int(const std::string& text, const std::string& what) {
    errno = 0;
    char* end = nullptr;
    const long long v = std::strtoll(text.c_str(), &end, 10);
    if (text.empty() || errno != 0 || *end != '\0') {
        usage_error("malformed integer for " + what + ": '" + text + "'");
    }
    return v;
}

std::uint32_t parse_u32(const std::string& text, const std::string& what) {
    const long long v = parse_int(text, what);
    if (v < 0 || v > 0xFFFFFFFFLL) {
        usage_error(what + " must be a nonnegative integer, got '" + text + "'");
    }
    return static_cast<std::uint32_t>(v);
}

double parse_double(const std::string& text, const std::string& what) {
    if (text.find('/') != std::string::npos) {
        double out = 0.0;
        check(qe_rational_to_double(text.c_str(), &out));
        return out;
    }
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (text.empty() || errno != 0 || *end != '\0') {
        usage_error("malformed number for " + what + ": '" + text + "'");
    }
    return v;
}

std::string canonical_rational(const std::string& text) {
    CString out;
    check(qe_rational_canonical(text.c_str(), &out.ptr));
    return out.str();
}

struct SValue {
    double re = 0.0;
    double im = 0.0;
};

SValue parse_s(const std::string& text) {
    const auto parts = split(text, ',');
    if (parts.empty() || parts.size() > 2) {
        usage_error("s must be 're' or 're,im', got '" + text + "'");
    }
    SValue s;
    s.re = parse_double(parts[0], "s");
    s.im = parts.size() == 2 ? parse_double(parts[1], "s") : 0.0;
    return s;
}

/// Nonpositive integer s, as m = -s.
std::optional<std::uint32_t> negative_integer_order(const std::string& text) {
    const auto parts = split(text, ',');
    if (parts.size() == 2 && parse_double(parts[1], "s") != 0.0) {
        return std::nullopt;
    }
    char* end = nullptr;
    const long long v = std::strtoll(parts.at(0).c_str(), &end, 10);
    if (parts[0].empty() || *end != '\0' || v > 0) {
        return std::nullopt;
    }
    return static_cast<std::uint32_t>(-v);
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Evaluation ----------------------------------------------------------------

struct Params {
    std::optional<std::string> s, q, x, r, d, a, m, k, p, N, F, chr;
    std::string method = "continuation";
    bool exact = false;
    std::optional<std::uint64_t> max_terms;
};

struct Record {
    std::string function;
    Json params = Json::object();
    std::optional<std::string> exact;  // "num/den"
    double re = 0.0;
    double im = 0.0;
    std::string method;
    double err = 0.0;
    std::uint64_t terms = 0;
};

const std::string& need(const std::optional<std::string>& v, const char* flag) {
    if (!v) {
        usage_error(std::string("missing --") + flag);
    }
    return *v;
}

qe_policy make_policy(const Params& p) {
    qe_policy policy{};
    check(qe_policy_default(&policy));
    if (p.max_terms) {
        policy.max_terms = *p.max_terms;
    }
    return policy;
}

void open_character(const std::string& spec, CharacterHandle& out) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) {
        usage_error("character must be 'modulus:index', got '" + spec + "'");
    }
    const auto d = static_cast<std::uint64_t>(parse_int(spec.substr(0, colon), "character modulus"));
    const auto idx = static_cast<std::uint64_t>(parse_int(spec.substr(colon + 1), "character index"));
    check(qe_character_create(d, idx, &out.ptr));
}

void fill_series(Record& rec, qe_status status, const qe_series_value& v) {
    check(status);
    rec.re = v.re;
    rec.im = v.im;
    rec.err = v.err;
    rec.terms = v.terms;
    rec.method = qe_method_name(v.method);
}

void set_exact(Record& rec, CString& value, const char* method) {
    rec.exact = value.str();
    rec.method = method;
}

bool use_direct(const Params& p) {
    if (p.method != "continuation" && p.method != "direct") {
        usage_error("--method must be 'continuation' or 'direct'");
    }
    return p.method == "direct";
}

Record evaluate(const std::string& fn, const Params& p) {
    Record rec;
    rec.function = fn;
    auto& params = rec.params;
    CString value;
    const qe_policy policy = make_policy(p);

    auto exact_q = [&](const char* key, const std::optional<std::string>& v) {
        params[key] = canonical_rational(need(v, key));
        return params[key].get<std::string>();
    };
    auto numeric_q = [&](const char* key, const std::optional<std::string>& v) {
        const std::string& text = need(v, key);
        params[key] = text;
        return parse_double(text, key);
    };
    auto uint_param = [&](const char* key, const std::optional<std::string>& v) {
        const auto out = parse_u32(need(v, key), key);
        params[key] = out;
        return out;
    };
    auto uint_param_or = [&](const char* key, const std::optional<std::string>& v,
                             std::uint32_t fallback) {
        const auto out = v ? parse_u32(*v, key) : fallback;
        params[key] = out;
        return out;
    };
    auto neg_order = [&]() {
        params["s"] = need(p.s, "s");
        const auto m = negative_integer_order(*p.s);
        if (!m) {
            usage_error("exact mode needs s to be a nonpositive integer, got '" + *p.s + "'");
        }
        return *m;
    };

    if (fn == "classical") {
        const auto m = uint_param("m", p.m);
        const auto k = uint_param_or("k", p.k, 1);
        check(qe_euler_classical(m, k, &value.ptr));
        set_exact(rec, value, "recurrence");
    } else if (fn == "integral-stage") {
        const auto m = uint_param("m", p.m);
        const auto k = uint_param_or("k", p.k, 1);
        const auto prime = uint_param("p", p.p);
        const std::string q = exact_q("q", p.q);
        const auto level = uint_param("N", p.N);
        check(qe_integral_stage(m, k, prime, q.c_str(), level, &value.ptr));
        set_exact(rec, value, "stage");
    } else if (fn == "qeuler") {
        const auto m = uint_param("m", p.m);
        const auto k = uint_param_or("k", p.k, 1);
        if (p.exact) {
            const std::string q = exact_q("q", p.q);
            check(qe_qeuler_higher_exact(m, k, q.c_str(), &value.ptr));
            set_exact(rec, value, "closed-form");
        } else {
            const double q = numeric_q("q", p.q);
            check(qe_qeuler_higher_numeric(m, k, q, &rec.re));
            rec.method = "closed-form";
        }
    } else if (fn == "qeuler-poly") {
        const auto m = uint_param("m", p.m);
        if (p.exact || !p.x) {
            const std::string r = exact_q("r", p.r);
            const auto d = uint_param("d", p.d);
            const auto a = uint_param("a", p.a);
            check(qe_qeuler_poly_exact(m, r.c_str(), d, a, &value.ptr));
            if (p.exact) {
                set_exact(rec, value, "closed-form");
            } else {
                check(qe_rational_to_double(value.str().c_str(), &rec.re));
                rec.method = "closed-form";
            }
        } else {
            const double q = numeric_q("q", p.q);
            const double x = numeric_q("x", p.x);
            check(qe_qeuler_poly_numeric(m, q, x, &rec.re));
            rec.method = "closed-form";
        }
    } else if (fn == "zeta") {
        if (p.exact) {
            const auto m = neg_order();
            const std::string q = exact_q("q", p.q);
            check(qe_zeta_neg_int_exact(m, q.c_str(), &value.ptr));
            set_exact(rec, value, "exact-negative-integer");
        } else {
            params["s"] = need(p.s, "s");
            const SValue s = parse_s(*p.s);
            const double q = numeric_q("q", p.q);
            qe_series_value v{};
            const qe_status st = use_direct(p) ? qe_zeta_direct(s.re, s.im, q, &policy, &v)
                                               : qe_zeta(s.re, s.im, q, &policy, &v);
            fill_series(rec, st, v);
        }
    } else if (fn == "hurwitz") {
        if (p.exact) {
            const auto m = neg_order();
            const std::string r = exact_q("r", p.r);
            const auto d = uint_param("d", p.d);
            const auto a = uint_param("a", p.a);
            check(qe_hurwitz_neg_int_exact(m, r.c_str(), d, a, &value.ptr));
            set_exact(rec, value, "exact-negative-integer");
        } else {
            params["s"] = need(p.s, "s");
            const SValue s = parse_s(*p.s);
            double q = 0.0;
            double x = 0.0;
            if (p.x) {
                q = numeric_q("q", p.q);
                x = numeric_q("x", p.x);
            } else {
                // base q = r^d, argument x = a/d
                const double r = numeric_q("r", p.r);
                const auto d = uint_param("d", p.d);
                const auto a = uint_param("a", p.a);
                q = std::pow(r, static_cast<double>(d));
                x = static_cast<double>(a) / d;
            }
            qe_series_value v{};
            const qe_status st = use_direct(p)
                                     ? qe_hurwitz_direct(s.re, s.im, x, q, &policy, &v)
                                     : qe_hurwitz(s.re, s.im, x, q, &policy, &v);
            fill_series(rec, st, v);
        }
    } else if (fn == "lseries") {
        CharacterHandle chi;
        params["char"] = need(p.chr, "char");
        open_character(*p.chr, chi);
        if (p.exact) {
            const auto k = neg_order();
            const std::string q = exact_q("q", p.q);
            if (qe_character_is_real(chi.ptr) == 0) {
                usage_error("exact L-values need a real character; use numeric mode");
            }
            check(qe_lseries_neg_int_exact(k, chi.ptr, q.c_str(), &value.ptr));
            set_exact(rec, value, "exact-negative-integer");
        } else {
            params["s"] = need(p.s, "s");
            const SValue s = parse_s(*p.s);
            const double q = numeric_q("q", p.q);
            qe_series_value v{};
            const qe_status st = use_direct(p)
                                     ? qe_lseries_direct(s.re, s.im, chi.ptr, q, &policy, &v)
                                     : qe_lseries(s.re, s.im, chi.ptr, q, &policy, &v);
            fill_series(rec, st, v);
        }
    } else if (fn == "partial") {
        if (p.exact) {
            const auto n = neg_order();
            const auto a = uint_param("a", p.a);
            const auto f = uint_param("F", p.F);
            const std::string q = exact_q("q", p.q);
            check(qe_partial_neg_int_exact(n, a, f, q.c_str(), &value.ptr));
            set_exact(rec, value, "exact-negative-integer");
        } else {
            params["s"] = need(p.s, "s");
            const SValue s = parse_s(*p.s);
            const auto a = uint_param("a", p.a);
            const auto f = uint_param("F", p.F);
            const double q = numeric_q("q", p.q);
            qe_series_value v{};
            const qe_status st = use_direct(p)
                                     ? qe_partial_direct(s.re, s.im, a, f, q, &policy, &v)
                                     : qe_partial(s.re, s.im, a, f, q, &policy, &v);
            fill_series(rec, st, v);
        }
    } else {
        usage_error("unknown function '" + fn + "'");
    }
    return rec;
}

// Output ----------------------------------------------------------------------

Json to_json(const Record& rec) {
    Json j;
    j["function"] = rec.function;
    j["params"] = rec.params;
    if (rec.exact) {
        const auto slash = rec.exact->find('/');
        j["value"] = {{"num", rec.exact->substr(0, slash)},
                      {"den", slash == std::string::npos ? "1" : rec.exact->substr(slash + 1)}};
    } else {
        j["value"] = {{"re", rec.re}, {"im", rec.im}};
    }
    j["method"] = rec.method;
    j["err"] = rec.err;
    j["terms"] = rec.terms;
    return j;
}

std::string param_text(const Json& v) {
    return v.is_string() ? v.get<std::string>() : v.dump();
}

void write_csv(std::ostream& out, const std::vector<std::string>& key_columns,
               const std::vector<Record>& records) {
    if (records.empty()) {
        return;
    }
    const bool exact = records.front().exact.has_value();
    std::string header;
    for (const auto& k : key_columns) {
        header += k + ",";
    }
    header += exact ? "value" : "re,im,err,terms,method";
    out << header << '\n';
    for (const auto& rec : records) {
        std::string row;
        for (const auto& k : key_columns) {
            row += param_text(rec.params.at(k)) + ",";
        }
        if (exact) {
            row += *rec.exact;
        } else {
            row += format_double(rec.re) + "," + format_double(rec.im) + "," +
                   format_double(rec.err) + "," + std::to_string(rec.terms) + "," + rec.method;
        }
        out << row << '\n';
    }
}

void require_format(const std::string& format) {
    if (format != "json" && format != "csv") {
        usage_error("--format must be 'json' or 'csv'");
    }
}

// Sweeps ------------------------------------------------------------------------

std::vector<std::string> expand_range(const std::string& spec, const char* what) {
    std::vector<std::string> out;
    const auto dots = spec.find("..");
    if (dots != std::string::npos) {
        const long long lo = parse_int(trim(spec.substr(0, dots)), what);
        const long long hi = parse_int(trim(spec.substr(dots + 2)), what);
        if (hi < lo) {
            usage_error(std::string("empty range for ") + what + ": '" + spec + "'");
        }
        for (long long v = lo; v <= hi; ++v) {
            out.push_back(std::to_string(v));
        }
        return out;
    }
    return {trim(spec)};
}

struct Sweep {
    std::string column;
    std::vector<std::string> values;
    std::optional<std::string> Params::*field;
};

Sweep choose_sweep(const Params& p, const std::optional<std::string>& m_range,
                   const std::optional<std::string>& s_grid,
                   const std::optional<std::string>& q_list) {
    const int chosen = (m_range ? 1 : 0) + (s_grid ? 1 : 0) + (q_list ? 1 : 0);
    if (chosen != 1) {
        usage_error("table needs exactly one of --m <a..b>, --s-grid, --q-list");
    }
    (void)p;
    if (m_range) {
        return {"m", expand_range(*m_range, "m"), &Params::m};
    }
    if (s_grid) {
        std::vector<std::string> values;
        if (s_grid->find("..") != std::string::npos) {
            values = expand_range(*s_grid, "s");
        } else {
            values = split(*s_grid, ';');
        }
        return {"s", values, &Params::s};
    }
    return {"q", split(*q_list, ','), &Params::q};
}

// Commands ----------------------------------------------------------------------

int run_verify(const std::vector<std::string>& suites, std::uint64_t seed,
               const std::string& format, bool inject) {
    if (format != "text" && format != "json") {
        usage_error("--format must be 'text' or 'json'");
    }
    std::string list;
    for (const auto& s : suites) {
        list += (list.empty() ? "" : ",") + s;
    }
    qe_report* raw = nullptr;
    check(qe_verify_run(list.empty() ? nullptr : list.c_str(), seed, inject ? 1 : 0, &raw));
    const std::unique_ptr<qe_report, decltype(&qe_report_destroy)> report(raw, qe_report_destroy);

    const std::size_t count = qe_report_count(report.get());
    const bool all_passed = qe_report_all_passed(report.get()) != 0;
    Json checks = Json::array();
    std::size_t passed_count = 0;
    std::string first_failure;
    for (std::size_t i = 0; i < count; ++i) {
        const char* suite = nullptr;
        const char* name = nullptr;
        const char* detail = nullptr;
        int passed = 0;
        check(qe_report_check(report.get(), i, &suite, &name, &passed, &detail));
        passed_count += passed != 0 ? 1 : 0;
        if (passed == 0 && first_failure.empty()) {
            first_failure = std::string(suite) + "/" + name + ": " + detail;
        }
        if (format == "json") {
            checks.push_back({{"suite", suite}, {"name", name}, {"passed", passed != 0},
                              {"detail", detail}});
        } else {
            std::cout << (passed != 0 ? "PASS " : "FAIL ") << suite << "/" << name << ": "
                      << detail << '\n';
        }
    }
    if (format == "json") {
        Json doc;
        doc["seed"] = seed;
        doc["checks"] = checks;
        doc["passed"] = all_passed;
        std::cout << doc.dump(2) << '\n';
    } else {
        std::cout << "summary: " << passed_count << "/" << count << " checks passed\n";
    }
    if (!all_passed) {
        std::cerr << "first failure: " << first_failure << '\n';
        return kExitVerifyFailed;
    }
    return kExitOk;
}

void add_param_options(CLI::App* cmd, Params& p) {
    cmd->add_option("--s", p.s, "s as 're' or 're,im'");
    cmd->add_option("--q", p.q, "base q: rational 'a/b' or decimal");
    cmd->add_option("--x", p.x, "Hurwitz/polynomial argument x (numeric mode)");
    cmd->add_option("--r", p.r, "rational r with base q = r^d and x = a/d");
    cmd->add_option("--d", p.d, "denominator d of x = a/d");
    cmd->add_option("--a", p.a, "numerator a of x = a/d, or residue class for partial");
    cmd->add_option("--k", p.k, "order k (qeuler, classical, integral-stage)");
    cmd->add_option("--p", p.p, "odd prime p (integral-stage)");
    cmd->add_option("--N", p.N, "stage level N (integral-stage)");
    cmd->add_option("--F", p.F, "odd modulus F (partial)");
    cmd->add_option("--char", p.chr, "Dirichlet character 'modulus:index'");
    cmd->add_option("--method", p.method, "continuation (default) or direct");
    cmd->add_option("--max-terms", p.max_terms, "series term cap (overrides QEULER_MAX_TERMS)");
    cmd->add_flag("--exact", p.exact, "exact rational mode");
}

int run(int argc, char** argv) {
    CLI::App app{"q-Euler numbers, q-zeta functions and their identities"};
    app.require_subcommand(1);

    Params eval_params;
    std::string eval_fn;
    std::string eval_mode;
    std::string eval_format = "json";
    auto* eval = app.add_subcommand("eval", "evaluate one function value");
    eval->add_option("function", eval_fn, "function")->required()->check(CLI::IsMember(kFunctions));
    add_param_options(eval, eval_params);
    eval->add_option("--m", eval_params.m, "degree m");
    eval->add_option("--mode", eval_mode, "exact or numeric")
        ->check(CLI::IsMember({"exact", "numeric"}));
    eval->add_option("--format", eval_format, "json (default) or csv");

    Params table_params;
    std::string table_fn;
    std::string table_mode;
    std::string table_format = "csv";
    std::optional<std::string> m_range;
    std::optional<std::string> s_grid;
    std::optional<std::string> q_list;
    auto* table = app.add_subcommand("table", "sweep a parameter and emit CSV or JSON");
    table->add_option("function", table_fn, "function")->required()->check(CLI::IsMember(kFunctions));
    add_param_options(table, table_params);
    table->add_option("--m", m_range, "degree range 'a..b'");
    table->add_option("--s-grid", s_grid, "s sweep: integer range 'a..b' or 're[,im];re[,im];...'");
    table->add_option("--q-list", q_list, "comma-separated q values");
    table->add_option("--mode", table_mode, "exact or numeric")
        ->check(CLI::IsMember({"exact", "numeric"}));
    table->add_option("--format", table_format, "csv (default) or json");

    std::vector<std::string> suites;
    std::uint64_t seed = 1;
    std::string verify_format = "text";
    bool inject = false;
    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("suites", suites,
                       "identities | interpolation | padic | characters | methods | all");
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--format", verify_format, "text (default) or json");
    verify->add_flag("--inject-failure", inject, "perturb one residual to exercise the failure path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (*eval) {
        require_format(eval_format);
        eval_params.exact = eval_params.exact || eval_mode == "exact";
        const Record rec = evaluate(eval_fn, eval_params);
        if (eval_format == "json") {
            std::cout << to_json(rec).dump() << '\n';
        } else {
            std::vector<std::string> keys;
            for (const auto& [k, v] : rec.params.items()) {
                keys.push_back(k);
            }
            write_csv(std::cout, keys, {rec});
        }
        return kExitOk;
    }
    if (*table) {
        require_format(table_format);
        table_params.exact = table_params.exact || table_mode == "exact";
        const Sweep sweep = choose_sweep(table_params, m_range, s_grid, q_list);
        std::vector<Record> records;
        for (const auto& v : sweep.values) {
            Params row = table_params;
            row.*(sweep.field) = v;
            records.push_back(evaluate(table_fn, row));
        }
        if (table_format == "json") {
            Json doc = Json::array();
            for (const auto& rec : records) {
                doc.push_back(to_json(rec));
            }
            std::cout << doc.dump(2) << '\n';
        } else {
            write_csv(std::cout, {sweep.column}, records);
        }
        return kExitOk;
    }
    return run_verify(suites, seed, verify_format, inject);
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CliError& e) {
        std::cerr << "qeuler: " << e.message << '\n';
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "qeuler: " << e.what() << '\n';
        return kExitUsage;
    }
}
