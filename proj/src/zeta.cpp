#include "qeuler/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

#include "qeuler/qeuler_numbers.hpp"

namespace qeuler {

namespace {

constexpr double kSingularThreshold = 1e-12;

// Stopping rule shared by every truncated series: stop once
// consecutive_small successive term magnitudes fall below
// eps * max(1, |partial sum|), then bound the tail geometrically.
class TailTracker {
public:
    explicit TailTracker(const PrecisionPolicy& policy) : policy_(policy) {}

    bool push(double magnitude, double partial_abs) {
        if (last_ > 0.0 && magnitude > 0.0) {
            ratio_ = magnitude / last_;
        }
        last_ = magnitude;
        if (magnitude < policy_.eps * std::max(1.0, partial_abs)) {
            ++small_run_;
        } else {
            small_run_ = 0;
        }
        return small_run_ >= policy_.consecutive_small;
    }

    /// Bound on the omitted tail given a floor for the asymptotic term ratio.
    double tail_bound(double ratio_floor) const {
        if (last_ == 0.0) {
            return 0.0;
        }
        const double rho = std::max(ratio_, ratio_floor);
        if (rho >= 1.0) {
            return last_ * policy_.consecutive_small;
        }
        return last_ * rho / (1.0 - rho);
    }

private:
    const PrecisionPolicy& policy_;
    std::uint32_t small_run_ = 0;
    double last_ = 0.0;
    double ratio_ = 0.0;
};

[[noreturn]] void throw_nonconvergence(const char* what, SeriesValue partial) {
    throw NonConvergenceError(std::string(what) + ": no convergence within " +
                                  std::to_string(partial.terms_used) + " terms",
                              partial);
}

void require_direct_window(ComplexScalar s, const char* what) {
    if (!(s.real() >= 1.0)) {
        throw DomainError(std::string(what) + ": direct series needs Re(s) >= 1");
    }
}

ComplexScalar real_pow(double base, ComplexScalar s) {
    return std::exp(s * std::log(base));
}

void require_rational_base(const BigRational& r) {
    if (r.sign() <= 0 || r >= BigRational(1)) {
        throw DomainError("r must satisfy 0 < r < 1, got " + r.to_string());
    }
}

void require_odd_positive(std::uint32_t n, const char* what) {
    if (n == 0 || n % 2 == 0) {
        throw DomainError(std::string(what) + " must be odd and positive");
    }
}

// Truncated continuation at s = -m, base q = r^d, x = a/d. Coefficients
// come from the gen_binom recurrence and stop at the first zero.
BigRational truncated_continuation(std::uint32_t m, const BigRational& r, std::uint32_t d,
                                   std::uint32_t a) {
    require_rational_base(r);
    if (d < 1) {
        throw DomainError("d must be >= 1");
    }
    const BigRational q = pow(r, d);
    const BigRational s(-static_cast<long long>(m));
    const BigRational shift = pow(r, a);
    BigRational sum;
    BigRational shift_pow(1);
    for (std::uint64_t j = 0;; ++j) {
        const BigRational c = gen_binom(s, j);
        if (c.is_zero()) {
            break;
        }
        sum += c * shift_pow / (BigRational(1) + pow(q, static_cast<long long>(j) - m));
        shift_pow *= shift;
    }
    return (BigRational(1) + q) * pow(BigRational(1) - q, -static_cast<long long>(m)) * sum;
}

SeriesValue scaled(const SeriesValue& v, ComplexScalar factor) {
    SeriesValue out = v;
    out.value *= factor;
    out.abs_error_estimate *= std::abs(factor);
    return out;
}

}  // namespace

const char* to_string(SeriesMethod method) {
    switch (method) {
        case SeriesMethod::direct:
            return "direct";
        case SeriesMethod::continuation:
            return "continuation";
        case SeriesMethod::exact_negative_integer:
            return "exact-negative-integer";
    }
    return "unknown";
}

PrecisionPolicy PrecisionPolicy::from_environment() {
    PrecisionPolicy policy;
    if (const char* env = std::getenv("QEULER_MAX_TERMS"); env != nullptr && *env != '\0') {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end == nullptr || *end != '\0' || v == 0) {
            throw DomainError(std::string("QEULER_MAX_TERMS must be a positive integer, got '") +
                              env + "'");
        }
        policy.max_terms = v;
    }
    return policy;
}

void PrecisionPolicy::validate() const {
    if (!(eps > 0.0) || max_terms == 0 || consecutive_small == 0) {
        throw DomainError("precision policy needs eps > 0, max_terms > 0, consecutive_small > 0");
    }
}

SeriesValue hurwitz_zeta_q(ComplexScalar s, double x, const QReal& q,
                           const PrecisionPolicy& policy) {
    policy.validate();
    if (!(x > 0.0)) {
        throw DomainError("Hurwitz argument x must be > 0");
    }
    const double qv = q.value();
    const double log_q = std::log(qv);
    const ComplexScalar prefactor = (1.0 + qv) * real_pow(1.0 - qv, s);
    const double shift = std::exp(x * log_q);  // q^x

    TailTracker tail(policy);
    ComplexScalar sum(0.0, 0.0);
    ComplexScalar coeff(1.0, 0.0);  // C(s+j-1, j)
    double shift_pow = 1.0;
    double abs_sum = 0.0;
    std::uint64_t j = 0;
    bool done = false;
    while (j < policy.max_terms) {
        const ComplexScalar denom = 1.0 + std::exp((s + static_cast<double>(j)) * log_q);
        if (std::abs(denom) < kSingularThreshold) {
            throw SingularityError("continuation denominator 1 + q^(s+j) vanishes at j = " +
                                       std::to_string(j),
                                   j);
        }
        const ComplexScalar term = prefactor * coeff * shift_pow / denom;
        sum += term;
        abs_sum += std::abs(term);
        ++j;
        // While s + j <= 0 the huge denominators hide the growth of later
        // terms, and the coefficient ratio must drop below 1 before small
        // terms say anything about the tail.
        const double growth = shift * std::abs(s + static_cast<double>(j - 1)) / static_cast<double>(j);
        const bool armed = s.real() + static_cast<double>(j) > 0.0 && growth < 1.0;
        if (armed && tail.push(std::abs(term), std::abs(sum))) {
            done = true;
            break;
        }
        coeff *= (s + static_cast<double>(j - 1)) / static_cast<double>(j);
        shift_pow *= shift;
    }
    const double ratio_floor =
        shift * std::abs(s + static_cast<double>(j)) / static_cast<double>(j + 1);
    // rounding in the partial sum, which cancels heavily for q near 1 and s < 0
    const double rounding = static_cast<double>(j + 4) * std::numeric_limits<double>::epsilon() * abs_sum;
    SeriesValue out{sum, tail.tail_bound(ratio_floor) + rounding, j, SeriesMethod::continuation};
    if (!done) {
        throw_nonconvergence("hurwitz_zeta_q", out);
    }
    return out;
}

SeriesValue hurwitz_zeta_direct(ComplexScalar s, double x, const QReal& q,
                                const PrecisionPolicy& policy) {
    policy.validate();
    require_direct_window(s, "hurwitz_zeta_direct");
    if (!(x > 0.0)) {
        throw DomainError("Hurwitz argument x must be > 0");
    }
    const double qv = q.value();
    const double log_q = std::log(qv);
    TailTracker tail(policy);
    ComplexScalar sum(0.0, 0.0);
    std::uint64_t n = 0;
    bool done = false;
    while (n < policy.max_terms) {
        // q^{sn}/[n+x]^s = exp(s (n log q - log [n+x]_q))
        const double log_base = n * log_q - std::log(q_bracket(n + x, qv));
        const ComplexScalar term = (1.0 + qv) * std::exp(s * log_base);
        sum += (n % 2 == 0) ? term : -term;
        ++n;
        if (tail.push(std::abs(term), std::abs(sum))) {
            done = true;
            break;
        }
    }
    SeriesValue out{sum, tail.tail_bound(std::pow(qv, s.real())), n, SeriesMethod::direct};
    if (!done) {
        throw_nonconvergence("hurwitz_zeta_direct", out);
    }
    return out;
}

BigRational hurwitz_neg_int_exact(std::uint32_t m, const BigRational& r, std::uint32_t d,
                                  std::uint32_t a) {
    if (m < 1) {
        throw DomainError("hurwitz_neg_int_exact needs m >= 1");
    }
    return truncated_continuation(m, r, d, a);
}

SeriesValue euler_zeta_q(ComplexScalar s, const QReal& q, const PrecisionPolicy& policy) {
    const SeriesValue h = hurwitz_zeta_q(s, 1.0, q, policy);
    return scaled(h, -real_pow(q.value(), s));
}

SeriesValue euler_zeta_direct(ComplexScalar s, const QReal& q, const PrecisionPolicy& policy) {
    policy.validate();
    require_direct_window(s, "euler_zeta_direct");
    const double qv = q.value();
    const double log_q = std::log(qv);
    TailTracker tail(policy);
    ComplexScalar sum(0.0, 0.0);
    std::uint64_t n = 1;
    bool done = false;
    while (n <= policy.max_terms) {
        const double log_base = n * log_q - std::log(q_bracket(static_cast<double>(n), qv));
        const ComplexScalar term = (1.0 + qv) * std::exp(s * log_base);
        sum += (n % 2 == 0) ? term : -term;
        if (tail.push(std::abs(term), std::abs(sum))) {
            done = true;
            break;
        }
        ++n;
    }
    SeriesValue out{sum, tail.tail_bound(std::pow(qv, s.real())), std::min(n, policy.max_terms),
                    SeriesMethod::direct};
    if (!done) {
        throw_nonconvergence("euler_zeta_direct", out);
    }
    return out;
}

BigRational euler_zeta_neg_int_exact(std::uint32_t m, const BigRational& q) {
    // zeta(s) = -q^s zeta(s, 1)
    return -pow(q, -static_cast<long long>(m)) * truncated_continuation(m, q, 1, 1);
}

SeriesValue l_series_direct(ComplexScalar s, const DirichletCharacter& chi, const QReal& q,
                            const PrecisionPolicy& policy) {
    policy.validate();
    require_direct_window(s, "l_series_direct");
    const double qv = q.value();
    const double log_q = std::log(qv);
    TailTracker tail(policy);
    ComplexScalar sum(0.0, 0.0);
    std::uint64_t n = 1;
    bool done = false;
    while (n <= policy.max_terms) {
        const double log_base = n * log_q - std::log(q_bracket(static_cast<double>(n), qv));
        const ComplexScalar envelope = (1.0 + qv) * std::exp(s * log_base);
        const ComplexScalar term = chi.complex_value(static_cast<long long>(n)) * envelope;
        sum += (n % 2 == 0) ? term : -term;
        // Envelope magnitude, so character zeros do not end the sum early.
        if (tail.push(std::abs(envelope), std::abs(sum))) {
            done = true;
            break;
        }
        ++n;
    }
    SeriesValue out{sum, tail.tail_bound(std::pow(qv, s.real())), std::min(n, policy.max_terms),
                    SeriesMethod::direct};
    if (!done) {
        throw_nonconvergence("l_series_direct", out);
    }
    return out;
}

SeriesValue l_series(ComplexScalar s, const DirichletCharacter& chi, const QReal& q,
                     const PrecisionPolicy& policy) {
    const std::uint64_t d = chi.modulus();
    const double qv = q.value();
    const double qd = std::pow(qv, static_cast<double>(d));
    const QReal base(qd);
    const ComplexScalar outer =
        (1.0 + qv) / (1.0 + qd) * std::exp(-s * std::log(q_bracket(static_cast<double>(d), qv)));

    SeriesValue out{ComplexScalar(0.0, 0.0), 0.0, 0, SeriesMethod::continuation};
    for (std::uint64_t a = 1; a <= d; ++a) {
        const ComplexScalar c = chi.complex_value(static_cast<long long>(a));
        if (c == ComplexScalar(0.0, 0.0)) {
            continue;
        }
        const ComplexScalar factor =
            outer * c * (a % 2 == 1 ? -1.0 : 1.0) * real_pow(qv, s * static_cast<double>(a));
        SeriesValue h;
        try {
            h = hurwitz_zeta_q(s, static_cast<double>(a) / static_cast<double>(d), base, policy);
        } catch (const NonConvergenceError& e) {
            SeriesValue partial = out;
            partial.value += factor * e.partial().value;
            partial.terms_used += e.partial().terms_used;
            throw NonConvergenceError(e.what(), partial);
        }
        out.value += factor * h.value;
        out.abs_error_estimate += std::abs(factor) * h.abs_error_estimate;
        out.terms_used += h.terms_used;
    }
    return out;
}

BigRational l_neg_int_exact(std::uint32_t k, const DirichletCharacter& chi, const BigRational& r) {
    if (k < 1) {
        throw DomainError("l_neg_int_exact needs k >= 1");
    }
    return generalized_qeuler_exact(k, chi, r);
}

ComplexScalar l_neg_int_value(std::uint32_t k, const DirichletCharacter& chi,
                              const BigRational& r) {
    if (k < 1) {
        throw DomainError("l_neg_int_value needs k >= 1");
    }
    return generalized_qeuler(k, chi, r);
}

BigRational l_decomposition_neg_int_exact(std::uint32_t k, const DirichletCharacter& chi,
                                          const BigRational& r) {
    if (!chi.is_real()) {
        throw DomainError("exact L-series decomposition needs a real character");
    }
    require_rational_base(r);
    const auto d = static_cast<std::uint32_t>(chi.modulus());
    const BigRational& q = r;
    const BigRational outer = q_bracket(2, q) / q_bracket(2, pow(q, d)) * pow(q_bracket(d, q), k);
    BigRational sum;
    for (std::uint32_t a = 1; a <= d; ++a) {
        const CharValue v = chi(a);
        if (!v) {
            continue;
        }
        BigRational term = pow(q, -static_cast<long long>(k) * a) * hurwitz_neg_int_exact(k, r, d, a);
        const int sign = v->real_value() * (a % 2 == 1 ? -1 : 1);
        sum += sign > 0 ? term : -term;
    }
    return outer * sum;
}

SeriesValue partial_zeta(ComplexScalar s, std::uint32_t a, std::uint32_t modulus,
                         const QReal& q, const PrecisionPolicy& policy) {
    require_odd_positive(modulus, "F");
    if (a == 0 || a >= modulus) {
        throw DomainError("partial zeta needs 0 < a < F");
    }
    const double qv = q.value();
    const double qf = std::pow(qv, static_cast<double>(modulus));
    const ComplexScalar factor = (1.0 + qv) / (1.0 + qf) *
                                 std::exp(-s * std::log(q_bracket(static_cast<double>(modulus), qv))) *
                                 (a % 2 == 1 ? -1.0 : 1.0) * real_pow(qv, s * static_cast<double>(a));
    const SeriesValue h = hurwitz_zeta_q(s, static_cast<double>(a) / modulus, QReal(qf), policy);
    return scaled(h, factor);
}

SeriesValue partial_zeta_direct(ComplexScalar s, std::uint32_t a, std::uint32_t modulus,
                                const QReal& q, const PrecisionPolicy& policy) {
    policy.validate();
    require_odd_positive(modulus, "F");
    if (a == 0 || a >= modulus) {
        throw DomainError("partial zeta needs 0 < a < F");
    }
    require_direct_window(s, "partial_zeta_direct");
    const double qv = q.value();
    const double log_q = std::log(qv);
    TailTracker tail(policy);
    ComplexScalar sum(0.0, 0.0);
    std::uint64_t k = 0;
    bool done = false;
    while (k < policy.max_terms) {
        const std::uint64_t n = a + k * modulus;
        const double log_base = n * log_q - std::log(q_bracket(static_cast<double>(n), qv));
        const ComplexScalar term = (1.0 + qv) * std::exp(s * log_base);
        sum += (n % 2 == 0) ? term : -term;
        ++k;
        if (tail.push(std::abs(term), std::abs(sum))) {
            done = true;
            break;
        }
    }
    SeriesValue out{sum, tail.tail_bound(std::pow(qv, s.real() * modulus)), k,
                    SeriesMethod::direct};
    if (!done) {
        throw_nonconvergence("partial_zeta_direct", out);
    }
    return out;
}

SeriesValue partial_zeta_zero_class(ComplexScalar s, std::uint32_t modulus, const QReal& q,
                                    const PrecisionPolicy& policy) {
    require_odd_positive(modulus, "F");
    const double qv = q.value();
    const double qf = std::pow(qv, static_cast<double>(modulus));
    const ComplexScalar factor =
        (1.0 + qv) / (1.0 + qf) *
        std::exp(-s * std::log(q_bracket(static_cast<double>(modulus), qv)));
    return scaled(euler_zeta_q(s, QReal(qf), policy), factor);
}

BigRational partial_zeta_neg_int_exact(std::uint32_t n, std::uint32_t a, std::uint32_t modulus,
                                       const BigRational& r) {
    require_odd_positive(modulus, "F");
    if (a == 0 || a >= modulus) {
        throw DomainError("partial zeta needs 0 < a < F");
    }
    const BigRational& q = r;
    const BigRational value = pow(q, -static_cast<long long>(n) * a) * q_bracket(2, q) /
                              q_bracket(2, pow(q, modulus)) * pow(q_bracket(modulus, q), n) *
                              qeuler_poly_exact(n, r, modulus, a);
    return a % 2 == 1 ? -value : value;
}

}  // namespace qeuler
