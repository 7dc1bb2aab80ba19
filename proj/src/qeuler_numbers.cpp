#include "qeuler/qeuler_numbers.hpp"

#include <cmath>
#include <string>

namespace qeuler {

namespace {

void require_odd(std::uint32_t n, const char* what) {
    if (n % 2 == 0) {
        throw DomainError(std::string(what) + " must be odd, got " + std::to_string(n));
    }
}

void require_q_usable(const BigRational& q) {
    if (q.is_zero() || q == BigRational(1)) {
        throw DomainError("q must be nonzero and different from 1, got " + q.to_string());
    }
}

BigRational one_plus_power(const BigRational& q, long long e) {
    BigRational out = BigRational(1) + pow(q, e);
    if (out.is_zero()) {
        throw DomainError("vanishing denominator 1 + q^" + std::to_string(e));
    }
    return out;
}

void require_q_unit_interval(double q) {
    if (!(q > 0.0 && q < 1.0)) {
        throw DomainError("q must satisfy 0 < q < 1");
    }
}

void require_rational_unit_interval(const BigRational& r) {
    if (r.sign() <= 0 || r >= BigRational(1)) {
        throw DomainError("r must satisfy 0 < r < 1, got " + r.to_string());
    }
}

}  // namespace

BigRational qeuler_higher(std::uint32_t m, std::uint32_t k, const BigRational& q) {
    if (k < 1) {
        throw DomainError("order k must be >= 1");
    }
    require_q_usable(q);
    BigRational sum;
    for (std::uint32_t i = 0; i <= m; ++i) {
        BigRational term(binom(m, i));
        if (i % 2 == 1) {
            term = -term;
        }
        for (std::uint32_t j = 0; j < k; ++j) {
            term /= one_plus_power(q, static_cast<long long>(i) - m - j);
        }
        sum += term;
    }
    const BigRational two_q = BigRational(1) + q;
    return pow(two_q, k) / pow(BigRational(1) - q, m) * sum;
}

double qeuler_higher(std::uint32_t m, std::uint32_t k, double q) {
    if (k < 1) {
        throw DomainError("order k must be >= 1");
    }
    require_q_unit_interval(q);
    double sum = 0.0;
    for (std::uint32_t i = 0; i <= m; ++i) {
        double term = binom(m, i).get_d() * (i % 2 == 1 ? -1.0 : 1.0);
        for (std::uint32_t j = 0; j < k; ++j) {
            term /= 1.0 + std::pow(q, static_cast<double>(static_cast<long long>(i) - m - j));
        }
        sum += term;
    }
    return std::pow(1.0 + q, k) / std::pow(1.0 - q, m) * sum;
}

BigRational qeuler_mixed(std::uint32_t kdeg, std::uint32_t m, const BigRational& q) {
    require_q_usable(q);
    BigRational sum;
    for (std::uint32_t i = 0; i <= kdeg; ++i) {
        BigRational term(binom(kdeg, i));
        if (i % 2 == 1) {
            term = -term;
        }
        sum += term / one_plus_power(q, static_cast<long long>(i) - m);
    }
    return (BigRational(1) + q) / pow(BigRational(1) - q, kdeg) * sum;
}

double qeuler_mixed(std::uint32_t kdeg, std::uint32_t m, double q) {
    require_q_unit_interval(q);
    double sum = 0.0;
    for (std::uint32_t i = 0; i <= kdeg; ++i) {
        const double c = binom(kdeg, i).get_d() * (i % 2 == 1 ? -1.0 : 1.0);
        sum += c / (1.0 + std::pow(q, static_cast<double>(static_cast<long long>(i) - m)));
    }
    return (1.0 + q) / std::pow(1.0 - q, kdeg) * sum;
}

BigRational qeuler_poly_exact(std::uint32_t m, const BigRational& r, std::uint32_t d,
                              std::uint32_t a) {
    if (d < 1) {
        throw DomainError("d must be >= 1");
    }
    require_rational_unit_interval(r);
    const BigRational q = pow(r, d);
    const BigRational shift = pow(r, a);  // q^x with x = a/d
    BigRational sum;
    BigRational shift_pow(1);
    for (std::uint32_t j = 0; j <= m; ++j) {
        BigRational term(binom(m, j));
        if (j % 2 == 1) {
            term = -term;
        }
        sum += term * shift_pow / one_plus_power(q, static_cast<long long>(j) - m);
        shift_pow *= shift;
    }
    return (BigRational(1) + q) / pow(BigRational(1) - q, m) * sum;
}

double qeuler_poly_numeric(std::uint32_t m, double q, double x) {
    require_q_unit_interval(q);
    if (!(x >= 0.0)) {
        throw DomainError("x must be >= 0");
    }
    const double log_q = std::log(q);
    double sum = 0.0;
    for (std::uint32_t j = 0; j <= m; ++j) {
        const double c = binom(m, j).get_d() * (j % 2 == 1 ? -1.0 : 1.0);
        sum += c * std::exp(j * x * log_q) /
               (1.0 + std::pow(q, static_cast<double>(static_cast<long long>(j) - m)));
    }
    return (1.0 + q) / std::pow(1.0 - q, m) * sum;
}

std::vector<BigRational> euler_classical_sequence(std::uint32_t n, std::uint32_t k) {
    if (k < 1) {
        throw DomainError("order k must be >= 1");
    }
    // E_n = [n == 0] - 1/2 sum_{j<n} C(n,j) E_j, from (e^t + 1) F(t) = 2.
    std::vector<BigRational> base(n + 1);
    const BigRational half(BigInt(1), BigInt(2));
    for (std::uint32_t i = 0; i <= n; ++i) {
        BigRational acc;
        for (std::uint32_t j = 0; j < i; ++j) {
            acc += BigRational(binom(i, j)) * base[j];
        }
        base[i] = (i == 0 ? BigRational(1) : BigRational(0)) - half * acc;
    }
    // Order k: k-fold binomial convolution of the order-1 sequence.
    std::vector<BigRational> out = base;
    for (std::uint32_t order = 2; order <= k; ++order) {
        std::vector<BigRational> next(n + 1);
        for (std::uint32_t i = 0; i <= n; ++i) {
            for (std::uint32_t j = 0; j <= i; ++j) {
                next[i] += BigRational(binom(i, j)) * out[j] * base[i - j];
            }
        }
        out = std::move(next);
    }
    return out;
}

BigRational euler_classical(std::uint32_t n, std::uint32_t k) {
    return euler_classical_sequence(n, k).back();
}

BigRational distribution_residual(std::uint32_t n, std::uint32_t d, std::uint32_t x,
                                  const BigRational& r) {
    require_odd(d, "d");
    require_rational_unit_interval(r);
    const BigRational& q = r;
    const BigRational lhs = qeuler_poly_exact(n, r, 1, x);

    BigRational inner;
    for (std::uint32_t i = 0; i < d; ++i) {
        BigRational term = pow(q, -static_cast<long long>(n) * i) * qeuler_poly_exact(n, r, d, x + i);
        inner += (i % 2 == 1) ? -term : term;
    }
    const BigRational ratio = q_bracket(2, q) / q_bracket(2, pow(q, d));
    const BigRational rhs = ratio * pow(q_bracket(d, q), n) * inner;
    return lhs - rhs;
}

BigRational multiplication_residual_x0(std::uint32_t m, std::uint32_t n, const BigRational& r) {
    require_odd(n, "n");
    require_rational_unit_interval(r);
    const BigRational& q = r;
    const BigRational qn = pow(q, n);
    const BigRational ratio = q_bracket(2, q) / q_bracket(2, qn);
    const BigRational bracket_n = q_bracket(n, q);

    const BigRational lhs =
        qeuler_higher(m, 1, q) - ratio * pow(bracket_n, m) * qeuler_higher(m, 1, qn);

    BigRational rhs;
    for (std::uint32_t k = 0; k < m; ++k) {
        const long long gap = static_cast<long long>(m) - k;
        BigRational inner;
        for (std::uint32_t j = 1; j < n; ++j) {
            BigRational term = pow(q, -gap * j) * pow(q_bracket(j, q), gap);
            inner += (j % 2 == 1) ? -term : term;
        }
        rhs += BigRational(binom(m, k)) * pow(bracket_n, k) * qeuler_mixed(k, m, qn) * inner;
    }
    return lhs - ratio * rhs;
}

BigRational classical_multiplication_residual(std::uint32_t m, std::uint32_t n) {
    require_odd(n, "n");
    const auto euler = euler_classical_sequence(m, 1);
    const BigRational nn(static_cast<long long>(n));
    const BigRational lhs = (BigRational(1) - pow(nn, m)) * euler[m];
    BigRational rhs;
    for (std::uint32_t k = 0; k < m; ++k) {
        BigRational inner;
        for (std::uint32_t j = 1; j < n; ++j) {
            BigRational term = pow(BigRational(static_cast<long long>(j)), m - k);
            inner += (j % 2 == 1) ? -term : term;
        }
        rhs += BigRational(binom(m, k)) * pow(nn, k) * euler[k] * inner;
    }
    return lhs - rhs;
}

}  // namespace qeuler
