#pragma once

// Test-only oracles, written independently of the library code paths they
// check: literal definitions, brute-force enumeration and plain series.

#include <complex>
#include <cstdint>
#include <vector>

#include "qeuler/numeric.hpp"

namespace qeuler::oracle {

inline BigRational frac(long long n, long long d) { return BigRational(n) / BigRational(d); }

/// [x]_q straight from (1 - q^x)/(1 - q) by repeated multiplication.
inline BigRational bracket(long long x, const BigRational& q) {
    BigRational qx(1);
    for (long long i = 0; i < (x < 0 ? -x : x); ++i) {
        qx *= q;
    }
    if (x < 0) {
        qx = BigRational(1) / qx;
    }
    return (BigRational(1) - qx) / (BigRational(1) - q);
}

/// Literal k-fold stage sum with an odometer over (x_1, ..., x_k):
/// 1/[n]_{-q}^k sum [x_1+..+x_k]_q^m prod_i (-q)^{x_i} q^{-x_i (m+i)}.
inline BigRational brute_force_stage(std::uint32_t m, std::uint32_t k, std::uint64_t p,
                                     std::uint32_t level, const BigRational& q) {
    std::uint64_t n = 1;
    for (std::uint32_t i = 0; i < level; ++i) {
        n *= p;
    }
    std::vector<std::uint64_t> xs(k, 0);
    BigRational sum;
    while (true) {
        long long total = 0;
        BigRational weight(1);
        for (std::uint32_t i = 0; i < k; ++i) {
            const auto xi = static_cast<long long>(xs[i]);
            total += xi;
            const BigRational mq = -q;
            weight *= pow(mq, xi) * pow(q, -xi * (static_cast<long long>(m) + i + 1));
        }
        sum += pow(bracket(total, q), m) * weight;
        std::uint32_t i = 0;
        while (i < k && ++xs[i] == n) {
            xs[i] = 0;
            ++i;
        }
        if (i == k) {
            break;
        }
    }
    const BigRational mq = -q;
    const BigRational norm = (BigRational(1) - pow(mq, static_cast<long long>(n))) / (BigRational(1) + q);
    return sum / pow(norm, k);
}

/// E_n^{(k)} from the power series of (2/(e^t+1))^k: series division then
/// k-fold series multiplication, scaled by n!.
inline std::vector<BigRational> euler_by_series(std::uint32_t n_max, std::uint32_t k) {
    // e^t + 1 = 2 + t + t^2/2! + ...
    std::vector<BigRational> denom(n_max + 1);
    BigRational fact(1);
    for (std::uint32_t i = 0; i <= n_max; ++i) {
        if (i > 0) {
            fact *= BigRational(static_cast<long long>(i));
        }
        denom[i] = BigRational(1) / fact + (i == 0 ? BigRational(1) : BigRational(0));
    }
    // f = 2 / denom
    std::vector<BigRational> f(n_max + 1);
    for (std::uint32_t i = 0; i <= n_max; ++i) {
        BigRational acc = (i == 0) ? BigRational(2) : BigRational(0);
        for (std::uint32_t j = 0; j < i; ++j) {
            acc -= f[j] * denom[i - j];
        }
        f[i] = acc / denom[0];
    }
    std::vector<BigRational> power(n_max + 1);
    power[0] = BigRational(1);
    for (std::uint32_t r = 0; r < k; ++r) {
        std::vector<BigRational> next(n_max + 1);
        for (std::uint32_t i = 0; i <= n_max; ++i) {
            for (std::uint32_t j = 0; j <= i; ++j) {
                next[i] += power[j] * f[i - j];
            }
        }
        power = std::move(next);
    }
    BigRational nf(1);
    for (std::uint32_t i = 0; i <= n_max; ++i) {
        if (i > 0) {
            nf *= BigRational(static_cast<long long>(i));
        }
        power[i] *= nf;
    }
    return power;
}

/// Fixed-length partial sum of [2]_q sum_{n >= start} sign(n) c(n) q^{sn}/[n+x]_q^s
/// in long double, with no stopping logic.
template <typename Coeff>
std::complex<double> plain_series(std::complex<double> s, double x, double q, long long start,
                                  long long count, Coeff coeff) {
    std::complex<long double> sum(0.0L, 0.0L);
    const std::complex<long double> ls(s.real(), s.imag());
    const long double lq = q;
    for (long long n = start; n < start + count; ++n) {
        const long double bracket = (1.0L - std::pow(lq, static_cast<long double>(n) + x)) / (1.0L - lq);
        const std::complex<long double> term =
            std::pow(std::pow(lq, static_cast<long double>(n)) / bracket, ls);
        const std::complex<double> c = coeff(n);
        const std::complex<long double> lc(c.real(), c.imag());
        sum += ((n % 2 == 0) ? 1.0L : -1.0L) * lc * term;
    }
    sum *= (1.0L + lq);
    return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

}  // namespace qeuler::oracle
