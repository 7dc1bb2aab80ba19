#pragma once

// Closed forms for q-Euler numbers and polynomials, classical Euler numbers
// of higher order, and exact residuals of the identities relating them.

#include <cstdint>
#include <vector>

#include "qeuler/numeric.hpp"

namespace qeuler {

/// E_{m,q}^{(-m,k)} =
///   [2]_q^k/(1-q)^m * sum_{i=0}^{m} C(m,i) (-1)^i prod_{j=0}^{k-1} 1/(1+q^{i-m-j}).
/// q may be any rational other than 0 or 1 (real in (0,1), or a p-adic
/// rational); a vanishing 1+q^e factor is a DomainError.
BigRational qeuler_higher(std::uint32_t m, std::uint32_t k, const BigRational& q);
double qeuler_higher(std::uint32_t m, std::uint32_t k, double q);

/// Two-index number E_{kdeg,q}^{(-m,1)} = integral of q^{-(m+1)t}[t]_q^kdeg:
///   [2]_q/(1-q)^kdeg * sum_{i=0}^{kdeg} C(kdeg,i)(-1)^i / (1+q^{i-m}).
BigRational qeuler_mixed(std::uint32_t kdeg, std::uint32_t m, const BigRational& q);
double qeuler_mixed(std::uint32_t kdeg, std::uint32_t m, double q);

/// E_{m,q}^{(-m,1)}(x) at base q = r^d and argument x = a/d, so that
/// q^{jx} = r^{ja} stays rational.
BigRational qeuler_poly_exact(std::uint32_t m, const BigRational& r, std::uint32_t d,
                              std::uint32_t a);

/// Floating E_{m,q}^{(-m,1)}(x) for 0 < q < 1 and real x >= 0.
double qeuler_poly_numeric(std::uint32_t m, double q, double x);

/// Ordinary Euler numbers of order k: (2/(e^t+1))^k = sum E_n^{(k)} t^n/n!.
BigRational euler_classical(std::uint32_t n, std::uint32_t k);
/// E_0^{(k)}, ..., E_n^{(k)}.
std::vector<BigRational> euler_classical_sequence(std::uint32_t n, std::uint32_t k);

// Identity residuals; each is exactly zero when the identity holds.

/// Distribution relation for odd d, base q = r, integer x >= 0:
///   E_{n,q}(x) - [2]_q/[2]_{q^d} [d]_q^n sum_{i<d} (-1)^i q^{-ni} E_{n,q^d}((x+i)/d).
BigRational distribution_residual(std::uint32_t n, std::uint32_t d, std::uint32_t x,
                                  const BigRational& r);

/// Multiplication identity at x = 0 for odd n, base q = r.
BigRational multiplication_residual_x0(std::uint32_t m, std::uint32_t n, const BigRational& r);

/// (1 - n^m) E_m - sum_{k<m} C(m,k) n^k E_k sum_{j=1}^{n-1} (-1)^j j^{m-k}, n odd.
BigRational classical_multiplication_residual(std::uint32_t m, std::uint32_t n);

}  // namespace qeuler
