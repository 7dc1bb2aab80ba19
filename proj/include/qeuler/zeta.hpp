#pragma once

// q-analogue Euler zeta, Hurwitz-type zeta, Dirichlet L-series and partial
// zeta functions.
//
// Numeric evaluation everywhere uses the binomial-series continuation
//
//   zeta_{q,E}(s, x) = [2]_q (1-q)^s sum_{j>=0} C(s+j-1, j) q^{xj} / (1 + q^{s+j}),
//
// obtained by expanding [n+x]_q^{-s} = (1-q)^s (1-q^{n+x})^{-s} and summing
// the alternating geometric series in n. It needs x > 0. At s = -m the
// coefficients vanish for j > m, which gives the exact rational paths.
// Direct summation of the defining series is kept as an oracle for Re(s) >= 1.

#include <cstdint>
#include <string>

#include "qeuler/dirichlet.hpp"
#include "qeuler/numeric.hpp"

namespace qeuler {

enum class SeriesMethod { direct, continuation, exact_negative_integer };

const char* to_string(SeriesMethod method);

struct SeriesValue {
    ComplexScalar value;
    double abs_error_estimate = 0.0;
    std::uint64_t terms_used = 0;
    SeriesMethod method = SeriesMethod::continuation;
};

struct PrecisionPolicy {
    double eps = 1e-12;
    std::uint64_t max_terms = 10'000;
    std::uint32_t consecutive_small = 3;

    /// Defaults, with max_terms taken from QEULER_MAX_TERMS when set.
    static PrecisionPolicy from_environment();
    void validate() const;
};

/// Raised when max_terms is reached; carries the partial sum.
class NonConvergenceError : public Error {
public:
    NonConvergenceError(const std::string& what, SeriesValue partial)
        : Error(what), partial_(partial) {}
    const SeriesValue& partial() const { return partial_; }

private:
    SeriesValue partial_;
};

/// |1 + q^{s+j}| fell below 1e-12 at the given continuation index.
class SingularityError : public DomainError {
public:
    SingularityError(const std::string& what, std::uint64_t index)
        : DomainError(what), index_(index) {}
    std::uint64_t index() const { return index_; }

private:
    std::uint64_t index_;
};

// Hurwitz type ------------------------------------------------------------

SeriesValue hurwitz_zeta_q(ComplexScalar s, double x, const QReal& q,
                           const PrecisionPolicy& policy = {});
/// [2]_q sum_{n>=0} (-1)^n q^{sn} / [n+x]_q^s; Re(s) >= 1 only.
SeriesValue hurwitz_zeta_direct(ComplexScalar s, double x, const QReal& q,
                                const PrecisionPolicy& policy = {});
/// zeta_{q,E}(-m, a/d) at q = r^d from the truncated continuation; m >= 1.
BigRational hurwitz_neg_int_exact(std::uint32_t m, const BigRational& r, std::uint32_t d,
                                  std::uint32_t a);

// Euler zeta --------------------------------------------------------------

/// -q^s * zeta_{q,E}(s, 1).
SeriesValue euler_zeta_q(ComplexScalar s, const QReal& q, const PrecisionPolicy& policy = {});
/// [2]_q sum_{n>=1} (-1)^n q^{sn} / [n]_q^s; Re(s) >= 1 only.
SeriesValue euler_zeta_direct(ComplexScalar s, const QReal& q,
                              const PrecisionPolicy& policy = {});
/// zeta_{q,E}(-m) exactly, m >= 0. For m >= 1 this is E_{m,q}^{(-m,1)};
/// at m = 0 the continuation gives -[2]_q/2.
BigRational euler_zeta_neg_int_exact(std::uint32_t m, const BigRational& q);

// Dirichlet L-series --------------------------------------------------------

/// [2]_q sum_{n>=1} chi(n) (-1)^n q^{sn} / [n]_q^s; Re(s) >= 1 only.
SeriesValue l_series_direct(ComplexScalar s, const DirichletCharacter& chi, const QReal& q,
                            const PrecisionPolicy& policy = {});
/// [2]_q/[2]_{q^d} [d]_q^{-s} sum_{a=1}^{d} chi(a) (-1)^a q^{sa} zeta_{q^d,E}(s, a/d).
SeriesValue l_series(ComplexScalar s, const DirichletCharacter& chi, const QReal& q,
                     const PrecisionPolicy& policy = {});
/// L_{q,E}(-k, chi) = E_{k,chi,q}^{(-k,1)}, exact for real chi.
BigRational l_neg_int_exact(std::uint32_t k, const DirichletCharacter& chi, const BigRational& r);
/// Complex-character value at s = -k.
ComplexScalar l_neg_int_value(std::uint32_t k, const DirichletCharacter& chi,
                              const BigRational& r);
/// The L-series decomposition at s = -k with every Hurwitz value taken from
/// hurwitz_neg_int_exact; real chi only.
BigRational l_decomposition_neg_int_exact(std::uint32_t k, const DirichletCharacter& chi,
                                          const BigRational& r);

// Partial zeta --------------------------------------------------------------

/// H_{q,E}(s, a, F) = [2]_q sum_{m = a mod F, m > 0} q^{ms} (-1)^m / [m]_q^s
/// for 0 < a < F, F odd, via
/// [2]_q/[2]_{q^F} [F]_q^{-s} (-1)^a q^{sa} zeta_{q^F,E}(s, a/F).
SeriesValue partial_zeta(ComplexScalar s, std::uint32_t a, std::uint32_t modulus,
                         const QReal& q, const PrecisionPolicy& policy = {});
/// Congruence-class direct sum; Re(s) >= 1 only.
SeriesValue partial_zeta_direct(ComplexScalar s, std::uint32_t a, std::uint32_t modulus,
                                const QReal& q, const PrecisionPolicy& policy = {});
/// The class m = 0 mod F: [2]_q/[2]_{q^F} [F]_q^{-s} zeta_{q^F,E}(s).
SeriesValue partial_zeta_zero_class(ComplexScalar s, std::uint32_t modulus, const QReal& q,
                                    const PrecisionPolicy& policy = {});
/// (-1)^a q^{-na} [2]_q/[2]_{q^F} [F]_q^n E_{n,q^F}^{(-n,1)}(a/F), q = r.
BigRational partial_zeta_neg_int_exact(std::uint32_t n, std::uint32_t a, std::uint32_t modulus,
                                       const BigRational& r);

}  // namespace qeuler
