#pragma once

// Finite-stage sums of the fermionic p-adic q-integral
//
//   I_{-q}(f) = lim_N 1/[p^N]_{-q} * sum_{0 <= j < p^N} f(j) (-q)^j
//
// computed exactly over the rationals, with p-adic convergence diagnostics.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qeuler/numeric.hpp"

namespace qeuler {

inline constexpr std::uint64_t kDefaultStageTermCap = 10'000'000;

/// One summand c * [t]_q^bracket_power * q^(q_exponent * t).
struct IntegrandTerm {
    BigRational coeff;
    std::uint32_t bracket_power = 0;
    long long q_exponent = 0;
};

/// f(t) as a finite sum of IntegrandTerm.
class Integrand {
public:
    Integrand() = default;
    explicit Integrand(std::vector<IntegrandTerm> terms) : terms_(std::move(terms)) {}

    static Integrand constant(const BigRational& c) { return Integrand({{c, 0, 0}}); }
    /// c * [t]_q^a * q^(b t)
    static Integrand monomial(const BigRational& c, std::uint32_t a, long long b) {
        return Integrand({{c, a, b}});
    }

    const std::vector<IntegrandTerm>& terms() const { return terms_; }

    BigRational evaluate(std::uint64_t t, const BigRational& q) const;

    friend Integrand operator+(Integrand a, const Integrand& b) {
        a.terms_.insert(a.terms_.end(), b.terms_.begin(), b.terms_.end());
        return a;
    }
    friend Integrand operator*(const BigRational& c, Integrand f) {
        for (auto& term : f.terms_) {
            term.coeff *= c;
        }
        return f;
    }

private:
    std::vector<IntegrandTerm> terms_;
};

/// Stage values S_N and, when a reference is given, v_p(S_N - reference).
struct StageReport {
    std::vector<std::pair<std::uint32_t, BigRational>> stages;
    std::optional<BigRational> reference;
    std::vector<std::optional<long>> valuations;  // nullopt = +infinity

    /// True when valuations never decrease (+infinity counts as largest).
    bool valuations_nondecreasing() const;
};

/// 1/[p^N]_{-q} * sum_{j < p^N} (-q)^j f(j), exactly.
BigRational stage_sum(const Integrand& f, const PAdicQParam& ctx, std::uint32_t level,
                      std::uint64_t term_cap = kDefaultStageTermCap);

/// Stage values for N = 1..max_level and their valuations against reference.
StageReport convergence_report(const Integrand& f, const PAdicQParam& ctx,
                               std::uint32_t max_level, const BigRational& reference,
                               std::uint64_t term_cap = kDefaultStageTermCap);

/// k-fold stage of the higher-order q-Euler integral:
///
///   1/[p^N]_{-q}^k * sum_{x_1..x_k < p^N} [x_1+..+x_k]_q^m
///                      * prod_i (-q)^{x_i} q^{-x_i (m+i)}
///
/// The nominal summand count (p^N)^k is checked against term_cap.
BigRational higher_order_stage(std::uint32_t m, std::uint32_t k, const PAdicQParam& ctx,
                               std::uint32_t level,
                               std::uint64_t term_cap = kDefaultStageTermCap);

/// Same as convergence_report for higher_order_stage.
StageReport higher_order_report(std::uint32_t m, std::uint32_t k, const PAdicQParam& ctx,
                                std::uint32_t max_level, const BigRational& reference,
                                std::uint64_t term_cap = kDefaultStageTermCap);

}  // namespace qeuler
