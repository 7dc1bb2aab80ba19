#include "qeuler/fermionic.hpp"

#include <limits>
#include <string>

namespace qeuler {

namespace {

std::uint64_t checked_power(std::uint64_t base, std::uint64_t exponent, std::uint64_t cap) {
    std::uint64_t out = 1;
    for (std::uint64_t i = 0; i < exponent; ++i) {
        if (out > cap / base) {
            throw ResourceError("stage needs more than " + std::to_string(cap) + " summands");
        }
        out *= base;
    }
    return out;
}

}  // namespace

BigRational Integrand::evaluate(std::uint64_t t, const BigRational& q) const {
    const auto tt = static_cast<long long>(t);
    const BigRational bracket = q_bracket(tt, q);
    BigRational out;
    for (const auto& term : terms_) {
        out += term.coeff * pow(bracket, term.bracket_power) * pow(q, term.q_exponent * tt);
    }
    return out;
}

bool StageReport::valuations_nondecreasing() const {
    for (std::size_t i = 1; i < valuations.size(); ++i) {
        const auto& prev = valuations[i - 1];
        const auto& cur = valuations[i];
        if (!prev) {
            if (cur) {
                return false;
            }
        } else if (cur && *cur < *prev) {
            return false;
        }
    }
    return true;
}

BigRational stage_sum(const Integrand& f, const PAdicQParam& ctx, std::uint32_t level,
                      std::uint64_t term_cap) {
    if (level < 1) {
        throw DomainError("stage level N must be >= 1");
    }
    const std::uint64_t count = checked_power(ctx.p(), level, term_cap);
    const BigRational& q = ctx.q();
    const auto& terms = f.terms();

    // Running values at j: (-q)^j, [j]_q, q^j and q^(b j) per term.
    BigRational weight(1);
    BigRational bracket(0);
    BigRational q_pow(1);
    std::vector<BigRational> step(terms.size());
    std::vector<BigRational> exp_factor(terms.size(), BigRational(1));
    for (std::size_t i = 0; i < terms.size(); ++i) {
        step[i] = pow(q, terms[i].q_exponent);
    }
    const BigRational minus_q = -q;

    BigRational sum;
    for (std::uint64_t j = 0; j < count; ++j) {
        BigRational fj;
        for (std::size_t i = 0; i < terms.size(); ++i) {
            fj += terms[i].coeff * pow(bracket, terms[i].bracket_power) * exp_factor[i];
            exp_factor[i] *= step[i];
        }
        sum += weight * fj;
        weight *= minus_q;
        bracket += q_pow;
        q_pow *= q;
    }
    return sum / q_bracket_signed(static_cast<long long>(count), q);
}

StageReport convergence_report(const Integrand& f, const PAdicQParam& ctx,
                               std::uint32_t max_level, const BigRational& reference,
                               std::uint64_t term_cap) {
    if (max_level < 2) {
        throw DomainError("convergence report needs N_max >= 2");
    }
    StageReport report;
    report.reference = reference;
    for (std::uint32_t n = 1; n <= max_level; ++n) {
        BigRational value = stage_sum(f, ctx, n, term_cap);
        report.valuations.push_back(p_valuation(value - reference, ctx.p()));
        report.stages.emplace_back(n, std::move(value));
    }
    return report;
}

BigRational higher_order_stage(std::uint32_t m, std::uint32_t k, const PAdicQParam& ctx,
                               std::uint32_t level, std::uint64_t term_cap) {
    if (level < 1 || k < 1) {
        throw DomainError("higher-order stage needs N >= 1 and k >= 1");
    }
    const std::uint64_t count = checked_power(ctx.p(), level, term_cap);
    checked_power(count, k, term_cap);
    const BigRational& q = ctx.q();

    // The summand depends on the x_i only through their per-axis weights
    // w_i^{x_i}, w_i = -q^{1-m-i}, and through S = x_1 + ... + x_k. Collect
    // the weight mass per S by multiplying the per-axis polynomials
    // sum_{x < count} w_i^x z^x.
    std::vector<BigRational> mass{BigRational(1)};
    for (std::uint32_t axis = 1; axis <= k; ++axis) {
        const BigRational w = -pow(q, 1 - static_cast<long long>(m) - axis);
        std::vector<BigRational> axis_poly(count);
        BigRational cur(1);
        for (std::uint64_t x = 0; x < count; ++x) {
            axis_poly[x] = cur;
            cur *= w;
        }
        std::vector<BigRational> next(mass.size() + count - 1);
        for (std::size_t a = 0; a < mass.size(); ++a) {
            if (mass[a].is_zero()) {
                continue;
            }
            for (std::uint64_t b = 0; b < count; ++b) {
                next[a + b] += mass[a] * axis_poly[b];
            }
        }
        mass = std::move(next);
    }

    BigRational sum;
    BigRational bracket(0);
    BigRational q_pow(1);
    for (std::size_t s = 0; s < mass.size(); ++s) {
        sum += pow(bracket, m) * mass[s];
        bracket += q_pow;
        q_pow *= q;
    }
    return sum / pow(q_bracket_signed(static_cast<long long>(count), q), k);
}

StageReport higher_order_report(std::uint32_t m, std::uint32_t k, const PAdicQParam& ctx,
                                std::uint32_t max_level, const BigRational& reference,
                                std::uint64_t term_cap) {
    if (max_level < 2) {
        throw DomainError("convergence report needs N_max >= 2");
    }
    StageReport report;
    report.reference = reference;
    for (std::uint32_t n = 1; n <= max_level; ++n) {
        BigRational value = higher_order_stage(m, k, ctx, n, term_cap);
        report.valuations.push_back(p_valuation(value - reference, ctx.p()));
        report.stages.emplace_back(n, std::move(value));
    }
    return report;
}

}  // namespace qeuler
