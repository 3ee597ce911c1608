#include "hgcolor/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hgcolor {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
const double kLn2 = std::log(2.0);

double log_add_exp(double a, double b) {
    if (a == kNegInf) return b;
    if (b == kNegInf) return a;
    const double hi = std::max(a, b);
    return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

/// log(e^x - 1), stable for both tails.
double log_expm1(double x) {
    if (x <= 0.0) return kNegInf;
    if (x > 36.0) return x + std::log1p(-std::exp(-x));
    return std::log(std::expm1(x));
}

/// log(cosh t - 1) via cosh t - 1 = 2 sinh^2(t/2).
double log_cosh_minus_1(double t) {
    t = std::abs(t);
    if (t == 0.0) return kNegInf;
    const double u = t / 2.0;
    double log_sinh;
    if (u > 20.0) {
        log_sinh = u - kLn2 + std::log1p(-std::exp(-2.0 * u));
    } else {
        log_sinh = std::log(std::sinh(u));
    }
    return kLn2 + 2.0 * log_sinh;
}

}  // namespace

BoundValue BoundValue::from_log(double lv) { return {lv, std::exp(lv)}; }

double convex_envelope(double f0, double fM, double lambda) {
    if (lambda < 0.0 || lambda > 1.0) {
        throw DomainError("lambda must lie in [0,1]");
    }
    if (f0 < 0.0) {
        throw DomainError("f(0) must be nonnegative");
    }
    if (fM < f0) {
        throw DomainError("requires f(M) >= f(0)");
    }
    return lambda * fM + (1.0 - lambda) * f0;
}

ConditionalBounds simple_conditional_bound(double x, std::uint32_t s, std::uint64_t cap) {
    if (x < 0.0) throw DomainError("x must be >= 0");
    if (cap < 1) throw DomainError("cap must be >= 1");
    if (s < 2) throw DomainError("s must be >= 2");

    const double shift = -static_cast<double>(s) * kLn2;
    ConditionalBounds out;
    out.exponential = BoundValue::from_log(log_expm1(x) + shift);
    if (x == 0.0) {
        out.truncated = BoundValue::from_log(kNegInf);
        return out;
    }
    const double lx = std::log(x);
    double acc = kNegInf;
    double peak = kNegInf;
    for (std::uint64_t c = 1; c <= cap; ++c) {
        const double term = static_cast<double>(c) * lx - std::lgamma(static_cast<double>(c) + 1.0);
        acc = log_add_exp(acc, term);
        peak = std::max(peak, term);
        // Past the series peak the terms only shrink; stop once they can no
        // longer move the sum.
        if (static_cast<double>(c) > x && term < peak - 60.0) break;
    }
    out.truncated = BoundValue::from_log(acc + shift);
    return out;
}

BoundValue simple_edge_bound(std::uint32_t k, double q, std::uint32_t s,
                             const AlphaParams& alphas) {
    if (k < 2) throw DomainError("k must be >= 2");
    if (alphas.b * q <= 1.0) {
        throw DomainError("requires alpha_b * q > 1");
    }
    const double lv = alphas.c * q * std::log(alphas.b * q) -
                      std::log(alphas.c * static_cast<double>(k)) -
                      static_cast<double>(s) * kLn2;
    return BoundValue::from_log(lv);
}

ImprovedBound improved_edge_bound(std::uint32_t k, double q, std::uint32_t s,
                                  const AlphaParams& alphas) {
    if (k < 2) throw DomainError("k must be >= 2");
    if (q < 0.0) throw DomainError("q must be >= 0");
    const double scale = std::sqrt(2.0 * alphas.d * alphas.c);
    const double t = scale * q;
    const double shift =
        -std::log(alphas.c * static_cast<double>(k)) - static_cast<double>(s) * kLn2;
    ImprovedBound out;
    out.cosh_form = BoundValue::from_log(log_cosh_minus_1(t) + shift);
    out.exp_form = BoundValue::from_log(t + shift);
    out.q_threshold = 0.9 / scale * std::log(static_cast<double>(k));
    out.in_regime = q <= out.q_threshold;
    return out;
}

GreedyBound greedy_failure_bound(std::uint32_t k, std::uint32_t max_size, double q) {
    if (k < 2 || max_size < k) throw DomainError("requires K >= k >= 2");
    if (q <= 0.0) throw DomainError("q must be > 0");
    const double p = std::clamp(std::log(4.0 * q) / static_cast<double>(k), 0.0, 1.0);

    double log_pairs = kNegInf;  // p (1+p)^(K-k) q^2
    if (p > 0.0) {
        log_pairs = std::log(p) + static_cast<double>(max_size - k) * std::log1p(p) +
                    2.0 * std::log(q);
    }
    double log_tails = kNegInf;  // 2 (1-p)^k q
    if (p < 1.0) {
        log_tails = kLn2 + static_cast<double>(k) * std::log1p(-p) + std::log(q);
    }
    return {p, BoundValue::from_log(log_add_exp(log_pairs, log_tails))};
}

UniformBound uniform_edge_bound(std::uint32_t k, double q, double alpha_b) {
    if (k < 2) throw DomainError("k must be >= 2");
    if (q <= 0.0) throw DomainError("q must be > 0");
    if (alpha_b <= 1.0) throw DomainError("requires alpha_b > 1");
    const double lv = -static_cast<double>(k) * kLn2 + (1.0 + alpha_b) * std::log(q) -
                      std::log(static_cast<double>(k));
    const double eps = alpha_b - 1.0;
    UniformBound out;
    out.value = BoundValue::from_log(lv);
    out.q_threshold =
        std::pow(static_cast<double>(k) * eps / (1.0 + eps), 1.0 / (3.0 + eps));
    out.in_regime = q <= out.q_threshold;
    return out;
}

}  // namespace hgcolor
