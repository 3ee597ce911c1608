#ifndef HGCOLOR_BOUNDS_HPP
#define HGCOLOR_BOUNDS_HPP

#include <cstdint>
#include <stdexcept>

#include "hgcolor/events.hpp"

namespace hgcolor {

class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bounds are accumulated in log space and exponentiated once, so values
/// whose direct form under- or overflows (edge sizes up to 1e9) still carry
/// a finite log.
struct BoundValue {
    double log_value;  // natural log; -inf encodes an exact zero
    double value;      // exp(log_value), possibly 0 or +inf

    static BoundValue from_log(double lv);
};

/// lambda * f(M) + (1 - lambda) * f(0): expectation envelope for a convex
/// f on [0, M] given E[X] <= lambda * M.
double convex_envelope(double f0, double fM, double lambda);

/// 2^-s * sum_{c=1}^{cap} x^c / c!  and  2^-s * (e^x - 1). The truncated
/// series never exceeds the exponential form.
struct ConditionalBounds {
    BoundValue truncated;
    BoundValue exponential;
};
ConditionalBounds simple_conditional_bound(double x, std::uint32_t s, std::uint64_t cap);

/// 2^-s * (alpha_b q)^(alpha_c q) / (alpha_c k). Requires alpha_b * q > 1.
BoundValue simple_edge_bound(std::uint32_t k, double q, std::uint32_t s,
                             const AlphaParams& alphas);

/// cosh-form bound 2^-s/(alpha_c k) * (cosh(sqrt(2 alpha_d alpha_c) q) - 1),
/// its relaxed exp form, and the q-regime check against
/// 0.9/sqrt(2 alpha_d alpha_c) * ln k.
struct ImprovedBound {
    BoundValue cosh_form;
    BoundValue exp_form;
    double q_threshold;
    bool in_regime;
};
ImprovedBound improved_edge_bound(std::uint32_t k, double q, std::uint32_t s,
                                  const AlphaParams& alphas);

/// p (1+p)^(K-k) q^2 + 2 (1-p)^k q with p = ln(4q)/k clamped to [0,1].
struct GreedyBound {
    double p;
    BoundValue value;
};
GreedyBound greedy_failure_bound(std::uint32_t k, std::uint32_t max_size, double q);

/// 2^-k q^(1+alpha_b) / k and the sufficient-q threshold
/// (k eps/(1+eps))^(1/(3+eps)) with eps = alpha_b - 1. Requires alpha_b > 1.
struct UniformBound {
    BoundValue value;
    double q_threshold;
    bool in_regime;
};
UniformBound uniform_edge_bound(std::uint32_t k, double q, double alpha_b);

}  // namespace hgcolor

#endif  // HGCOLOR_BOUNDS_HPP
