#include "hgcolor/generator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "hgcolor/rng.hpp"

namespace hgcolor {

GenSpec GenSpec::uniform(std::uint32_t k, VertexId n, std::uint64_t m, std::uint64_t seed) {
    GenSpec s;
    s.kind = Kind::Uniform;
    s.n = n;
    s.k = k;
    s.m = m;
    s.seed = seed;
    return s;
}

GenSpec GenSpec::mixture(VertexId n, std::vector<SizeCount> profile, std::uint64_t seed) {
    GenSpec s;
    s.kind = Kind::Mixture;
    s.n = n;
    s.profile = std::move(profile);
    s.seed = seed;
    return s;
}

namespace {

/// Partial Fisher-Yates over [0,n): draws j distinct ids in O(j) expected
/// time using a sparse map for displaced entries, then sorts.
Edge sample_j_subset(SplitMix64& rng, VertexId n, std::uint32_t j) {
    std::unordered_map<VertexId, VertexId> displaced;
    auto at = [&](VertexId pos) {
        const auto it = displaced.find(pos);
        return it == displaced.end() ? pos : it->second;
    };
    Edge out(j);
    for (std::uint32_t i = 0; i < j; ++i) {
        const VertexId r = static_cast<VertexId>(i + rng.next_below(n - i));
        out[i] = at(r);
        displaced[r] = at(static_cast<VertexId>(i));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

Hypergraph generate(const GenSpec& spec) {
    std::vector<SizeCount> profile;
    if (spec.kind == GenSpec::Kind::Uniform) {
        profile.push_back({spec.k, spec.m});
    } else {
        profile = spec.profile;
    }
    std::uint64_t total = 0;
    for (const auto& [size, count] : profile) {
        if (size < 2) {
            throw ValidationError(ValidationErrorKind::EdgeTooSmall,
                                  "requested edge size " + std::to_string(size) + " < 2");
        }
        if (size > spec.n) {
            throw ValidationError(ValidationErrorKind::VertexOutOfRange,
                                  "requested edge size " + std::to_string(size) +
                                      " exceeds n=" + std::to_string(spec.n));
        }
        total += count;
    }
    std::vector<Edge> edges;
    edges.reserve(total);
    std::uint64_t edge_index = 0;
    for (const auto& [size, count] : profile) {
        for (std::uint64_t i = 0; i < count; ++i, ++edge_index) {
            SplitMix64 rng(sub_seed(spec.seed, edge_index));
            edges.push_back(sample_j_subset(rng, spec.n, size));
        }
    }
    return Hypergraph::validate(std::move(edges), spec.n);
}

std::map<std::uint32_t, std::uint64_t> target_q_counts(double q_target,
                                                       const std::vector<std::uint32_t>& sizes) {
    if (q_target < 0.0) {
        throw std::invalid_argument("q_target must be >= 0");
    }
    std::map<std::uint32_t, std::uint64_t> counts;
    if (sizes.empty()) return counts;
    for (std::uint32_t j : sizes) {
        if (j < 2) throw std::invalid_argument("edge sizes must be >= 2");
        counts[j] = 0;
    }
    const double share = q_target / static_cast<double>(counts.size());
    double achieved = 0.0;
    for (auto& [j, mj] : counts) {
        const double w = std::ldexp(1.0, 1 - static_cast<int>(j));
        mj = static_cast<std::uint64_t>(std::floor(share / w));
        achieved += static_cast<double>(mj) * w;
    }
    // Top up with whole edges, largest contribution first, without crossing
    // the target.
    for (auto& [j, mj] : counts) {
        const double w = std::ldexp(1.0, 1 - static_cast<int>(j));
        while (achieved + w <= q_target) {
            ++mj;
            achieved += w;
        }
    }
    return counts;
}

}  // namespace hgcolor
