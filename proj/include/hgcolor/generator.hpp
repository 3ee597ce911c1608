#ifndef HGCOLOR_GENERATOR_HPP
#define HGCOLOR_GENERATOR_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "hgcolor/hypergraph.hpp"

namespace hgcolor {

/// Requested edge-size profile: count edges of each size.
struct SizeCount {
    std::uint32_t size = 0;
    std::uint64_t count = 0;
};

struct GenSpec {
    enum class Kind { Uniform, Mixture };

    Kind kind = Kind::Uniform;
    VertexId n = 0;
    std::uint32_t k = 0;        // uniform: edge size
    std::uint64_t m = 0;        // uniform: edge count
    std::vector<SizeCount> profile;  // mixture
    std::uint64_t seed = 0;

    static GenSpec uniform(std::uint32_t k, VertexId n, std::uint64_t m, std::uint64_t seed);
    static GenSpec mixture(VertexId n, std::vector<SizeCount> profile, std::uint64_t seed);
};

/// Samples each edge independently and uniformly from all j-subsets of
/// [0,n), with replacement across edges. Edge i draws from its own
/// sub_seed(spec.seed, i) stream, so generation is order-independent.
Hypergraph generate(const GenSpec& spec);

/// Splits q_target evenly across the given sizes and rounds each share down
/// to a whole edge count, then greedily tops up. The achieved q satisfies
/// q <= q_target < q + max_j 2^(1-j).
std::map<std::uint32_t, std::uint64_t> target_q_counts(double q_target,
                                                       const std::vector<std::uint32_t>& sizes);

}  // namespace hgcolor

#endif  // HGCOLOR_GENERATOR_HPP
