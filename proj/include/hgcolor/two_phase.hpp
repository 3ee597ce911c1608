#ifndef HGCOLOR_TWO_PHASE_HPP
#define HGCOLOR_TWO_PHASE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "hgcolor/hypergraph.hpp"

namespace hgcolor {

enum class Color : std::uint8_t { Blue = 0, Red = 1 };

constexpr Color complement(Color c) { return c == Color::Blue ? Color::Red : Color::Blue; }

/// Per-vertex initial color and weight. Weights live in the open interval
/// (0,1); ties in processing order are broken by vertex id, so the induced
/// order on vertices is always strict.
struct InitialState {
    std::vector<Color> ic;
    std::vector<double> w;
};

/// Full provenance of one recoloring pass.
struct ColoringTrace {
    std::vector<Color> final;                    // c(v)
    std::vector<VertexId> recolored;             // vertices with c(v) != ic(v)
    std::vector<std::vector<EdgeIndex>> reasons; // per vertex, edges that forced the flip
    std::vector<EdgeIndex> initially_mono;
    std::vector<EdgeIndex> final_mono;
};

/// Independent uniform initial colors and (0,1) weights, one SplitMix64
/// stream per call: per vertex, one draw for the color bit, one for the
/// weight.
InitialState sample_initial(const Hypergraph& h, std::uint64_t seed);

/// Processes vertices in increasing (weight, id) order. A vertex is
/// recolored exactly when some initially monochromatic edge has it as its
/// heaviest vertex and still contains no recolored vertex; all such edges
/// are recorded as reasons.
ColoringTrace recolor(const Hypergraph& h, const InitialState& init);

/// True iff no edge is monochromatic under the coloring; the second member
/// lists the offending edge indices.
std::pair<bool, std::vector<EdgeIndex>> is_proper(const Hypergraph& h,
                                                  const std::vector<Color>& coloring);

/// Vertex ids ordered by increasing (weight, id). Shared by both coloring
/// procedures.
std::vector<VertexId> order_by_weight(const std::vector<double>& w);

}  // namespace hgcolor

#endif  // HGCOLOR_TWO_PHASE_HPP
