#ifndef HGCOLOR_GREEDY_HPP
#define HGCOLOR_GREEDY_HPP

#include <cstdint>
#include <vector>

#include "hgcolor/hypergraph.hpp"
#include "hgcolor/two_phase.hpp"

namespace hgcolor {

/// Single-pass greedy run: vertices in increasing (weight, id) order get
/// blue unless blue would complete a monochromatic blue edge, i.e. the
/// vertex is the heaviest of some edge whose other vertices are already all
/// blue. No blue monochromatic edge can survive; the run fails iff some
/// edge ends monochromatic red.
struct GreedyTrace {
    std::vector<VertexId> order;
    std::vector<Color> final;
    std::vector<VertexId> forced_red;
    std::vector<EdgeIndex> failing_edges;
};

/// Light/heavy edges and conflicting pairs for a fixed weight assignment
/// and threshold parameter p. A pair (f1, f2) conflicts when the heaviest
/// vertex of f1 is the lightest vertex of f2; such a pair must exist for a
/// greedy run over the same weights to fail.
struct GreedyDiagnostics {
    double p = 0.0;
    std::vector<EdgeIndex> light_edges;  // heaviest weight <= (1-p)/2
    std::vector<EdgeIndex> heavy_edges;  // every weight >= (1+p)/2
    std::vector<std::pair<EdgeIndex, EdgeIndex>> conflicting_pairs;
};

GreedyTrace greedy_run(const Hypergraph& h, const std::vector<double>& weights);

/// Weights drawn from the same sampler as the two-phase procedure (the
/// color stream is advanced but unused, so a seed denotes one experiment
/// regardless of procedure).
GreedyTrace greedy_run(const Hypergraph& h, std::uint64_t seed);

GreedyDiagnostics greedy_diagnostics(const Hypergraph& h, const std::vector<double>& weights,
                                     double p);

/// ln(4q)/k clamped to [0,1]; clamps to 0 when q <= 1/4.
double default_greedy_p(double q, std::uint32_t k);

}  // namespace hgcolor

#endif  // HGCOLOR_GREEDY_HPP
