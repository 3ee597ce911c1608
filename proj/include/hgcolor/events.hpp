#ifndef HGCOLOR_EVENTS_HPP
#define HGCOLOR_EVENTS_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "hgcolor/hypergraph.hpp"
#include "hgcolor/two_phase.hpp"

namespace hgcolor {

/// Markov thresholds for the four bad events. All must be positive.
struct AlphaParams {
    double a = 16.0;  // too many initially monochromatic edges
    double b = 16.0;  // a light monochromatic edge
    double c = 16.0;  // Y too large
    double d = 16.0;  // D2 too large

    /// Union bound on the probability that any bad event fires.
    double failure_budget() const { return 1.0 / a + 1.0 / b + 2.0 / c + 2.0 / d; }
};

/// ln(alpha_b * q) / j clamped to [0,1]; 0 when alpha_b * q <= 1 or q = 0.
double light_threshold_p(double q, double alpha_b, std::uint32_t j);

struct EventFlags {
    bool a = false;
    bool b = false;
    bool c = false;
    bool d = false;
    bool q_zero = false;  // q = 0 makes p_j undefined; reported as p_j = 0
};

/// Every global bad-event statistic of one sampled initial state.
struct EventReport {
    std::uint64_t mono_count = 0;
    std::map<std::uint32_t, double> p_schedule;      // size j -> p_j
    std::vector<EdgeIndex> light_edges;              // mono and all weights < 1 - p_j
    std::map<std::uint32_t, std::uint64_t> q_profile;  // size j -> Q_j (almost-mono count)
    double y = 0.0;                                  // sum_j Q_j / j
    std::vector<double> d2;                          // per edge; 0 unless initially mono
    double d2_total = 0.0;
    EventFlags flags;
};

EventReport event_report(const Hypergraph& h, const HypergraphStats& hs,
                         const InitialState& init, const AlphaParams& alphas);
EventReport event_report(const Hypergraph& h, const InitialState& init,
                         const AlphaParams& alphas);

/// Multihypergraph on V \ e whose edges are f \ e for each f meeting e in
/// exactly one vertex; duplicates of the reduced vertex set stay distinct.
struct ThreatEdge {
    Edge vertices;             // f \ e, strictly increasing
    EdgeIndex extension_edge;  // index of f in H
    VertexId extension_vertex; // the unique vertex of f intersect e
};

struct ThreatHypergraph {
    EdgeIndex base_edge = 0;
    std::vector<ThreatEdge> threat_edges;  // in H's edge order
};

ThreatHypergraph build_threat(const Hypergraph& h, EdgeIndex e);

/// e-focused statistics; reads only colors and weights outside e.
struct FocusReport {
    std::vector<VertexId> endangered;            // sorted vertices of e
    std::map<VertexId, std::uint32_t> severity;  // v -> min |f| over endangering f
    std::map<std::uint32_t, std::uint64_t> r_profile;  // severity j -> count
    double x = 0.0;                              // sum_j R_j * p_j
    double y_e = 0.0;                            // sum over blue threat edges of 1/(|f_e|+1)
    std::map<VertexId, std::size_t> lightest_threat;  // v -> threat-edge index
    std::map<VertexId, double> delta;            // v -> (|f_v|+2) * (1 - w(f_v))
};

FocusReport focus_report(const Hypergraph& h, EdgeIndex e, const ThreatHypergraph& threat,
                         const InitialState& init, const AlphaParams& alphas, double q);
FocusReport focus_report(const Hypergraph& h, EdgeIndex e, const ThreatHypergraph& threat,
                         const InitialState& init, const AlphaParams& alphas);

}  // namespace hgcolor

#endif  // HGCOLOR_EVENTS_HPP
