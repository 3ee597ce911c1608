#include "hgcolor/events.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hgcolor {

double light_threshold_p(double q, double alpha_b, std::uint32_t j) {
    if (q <= 0.0) return 0.0;
    const double lg = std::log(alpha_b * q);
    if (lg <= 0.0) return 0.0;
    return std::min(lg / static_cast<double>(j), 1.0);
}

EventReport event_report(const Hypergraph& h, const HypergraphStats& hs,
                         const InitialState& init, const AlphaParams& alphas) {
    if (alphas.a <= 0 || alphas.b <= 0 || alphas.c <= 0 || alphas.d <= 0) {
        throw std::invalid_argument("alpha parameters must be positive");
    }
    EventReport rep;
    const double q = hs.q;
    rep.flags.q_zero = (q == 0.0);
    // Light edges are only defined in the ln(alpha_b q) > 0 regime; below it
    // the schedule degenerates to p_j = 0 and event B is disabled.
    const bool light_active = alphas.b * q > 1.0;
    for (const auto& [j, qj] : hs.q_profile) {
        rep.p_schedule[j] = light_threshold_p(q, alphas.b, j);
    }

    rep.d2.assign(h.edge_count(), 0.0);
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
        const Edge& e = h.edge(static_cast<EdgeIndex>(i));
        const auto j = static_cast<std::uint32_t>(e.size());
        std::size_t blue = 0;
        for (VertexId v : e) {
            if (init.ic[v] == Color::Blue) ++blue;
        }
        const std::size_t off = std::min(blue, e.size() - blue);
        if (off <= 1) ++rep.q_profile[j];  // almost monochromatic
        if (off != 0) continue;

        // Initially monochromatic: feeds mono_count, the light test and d2.
        ++rep.mono_count;
        if (light_active) {
            const double cut = 1.0 - rep.p_schedule.at(j);
            if (std::all_of(e.begin(), e.end(), [&](VertexId v) { return init.w[v] < cut; })) {
                rep.light_edges.push_back(static_cast<EdgeIndex>(i));
            }
        }
        double top = -1.0, second = -1.0;
        for (VertexId v : e) {
            const double wv = init.w[v];
            if (wv > top) {
                second = top;
                top = wv;
            } else if (wv > second) {
                second = wv;
            }
        }
        rep.d2[i] = static_cast<double>(j + 1) * (1.0 - second);
        rep.d2_total += rep.d2[i];
    }
    for (const auto& [j, count] : rep.q_profile) {
        rep.y += static_cast<double>(count) / static_cast<double>(j);
    }

    rep.flags.a = static_cast<double>(rep.mono_count) > alphas.a * q;
    rep.flags.b = !rep.light_edges.empty();
    rep.flags.c = rep.y > alphas.c * q;
    rep.flags.d = rep.d2_total > alphas.d * q;
    return rep;
}

EventReport event_report(const Hypergraph& h, const InitialState& init,
                         const AlphaParams& alphas) {
    return event_report(h, stats(h), init, alphas);
}

ThreatHypergraph build_threat(const Hypergraph& h, EdgeIndex e) {
    if (e >= h.edge_count()) {
        throw std::out_of_range("edge index out of range");
    }
    ThreatHypergraph threat;
    threat.base_edge = e;
    const Edge& base = h.edge(e);
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
        const Edge& f = h.edge(static_cast<EdgeIndex>(i));
        // Both edges are sorted; count the intersection with an early exit.
        Edge reduced;
        VertexId common = 0;
        std::size_t shared = 0;
        std::size_t a = 0, b = 0;
        while (a < f.size() && b < base.size()) {
            if (f[a] < base[b]) {
                reduced.push_back(f[a]);
                ++a;
            } else if (f[a] > base[b]) {
                ++b;
            } else {
                common = f[a];
                if (++shared > 1) break;
                ++a;
                ++b;
            }
        }
        if (shared != 1) continue;
        for (; a < f.size(); ++a) reduced.push_back(f[a]);
        threat.threat_edges.push_back(
            {std::move(reduced), static_cast<EdgeIndex>(i), common});
    }
    return threat;
}

FocusReport focus_report(const Hypergraph& h, EdgeIndex e, const ThreatHypergraph& threat,
                         const InitialState& init, const AlphaParams& alphas, double q) {
    if (e >= h.edge_count() || threat.base_edge != e) {
        throw std::invalid_argument("threat hypergraph does not belong to edge " +
                                    std::to_string(e));
    }
    FocusReport rep;

    struct Candidate {
        std::uint32_t severity = std::numeric_limits<std::uint32_t>::max();
        // Lightest endangering threat edge, keyed by its heaviest vertex
        // under (weight, id), ties broken by threat-edge index.
        double best_w = 0.0;
        VertexId best_hv = 0;
        std::size_t best_idx = 0;
        std::size_t best_size = 0;
        bool any = false;
    };
    std::map<VertexId, Candidate> cands;

    for (std::size_t t = 0; t < threat.threat_edges.size(); ++t) {
        const ThreatEdge& te = threat.threat_edges[t];
        const bool blue = std::all_of(te.vertices.begin(), te.vertices.end(),
                                      [&](VertexId v) { return init.ic[v] == Color::Blue; });
        if (!blue) continue;

        rep.y_e += 1.0 / static_cast<double>(te.vertices.size() + 1);

        VertexId hv = te.vertices[0];
        for (VertexId v : te.vertices) {
            if (init.w[v] > init.w[hv] || (init.w[v] == init.w[hv] && v > hv)) hv = v;
        }
        Candidate& cand = cands[te.extension_vertex];
        const auto ext_size = static_cast<std::uint32_t>(te.vertices.size() + 1);
        cand.severity = std::min(cand.severity, ext_size);
        const bool lighter =
            !cand.any || init.w[hv] < cand.best_w ||
            (init.w[hv] == cand.best_w && (hv < cand.best_hv ||
                                           (hv == cand.best_hv && t < cand.best_idx)));
        if (lighter) {
            cand.any = true;
            cand.best_w = init.w[hv];
            cand.best_hv = hv;
            cand.best_idx = t;
            cand.best_size = te.vertices.size();
        }
    }

    for (const auto& [v, cand] : cands) {
        rep.endangered.push_back(v);
        rep.severity[v] = cand.severity;
        ++rep.r_profile[cand.severity];
        rep.x += light_threshold_p(q, alphas.b, cand.severity);
        rep.lightest_threat[v] = cand.best_idx;
        rep.delta[v] = static_cast<double>(cand.best_size + 2) * (1.0 - cand.best_w);
    }
    return rep;
}

FocusReport focus_report(const Hypergraph& h, EdgeIndex e, const ThreatHypergraph& threat,
                         const InitialState& init, const AlphaParams& alphas) {
    return focus_report(h, e, threat, init, alphas, stats(h).q);
}

}  // namespace hgcolor
