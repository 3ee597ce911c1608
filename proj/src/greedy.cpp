#include "hgcolor/greedy.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "hgcolor/rng.hpp"

namespace hgcolor {

namespace {

struct EdgeExtremes {
    VertexId heaviest;
    VertexId lightest;
};

EdgeExtremes extremes(const Edge& e, const std::vector<double>& w) {
    VertexId hi = e[0], lo = e[0];
    for (std::size_t i = 1; i < e.size(); ++i) {
        const VertexId v = e[i];
        if (w[v] > w[hi] || (w[v] == w[hi] && v > hi)) hi = v;
        if (w[v] < w[lo] || (w[v] == w[lo] && v < lo)) lo = v;
    }
    return {hi, lo};
}

}  // namespace

GreedyTrace greedy_run(const Hypergraph& h, const std::vector<double>& weights) {
    const VertexId n = h.vertex_count();
    const std::size_t m = h.edge_count();

    GreedyTrace trace;
    trace.order = order_by_weight(weights);
    trace.final.assign(n, Color::Blue);

    std::vector<std::vector<EdgeIndex>> by_heaviest(n);
    std::vector<std::vector<EdgeIndex>> incident(n);
    std::vector<std::uint32_t> blue_count(m, 0);

    for (std::size_t i = 0; i < m; ++i) {
        const Edge& e = h.edge(static_cast<EdgeIndex>(i));
        by_heaviest[extremes(e, weights).heaviest].push_back(static_cast<EdgeIndex>(i));
        for (VertexId v : e) incident[v].push_back(static_cast<EdgeIndex>(i));
    }

    for (VertexId v : trace.order) {
        bool red = false;
        for (EdgeIndex f : by_heaviest[v]) {
            if (blue_count[f] + 1 == h.edge(f).size()) {
                red = true;
                break;
            }
        }
        if (red) {
            trace.final[v] = Color::Red;
            trace.forced_red.push_back(v);
        } else {
            for (EdgeIndex f : incident[v]) ++blue_count[f];
        }
    }
    std::sort(trace.forced_red.begin(), trace.forced_red.end());

    for (std::size_t i = 0; i < m; ++i) {
        const Edge& e = h.edge(static_cast<EdgeIndex>(i));
        if (std::all_of(e.begin(), e.end(),
                        [&](VertexId v) { return trace.final[v] == Color::Red; })) {
            trace.failing_edges.push_back(static_cast<EdgeIndex>(i));
        }
    }
    return trace;
}

GreedyTrace greedy_run(const Hypergraph& h, std::uint64_t seed) {
    return greedy_run(h, sample_initial(h, seed).w);
}

GreedyDiagnostics greedy_diagnostics(const Hypergraph& h, const std::vector<double>& weights,
                                     double p) {
    GreedyDiagnostics d;
    d.p = p;
    const double light_cut = (1.0 - p) / 2.0;
    const double heavy_cut = (1.0 + p) / 2.0;

    // Group edges by their extreme vertices so conflicting pairs come out of
    // one hash join instead of an all-pairs scan.
    std::unordered_map<VertexId, std::vector<EdgeIndex>> heaviest_at;
    std::unordered_map<VertexId, std::vector<EdgeIndex>> lightest_at;
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
        const Edge& e = h.edge(static_cast<EdgeIndex>(i));
        const auto ex = extremes(e, weights);
        heaviest_at[ex.heaviest].push_back(static_cast<EdgeIndex>(i));
        lightest_at[ex.lightest].push_back(static_cast<EdgeIndex>(i));
        if (weights[ex.heaviest] <= light_cut) {
            d.light_edges.push_back(static_cast<EdgeIndex>(i));
        }
        if (std::all_of(e.begin(), e.end(), [&](VertexId v) { return weights[v] >= heavy_cut; })) {
            d.heavy_edges.push_back(static_cast<EdgeIndex>(i));
        }
    }
    for (const auto& [v, firsts] : heaviest_at) {
        const auto it = lightest_at.find(v);
        if (it == lightest_at.end()) continue;
        for (EdgeIndex f1 : firsts) {
            for (EdgeIndex f2 : it->second) {
                if (f1 != f2) d.conflicting_pairs.emplace_back(f1, f2);
            }
        }
    }
    std::sort(d.conflicting_pairs.begin(), d.conflicting_pairs.end());
    return d;
}

double default_greedy_p(double q, std::uint32_t k) {
    if (q <= 0.0) return 0.0;
    const double p = std::log(4.0 * q) / static_cast<double>(k);
    return std::clamp(p, 0.0, 1.0);
}

}  // namespace hgcolor
