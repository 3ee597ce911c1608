#include "hgcolor/two_phase.hpp"

#include <algorithm>
#include <numeric>

#include "hgcolor/rng.hpp"

namespace hgcolor {

InitialState sample_initial(const Hypergraph& h, std::uint64_t seed) {
    SplitMix64 rng(seed);
    const VertexId n = h.vertex_count();
    InitialState init;
    init.ic.resize(n);
    init.w.resize(n);
    for (VertexId v = 0; v < n; ++v) {
        init.ic[v] = rng.next_bit() ? Color::Red : Color::Blue;
        init.w[v] = rng.next_open01();
    }
    return init;
}

std::vector<VertexId> order_by_weight(const std::vector<double>& w) {
    std::vector<VertexId> order(w.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
        if (w[a] != w[b]) return w[a] < w[b];
        return a < b;
    });
    return order;
}

namespace {

/// Heaviest vertex of an edge under the (weight, id) total order.
VertexId heaviest_vertex(const Edge& e, const std::vector<double>& w) {
    VertexId best = e[0];
    for (std::size_t i = 1; i < e.size(); ++i) {
        const VertexId v = e[i];
        if (w[v] > w[best] || (w[v] == w[best] && v > best)) best = v;
    }
    return best;
}

}  // namespace

ColoringTrace recolor(const Hypergraph& h, const InitialState& init) {
    const VertexId n = h.vertex_count();
    const std::size_t m = h.edge_count();

    ColoringTrace trace;
    trace.final.assign(init.ic.begin(), init.ic.end());
    trace.reasons.resize(n);

    std::vector<std::vector<EdgeIndex>> by_heaviest(n);
    std::vector<std::vector<EdgeIndex>> incident(n);
    std::vector<std::uint8_t> mono(m, 0);
    std::vector<std::uint8_t> has_recolored(m, 0);

    for (std::size_t i = 0; i < m; ++i) {
        const Edge& e = h.edge(static_cast<EdgeIndex>(i));
        by_heaviest[heaviest_vertex(e, init.w)].push_back(static_cast<EdgeIndex>(i));
        bool is_mono = true;
        for (std::size_t t = 1; t < e.size(); ++t) {
            if (init.ic[e[t]] != init.ic[e[0]]) {
                is_mono = false;
                break;
            }
        }
        if (is_mono) {
            mono[i] = 1;
            trace.initially_mono.push_back(static_cast<EdgeIndex>(i));
            for (VertexId v : e) incident[v].push_back(static_cast<EdgeIndex>(i));
        }
    }

    for (VertexId v : order_by_weight(init.w)) {
        for (EdgeIndex f : by_heaviest[v]) {
            if (mono[f] && !has_recolored[f]) trace.reasons[v].push_back(f);
        }
        if (!trace.reasons[v].empty()) {
            trace.final[v] = complement(init.ic[v]);
            trace.recolored.push_back(v);
            for (EdgeIndex f : incident[v]) has_recolored[f] = 1;
        }
    }
    std::sort(trace.recolored.begin(), trace.recolored.end());

    auto [proper, bad] = is_proper(h, trace.final);
    (void)proper;
    trace.final_mono = std::move(bad);
    return trace;
}

std::pair<bool, std::vector<EdgeIndex>> is_proper(const Hypergraph& h,
                                                  const std::vector<Color>& coloring) {
    std::vector<EdgeIndex> mono;
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
        const Edge& e = h.edge(static_cast<EdgeIndex>(i));
        bool is_mono = true;
        for (std::size_t t = 1; t < e.size(); ++t) {
            if (coloring[e[t]] != coloring[e[0]]) {
                is_mono = false;
                break;
            }
        }
        if (is_mono) mono.push_back(static_cast<EdgeIndex>(i));
    }
    return {mono.empty(), std::move(mono)};
}

}  // namespace hgcolor
