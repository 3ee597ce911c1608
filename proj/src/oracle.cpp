#include "hgcolor/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace hgcolor {

namespace {

std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

std::uint64_t factorial(std::uint32_t n) {
    std::uint64_t f = 1;
    for (std::uint32_t i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

Rational Rational::make(std::uint64_t num, std::uint64_t den) {
    const std::uint64_t g = num == 0 ? den : gcd64(num, den);
    return {num / g, den / g};
}

Rational Rational::operator+(const Rational& other) const {
    const std::uint64_t g = gcd64(den, other.den);
    const std::uint64_t scale = other.den / g;
    return Rational::make(num * scale + other.num * (den / g), den * scale);
}

std::pair<bool, std::optional<std::vector<Color>>> is_two_colorable(const Hypergraph& h) {
    const VertexId n = h.vertex_count();
    if (n > 30) {
        throw TooLargeError("is_two_colorable supports n <= 30, got n=" + std::to_string(n));
    }
    const std::size_t m = h.edge_count();
    if (m == 0) {
        return {true, std::vector<Color>(n, Color::Blue)};
    }

    std::vector<std::vector<EdgeIndex>> incident(n);
    for (std::size_t i = 0; i < m; ++i) {
        for (VertexId v : h.edge(static_cast<EdgeIndex>(i))) {
            incident[v].push_back(static_cast<EdgeIndex>(i));
        }
    }

    constexpr int kUnset = -1;
    std::vector<int> assign(n, kUnset);
    std::vector<std::uint32_t> count_blue(m, 0), count_red(m, 0);

    // Assign v and propagate forced vertices, recording every assignment on
    // the trail. A vertex's counters are always updated for all of its
    // edges before a contradiction is reported, so undo stays symmetric.
    auto assign_one = [&](VertexId v, Color c, std::vector<VertexId>& trail) -> bool {
        std::vector<std::pair<VertexId, Color>> queue{{v, c}};
        while (!queue.empty()) {
            auto [u, cu] = queue.back();
            queue.pop_back();
            if (assign[u] != kUnset) {
                if (assign[u] != static_cast<int>(cu)) return false;
                continue;
            }
            assign[u] = static_cast<int>(cu);
            trail.push_back(u);
            bool contradiction = false;
            for (EdgeIndex f : incident[u]) {
                auto& same = cu == Color::Blue ? count_blue[f] : count_red[f];
                ++same;
                const Edge& e = h.edge(f);
                if (same == e.size()) {
                    contradiction = true;  // monochromatic
                } else if (same == e.size() - 1) {
                    // One vertex short of monochromatic: any unset vertex in
                    // the edge is forced to the other color.
                    for (VertexId w : e) {
                        if (assign[w] == kUnset) queue.emplace_back(w, complement(cu));
                    }
                }
            }
            if (contradiction) return false;
        }
        return true;
    };
    auto undo = [&](const std::vector<VertexId>& trail) {
        for (VertexId u : trail) {
            const Color cu = static_cast<Color>(assign[u]);
            for (EdgeIndex f : incident[u]) {
                auto& same = cu == Color::Blue ? count_blue[f] : count_red[f];
                --same;
            }
            assign[u] = kUnset;
        }
    };

    auto solve = [&](auto&& self, VertexId from) -> bool {
        VertexId v = from;
        while (v < n && assign[v] != kUnset) ++v;
        if (v == n) return true;
        for (Color c : {Color::Blue, Color::Red}) {
            std::vector<VertexId> trail;
            if (assign_one(v, c, trail) && self(self, v + 1)) return true;
            undo(trail);
        }
        return false;
    };

    if (!solve(solve, 0)) {
        return {false, std::nullopt};
    }
    std::vector<Color> witness(n);
    for (VertexId v = 0; v < n; ++v) {
        witness[v] = assign[v] == kUnset ? Color::Blue : static_cast<Color>(assign[v]);
    }
    return {true, witness};
}

namespace {

struct TraceCounts {
    std::uint64_t success = 0;
    std::uint64_t failure = 0;
    std::uint64_t focal_red = 0;
};

/// Direct transcription of the recoloring pass for one (coloring, order)
/// pair: scans every edge for every vertex. Used by the reference path.
TraceCounts eval_two_phase_naive(const Hypergraph& h, const std::vector<VertexId>& order,
                                 std::uint32_t ic_red_bits, std::optional<EdgeIndex> focal) {
    const VertexId n = h.vertex_count();
    std::vector<std::uint32_t> rank(n);
    for (VertexId pos = 0; pos < n; ++pos) rank[order[pos]] = pos;

    auto ic = [&](VertexId v) { return (ic_red_bits >> v) & 1u; };
    std::vector<std::uint8_t> recolored(n, 0);
    for (VertexId pos = 0; pos < n; ++pos) {
        const VertexId v = order[pos];
        bool reason = false;
        for (const Edge& f : h.edges()) {
            bool v_heaviest = false;
            bool mono = true;
            bool any_recolored = false;
            std::uint32_t max_rank = 0;
            VertexId heaviest = f[0];
            for (VertexId u : f) {
                if (rank[u] >= max_rank) {
                    max_rank = rank[u];
                    heaviest = u;
                }
                if (ic(u) != ic(f[0])) mono = false;
                if (recolored[u]) any_recolored = true;
            }
            v_heaviest = heaviest == v;
            if (v_heaviest && mono && !any_recolored) {
                reason = true;
            }
        }
        if (reason) recolored[v] = 1;
    }
    auto final_red = [&](VertexId v) { return ic(v) ^ recolored[v]; };

    TraceCounts counts;
    bool any_mono = false;
    for (const Edge& f : h.edges()) {
        bool mono = true;
        for (VertexId u : f) {
            if (final_red(u) != final_red(f[0])) {
                mono = false;
                break;
            }
        }
        if (mono) any_mono = true;
    }
    counts.success = any_mono ? 0 : 1;
    counts.failure = any_mono ? 1 : 0;
    if (focal) {
        bool all_red = true;
        for (VertexId u : h.edge(*focal)) {
            if (!final_red(u)) {
                all_red = false;
                break;
            }
        }
        counts.focal_red = all_red ? 1 : 0;
    }
    return counts;
}

/// Bitmask kernel: evaluates all 2^n colorings for one fixed order.
TraceCounts eval_two_phase_order(const Hypergraph& h, const std::vector<VertexId>& order,
                                 std::optional<EdgeIndex> focal) {
    const VertexId n = h.vertex_count();
    const std::size_t m = h.edge_count();
    std::vector<std::uint32_t> rank(n);
    for (VertexId pos = 0; pos < n; ++pos) rank[order[pos]] = pos;

    std::vector<std::uint32_t> edge_mask(m, 0);
    std::vector<std::vector<EdgeIndex>> by_heaviest(n);
    for (std::size_t i = 0; i < m; ++i) {
        const Edge& f = h.edge(static_cast<EdgeIndex>(i));
        VertexId heaviest = f[0];
        for (VertexId u : f) {
            edge_mask[i] |= 1u << u;
            if (rank[u] > rank[heaviest]) heaviest = u;
        }
        by_heaviest[heaviest].push_back(static_cast<EdgeIndex>(i));
    }
    const std::uint32_t focal_mask = focal ? edge_mask[*focal] : 0;

    TraceCounts counts;
    const std::uint32_t ncolorings = 1u << n;
    for (std::uint32_t ic_red = 0; ic_red < ncolorings; ++ic_red) {
        std::uint32_t recolored = 0;
        for (VertexId pos = 0; pos < n; ++pos) {
            const VertexId v = order[pos];
            for (EdgeIndex f : by_heaviest[v]) {
                const std::uint32_t fm = edge_mask[f];
                const std::uint32_t reds = ic_red & fm;
                if ((reds == 0 || reds == fm) && (recolored & fm) == 0) {
                    recolored |= 1u << v;
                    break;
                }
            }
        }
        const std::uint32_t final_red = ic_red ^ recolored;
        bool any_mono = false;
        for (std::size_t i = 0; i < m; ++i) {
            const std::uint32_t reds = final_red & edge_mask[i];
            if (reds == 0 || reds == edge_mask[i]) {
                any_mono = true;
                break;
            }
        }
        if (any_mono) {
            ++counts.failure;
        } else {
            ++counts.success;
        }
        if (focal && (final_red & focal_mask) == focal_mask) ++counts.focal_red;
    }
    return counts;
}

/// Greedy outcome for one fixed order (no colorings to enumerate).
bool greedy_order_succeeds(const Hypergraph& h,
                           const std::vector<std::vector<EdgeIndex>>& incident,
                           const std::vector<VertexId>& order) {
    const VertexId n = h.vertex_count();
    const std::size_t m = h.edge_count();
    std::vector<std::uint32_t> rank(n);
    for (VertexId pos = 0; pos < n; ++pos) rank[order[pos]] = pos;

    std::vector<std::vector<EdgeIndex>> by_heaviest(n);
    for (std::size_t i = 0; i < m; ++i) {
        const Edge& f = h.edge(static_cast<EdgeIndex>(i));
        VertexId heaviest = f[0];
        for (VertexId u : f) {
            if (rank[u] > rank[heaviest]) heaviest = u;
        }
        by_heaviest[heaviest].push_back(static_cast<EdgeIndex>(i));
    }

    std::vector<std::uint8_t> red(n, 0);
    std::vector<std::uint32_t> blue_count(m, 0);
    for (VertexId pos = 0; pos < n; ++pos) {
        const VertexId v = order[pos];
        bool force_red = false;
        for (EdgeIndex f : by_heaviest[v]) {
            if (blue_count[f] + 1 == h.edge(f).size()) {
                force_red = true;
                break;
            }
        }
        if (force_red) {
            red[v] = 1;
        } else {
            for (EdgeIndex f : incident[v]) ++blue_count[f];
        }
    }
    for (std::size_t i = 0; i < m; ++i) {
        const Edge& f = h.edge(static_cast<EdgeIndex>(i));
        if (std::all_of(f.begin(), f.end(), [&](VertexId u) { return red[u] != 0; })) {
            return false;
        }
    }
    return true;
}

std::vector<std::vector<EdgeIndex>> incidence_lists(const Hypergraph& h) {
    std::vector<std::vector<EdgeIndex>> incident(h.vertex_count());
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
        for (VertexId v : h.edge(static_cast<EdgeIndex>(i))) {
            incident[v].push_back(static_cast<EdgeIndex>(i));
        }
    }
    return incident;
}

/// All permutations of [0,n) whose first element is v0, applied to fn.
template <typename Fn>
void for_each_order_with_first(VertexId n, VertexId v0, Fn&& fn) {
    std::vector<VertexId> order(n);
    order[0] = v0;
    VertexId next = 0;
    for (VertexId pos = 1; pos < n; ++pos) {
        if (next == v0) ++next;
        order[pos] = next++;
    }
    do {
        fn(order);
    } while (std::next_permutation(order.begin() + 1, order.end()));
}

}  // namespace

ExactResult exact_two_phase(const Hypergraph& h, std::optional<EdgeIndex> focal_edge,
                            bool parallel) {
    const VertexId n = h.vertex_count();
    if (n > 8) {
        throw TooLargeError("exact_two_phase supports n <= 8, got n=" + std::to_string(n));
    }
    if (focal_edge && *focal_edge >= h.edge_count()) {
        throw std::out_of_range("focal edge index out of range");
    }
    const std::uint64_t total = factorial(n) * (1ull << n);

    std::vector<TraceCounts> parts(std::max<VertexId>(n, 1));
    if (n > 0) {
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
        for (int v0 = 0; v0 < static_cast<int>(n); ++v0) {
            TraceCounts acc;
            for_each_order_with_first(n, static_cast<VertexId>(v0),
                                      [&](const std::vector<VertexId>& order) {
                                          const TraceCounts c =
                                              eval_two_phase_order(h, order, focal_edge);
                                          acc.success += c.success;
                                          acc.failure += c.failure;
                                          acc.focal_red += c.focal_red;
                                      });
            parts[v0] = acc;
        }
    } else {
        parts[0] = {1, 0, 0};  // the empty trace is vacuously proper
    }
    TraceCounts sum;
    for (const TraceCounts& c : parts) {
        sum.success += c.success;
        sum.failure += c.failure;
        sum.focal_red += c.focal_red;
    }

    ExactResult res;
    res.trace_count = total;
    res.success_prob = Rational::make(sum.success, total);
    res.failure_prob = Rational::make(sum.failure, total);
    if (focal_edge) res.edge_red_prob = Rational::make(sum.focal_red, total);
    return res;
}

ExactResult exact_two_phase_reference(const Hypergraph& h, std::optional<EdgeIndex> focal_edge) {
    const VertexId n = h.vertex_count();
    if (n > 8) {
        throw TooLargeError("exact_two_phase supports n <= 8, got n=" + std::to_string(n));
    }
    const std::uint64_t total = factorial(n) * (1ull << n);
    TraceCounts sum;
    std::vector<VertexId> order(n);
    std::iota(order.begin(), order.end(), 0);
    do {
        for (std::uint32_t ic = 0; ic < (1u << n); ++ic) {
            const TraceCounts c = eval_two_phase_naive(h, order, ic, focal_edge);
            sum.success += c.success;
            sum.failure += c.failure;
            sum.focal_red += c.focal_red;
        }
    } while (std::next_permutation(order.begin(), order.end()));

    ExactResult res;
    res.trace_count = total;
    res.success_prob = Rational::make(sum.success, total);
    res.failure_prob = Rational::make(sum.failure, total);
    if (focal_edge) res.edge_red_prob = Rational::make(sum.focal_red, total);
    return res;
}

ExactResult exact_greedy(const Hypergraph& h, bool parallel) {
    const VertexId n = h.vertex_count();
    if (n > 10) {
        throw TooLargeError("exact_greedy supports n <= 10, got n=" + std::to_string(n));
    }
    const std::uint64_t total = factorial(n);
    const auto incident = incidence_lists(h);

    std::vector<std::uint64_t> successes(std::max<VertexId>(n, 1), 0);
    if (n > 0) {
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
        for (int v0 = 0; v0 < static_cast<int>(n); ++v0) {
            std::uint64_t acc = 0;
            for_each_order_with_first(n, static_cast<VertexId>(v0),
                                      [&](const std::vector<VertexId>& order) {
                                          if (greedy_order_succeeds(h, incident, order)) ++acc;
                                      });
            successes[v0] = acc;
        }
    } else {
        successes[0] = 1;
    }
    const std::uint64_t wins = std::accumulate(successes.begin(), successes.end(), 0ull);

    ExactResult res;
    res.trace_count = total;
    res.success_prob = Rational::make(wins, total);
    res.failure_prob = Rational::make(total - wins, total);
    return res;
}

ExactResult exact_greedy_reference(const Hypergraph& h) {
    const VertexId n = h.vertex_count();
    if (n > 10) {
        throw TooLargeError("exact_greedy supports n <= 10, got n=" + std::to_string(n));
    }
    const std::uint64_t total = factorial(n);
    const auto incident = incidence_lists(h);
    std::uint64_t wins = 0;
    std::vector<VertexId> order(n);
    std::iota(order.begin(), order.end(), 0);
    do {
        if (greedy_order_succeeds(h, incident, order)) ++wins;
    } while (std::next_permutation(order.begin(), order.end()));

    ExactResult res;
    res.trace_count = total;
    res.success_prob = Rational::make(wins, total);
    res.failure_prob = Rational::make(total - wins, total);
    return res;
}

}  // namespace hgcolor
