#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "hgcolor/rng.hpp"
#include "hgcolor/two_phase.hpp"
#include "test_helpers.hpp"

using namespace hgcolor;

namespace {

InitialState make_init(std::vector<Color> ic, std::vector<double> w) {
    return InitialState{std::move(ic), std::move(w)};
}

constexpr Color B = Color::Blue;
constexpr Color R = Color::Red;

}  // namespace

TEST_SUITE("two_phase") {

TEST_CASE("sampler honors its distribution contract") {
    const auto h = hgtest::make(1, {});
    const std::size_t trials = 100000;
    std::size_t blue = 0;
    double w_sum = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        const auto init = sample_initial(h, sub_seed(42, t));
        if (init.ic[0] == Color::Blue) ++blue;
        w_sum += init.w[0];
        CHECK(init.w[0] > 0.0);
        CHECK(init.w[0] < 1.0);
    }
    const double n = static_cast<double>(trials);
    const double se_color = std::sqrt(0.25 / n);
    CHECK(std::abs(static_cast<double>(blue) / n - 0.5) <= 5.0 * se_color);
    const double se_weight = std::sqrt(1.0 / 12.0 / n);  // Var of U(0,1) is 1/12
    CHECK(std::abs(w_sum / n - 0.5) <= 5.0 * se_weight);
}

TEST_CASE("sampler is deterministic in the seed") {
    const auto h = hgtest::make(10, {{0, 1, 2}});
    const auto a = sample_initial(h, 77);
    const auto b = sample_initial(h, 77);
    CHECK(a.ic == b.ic);
    CHECK(a.w == b.w);
    const auto c = sample_initial(h, 78);
    CHECK(a.w != c.w);
}

TEST_CASE("monochromatic single edge forces one recoloring") {
    const auto h = hgtest::make(2, {{0, 1}});
    const auto trace = recolor(h, make_init({B, B}, {0.2, 0.9}));
    CHECK(trace.recolored == std::vector<VertexId>{1});
    CHECK(trace.final == std::vector<Color>{B, R});
    CHECK(trace.reasons[1] == std::vector<EdgeIndex>{0});
    CHECK(trace.final_mono.empty());
}

TEST_CASE("no initially monochromatic edge means no recoloring") {
    const auto h = hgtest::make(2, {{0, 1}});
    for (auto w : {std::vector<double>{0.2, 0.9}, std::vector<double>{0.9, 0.2}}) {
        const auto trace = recolor(h, make_init({B, R}, w));
        CHECK(trace.recolored.empty());
        CHECK(trace.final == std::vector<Color>{B, R});
    }
}

TEST_CASE("hand-traced run on two overlapping edges") {
    // Edges f1={0,1}, e={1,2}; only f1 starts monochromatic. Vertex 1 is
    // f1's heaviest, flips to red, and that turns e all-red.
    const auto h = hgtest::path2();
    const auto trace = recolor(h, make_init({B, B, R}, {0.2, 0.9, 0.5}));
    CHECK(trace.recolored == std::vector<VertexId>{1});
    CHECK(trace.reasons[1] == std::vector<EdgeIndex>{0});
    CHECK(trace.final == std::vector<Color>{B, R, R});
    CHECK(trace.initially_mono == std::vector<EdgeIndex>{0});
    CHECK(trace.final_mono == std::vector<EdgeIndex>{1});
}

TEST_CASE("is_proper basics") {
    const auto h = hgtest::make(2, {{0, 1}});
    CHECK(is_proper(h, {B, R}) == std::pair{true, std::vector<EdgeIndex>{}});
    CHECK(is_proper(h, {B, B}) == std::pair{false, std::vector<EdgeIndex>{0}});
}

TEST_CASE("no coloring of the Fano plane is proper") {
    const auto h = hgtest::fano();
    for (std::uint32_t bits = 0; bits < (1u << 7); ++bits) {
        std::vector<Color> coloring(7);
        for (VertexId v = 0; v < 7; ++v) {
            coloring[v] = (bits >> v) & 1 ? R : B;
        }
        CHECK_FALSE(is_proper(h, coloring).first);
    }
}

TEST_CASE("soundness, recolor budget and red shield hold on random runs") {
    SplitMix64 rng(2025);
    for (int rep = 0; rep < 60; ++rep) {
        const auto h = hgtest::random_instance(rng, 3, 14, 1, 14, 2, 5);
        for (int t = 0; t < 30; ++t) {
            const auto init = sample_initial(h, rng.next());
            const auto trace = recolor(h, init);
            CHECK(trace.recolored.size() <= trace.initially_mono.size());
            for (EdgeIndex f : trace.initially_mono) {
                const Edge& e = h.edge(f);
                // Every initially monochromatic edge got somebody recolored.
                CHECK(std::any_of(e.begin(), e.end(), [&](VertexId v) {
                    return trace.final[v] != init.ic[v];
                }));
                // An initially all-red edge can never end all red.
                if (init.ic[e[0]] == Color::Red) {
                    CHECK(std::any_of(e.begin(), e.end(), [&](VertexId v) {
                        return trace.final[v] == Color::Blue;
                    }));
                }
            }
            // Recolored vertices are exactly those whose color flipped, and
            // each carries at least one reason that checks out.
            for (VertexId v = 0; v < h.vertex_count(); ++v) {
                const bool flipped = trace.final[v] != init.ic[v];
                const bool listed = std::binary_search(trace.recolored.begin(),
                                                       trace.recolored.end(), v);
                CHECK(flipped == listed);
                CHECK(flipped == !trace.reasons[v].empty());
                for (EdgeIndex f : trace.reasons[v]) {
                    CHECK(std::binary_search(trace.initially_mono.begin(),
                                             trace.initially_mono.end(), f));
                    // The reason's heaviest vertex must be v itself.
                    for (VertexId u : h.edge(f)) {
                        CHECK((u == v || init.w[u] < init.w[v] ||
                               (init.w[u] == init.w[v] && u < v)));
                    }
                }
            }
        }
    }
}

TEST_CASE("trace depends on the weight order only") {
    SplitMix64 rng(555);
    for (int rep = 0; rep < 50; ++rep) {
        const auto h = hgtest::random_instance(rng, 3, 10, 1, 10, 2, 4);
        const auto init = sample_initial(h, rng.next());
        auto ranked = init;
        ranked.w = hgtest::rank_weights(order_by_weight(init.w));

        const auto a = recolor(h, init);
        const auto b = recolor(h, ranked);
        CHECK(a.final == b.final);
        CHECK(a.recolored == b.recolored);
        CHECK(a.reasons == b.reasons);
        CHECK(a.initially_mono == b.initially_mono);
        CHECK(a.final_mono == b.final_mono);
    }
}

TEST_CASE("flipping every initial color flips every final color") {
    SplitMix64 rng(808);
    for (int rep = 0; rep < 50; ++rep) {
        const auto h = hgtest::random_instance(rng, 3, 10, 1, 10, 2, 4);
        const auto init = sample_initial(h, rng.next());
        auto flipped = init;
        for (Color& c : flipped.ic) c = complement(c);

        const auto a = recolor(h, init);
        const auto b = recolor(h, flipped);
        for (VertexId v = 0; v < h.vertex_count(); ++v) {
            CHECK(b.final[v] == complement(a.final[v]));
        }
        CHECK(a.recolored == b.recolored);
    }
}

}  // TEST_SUITE
