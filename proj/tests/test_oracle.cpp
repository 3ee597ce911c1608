#include <doctest.h>

#include <cmath>

#include "hgcolor/montecarlo.hpp"
#include "hgcolor/oracle.hpp"
#include "hgcolor/rng.hpp"
#include "test_helpers.hpp"

using namespace hgcolor;

TEST_SUITE("oracle") {

TEST_CASE("two-colorability on the fixtures") {
    const auto single = hgtest::make(2, {{0, 1}});
    const auto [ok, witness] = is_two_colorable(single);
    CHECK(ok);
    REQUIRE(witness.has_value());
    CHECK(is_proper(single, *witness).first);

    // Complete 3-uniform hypergraph on 4 vertices: two blue and two red
    // vertices meet every 3-set.
    const auto k4 = hgtest::make(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    const auto [ok4, witness4] = is_two_colorable(k4);
    CHECK(ok4);
    CHECK(is_proper(k4, *witness4).first);

    CHECK_FALSE(is_two_colorable(hgtest::fano()).first);
    CHECK_FALSE(is_two_colorable(hgtest::triangle()).first);
}

TEST_CASE("witnesses are proper on random two-colorable instances") {
    SplitMix64 rng(121);
    for (int rep = 0; rep < 40; ++rep) {
        const auto h = hgtest::random_instance(rng, 4, 16, 1, 12, 2, 5);
        const auto [ok, witness] = is_two_colorable(h);
        if (ok) {
            CHECK(is_proper(h, *witness).first);
        } else {
            // Exhaustive cross-check is affordable up to 16 vertices.
            bool any = false;
            for (std::uint32_t bits = 0; bits < (1u << h.vertex_count()); ++bits) {
                std::vector<Color> coloring(h.vertex_count());
                for (VertexId v = 0; v < h.vertex_count(); ++v) {
                    coloring[v] = (bits >> v) & 1 ? Color::Red : Color::Blue;
                }
                if (is_proper(h, coloring).first) {
                    any = true;
                    break;
                }
            }
            CHECK_FALSE(any);
        }
    }
}

TEST_CASE("size caps raise TooLarge") {
    const auto big = hgtest::make(31, {{0, 1}});
    CHECK_THROWS_AS(is_two_colorable(big), TooLargeError);
    const auto h9 = hgtest::make(9, {{0, 1}});
    CHECK_THROWS_AS(exact_two_phase(h9), TooLargeError);
    const auto h11 = hgtest::make(11, {{0, 1}});
    CHECK_THROWS_AS(exact_greedy(h11), TooLargeError);
}

TEST_CASE("two-phase oracle on a single edge") {
    const auto res = exact_two_phase(hgtest::make(2, {{0, 1}}));
    CHECK(res.success_prob == Rational{1, 1});
    CHECK(res.trace_count == 8);  // 2^2 * 2!
}

TEST_CASE("two-phase oracle on the overlapping pair") {
    const auto res = exact_two_phase(hgtest::path2(), EdgeIndex{1});
    CHECK(res.trace_count == 48);
    CHECK(res.success_prob == Rational{3, 4});
    REQUIRE(res.edge_red_prob.has_value());
    CHECK(*res.edge_red_prob == Rational{1, 16});
}

TEST_CASE("two-phase oracle on the triangle") {
    const auto res = exact_two_phase(hgtest::triangle());
    CHECK(res.success_prob == Rational{0, 1});
    CHECK(res.failure_prob == Rational{1, 1});
}

TEST_CASE("success and failure sum to one exactly") {
    SplitMix64 rng(77);
    for (int rep = 0; rep < 20; ++rep) {
        const auto h = hgtest::random_instance(rng, 3, 6, 1, 5, 2, 3);
        const auto res = exact_two_phase(h);
        CHECK(res.success_prob + res.failure_prob == Rational{1, 1});
    }
}

TEST_CASE("greedy oracle basics and golden value") {
    CHECK(exact_greedy(hgtest::make(2, {{0, 1}})).success_prob == Rational{1, 1});
    CHECK(exact_greedy(hgtest::triangle()).success_prob == Rational{0, 1});
    // All six orders of the overlapping pair succeed (hand-enumerated).
    const auto res = exact_greedy(hgtest::path2());
    CHECK(res.success_prob == Rational{1, 1});
    CHECK(res.trace_count == 6);
}

TEST_CASE("parallel kernels match the serial references") {
    SplitMix64 rng(3131);
    for (int rep = 0; rep < 12; ++rep) {
        const auto h = hgtest::random_instance(rng, 3, 6, 1, 6, 2, 3);
        const auto a = exact_two_phase(h, EdgeIndex{0});
        const auto b = exact_two_phase_reference(h, EdgeIndex{0});
        CHECK(a.success_prob == b.success_prob);
        CHECK(a.failure_prob == b.failure_prob);
        CHECK(*a.edge_red_prob == *b.edge_red_prob);

        const auto ga = exact_greedy(h);
        const auto gb = exact_greedy_reference(h);
        CHECK(ga.success_prob == gb.success_prob);
    }
    const auto h7 = hgtest::random_instance(rng, 7, 7, 3, 7, 2, 4);
    CHECK(exact_two_phase(h7).success_prob == exact_two_phase_reference(h7).success_prob);
}

TEST_CASE("production recolor agrees with rank-weight runs") {
    // Both the oracle's rank substitution and the real-weight path must
    // produce the same trace for 100 random cases.
    SplitMix64 rng(414);
    for (int rep = 0; rep < 100; ++rep) {
        const auto h = hgtest::random_instance(rng, 3, 8, 1, 8, 2, 4);
        const auto init = sample_initial(h, rng.next());
        auto ranked = init;
        ranked.w = hgtest::rank_weights(order_by_weight(init.w));
        const auto a = recolor(h, init);
        const auto b = recolor(h, ranked);
        CHECK(a.final == b.final);
        CHECK(a.final_mono == b.final_mono);
    }
}

TEST_CASE("Monte Carlo estimates converge to the oracle") {
    SplitMix64 rng(515);
    for (int rep = 0; rep < 5; ++rep) {
        const auto h = hgtest::random_instance(rng, 3, 6, 1, 5, 2, 3);
        const double exact = exact_two_phase(h).success_prob.to_double();
        const auto mc = montecarlo(h, 100000, rng.next(), Procedure::TwoPhase);
        const double se = std::sqrt(exact * (1.0 - exact) / 100000.0);
        CHECK(std::abs(mc.estimate - exact) <= 4.0 * se + 1e-15);
    }
    for (int rep = 0; rep < 5; ++rep) {
        const auto h = hgtest::random_instance(rng, 3, 7, 1, 6, 2, 3);
        const double exact = exact_greedy(h).success_prob.to_double();
        const auto mc = montecarlo(h, 100000, rng.next(), Procedure::Greedy);
        const double se = std::sqrt(exact * (1.0 - exact) / 100000.0);
        CHECK(std::abs(mc.estimate - exact) <= 4.0 * se + 1e-15);
    }
}

TEST_CASE("rationals reduce") {
    CHECK(Rational::make(24, 48) == Rational{1, 2});
    CHECK(Rational::make(0, 48) == Rational{0, 1});
    CHECK((Rational{1, 6} + Rational{1, 3}) == Rational{1, 2});
}

}  // TEST_SUITE
