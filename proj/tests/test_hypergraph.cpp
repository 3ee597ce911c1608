#include <doctest.h>

#include <cmath>
#include <functional>

#include "hgcolor/hypergraph.hpp"
#include "hgcolor/rng.hpp"
#include "test_helpers.hpp"

using namespace hgcolor;

namespace {

ValidationErrorKind kind_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const ValidationError& e) {
        return e.kind();
    }
    FAIL("expected ValidationError");
    return ValidationErrorKind::EdgeTooSmall;
}

}  // namespace

TEST_SUITE("hypergraph") {

TEST_CASE("validate accepts the minimal instance") {
    const auto h = Hypergraph::validate({{0, 1}}, 2);
    CHECK(h.vertex_count() == 2);
    CHECK(h.edge_count() == 1);
    CHECK(h.edge(0) == Edge{0, 1});
}

TEST_CASE("validate normalizes edge order") {
    const auto h = Hypergraph::validate({{2, 0, 1}}, 3);
    CHECK(h.edge(0) == Edge{0, 1, 2});
}

TEST_CASE("validate rejects bad edges") {
    CHECK(kind_of([] { Hypergraph::validate({{1, 1}}, 3); }) ==
          ValidationErrorKind::EdgeTooSmall);
    CHECK(kind_of([] { Hypergraph::validate({{0}}, 3); }) == ValidationErrorKind::EdgeTooSmall);
    CHECK(kind_of([] { Hypergraph::validate({{0, 2}}, 2); }) ==
          ValidationErrorKind::VertexOutOfRange);
    CHECK(kind_of([] { Hypergraph::validate({{0, 1, 1}}, 3); }) ==
          ValidationErrorKind::DuplicateVertex);
    CHECK(kind_of([] { Hypergraph::validate({{0, 1}}, 0); }) ==
          ValidationErrorKind::EmptyVertexSet);
}

TEST_CASE("duplicate edges across the sequence are kept") {
    const auto h = Hypergraph::validate({{0, 1}, {0, 1}}, 2);
    CHECK(h.edge_count() == 2);
    CHECK(stats(h).q == doctest::Approx(1.0));
}

TEST_CASE("stats on basic instances") {
    const auto single = hgtest::make(2, {{0, 1}});
    CHECK(stats(single).q == 0.5);

    const auto fano = hgtest::fano();
    const auto s = stats(fano);
    CHECK(s.q == 1.75);
    CHECK(s.s_min == 3);
    CHECK(s.s_max == 3);
    CHECK(s.m == 7);

    const auto empty = hgtest::make(4, {});
    const auto se = stats(empty);
    CHECK(se.q == 0.0);
    CHECK(!se.s_min.has_value());
    CHECK(!se.s_max.has_value());
}

TEST_CASE("q matches a per-edge summation in arbitrary order") {
    SplitMix64 rng(1234);
    for (int rep = 0; rep < 20; ++rep) {
        const auto h = hgtest::random_instance(rng, 4, 12, 1, 20, 2, 6);
        double fwd = 0.0, bwd = 0.0;
        for (const Edge& e : h.edges()) fwd += std::ldexp(1.0, 1 - static_cast<int>(e.size()));
        for (auto it = h.edges().rbegin(); it != h.edges().rend(); ++it) {
            bwd += std::ldexp(1.0, 1 - static_cast<int>(it->size()));
        }
        const double q = stats(h).q;
        CHECK(std::abs(q - fwd) <= 1e-12 * std::max(1.0, q));
        CHECK(std::abs(q - bwd) <= 1e-12 * std::max(1.0, q));
    }
}

TEST_CASE("q is additive over disjoint unions") {
    SplitMix64 rng(99);
    for (int rep = 0; rep < 10; ++rep) {
        const auto h1 = hgtest::random_instance(rng, 3, 8, 1, 8, 2, 5);
        const auto h2 = hgtest::random_instance(rng, 3, 8, 1, 8, 2, 5);
        std::vector<Edge> merged = h1.edges();
        for (Edge e : h2.edges()) {
            for (VertexId& v : e) v += h1.vertex_count();
            merged.push_back(std::move(e));
        }
        const auto u =
            Hypergraph::validate(std::move(merged), h1.vertex_count() + h2.vertex_count());
        const double lhs = stats(u).q;
        const double rhs = stats(h1).q + stats(h2).q;
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, rhs));
    }
}

TEST_CASE("uniform q is exact dyadic arithmetic up to size 50") {
    for (std::uint32_t j : {2u, 10u, 30u, 50u}) {
        std::vector<Edge> edges;
        for (int i = 0; i < 13; ++i) {
            Edge e(j);
            for (std::uint32_t t = 0; t < j; ++t) e[t] = t;
            edges.push_back(std::move(e));
        }
        const auto h = Hypergraph::validate(std::move(edges), j);
        CHECK(stats(h).q == 13.0 * std::ldexp(1.0, 1 - static_cast<int>(j)));
    }
}

TEST_CASE("parse basic") {
    const auto h = parse("2 1\n0 1\n");
    CHECK(h.vertex_count() == 2);
    CHECK(h.edge_count() == 1);
    CHECK(h.edge(0) == Edge{0, 1});
}

TEST_CASE("parse skips comments and validates") {
    const auto h = parse("# generated\n# q = 0.5\n3 2\n0 1\n1 2\n");
    CHECK(h.edge_count() == 2);
    CHECK(kind_of([] { parse("2 1\n0\n"); }) == ValidationErrorKind::EdgeTooSmall);
    CHECK(kind_of([] { parse("2\n"); }) == ValidationErrorKind::MalformedHeader);
    CHECK(kind_of([] { parse("2 1\n0 x\n"); }) == ValidationErrorKind::NonIntegerToken);
    CHECK(kind_of([] { parse("2 2\n0 1\n"); }) == ValidationErrorKind::CountMismatch);
    CHECK(kind_of([] { parse("2 1\n0 1\n0 1\n"); }) == ValidationErrorKind::CountMismatch);
}

TEST_CASE("serialize is bit-exact and round-trips") {
    const std::string text = "3 2\n0 1\n0 1 2\n";
    CHECK(serialize(parse(text)) == text);

    SplitMix64 rng(7);
    for (int rep = 0; rep < 20; ++rep) {
        const auto h = hgtest::random_instance(rng, 3, 10, 0, 10, 2, 5);
        CHECK(parse(serialize(h)) == h);
    }
}

}  // TEST_SUITE
