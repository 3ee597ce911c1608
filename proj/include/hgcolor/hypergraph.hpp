#ifndef HGCOLOR_HYPERGRAPH_HPP
#define HGCOLOR_HYPERGRAPH_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hgcolor {

using VertexId = std::uint32_t;
using EdgeIndex = std::uint32_t;
using Edge = std::vector<VertexId>;  // strictly increasing vertex ids

enum class ValidationErrorKind {
    EdgeTooSmall,
    DuplicateVertex,
    VertexOutOfRange,
    EmptyVertexSet,
    MalformedHeader,
    NonIntegerToken,
    CountMismatch,
};

class ValidationError : public std::runtime_error {
public:
    ValidationError(ValidationErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ValidationErrorKind kind() const { return kind_; }

private:
    ValidationErrorKind kind_;
};

/// Finite nonuniform hypergraph on vertices 0..n-1. The edge sequence is a
/// multiset: the same vertex set may appear more than once, and q counts
/// each occurrence. Immutable after construction; safe to share across
/// threads.
class Hypergraph {
public:
    Hypergraph() = default;

    /// Normalizes and validates raw edges: sorts each edge, rejects edges
    /// with fewer than two distinct vertices, duplicate vertex ids inside
    /// an edge, and ids >= n.
    static Hypergraph validate(std::vector<Edge> raw_edges, VertexId n);

    VertexId vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(EdgeIndex i) const { return edges_[i]; }

    bool operator==(const Hypergraph& other) const = default;

private:
    Hypergraph(VertexId n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {}

    VertexId n_ = 0;
    std::vector<Edge> edges_;
};

/// Basic statistics: q(H) = sum over edges of 2^(1-|e|), split by size.
struct HypergraphStats {
    VertexId n = 0;
    std::size_t m = 0;
    std::optional<std::uint32_t> s_min;
    std::optional<std::uint32_t> s_max;
    double q = 0.0;
    std::map<std::uint32_t, double> q_profile;  // size j -> q_j
};

HypergraphStats stats(const Hypergraph& h);

/// .hg text format: optional '#' comment lines, then "n m", then m lines of
/// space-separated vertex ids. serialize() output is bit-exact: LF endings,
/// single spaces, no comments, no trailing whitespace.
Hypergraph parse(const std::string& text);
std::string serialize(const Hypergraph& h);

Hypergraph load_hg_file(const std::string& path);
void save_hg_file(const Hypergraph& h, const std::string& path);

}  // namespace hgcolor

#endif  // HGCOLOR_HYPERGRAPH_HPP
