#include "hgcolor/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace hgcolor {

Hypergraph Hypergraph::validate(std::vector<Edge> raw_edges, VertexId n) {
    if (n == 0 && !raw_edges.empty()) {
        throw ValidationError(ValidationErrorKind::EmptyVertexSet,
                              "empty vertex set with nonempty edge list");
    }
    for (std::size_t i = 0; i < raw_edges.size(); ++i) {
        Edge& e = raw_edges[i];
        std::sort(e.begin(), e.end());
        const auto dup = std::adjacent_find(e.begin(), e.end());
        if (dup != e.end()) {
            // A duplicated id is always an error; when collapsing would leave
            // fewer than two vertices, report it as the size violation.
            const std::size_t distinct =
                static_cast<std::size_t>(std::unique(e.begin(), e.end()) - e.begin());
            if (distinct < 2) {
                throw ValidationError(ValidationErrorKind::EdgeTooSmall,
                                      "edge " + std::to_string(i) +
                                          " has fewer than 2 distinct vertices");
            }
            throw ValidationError(ValidationErrorKind::DuplicateVertex,
                                  "edge " + std::to_string(i) + " repeats vertex " +
                                      std::to_string(*dup));
        }
        if (e.size() < 2) {
            throw ValidationError(ValidationErrorKind::EdgeTooSmall,
                                  "edge " + std::to_string(i) + " has size " +
                                      std::to_string(e.size()));
        }
        if (e.back() >= n) {
            throw ValidationError(ValidationErrorKind::VertexOutOfRange,
                                  "edge " + std::to_string(i) + " contains vertex " +
                                      std::to_string(e.back()) + " >= n=" + std::to_string(n));
        }
    }
    return Hypergraph(n, std::move(raw_edges));
}

HypergraphStats stats(const Hypergraph& h) {
    HypergraphStats s;
    s.n = h.vertex_count();
    s.m = h.edge_count();
    std::map<std::uint32_t, std::size_t> counts;
    for (const Edge& e : h.edges()) {
        ++counts[static_cast<std::uint32_t>(e.size())];
    }
    for (const auto& [j, mj] : counts) {
        // 2^(1-j) is exact in binary floating point down to the denormal range.
        s.q_profile[j] = static_cast<double>(mj) * std::ldexp(1.0, 1 - static_cast<int>(j));
    }
    for (const auto& [j, qj] : s.q_profile) {
        s.q += qj;
    }
    if (!counts.empty()) {
        s.s_min = counts.begin()->first;
        s.s_max = counts.rbegin()->first;
    }
    return s;
}

namespace {

std::uint64_t parse_u64_token(const std::string& tok) {
    if (tok.empty()) {
        throw ValidationError(ValidationErrorKind::NonIntegerToken, "empty token");
    }
    for (char c : tok) {
        if (c < '0' || c > '9') {
            throw ValidationError(ValidationErrorKind::NonIntegerToken,
                                  "non-integer token '" + tok + "'");
        }
    }
    errno = 0;
    char* end = nullptr;
    const std::uint64_t v = std::strtoull(tok.c_str(), &end, 10);
    if (errno != 0 || end != tok.c_str() + tok.size()) {
        throw ValidationError(ValidationErrorKind::NonIntegerToken,
                              "integer out of range '" + tok + "'");
    }
    return v;
}

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

}  // namespace

Hypergraph parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    bool have_header = false;
    std::uint64_t n = 0, m = 0;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        const auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (!have_header) {
            if (toks.size() != 2) {
                throw ValidationError(ValidationErrorKind::MalformedHeader,
                                      "header must be 'n m', got '" + line + "'");
            }
            n = parse_u64_token(toks[0]);
            m = parse_u64_token(toks[1]);
            if (n > 0xFFFFFFFFULL) {
                throw ValidationError(ValidationErrorKind::MalformedHeader,
                                      "vertex count too large");
            }
            have_header = true;
            edges.reserve(m);
            continue;
        }
        if (edges.size() == m) {
            throw ValidationError(ValidationErrorKind::CountMismatch,
                                  "more edge lines than declared m=" + std::to_string(m));
        }
        Edge e;
        e.reserve(toks.size());
        for (const auto& tok : toks) {
            const std::uint64_t v = parse_u64_token(tok);
            if (v > 0xFFFFFFFFULL) {
                throw ValidationError(ValidationErrorKind::VertexOutOfRange,
                                      "vertex id too large '" + tok + "'");
            }
            e.push_back(static_cast<VertexId>(v));
        }
        edges.push_back(std::move(e));
    }
    if (!have_header) {
        throw ValidationError(ValidationErrorKind::MalformedHeader, "missing 'n m' header");
    }
    if (edges.size() != m) {
        throw ValidationError(ValidationErrorKind::CountMismatch,
                              "declared m=" + std::to_string(m) + " but found " +
                                  std::to_string(edges.size()) + " edge lines");
    }
    return Hypergraph::validate(std::move(edges), static_cast<VertexId>(n));
}

std::string serialize(const Hypergraph& h) {
    std::string out;
    out += std::to_string(h.vertex_count());
    out += ' ';
    out += std::to_string(h.edge_count());
    out += '\n';
    for (const Edge& e : h.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i > 0) out += ' ';
            out += std::to_string(e[i]);
        }
        out += '\n';
    }
    return out;
}

Hypergraph load_hg_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ValidationError(ValidationErrorKind::MalformedHeader,
                              "cannot open file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

void save_hg_file(const Hypergraph& h, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write file '" + path + "'");
    }
    out << serialize(h);
}

}  // namespace hgcolor
