#ifndef HGCOLOR_ORACLE_HPP
#define HGCOLOR_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hgcolor/hypergraph.hpp"
#include "hgcolor/two_phase.hpp"

namespace hgcolor {

class TooLargeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact probability as a reduced fraction. Denominators divide 2^n * n!.
struct Rational {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    static Rational make(std::uint64_t num, std::uint64_t den);
    Rational operator+(const Rational& other) const;
    bool operator==(const Rational& other) const = default;
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

struct ExactResult {
    Rational success_prob;
    Rational failure_prob;                    // counted independently per trace
    std::optional<Rational> edge_red_prob;    // focal edge all red at the end
    std::uint64_t trace_count = 0;
};

/// Exhaustive two-colorability check (backtracking with unit propagation on
/// edges). Hard cap n <= 30.
std::pair<bool, std::optional<std::vector<Color>>> is_two_colorable(const Hypergraph& h);

/// Exact two-phase success probability over all 2^n initial colorings and
/// n! weight orders (both procedures depend on weights only through their
/// order, so enumerating orders is exact). n <= 8. The enumeration
/// partitions by the first vertex of each permutation; partitions run under
/// OpenMP and the counts merge by summation.
ExactResult exact_two_phase(const Hypergraph& h,
                            std::optional<EdgeIndex> focal_edge = std::nullopt,
                            bool parallel = true);

/// Straightforward single-threaded enumeration kept as a cross-check for
/// the bitmask kernel above.
ExactResult exact_two_phase_reference(const Hypergraph& h,
                                      std::optional<EdgeIndex> focal_edge = std::nullopt);

/// Exact greedy success probability over all n! orders. n <= 10.
ExactResult exact_greedy(const Hypergraph& h, bool parallel = true);
ExactResult exact_greedy_reference(const Hypergraph& h);

}  // namespace hgcolor

#endif  // HGCOLOR_ORACLE_HPP
