#ifndef HGCOLOR_MONTECARLO_HPP
#define HGCOLOR_MONTECARLO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hgcolor/events.hpp"
#include "hgcolor/hypergraph.hpp"

namespace hgcolor {

enum class Procedure { TwoPhase, Greedy };

struct Stat {
    double mean = 0.0;
    double std_err = 0.0;
};

/// Aggregated outcome of a seeded campaign. Trial i always draws from
/// sub_seed(master_seed, i), and partial sums are folded in a fixed block
/// order, so the result is bit-identical for any worker count.
struct MonteCarloResult {
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    double estimate = 0.0;
    double std_err = 0.0;  // sqrt(p(1-p)/trials)

    // Populated by event campaigns only.
    std::optional<Stat> mono;
    std::optional<Stat> y;
    std::optional<Stat> d2;
    std::optional<Stat> x;    // requires a focal edge
    std::optional<Stat> y_e;  // requires a focal edge
    std::optional<double> rate_a, rate_b, rate_c, rate_d;

    // Reference values emitted alongside event campaigns.
    std::optional<double> ref_q, ref_two_q, ref_q_over_k;

    /// Focal-edge histogram: samples and e-all-red outcomes per X bin.
    struct XBin {
        std::uint64_t bin = 0;  // X in [bin*width, (bin+1)*width)
        std::uint64_t samples = 0;
        std::uint64_t red = 0;
    };
    std::vector<XBin> x_hist;
    double x_bin_width = 0.0;
};

MonteCarloResult montecarlo(const Hypergraph& h, std::uint64_t trials,
                            std::uint64_t master_seed, Procedure procedure,
                            bool parallel = true);

/// Plain single loop over trials; the independent reference for the blocked
/// kernel above (integer counts agree exactly, floating means to rounding).
MonteCarloResult montecarlo_reference(const Hypergraph& h, std::uint64_t trials,
                                      std::uint64_t master_seed, Procedure procedure);

struct EventCampaignConfig {
    std::uint64_t trials = 0;
    std::uint64_t master_seed = 0;
    AlphaParams alphas;
    std::optional<EdgeIndex> focal_edge;
    double x_bin_width = 0.05;
    bool parallel = true;
};

MonteCarloResult event_campaign(const Hypergraph& h, const EventCampaignConfig& cfg);
MonteCarloResult event_campaign_reference(const Hypergraph& h, EventCampaignConfig cfg);

/// One row per sample for the events CSV: seed, mono_count, |light|, Y, D2,
/// X, Y_e, flags.
struct EventSampleRow {
    std::uint64_t seed = 0;
    std::uint64_t mono_count = 0;
    std::uint64_t light_count = 0;
    double y = 0.0;
    double d2 = 0.0;
    std::optional<double> x;
    std::optional<double> y_e;
    EventFlags flags;
};

std::vector<EventSampleRow> event_samples(const Hypergraph& h, const EventCampaignConfig& cfg);

/// Deterministic CSV rendering (header mandatory, stable column order,
/// lossless %.17g doubles).
std::string montecarlo_csv_header();
std::string montecarlo_csv_row(const std::string& experiment_id, std::uint64_t seed,
                               const MonteCarloResult& result);
std::string event_samples_csv(const std::vector<EventSampleRow>& rows);
std::string x_hist_csv(const MonteCarloResult& result);

}  // namespace hgcolor

#endif  // HGCOLOR_MONTECARLO_HPP
