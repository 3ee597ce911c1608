// Timing comparison between the serial reference implementations and the
// OpenMP kernels. Verifies that both paths agree before reporting speedups.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <string>

#include <omp.h>

#include <CLI11.hpp>

#include "hgcolor/generator.hpp"
#include "hgcolor/montecarlo.hpp"
#include "hgcolor/oracle.hpp"

namespace {

using Clock = std::chrono::steady_clock;

template <typename Fn>
double time_seconds(Fn&& fn) {
    const auto t0 = Clock::now();
    fn();
    const auto t1 = Clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

void report(const std::string& name, double serial_s, double parallel_s, bool agree) {
    std::printf("%-28s %10.3fs %10.3fs %8.2fx  %s\n", name.c_str(), serial_s, parallel_s,
                serial_s / parallel_s, agree ? "results agree" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial reference vs OpenMP kernel comparison"};
    std::uint64_t trials = 200000;
    std::uint32_t oracle_n = 8;
    app.add_option("--trials", trials, "Monte Carlo trials per campaign");
    app.add_option("--oracle-n", oracle_n, "vertex count for the exact oracle case (<=8)");
    CLI11_PARSE(app, argc, argv);

    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%-28s %11s %11s %9s\n", "case", "serial", "parallel", "speedup");

    const auto mc_instance =
        hgcolor::generate(hgcolor::GenSpec::mixture(60, {{3, 8}, {4, 8}, {5, 8}}, 7));
    {
        hgcolor::MonteCarloResult serial, parallel;
        const double ts = time_seconds([&] {
            serial = hgcolor::montecarlo_reference(mc_instance, trials, 42,
                                                   hgcolor::Procedure::TwoPhase);
        });
        const double tp = time_seconds([&] {
            parallel =
                hgcolor::montecarlo(mc_instance, trials, 42, hgcolor::Procedure::TwoPhase);
        });
        report("mc twophase", ts, tp, serial.successes == parallel.successes);
    }
    {
        hgcolor::MonteCarloResult serial, parallel;
        const double ts = time_seconds([&] {
            serial = hgcolor::montecarlo_reference(mc_instance, trials, 42,
                                                   hgcolor::Procedure::Greedy);
        });
        const double tp = time_seconds([&] {
            parallel =
                hgcolor::montecarlo(mc_instance, trials, 42, hgcolor::Procedure::Greedy);
        });
        report("mc greedy", ts, tp, serial.successes == parallel.successes);
    }
    {
        hgcolor::EventCampaignConfig cfg;
        cfg.trials = trials / 4;
        cfg.master_seed = 42;
        cfg.focal_edge = 0;
        hgcolor::MonteCarloResult parallel;
        auto serial_cfg = cfg;
        serial_cfg.parallel = false;
        hgcolor::MonteCarloResult serial;
        const double ts = time_seconds(
            [&] { serial = hgcolor::event_campaign_reference(mc_instance, serial_cfg); });
        const double tp =
            time_seconds([&] { parallel = hgcolor::event_campaign(mc_instance, cfg); });
        report("event campaign", ts, tp, serial.successes == parallel.successes);
    }

    const auto oracle_instance = hgcolor::generate(
        hgcolor::GenSpec::mixture(oracle_n, {{2, 2}, {3, 3}}, 11));
    {
        hgcolor::ExactResult serial, parallel;
        const double ts = time_seconds(
            [&] { serial = hgcolor::exact_two_phase_reference(oracle_instance, 0); });
        const double tp =
            time_seconds([&] { parallel = hgcolor::exact_two_phase(oracle_instance, 0); });
        report("oracle twophase n=" + std::to_string(oracle_n), ts, tp,
               serial.success_prob == parallel.success_prob);
    }
    {
        hgcolor::ExactResult serial, parallel;
        const double ts =
            time_seconds([&] { serial = hgcolor::exact_greedy_reference(oracle_instance); });
        const double tp =
            time_seconds([&] { parallel = hgcolor::exact_greedy(oracle_instance); });
        report("oracle greedy n=" + std::to_string(oracle_n), ts, tp,
               serial.success_prob == parallel.success_prob);
    }
    return 0;
}
