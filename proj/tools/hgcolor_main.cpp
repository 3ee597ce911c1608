// hgcolor: experiment harness for randomized two-colorings of nonuniform
// hypergraphs. Subcommands: gen, stats, color, mc, events, bound, oracle.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hgcolor/bounds.hpp"
#include "hgcolor/events.hpp"
#include "hgcolor/generator.hpp"
#include "hgcolor/greedy.hpp"
#include "hgcolor/hypergraph.hpp"
#include "hgcolor/montecarlo.hpp"
#include "hgcolor/oracle.hpp"
#include "hgcolor/rng.hpp"
#include "hgcolor/two_phase.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitTooLarge = 3;

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file '" + path + "'");
    out << content;
}

std::vector<hgcolor::SizeCount> parse_profile(const std::vector<std::string>& entries) {
    std::vector<hgcolor::SizeCount> profile;
    for (const std::string& entry : entries) {
        const auto colon = entry.find(':');
        if (colon == std::string::npos) {
            throw hgcolor::ValidationError(hgcolor::ValidationErrorKind::NonIntegerToken,
                                           "profile entry must be size:count, got '" + entry +
                                               "'");
        }
        profile.push_back({static_cast<std::uint32_t>(std::stoul(entry.substr(0, colon))),
                           std::stoull(entry.substr(colon + 1))});
    }
    return profile;
}

const char* color_name(hgcolor::Color c) {
    return c == hgcolor::Color::Blue ? "blue" : "red";
}

int run(int argc, char** argv) {
    CLI::App app{"randomized two-coloring experiments on nonuniform hypergraphs"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a random instance and write .hg");
    std::uint32_t gen_n = 0, gen_k = 0;
    std::uint64_t gen_m = 0, gen_seed = 0;
    double gen_q_target = -1.0;
    std::vector<std::string> gen_profile_raw;
    std::vector<std::uint32_t> gen_sizes;
    std::string gen_out;
    gen->add_option("--n", gen_n, "vertex count")->required();
    gen->add_option("--seed", gen_seed, "master seed");
    gen->add_option("-k,--k", gen_k, "uniform: edge size");
    gen->add_option("-m,--m", gen_m, "uniform: edge count");
    gen->add_option("--profile", gen_profile_raw, "mixture: size:count entries");
    gen->add_option("--q-target", gen_q_target, "choose counts to approach this q");
    gen->add_option("--sizes", gen_sizes, "sizes used with --q-target");
    gen->add_option("-o,--output", gen_out, "output file (default stdout)");

    // stats
    auto* st = app.add_subcommand("stats", "print instance statistics");
    std::string stats_file;
    st->add_option("file", stats_file, ".hg input")->required();

    // color
    auto* color = app.add_subcommand("color", "run one coloring and report the outcome");
    std::string color_file, color_proc = "twophase";
    std::uint64_t color_seed = 0;
    bool color_trace = false;
    color->add_option("file", color_file, ".hg input")->required();
    color->add_option("--seed", color_seed, "seed");
    color->add_option("--procedure", color_proc, "twophase|greedy")
        ->check(CLI::IsMember({"twophase", "greedy"}));
    color->add_flag("--trace", color_trace, "emit per-vertex JSON lines");

    // mc
    auto* mc = app.add_subcommand("mc", "Monte Carlo success-rate campaign (CSV)");
    std::string mc_file, mc_proc = "twophase", mc_out, mc_id = "mc";
    std::uint64_t mc_trials = 10000, mc_seed = 0;
    mc->add_option("file", mc_file, ".hg input")->required();
    mc->add_option("--trials", mc_trials, "number of trials");
    mc->add_option("--seed", mc_seed, "master seed");
    mc->add_option("--procedure", mc_proc, "twophase|greedy")
        ->check(CLI::IsMember({"twophase", "greedy"}));
    mc->add_option("--experiment", mc_id, "experiment id column");
    mc->add_option("-o,--output", mc_out, "output CSV (default stdout)");

    // events
    auto* ev = app.add_subcommand("events", "per-sample bad-event statistics (CSV)");
    std::string ev_file, ev_out, ev_summary, ev_xhist;
    std::uint64_t ev_trials = 1000, ev_seed = 0;
    std::int64_t ev_edge = -1;
    double ev_bin_width = 0.05;
    hgcolor::AlphaParams ev_alphas;
    ev->add_option("file", ev_file, ".hg input")->required();
    ev->add_option("--trials", ev_trials, "number of samples");
    ev->add_option("--seed", ev_seed, "master seed");
    ev->add_option("--edge", ev_edge, "focal edge index for X / Y_e");
    ev->add_option("--alphaA", ev_alphas.a, "threshold for event A");
    ev->add_option("--alphaB", ev_alphas.b, "threshold for event B");
    ev->add_option("--alphaC", ev_alphas.c, "threshold for event C");
    ev->add_option("--alphaD", ev_alphas.d, "threshold for event D");
    ev->add_option("--bin-width", ev_bin_width, "X histogram bin width");
    ev->add_option("--xhist", ev_xhist, "write X-binned e-red frequencies to CSV");
    ev->add_option("--summary", ev_summary, "write aggregate campaign row to CSV");
    ev->add_option("-o,--output", ev_out, "per-sample CSV (default stdout)");

    // bound
    auto* bd = app.add_subcommand("bound", "evaluate closed-form bounds (CSV)");
    std::string bd_kind;
    std::uint32_t bd_k = 2, bd_K = 0, bd_s = 2;
    double bd_q = 1.0, bd_x = 0.0, bd_lambda = 0.0, bd_f0 = 0.0, bd_fM = 0.0;
    std::uint64_t bd_cap = 1;
    hgcolor::AlphaParams bd_alphas;
    bd->add_option("--kind", bd_kind, "simple|improved|greedy|uniform|envelope")
        ->required()
        ->check(CLI::IsMember({"simple", "improved", "greedy", "uniform", "envelope"}));
    bd->add_option("-k,--k", bd_k, "minimum edge size");
    bd->add_option("-K,--max-size", bd_K, "maximum edge size (greedy)");
    bd->add_option("-q,--q", bd_q, "q value");
    bd->add_option("-s,--s", bd_s, "focal edge size");
    bd->add_option("--x", bd_x, "statistic value (simple)");
    bd->add_option("--cap", bd_cap, "series cap (simple)");
    bd->add_option("--lambda", bd_lambda, "envelope lambda");
    bd->add_option("--f0", bd_f0, "envelope f(0)");
    bd->add_option("--fM", bd_fM, "envelope f(M)");
    bd->add_option("--alphaA", bd_alphas.a, "threshold for event A");
    bd->add_option("--alphaB", bd_alphas.b, "threshold for event B");
    bd->add_option("--alphaC", bd_alphas.c, "threshold for event C");
    bd->add_option("--alphaD", bd_alphas.d, "threshold for event D");

    // oracle
    auto* orc = app.add_subcommand("oracle", "exact enumeration probabilities");
    std::string orc_file, orc_proc = "twophase";
    std::int64_t orc_edge = -1;
    orc->add_option("file", orc_file, ".hg input")->required();
    orc->add_option("--edge", orc_edge, "focal edge (twophase)");
    orc->add_option("--procedure", orc_proc, "twophase|greedy")
        ->check(CLI::IsMember({"twophase", "greedy"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitValidation;
    }

    if (*gen) {
        hgcolor::GenSpec spec;
        if (!gen_profile_raw.empty()) {
            spec = hgcolor::GenSpec::mixture(gen_n, parse_profile(gen_profile_raw), gen_seed);
        } else if (gen_q_target >= 0.0) {
            if (gen_sizes.empty()) {
                std::cerr << "--q-target requires --sizes\n";
                return kExitValidation;
            }
            std::vector<hgcolor::SizeCount> profile;
            for (const auto& [j, mj] : hgcolor::target_q_counts(gen_q_target, gen_sizes)) {
                profile.push_back({j, mj});
            }
            spec = hgcolor::GenSpec::mixture(gen_n, std::move(profile), gen_seed);
        } else if (gen_k >= 2) {
            spec = hgcolor::GenSpec::uniform(gen_k, gen_n, gen_m, gen_seed);
        } else {
            std::cerr << "gen needs -k/-m, --profile, or --q-target/--sizes\n";
            return kExitValidation;
        }
        write_output(gen_out, hgcolor::serialize(hgcolor::generate(spec)));
        return 0;
    }

    if (*st) {
        const auto h = hgcolor::load_hg_file(stats_file);
        const auto s = hgcolor::stats(h);
        std::cout << "n " << s.n << "\n";
        std::cout << "m " << s.m << "\n";
        std::cout << "s_min " << (s.s_min ? std::to_string(*s.s_min) : "-") << "\n";
        std::cout << "s_max " << (s.s_max ? std::to_string(*s.s_max) : "-") << "\n";
        std::cout << "q " << s.q << "\n";
        for (const auto& [j, qj] : s.q_profile) {
            std::cout << "q_" << j << " " << qj << "\n";
        }
        return 0;
    }

    if (*color) {
        const auto h = hgcolor::load_hg_file(color_file);
        if (color_proc == "greedy") {
            const auto trace = hgcolor::greedy_run(h, color_seed);
            if (color_trace) {
                const auto w = hgcolor::sample_initial(h, color_seed).w;
                for (hgcolor::VertexId v = 0; v < h.vertex_count(); ++v) {
                    nlohmann::json rec{{"id", v},
                                       {"w", w[v]},
                                       {"c", color_name(trace.final[v])}};
                    std::cout << rec.dump() << "\n";
                }
            }
            std::cout << (trace.failing_edges.empty() ? "proper" : "failed") << " "
                      << trace.failing_edges.size() << " failing edges, "
                      << trace.forced_red.size() << " forced red\n";
            return 0;
        }
        const auto init = hgcolor::sample_initial(h, color_seed);
        const auto trace = hgcolor::recolor(h, init);
        if (color_trace) {
            for (hgcolor::VertexId v = 0; v < h.vertex_count(); ++v) {
                nlohmann::json rec{{"id", v},
                                   {"w", init.w[v]},
                                   {"ic", color_name(init.ic[v])},
                                   {"c", color_name(trace.final[v])},
                                   {"reasons", trace.reasons[v]}};
                std::cout << rec.dump() << "\n";
            }
        }
        std::cout << (trace.final_mono.empty() ? "proper" : "failed") << " "
                  << trace.initially_mono.size() << " initially monochromatic, "
                  << trace.recolored.size() << " recolored, " << trace.final_mono.size()
                  << " final monochromatic\n";
        return 0;
    }

    if (*mc) {
        const auto h = hgcolor::load_hg_file(mc_file);
        const auto procedure = mc_proc == "greedy" ? hgcolor::Procedure::Greedy
                                                   : hgcolor::Procedure::TwoPhase;
        const auto result = hgcolor::montecarlo(h, mc_trials, mc_seed, procedure);
        write_output(mc_out, hgcolor::montecarlo_csv_header() +
                                 hgcolor::montecarlo_csv_row(mc_id, mc_seed, result));
        return 0;
    }

    if (*ev) {
        const auto h = hgcolor::load_hg_file(ev_file);
        hgcolor::EventCampaignConfig cfg;
        cfg.trials = ev_trials;
        cfg.master_seed = ev_seed;
        cfg.alphas = ev_alphas;
        cfg.x_bin_width = ev_bin_width;
        if (ev_edge >= 0) {
            if (ev_edge >= static_cast<std::int64_t>(h.edge_count())) {
                std::cerr << "focal edge index out of range\n";
                return kExitValidation;
            }
            cfg.focal_edge = static_cast<hgcolor::EdgeIndex>(ev_edge);
        }
        if (!ev_xhist.empty() && !cfg.focal_edge) {
            std::cerr << "--xhist requires --edge\n";
            return kExitValidation;
        }
        write_output(ev_out, hgcolor::event_samples_csv(hgcolor::event_samples(h, cfg)));
        if (!ev_summary.empty() || !ev_xhist.empty()) {
            const auto result = hgcolor::event_campaign(h, cfg);
            if (!ev_summary.empty()) {
                write_output(ev_summary,
                             hgcolor::montecarlo_csv_header() +
                                 hgcolor::montecarlo_csv_row("events", ev_seed, result));
            }
            if (!ev_xhist.empty()) {
                write_output(ev_xhist, hgcolor::x_hist_csv(result));
            }
        }
        return 0;
    }

    if (*bd) {
        std::cout << "kind,k,K,q,s,x,cap,lambda,f0,fM,log_value,value,flags\n";
        auto row = [&](double log_value, double value, const std::string& flags) {
            std::cout << bd_kind << ',' << bd_k << ',' << bd_K << ',' << bd_q << ',' << bd_s
                      << ',' << bd_x << ',' << bd_cap << ',' << bd_lambda << ',' << bd_f0
                      << ',' << bd_fM << ',' << log_value << ',' << value << ',' << flags
                      << "\n";
        };
        if (bd_kind == "simple") {
            const auto eb = hgcolor::simple_edge_bound(bd_k, bd_q, bd_s, bd_alphas);
            row(eb.log_value, eb.value, "");
            if (bd_x > 0.0) {
                const auto cb = hgcolor::simple_conditional_bound(bd_x, bd_s, bd_cap);
                row(cb.truncated.log_value, cb.truncated.value, "truncated");
                row(cb.exponential.log_value, cb.exponential.value, "exponential");
            }
        } else if (bd_kind == "improved") {
            const auto ib = hgcolor::improved_edge_bound(bd_k, bd_q, bd_s, bd_alphas);
            row(ib.cosh_form.log_value, ib.cosh_form.value,
                ib.in_regime ? "cosh;in_regime" : "cosh");
            row(ib.exp_form.log_value, ib.exp_form.value,
                ib.in_regime ? "exp;in_regime" : "exp");
        } else if (bd_kind == "greedy") {
            const auto gb =
                hgcolor::greedy_failure_bound(bd_k, bd_K == 0 ? bd_k : bd_K, bd_q);
            row(gb.value.log_value, gb.value.value, "p=" + std::to_string(gb.p));
        } else if (bd_kind == "uniform") {
            const auto ub = hgcolor::uniform_edge_bound(bd_k, bd_q, bd_alphas.b);
            row(ub.value.log_value, ub.value.value,
                (ub.in_regime ? "in_regime;" : "") +
                    ("q_threshold=" + std::to_string(ub.q_threshold)));
        } else {  // envelope
            const double v = hgcolor::convex_envelope(bd_f0, bd_fM, bd_lambda);
            row(std::log(v), v, "");
        }
        return 0;
    }

    if (*orc) {
        const auto h = hgcolor::load_hg_file(orc_file);
        if (orc_proc == "greedy") {
            const auto res = hgcolor::exact_greedy(h);
            std::cout << "success_prob " << res.success_prob.str() << " "
                      << res.success_prob.to_double() << "\n";
            std::cout << "traces " << res.trace_count << "\n";
            return 0;
        }
        std::optional<hgcolor::EdgeIndex> focal;
        if (orc_edge >= 0) {
            if (orc_edge >= static_cast<std::int64_t>(h.edge_count())) {
                std::cerr << "focal edge index out of range\n";
                return kExitValidation;
            }
            focal = static_cast<hgcolor::EdgeIndex>(orc_edge);
        }
        const auto res = hgcolor::exact_two_phase(h, focal);
        std::cout << "success_prob " << res.success_prob.str() << " "
                  << res.success_prob.to_double() << "\n";
        if (res.edge_red_prob) {
            std::cout << "edge_red_prob " << res.edge_red_prob->str() << " "
                      << res.edge_red_prob->to_double() << "\n";
        }
        std::cout << "traces " << res.trace_count << "\n";
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const hgcolor::TooLargeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitTooLarge;
    } catch (const hgcolor::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const hgcolor::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
}
