#include "hgcolor/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

#include "hgcolor/greedy.hpp"
#include "hgcolor/rng.hpp"
#include "hgcolor/two_phase.hpp"

namespace hgcolor {

namespace {

// Trials are accumulated per fixed-size block and the block partials folded
// in index order, so the summation order (and hence every emitted double)
// does not depend on how many threads ran the blocks.
constexpr std::uint64_t kTrialBlock = 1024;

bool trial_succeeds(const Hypergraph& h, std::uint64_t seed, Procedure procedure) {
    if (procedure == Procedure::Greedy) {
        return greedy_run(h, seed).failing_edges.empty();
    }
    const InitialState init = sample_initial(h, seed);
    return recolor(h, init).final_mono.empty();
}

double binomial_std_err(std::uint64_t successes, std::uint64_t trials) {
    const double p = static_cast<double>(successes) / static_cast<double>(trials);
    return std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

struct Welford {
    double sum = 0.0;
    double sum_sq = 0.0;

    void add(double v) {
        sum += v;
        sum_sq += v * v;
    }
    void merge(const Welford& o) {
        sum += o.sum;
        sum_sq += o.sum_sq;
    }
    Stat stat(std::uint64_t n) const {
        const double mean = sum / static_cast<double>(n);
        double var = 0.0;
        if (n > 1) {
            var = std::max(0.0, (sum_sq - sum * sum / static_cast<double>(n)) /
                                    static_cast<double>(n - 1));
        }
        return {mean, std::sqrt(var / static_cast<double>(n))};
    }
};

struct EventPartial {
    std::uint64_t successes = 0;
    Welford mono, y, d2, x, y_e;
    std::uint64_t flag_a = 0, flag_b = 0, flag_c = 0, flag_d = 0;
    std::map<std::uint64_t, std::pair<std::uint64_t, std::uint64_t>> hist;  // bin -> (samples, red)

    void merge(const EventPartial& o) {
        successes += o.successes;
        mono.merge(o.mono);
        y.merge(o.y);
        d2.merge(o.d2);
        x.merge(o.x);
        y_e.merge(o.y_e);
        flag_a += o.flag_a;
        flag_b += o.flag_b;
        flag_c += o.flag_c;
        flag_d += o.flag_d;
        for (const auto& [bin, sr] : o.hist) {
            auto& dst = hist[bin];
            dst.first += sr.first;
            dst.second += sr.second;
        }
    }
};

void run_event_trial(const Hypergraph& h, const HypergraphStats& hs,
                     const ThreatHypergraph* threat, const EventCampaignConfig& cfg,
                     std::uint64_t trial, EventPartial& acc) {
    const std::uint64_t seed = sub_seed(cfg.master_seed, trial);
    const InitialState init = sample_initial(h, seed);
    const EventReport rep = event_report(h, hs, init, cfg.alphas);
    acc.mono.add(static_cast<double>(rep.mono_count));
    acc.y.add(rep.y);
    acc.d2.add(rep.d2_total);
    acc.flag_a += rep.flags.a ? 1 : 0;
    acc.flag_b += rep.flags.b ? 1 : 0;
    acc.flag_c += rep.flags.c ? 1 : 0;
    acc.flag_d += rep.flags.d ? 1 : 0;

    const ColoringTrace trace = recolor(h, init);
    if (trace.final_mono.empty()) ++acc.successes;

    if (threat != nullptr) {
        const FocusReport focus =
            focus_report(h, *cfg.focal_edge, *threat, init, cfg.alphas, hs.q);
        acc.x.add(focus.x);
        acc.y_e.add(focus.y_e);
        const Edge& e = h.edge(*cfg.focal_edge);
        const bool e_red = std::all_of(e.begin(), e.end(), [&](VertexId v) {
            return trace.final[v] == Color::Red;
        });
        const auto bin = static_cast<std::uint64_t>(std::floor(focus.x / cfg.x_bin_width));
        auto& slot = acc.hist[bin];
        ++slot.first;
        if (e_red) ++slot.second;
    }
}

MonteCarloResult finish_event_result(const HypergraphStats& hs,
                                     const EventCampaignConfig& cfg, const EventPartial& sum) {
    MonteCarloResult res;
    res.trials = cfg.trials;
    res.successes = sum.successes;
    res.estimate = static_cast<double>(sum.successes) / static_cast<double>(cfg.trials);
    res.std_err = binomial_std_err(sum.successes, cfg.trials);
    res.mono = sum.mono.stat(cfg.trials);
    res.y = sum.y.stat(cfg.trials);
    res.d2 = sum.d2.stat(cfg.trials);
    res.rate_a = static_cast<double>(sum.flag_a) / static_cast<double>(cfg.trials);
    res.rate_b = static_cast<double>(sum.flag_b) / static_cast<double>(cfg.trials);
    res.rate_c = static_cast<double>(sum.flag_c) / static_cast<double>(cfg.trials);
    res.rate_d = static_cast<double>(sum.flag_d) / static_cast<double>(cfg.trials);
    res.ref_q = hs.q;
    res.ref_two_q = 2.0 * hs.q;
    if (hs.s_min) {
        res.ref_q_over_k = hs.q / static_cast<double>(*hs.s_min);
    }
    if (cfg.focal_edge) {
        res.x = sum.x.stat(cfg.trials);
        res.y_e = sum.y_e.stat(cfg.trials);
        res.x_bin_width = cfg.x_bin_width;
        for (const auto& [bin, sr] : sum.hist) {
            res.x_hist.push_back({bin, sr.first, sr.second});
        }
    }
    return res;
}

}  // namespace

MonteCarloResult montecarlo(const Hypergraph& h, std::uint64_t trials,
                            std::uint64_t master_seed, Procedure procedure, bool parallel) {
    if (trials == 0) {
        throw std::invalid_argument("trials must be >= 1");
    }
    const std::uint64_t nblocks = (trials + kTrialBlock - 1) / kTrialBlock;
    std::vector<std::uint64_t> block_successes(nblocks, 0);

#pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::int64_t b = 0; b < static_cast<std::int64_t>(nblocks); ++b) {
        const std::uint64_t lo = static_cast<std::uint64_t>(b) * kTrialBlock;
        const std::uint64_t hi = std::min(lo + kTrialBlock, trials);
        std::uint64_t acc = 0;
        for (std::uint64_t t = lo; t < hi; ++t) {
            if (trial_succeeds(h, sub_seed(master_seed, t), procedure)) ++acc;
        }
        block_successes[b] = acc;
    }

    MonteCarloResult res;
    res.trials = trials;
    for (std::uint64_t s : block_successes) res.successes += s;
    res.estimate = static_cast<double>(res.successes) / static_cast<double>(trials);
    res.std_err = binomial_std_err(res.successes, trials);
    return res;
}

MonteCarloResult montecarlo_reference(const Hypergraph& h, std::uint64_t trials,
                                      std::uint64_t master_seed, Procedure procedure) {
    if (trials == 0) {
        throw std::invalid_argument("trials must be >= 1");
    }
    MonteCarloResult res;
    res.trials = trials;
    for (std::uint64_t t = 0; t < trials; ++t) {
        if (trial_succeeds(h, sub_seed(master_seed, t), procedure)) ++res.successes;
    }
    res.estimate = static_cast<double>(res.successes) / static_cast<double>(trials);
    res.std_err = binomial_std_err(res.successes, trials);
    return res;
}

MonteCarloResult event_campaign(const Hypergraph& h, const EventCampaignConfig& cfg) {
    if (cfg.trials == 0) {
        throw std::invalid_argument("trials must be >= 1");
    }
    if (cfg.focal_edge && cfg.x_bin_width <= 0.0) {
        throw std::invalid_argument("x_bin_width must be positive");
    }
    const HypergraphStats hs = stats(h);
    ThreatHypergraph threat;
    if (cfg.focal_edge) threat = build_threat(h, *cfg.focal_edge);
    const ThreatHypergraph* threat_ptr = cfg.focal_edge ? &threat : nullptr;

    const std::uint64_t nblocks = (cfg.trials + kTrialBlock - 1) / kTrialBlock;
    std::vector<EventPartial> parts(nblocks);

#pragma omp parallel for schedule(dynamic) if (cfg.parallel)
    for (std::int64_t b = 0; b < static_cast<std::int64_t>(nblocks); ++b) {
        const std::uint64_t lo = static_cast<std::uint64_t>(b) * kTrialBlock;
        const std::uint64_t hi = std::min(lo + kTrialBlock, cfg.trials);
        EventPartial acc;
        for (std::uint64_t t = lo; t < hi; ++t) {
            run_event_trial(h, hs, threat_ptr, cfg, t, acc);
        }
        parts[b] = std::move(acc);
    }

    EventPartial sum;
    for (const EventPartial& p : parts) sum.merge(p);
    return finish_event_result(hs, cfg, sum);
}

MonteCarloResult event_campaign_reference(const Hypergraph& h, EventCampaignConfig cfg) {
    if (cfg.trials == 0) {
        throw std::invalid_argument("trials must be >= 1");
    }
    if (cfg.focal_edge && cfg.x_bin_width <= 0.0) {
        throw std::invalid_argument("x_bin_width must be positive");
    }
    const HypergraphStats hs = stats(h);
    ThreatHypergraph threat;
    if (cfg.focal_edge) threat = build_threat(h, *cfg.focal_edge);
    const ThreatHypergraph* threat_ptr = cfg.focal_edge ? &threat : nullptr;

    EventPartial sum;
    for (std::uint64_t t = 0; t < cfg.trials; ++t) {
        run_event_trial(h, hs, threat_ptr, cfg, t, sum);
    }
    return finish_event_result(hs, cfg, sum);
}

std::vector<EventSampleRow> event_samples(const Hypergraph& h, const EventCampaignConfig& cfg) {
    const HypergraphStats hs = stats(h);
    ThreatHypergraph threat;
    if (cfg.focal_edge) threat = build_threat(h, *cfg.focal_edge);

    std::vector<EventSampleRow> rows(cfg.trials);
#pragma omp parallel for schedule(dynamic, 256) if (cfg.parallel)
    for (std::int64_t t = 0; t < static_cast<std::int64_t>(cfg.trials); ++t) {
        EventSampleRow& row = rows[t];
        row.seed = sub_seed(cfg.master_seed, static_cast<std::uint64_t>(t));
        const InitialState init = sample_initial(h, row.seed);
        const EventReport rep = event_report(h, hs, init, cfg.alphas);
        row.mono_count = rep.mono_count;
        row.light_count = rep.light_edges.size();
        row.y = rep.y;
        row.d2 = rep.d2_total;
        row.flags = rep.flags;
        if (cfg.focal_edge) {
            const FocusReport focus =
                focus_report(h, *cfg.focal_edge, threat, init, cfg.alphas, hs.q);
            row.x = focus.x;
            row.y_e = focus.y_e;
        }
    }
    return rows;
}

namespace {

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt_opt(const std::optional<double>& v) { return v ? fmt_double(*v) : ""; }

void append_stat(std::string& out, const std::optional<Stat>& s) {
    out += ',';
    if (s) out += fmt_double(s->mean);
    out += ',';
    if (s) out += fmt_double(s->std_err);
}

}  // namespace

std::string montecarlo_csv_header() {
    return "experiment,seed,trials,estimate,std_err,"
           "mono_mean,mono_se,Y_mean,Y_se,D2_mean,D2_se,X_mean,X_se,Ye_mean,Ye_se,"
           "rateA,rateB,rateC,rateD,ref_q,ref_2q,ref_q_over_k\n";
}

std::string montecarlo_csv_row(const std::string& experiment_id, std::uint64_t seed,
                               const MonteCarloResult& r) {
    std::string out = experiment_id;
    out += ',' + std::to_string(seed);
    out += ',' + std::to_string(r.trials);
    out += ',' + fmt_double(r.estimate);
    out += ',' + fmt_double(r.std_err);
    append_stat(out, r.mono);
    append_stat(out, r.y);
    append_stat(out, r.d2);
    append_stat(out, r.x);
    append_stat(out, r.y_e);
    out += ',' + fmt_opt(r.rate_a);
    out += ',' + fmt_opt(r.rate_b);
    out += ',' + fmt_opt(r.rate_c);
    out += ',' + fmt_opt(r.rate_d);
    out += ',' + fmt_opt(r.ref_q);
    out += ',' + fmt_opt(r.ref_two_q);
    out += ',' + fmt_opt(r.ref_q_over_k);
    out += '\n';
    return out;
}

std::string event_samples_csv(const std::vector<EventSampleRow>& rows) {
    std::string out = "seed,mono_count,light_count,Y,D2,X,Ye,flagA,flagB,flagC,flagD\n";
    for (const EventSampleRow& r : rows) {
        out += std::to_string(r.seed);
        out += ',' + std::to_string(r.mono_count);
        out += ',' + std::to_string(r.light_count);
        out += ',' + fmt_double(r.y);
        out += ',' + fmt_double(r.d2);
        out += ',' + fmt_opt(r.x);
        out += ',' + fmt_opt(r.y_e);
        out += r.flags.a ? ",1" : ",0";
        out += r.flags.b ? ",1" : ",0";
        out += r.flags.c ? ",1" : ",0";
        out += r.flags.d ? ",1" : ",0";
        out += '\n';
    }
    return out;
}

std::string x_hist_csv(const MonteCarloResult& r) {
    std::string out = "x_lo,x_hi,samples,red_count,red_rate\n";
    for (const auto& bin : r.x_hist) {
        const double lo = static_cast<double>(bin.bin) * r.x_bin_width;
        out += fmt_double(lo);
        out += ',' + fmt_double(lo + r.x_bin_width);
        out += ',' + std::to_string(bin.samples);
        out += ',' + std::to_string(bin.red);
        out += ',' +
               fmt_double(static_cast<double>(bin.red) / static_cast<double>(bin.samples));
        out += '\n';
    }
    return out;
}

}  // namespace hgcolor
