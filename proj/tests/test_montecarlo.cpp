#include <doctest.h>

#include <cmath>

#include <omp.h>

#include "hgcolor/generator.hpp"
#include "hgcolor/montecarlo.hpp"
#include "test_helpers.hpp"

using namespace hgcolor;

TEST_SUITE("montecarlo") {

TEST_CASE("degenerate instances give exact estimates") {
    const auto single = hgtest::make(2, {{0, 1}});
    CHECK(montecarlo(single, 5000, 3, Procedure::TwoPhase).estimate == 1.0);
    CHECK(montecarlo(single, 5000, 3, Procedure::Greedy).estimate == 1.0);

    const auto tri = hgtest::triangle();
    CHECK(montecarlo(tri, 5000, 3, Procedure::TwoPhase).estimate == 0.0);
    CHECK(montecarlo(tri, 5000, 3, Procedure::Greedy).estimate == 0.0);
}

TEST_CASE("estimate hits the known 3/4 on the overlapping pair") {
    const auto mc = montecarlo(hgtest::path2(), 100000, 99, Procedure::TwoPhase);
    const double se = std::sqrt(0.75 * 0.25 / 100000.0);
    CHECK(std::abs(mc.estimate - 0.75) <= 5.0 * se);
}

TEST_CASE("parallel kernel reproduces the serial reference") {
    const auto h = generate(GenSpec::mixture(24, {{2, 4}, {3, 8}}, 5));
    const auto par = montecarlo(h, 20000, 17, Procedure::TwoPhase);
    const auto ref = montecarlo_reference(h, 20000, 17, Procedure::TwoPhase);
    CHECK(par.successes == ref.successes);
    CHECK(par.estimate == ref.estimate);

    EventCampaignConfig cfg;
    cfg.trials = 8000;
    cfg.master_seed = 23;
    cfg.focal_edge = 0;
    const auto epar = event_campaign(h, cfg);
    const auto eref = event_campaign_reference(h, cfg);
    CHECK(epar.successes == eref.successes);
    CHECK(*epar.rate_a == *eref.rate_a);
    CHECK(epar.mono->mean == doctest::Approx(eref.mono->mean).epsilon(1e-12));
    CHECK(epar.y->mean == doctest::Approx(eref.y->mean).epsilon(1e-12));
    CHECK(epar.d2->mean == doctest::Approx(eref.d2->mean).epsilon(1e-12));
    CHECK(epar.x->mean == doctest::Approx(eref.x->mean).epsilon(1e-12));
    CHECK(epar.y_e->mean == doctest::Approx(eref.y_e->mean).epsilon(1e-12));
    REQUIRE(epar.x_hist.size() == eref.x_hist.size());
    for (std::size_t i = 0; i < epar.x_hist.size(); ++i) {
        CHECK(epar.x_hist[i].bin == eref.x_hist[i].bin);
        CHECK(epar.x_hist[i].samples == eref.x_hist[i].samples);
        CHECK(epar.x_hist[i].red == eref.x_hist[i].red);
    }
}

TEST_CASE("CSV output is byte-identical across worker counts") {
    const auto h = generate(GenSpec::mixture(20, {{2, 3}, {3, 6}}, 5));
    const int saved = omp_get_max_threads();
    std::vector<std::string> outputs;
    for (int threads : {1, 2, 7}) {
        omp_set_num_threads(threads);
        const auto mc = montecarlo(h, 30000, 4242, Procedure::TwoPhase);
        EventCampaignConfig cfg;
        cfg.trials = 6000;
        cfg.master_seed = 4242;
        cfg.focal_edge = 1;
        const auto ev = event_campaign(h, cfg);
        outputs.push_back(montecarlo_csv_header() + montecarlo_csv_row("det", 4242, mc) +
                          montecarlo_csv_row("det-ev", 4242, ev) + x_hist_csv(ev));
    }
    omp_set_num_threads(saved);
    CHECK(outputs[0] == outputs[1]);
    CHECK(outputs[0] == outputs[2]);
}

TEST_CASE("splitting trials across workers merges exactly") {
    // The fixed block structure makes any split equivalent to one worker.
    const auto h = hgtest::path2();
    const int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    const auto one = montecarlo(h, 12345, 7, Procedure::TwoPhase);
    omp_set_num_threads(8);
    const auto many = montecarlo(h, 12345, 7, Procedure::TwoPhase);
    omp_set_num_threads(saved);
    CHECK(one.successes == many.successes);
    CHECK(one.estimate == many.estimate);
    CHECK(one.std_err == many.std_err);
}

TEST_CASE("event campaign tracks expectations on a q = 3 instance") {
    const auto h = generate(GenSpec::mixture(9, {{3, 12}}, 7));
    REQUIRE(stats(h).q == 3.0);
    EventCampaignConfig cfg;
    cfg.trials = 20000;
    cfg.master_seed = 11;
    cfg.focal_edge = 0;
    const auto res = event_campaign(h, cfg);
    CHECK(std::abs(res.mono->mean - 3.0) <= 5.0 * res.mono->std_err);
    CHECK(std::abs(res.d2->mean - 6.0) <= 5.0 * res.d2->std_err);
    CHECK(res.y->mean <= 6.0 + 5.0 * res.y->std_err);
    CHECK(res.y_e->mean < 1.0 + 5.0 * res.y_e->std_err);
    CHECK(*res.ref_q == 3.0);
    CHECK(*res.ref_two_q == 6.0);
    CHECK(*res.ref_q_over_k == 1.0);
}

TEST_CASE("per-sample rows are deterministic and carry the focal columns") {
    const auto h = hgtest::path2();
    EventCampaignConfig cfg;
    cfg.trials = 500;
    cfg.master_seed = 31;
    cfg.focal_edge = 1;
    const auto rows_a = event_samples(h, cfg);
    const auto rows_b = event_samples(h, cfg);
    REQUIRE(rows_a.size() == 500);
    CHECK(event_samples_csv(rows_a) == event_samples_csv(rows_b));
    for (const auto& row : rows_a) {
        CHECK(row.x.has_value());
        CHECK(row.y_e.has_value());
    }

    cfg.focal_edge.reset();
    const auto rows_c = event_samples(h, cfg);
    CHECK(!rows_c[0].x.has_value());
}

TEST_CASE("x histogram counts every focal sample once") {
    const auto h = generate(GenSpec::mixture(10, {{2, 2}, {3, 4}}, 13));
    EventCampaignConfig cfg;
    cfg.trials = 4000;
    cfg.master_seed = 19;
    cfg.focal_edge = 0;
    const auto res = event_campaign(h, cfg);
    std::uint64_t samples = 0, reds = 0;
    for (const auto& bin : res.x_hist) {
        samples += bin.samples;
        reds += bin.red;
    }
    CHECK(samples == cfg.trials);
    CHECK(reds <= samples);
}

TEST_CASE("trials must be positive") {
    CHECK_THROWS_AS(montecarlo(hgtest::path2(), 0, 1, Procedure::TwoPhase),
                    std::invalid_argument);
}

}  // TEST_SUITE
