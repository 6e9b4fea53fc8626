#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "multirisk/expansion.hpp"
#include "multirisk/simulate.hpp"
#include "test_support.hpp"

using namespace multirisk;

namespace {

ProbTable fair_coin() { return ProbTable::validate({0.5, 0.5}, {}); }
ProbTable biased_coin() { return ProbTable::validate({0.4, 0.6}, {}); }

ProbTable quad() {
    return ProbTable::validate({0.25, 0.25, 0.25, 0.25}, {{0, 1}, {2, 3}});
}

}  // namespace

TEST_CASE("exact full-model risk of a fair coin at tiny sample sizes") {
    // n=1: the estimate is a point mass either way, with divergence ln 2.
    CHECK(exact_risk(fair_coin(), ModelKind::Full, 1, DiscardPolicy::None) ==
          doctest::Approx(std::log(2.0)).epsilon(1e-12));
    // n=2: outcomes (2,0),(1,1),(0,2) have probabilities 1/4,1/2,1/4 and
    // divergences ln 2, 0, ln 2.
    CHECK(exact_risk(fair_coin(), ModelKind::Full, 2, DiscardPolicy::None) ==
          doctest::Approx(0.5 * std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("exact submodel risk with singleton groups is zero") {
    const ProbTable m = ProbTable::validate({0.2, 0.3, 0.5}, {{0}, {1}, {2}});
    CHECK(exact_risk(m, ModelKind::Submodel, 5, DiscardPolicy::SubmodelGroups) ==
          doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("exact enumeration refuses oversized state spaces") {
    std::vector<double> cells(10, 0.1);
    const ProbTable m = ProbTable::validate(cells, {});
    try {
        exact_risk(m, ModelKind::Full, 100, DiscardPolicy::None);
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(e.code() == Errc::TooLarge);
    }
}

TEST_CASE("exact risk approaches the closed-form expansion") {
    // For the (0.4, 0.6) coin the gap between the exact risk and
    // a/n + b/n^2 must vanish faster than 1/n^2.
    const RiskExpansion e = full_expansion(biased_coin());
    CHECK(e.first_order == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(e.second_order == doctest::Approx(19.0 / 72.0).epsilon(1e-12));
    double prev_gap = 1e9;
    for (const std::uint64_t n : {500ULL, 1000ULL, 2000ULL, 4000ULL}) {
        const double exact = exact_risk(biased_coin(), ModelKind::Full, n, DiscardPolicy::None);
        const double gap = std::abs(exact - eval_risk(e, n)) * static_cast<double>(n) *
                           static_cast<double>(n);
        CHECK(gap <= 1e-3);
        CHECK(gap < prev_gap);
        prev_gap = gap;
    }
}

TEST_CASE("simulated risk matches the exact risk") {
    SimConfig cfg;
    cfg.replicates = 100'000;
    cfg.seed = 99;
    cfg.workers = 4;

    const double exact_f = exact_risk(biased_coin(), ModelKind::Full, 50, DiscardPolicy::None);
    CHECK(exact_f == doctest::Approx(0.010109).epsilon(1e-5));
    const RiskEstimate est = simulate_risk(biased_coin(), ModelKind::Full, 50, cfg);
    CHECK(est.kept == cfg.replicates);
    CHECK(std::abs(est.mean - exact_f) <= 4.0 * est.std_error);

    // Submodel with discard-and-redraw against the conditioned exact risk.
    const double exact_s = exact_risk(quad(), ModelKind::Submodel, 6,
                                      DiscardPolicy::SubmodelGroups);
    const RiskEstimate sub = simulate_risk(quad(), ModelKind::Submodel, 6, cfg);
    CHECK(sub.kept == cfg.replicates);
    CHECK(sub.discarded > 0);
    CHECK(std::abs(sub.mean - exact_s) <= 4.0 * sub.std_error);
}

TEST_CASE("results are bit-identical across worker counts") {
    SimConfig cfg;
    cfg.replicates = 20'000;
    cfg.seed = 1234;
    cfg.workers = 1;
    const RiskEstimate one = simulate_risk(quad(), ModelKind::Submodel, 40, cfg);
    for (const unsigned w : {2u, 8u}) {
        cfg.workers = w;
        const RiskEstimate est = simulate_risk(quad(), ModelKind::Submodel, 40, cfg);
        CHECK(est.mean == one.mean);
        CHECK(est.std_error == one.std_error);
        CHECK(est.kept == one.kept);
        CHECK(est.discarded == one.discarded);
    }
}

TEST_CASE("changing the seed changes the draw") {
    SimConfig a;
    a.replicates = 1'000;
    a.seed = 1;
    SimConfig b = a;
    b.seed = 2;
    CHECK(simulate_risk(quad(), ModelKind::Full, 25, a).mean !=
          simulate_risk(quad(), ModelKind::Full, 25, b).mean);
}

TEST_CASE("discard bound values") {
    // Fair coin, two singleton groups: 2 * (1/2)^100.
    const ProbTable coin = ProbTable::validate({0.5, 0.5}, {{0}, {1}});
    CHECK(discard_probability_bound(coin, 100, DiscardPolicy::SubmodelGroups) ==
          doctest::Approx(1.5777218104420236e-30).epsilon(1e-12));

    // Two groups with sums 0.5 at n=1: the bound may exceed one.
    CHECK(discard_probability_bound(quad(), 1, DiscardPolicy::SubmodelGroups) ==
          doctest::Approx(1.0).epsilon(1e-14));

    // Per-cell conditioning sums over cells instead of groups.
    CHECK(discard_probability_bound(coin, 3, DiscardPolicy::AllCells) ==
          doctest::Approx(0.25).epsilon(1e-14));
    CHECK(discard_probability_bound(coin, 3, DiscardPolicy::None) == 0.0);
}

TEST_CASE("observed discard rate stays near the union bound") {
    // The rarest group drives the bound, so the union bound is nearly exact
    // here and the empirical rate should sit within binomial noise of it.
    const ProbTable m = ProbTable::validate({0.85, 0.1, 0.05}, {{0}, {1}, {2}});
    const double bound = discard_probability_bound(m, 50, DiscardPolicy::SubmodelGroups);
    SimConfig cfg;
    cfg.replicates = 50'000;
    cfg.seed = 7;
    cfg.workers = 4;
    const RiskEstimate est = simulate_risk(m, ModelKind::Submodel, 50, cfg);
    const std::uint64_t draws = est.kept + est.discarded;
    const double rate = static_cast<double>(est.discarded) / static_cast<double>(draws);
    const double se = std::sqrt(bound * (1.0 - bound) / static_cast<double>(draws));
    CHECK(rate <= bound + 4.0 * se);
}

TEST_CASE("all-singleton submodel simulates to exactly zero risk") {
    const ProbTable m = ProbTable::validate({0.2, 0.3, 0.5}, {{0}, {1}, {2}});
    SimConfig cfg;
    cfg.replicates = 2'000;
    cfg.seed = 5;
    const RiskEstimate est = simulate_risk(m, ModelKind::Submodel, 30, cfg);
    CHECK(est.mean == 0.0);
    CHECK(est.std_error == 0.0);
    CHECK(exact_risk(m, ModelKind::Submodel, 8, DiscardPolicy::SubmodelGroups) == 0.0);
}

TEST_CASE("infeasible sample sizes fail up front") {
    SimConfig cfg;
    cfg.replicates = 10;
    try {
        simulate_risk(quad(), ModelKind::Submodel, 1, cfg);
        FAIL("expected SimulationError");
    } catch (const SimulationError& e) {
        CHECK(e.code() == Errc::AllDiscarded);
    }
}

TEST_CASE("n times the simulated risk approaches the leading coefficient") {
    const ProbTable m = ProbTable::validate({0.3, 0.3, 0.2, 0.2}, {{0, 1}, {2, 3}});
    SimConfig cfg;
    cfg.replicates = 200'000;
    cfg.seed = 31;
    cfg.workers = 8;
    const RiskEstimate est = simulate_risk(m, ModelKind::Full, 4000, cfg);
    const double scaled = est.mean * 4000.0;
    CHECK(std::abs(scaled - 1.5) / 1.5 <= 0.05);
}
