#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "qotto/otto_cycle.hpp"

using namespace qotto;
using oracle::rel_err;

namespace {

CycleConfig fig4_config(double q, double delta) {
    return {q, delta, 1.118, 0.5, 5.0, 1.0, 1e-3};
}

}  // namespace

TEST_CASE("reduced cycle parameters") {
    const CycleConfig c = fig4_config(0.85, 4.5);
    const ReducedCycleParams r = ReducedCycleParams::from(c);
    CHECK(r.sigma_h < 0.0);
    CHECK(r.sigma_c < 0.0);
    CHECK(rel_err(-r.sigma_h, n_max(c.hot())) < 1e-15);
    CHECK(rel_err(-r.sigma_c, n_max(c.cold())) < 1e-15);
    // the caption widths equalize beta*p across the two isochores
    CHECK(rel_err(r.beta_h * r.p_h, r.beta_c * r.p_c) < 1e-3);
}

TEST_CASE("config validation") {
    CHECK_THROWS_AS(CycleConfig({1.0, 2.0, 1.0, 0.5, 1.0, 5.0, 1e-3}).validate(),
                    std::invalid_argument);  // t_h < t_c
    CHECK_THROWS_AS(CycleConfig({1.0, 0.4, 1.0, 0.5, 5.0, 1.0, 1e-3}).validate(),
                    std::invalid_argument);  // no bound ladder
    CHECK_NOTHROW(fig4_config(0.85, 4.5).validate());
}

TEST_CASE("degenerate strokes exchange nothing") {
    // identical spectra and temperatures: every heat vanishes
    CycleConfig c{0.9, 3.0, 0.7, 0.7, 2.0, 2.0 - 1e-12, 1.0};
    CHECK(std::fabs(q_hot_closed(c)) < 1e-10);
    CHECK(std::fabs(q_cold_closed(c)) < 1e-10);

    // identical spectra, distinct temperatures: zero work, termwise
    CycleConfig c2{0.9, 3.0, 0.7, 0.7, 5.0, 1.0, 1.0};
    CHECK(work(c2, Method::DiscreteSum) == 0.0);
    CHECK(std::fabs(work(c2, Method::ClosedForm)) < 1e-12);
    const CycleResult r = evaluate_cycle(c2, Method::DiscreteSum);
    CHECK(r.regime == Regime::Idle);
    CHECK_FALSE(r.efficiency.has_value());
}

TEST_CASE("closed-form heats: frozen values at the engine-map point") {
    const CycleConfig c = fig4_config(0.85, 4.5);
    const double qh = q_hot_closed(c);
    const double qc = q_cold_closed(c);
    CHECK(rel_err(qh, 2.9129523939258885) < 1e-12);
    CHECK(rel_err(qc, -1.3051211023745980) < 1e-12);
    CHECK(qh > 0.0);

    // hot heat agrees with the discrete route within the quoted band
    CycleConfig loose = c;
    loose.truncation_bound = 1.0;
    const SumHeat hs = q_hot_sum(loose);
    CHECK(rel_err(qh, hs.value) < 0.15);
}

TEST_CASE("discrete heats match an independently coded double-loop oracle") {
    CycleConfig c{1.0, 2.0, 1.118, 0.5, 5.0, 1.0, 1.0};
    const SumHeat qh = q_hot_sum(c);
    const SumHeat qc = q_cold_sum(c);
    CHECK(rel_err(qh.value, 0.12441326415950322) < 1e-13);
    CHECK(rel_err(qh.truncation_loss, 0.26684072655935266) < 1e-13);

    const oracle::BruteCycle b = oracle::brute_cycle(1.0, 2.0, 1.118, 0.5, 5.0, 1.0);
    CHECK(rel_err(qh.value, b.q_hot) < 1e-12);
    CHECK(rel_err(qc.value, b.q_cold) < 1e-12);

    std::mt19937 rng(29);
    oracle::ConfigSampler sampler(29);
    for (int i = 0; i < 50; ++i) {
        const CycleConfig rc = sampler.next();
        const oracle::BruteCycle ref =
            oracle::brute_cycle(rc.q, rc.delta, rc.alpha_h, rc.alpha_c, rc.t_h, rc.t_c);
        const CycleResult got = evaluate_cycle(rc, Method::DiscreteSum);
        CHECK(std::fabs(got.q_hot - ref.q_hot) < 1e-12 * std::max(1.0, std::fabs(ref.q_hot)));
        CHECK(std::fabs(got.q_cold - ref.q_cold) < 1e-12 * std::max(1.0, std::fabs(ref.q_cold)));
    }
}

TEST_CASE("first law: W = Q_h + Q_c for the discrete route") {
    oracle::ConfigSampler sampler(101);
    for (int i = 0; i < 100; ++i) {
        const CycleConfig c = sampler.next();
        const CycleResult r = evaluate_cycle(c, Method::DiscreteSum);
        CHECK(std::fabs(r.work - (r.q_hot + r.q_cold)) <=
              1e-12 * std::max(1.0, std::fabs(r.work)));
    }
    // closed route: work is the sum of the two closed heats by definition
    const CycleConfig c = fig4_config(0.82, 4.0);
    CHECK(work(c, Method::ClosedForm) == q_hot_closed(c) + q_cold_closed(c));
}

TEST_CASE("engine map: signs across the grid box") {
    for (int i = 0; i < 9; ++i) {
        for (int j = 0; j < 9; ++j) {
            const CycleConfig c = fig4_config(0.8 + 0.1 * j / 8.0, 3.7 + 1.3 * i / 8.0);
            const CycleResult r = evaluate_cycle(c, Method::ClosedForm);
            CHECK(r.q_hot > 0.0);
            CHECK(r.q_cold < 0.0);
            CHECK(r.work > 0.0);
            CHECK(r.regime == Regime::Engine);
        }
    }
}

TEST_CASE("engine map: work band and sign agreement between routes") {
    double wmin = 1e300, wmax = -1e300;
    for (int i = 0; i < 9; ++i) {
        for (int j = 0; j < 9; ++j) {
            const CycleConfig c = fig4_config(0.8 + 0.1 * j / 8.0, 3.7 + 1.3 * i / 8.0);
            const double w = work(c, Method::ClosedForm);
            wmin = std::min(wmin, w);
            wmax = std::max(wmax, w);
        }
    }
    CHECK(wmin >= 1.3);
    CHECK(wmax <= 1.9);

    std::mt19937 rng(31);
    std::uniform_real_distribution<double> uq(0.8, 0.9), ud(3.7, 5.0);
    int checked = 0;
    while (checked < 50) {
        CycleConfig c = fig4_config(uq(rng), ud(rng));
        CycleResult rs;
        try {
            rs = evaluate_cycle(c, Method::DiscreteSum);
        } catch (const TruncationError&) {
            continue;
        }
        ++checked;
        const CycleResult rc = evaluate_cycle(c, Method::ClosedForm);
        CHECK(std::signbit(rc.q_hot) == std::signbit(rs.q_hot));
        CHECK(std::signbit(rc.q_cold) == std::signbit(rs.q_cold));
        CHECK(std::signbit(rc.work) == std::signbit(rs.work));
    }
}

TEST_CASE("refrigerator map: signs and frozen values") {
    const CycleConfig c{0.9, 0.95, 1.118, 0.5, 5.0, 1.0, 1e-3};
    const CycleResult r = evaluate_cycle(c, Method::ClosedForm);
    CHECK(r.regime == Regime::Refrigerator);
    CHECK(rel_err(r.q_hot, -3.0229390133508622) < 1e-12);
    CHECK(rel_err(r.q_cold, 2.1241689814298725) < 1e-12);
    REQUIRE(r.cop.has_value());
    CHECK(rel_err(*r.cop, 2.3634176774783774) < 1e-12);

    for (int i = 0; i < 7; ++i) {
        for (int j = 0; j < 7; ++j) {
            const CycleConfig cc{0.8 + 0.2 * j / 6.0, 0.9 + 0.1 * i / 6.0, 1.118, 0.5,
                                 5.0,                 1.0,                 1e-3};
            const CycleResult rr = evaluate_cycle(cc, Method::ClosedForm);
            CHECK(rr.q_cold > 0.0);
            CHECK(rr.q_hot < 0.0);
            CHECK(rr.work < 0.0);
        }
    }
}

TEST_CASE("COP definition and frozen value") {
    const CycleConfig c{0.82, 0.98, 1.118, 0.5, 5.0, 1.0, 1e-3};
    const CycleResult r = evaluate_cycle(c, Method::ClosedForm);
    REQUIRE(r.regime == Regime::Refrigerator);
    REQUIRE(r.cop.has_value());
    CHECK(rel_err(*r.cop, r.q_cold / std::fabs(r.work)) < 1e-12);
    CHECK(rel_err(*r.cop, 2.5333988804792118) < 1e-12);
    CHECK(*r.cop > 0.0);
    CHECK(rel_err(cop(c, Method::ClosedForm), *r.cop) < 1e-15);
}

TEST_CASE("regime guards") {
    CycleConfig idle{0.9, 3.0, 0.7, 0.7, 5.0, 1.0, 1.0};
    CHECK_THROWS_AS(efficiency(idle, Method::DiscreteSum), RegimeError);
    CHECK_THROWS_AS(cop(idle, Method::DiscreteSum), RegimeError);
    // an engine point is not a refrigerator
    CHECK_THROWS_AS(cop(fig4_config(0.85, 4.5), Method::ClosedForm), RegimeError);
}

TEST_CASE("classify_regime sign table") {
    CHECK(classify_regime(1.6, -1.0, 0.6) == Regime::Engine);
    CHECK(classify_regime(-2.0, 1.5, -0.5) == Regime::Refrigerator);
    CHECK(classify_regime(0.5, -1.0, -0.5) == Regime::Accelerator);
    CHECK(classify_regime(-0.5, -0.5, -1.0) == Regime::Heater);
    const double eps = 1e-6;
    CHECK(classify_regime(eps / 2, -eps / 2, 1e-9, eps) == Regime::Idle);
    CHECK(classify_regime(0.0, 0.0, 0.0) == Regime::Idle);
}

TEST_CASE("Carnot bound holds on the discrete route") {
    oracle::ConfigSampler sampler(211);
    int engines = 0;
    for (int i = 0; i < 400 && engines < 120; ++i) {
        const CycleConfig c = sampler.next();
        const CycleResult r = evaluate_cycle(c, Method::DiscreteSum);  // throws past the bound
        if (r.regime != Regime::Engine) continue;
        ++engines;
        CHECK(*r.efficiency <= 1.0 - c.t_c / c.t_h + 1e-9);
        CHECK(*r.efficiency > 0.0);
    }
    CHECK(engines > 50);
}

TEST_CASE("closed heats match direct quadrature of the continuum integrals") {
    // Deep enough that every thermal endpoint decays well inside its ladder;
    // the dawson-form evaluation then agrees with brute-force quadrature of
    //   <E'> = int_0^{-sigma} E'(n) e^{-beta E(n)} dn / int_0^{-sigma} e^{-beta E(n)} dn.
    const CycleConfig c{0.85, 16.0, 1.118, 0.5, 5.0, 1.0, 1e-3};
    const ReducedCycleParams r = ReducedCycleParams::from(c);
    auto endpoint = [](double beta, double p, double sigma, double pp, double sigp,
                       int points) {
        auto weight = [=](double n) { return std::exp(beta * p * (n + sigma) * (n + sigma)); };
        const double z = oracle::simpson(weight, 0.0, -sigma, points);
        const double own = oracle::simpson(
            [&](double n) { return -p * (n + sigma) * (n + sigma) * weight(n); }, 0.0, -sigma,
            points);
        const double cross = oracle::simpson(
            [&](double n) { return -pp * (n + sigp) * (n + sigp) * weight(n); }, 0.0, -sigma,
            points);
        return std::pair{own / z, cross / z};
    };
    const auto [mean_h, cross_cold_in_hot] =
        endpoint(r.beta_h, r.p_h, r.sigma_h, r.p_c, r.sigma_c, 200001);
    const auto [mean_c, cross_hot_in_cold] =
        endpoint(r.beta_c, r.p_c, r.sigma_c, r.p_h, r.sigma_h, 200001);
    const double qh_ref = mean_h - cross_hot_in_cold;
    const double qc_ref = mean_c - cross_cold_in_hot;
    CHECK(oracle::rel_err(q_hot_closed(c), qh_ref) < 1e-6);
    CHECK(oracle::rel_err(q_cold_closed(c), qc_ref) < 1e-6);
}

TEST_CASE("closed forms stay finite for deep wells and cold baths") {
    // beta p sigma^2 far beyond the exponent range of e^x; the dawson-based
    // evaluation never forms the unscaled exponentials
    const CycleConfig c{0.85, 12.0, 1.118, 0.5, 5.0, 0.01, 1e-3};
    const double qh = q_hot_closed(c);
    const double qc = q_cold_closed(c);
    CHECK(std::isfinite(qh));
    CHECK(std::isfinite(qc));
    CHECK(std::isfinite(qh + qc));
}

TEST_CASE("truncation guard") {
    // shallow-well refrigerator point: the common level set drops ~half the
    // cold distribution, far past the default bound
    CycleConfig c{0.9, 0.95, 1.118, 0.5, 5.0, 1.0, 1e-3};
    CHECK_THROWS_AS(q_hot_sum(c), TruncationError);
    c.truncation_bound = 1.0;
    const SumHeat h = q_hot_sum(c);
    CHECK(h.truncation_loss > 0.1);
    try {
        CycleConfig strict = c;
        strict.truncation_bound = 1e-3;
        q_hot_sum(strict);
        CHECK(false);
    } catch (const TruncationError& e) {
        CHECK(e.loss == doctest::Approx(h.truncation_loss).epsilon(1e-12));
    }
}
