#include "qotto/otto_cycle.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "qotto/deformed_math.hpp"
#include "qotto/thermo.hpp"

namespace qotto {

const char* to_string(Method m) {
    return m == Method::ClosedForm ? "closed" : "sum";
}

const char* to_string(Regime r) {
    switch (r) {
        case Regime::Engine: return "engine";
        case Regime::Refrigerator: return "refrigerator";
        case Regime::Heater: return "heater";
        case Regime::Accelerator: return "accelerator";
        case Regime::Idle: return "idle";
    }
    return "unknown";
}

void CycleConfig::validate() const {
    hot().validate();
    cold().validate();
    if (!(delta > 0.5)) throw std::invalid_argument("delta must exceed 1/2 for a bound ladder");
    if (!(t_c > 0.0) || !(t_h > t_c))
        throw std::invalid_argument("temperatures must satisfy t_h > t_c > 0");
    if (!(truncation_bound > 0.0))
        throw std::invalid_argument("truncation_bound must be positive");
}

ReducedCycleParams ReducedCycleParams::from(const CycleConfig& c) {
    c.validate();
    ReducedCycleParams r;
    r.beta_h = 1.0 / c.t_h;
    r.beta_c = 1.0 / c.t_c;
    r.p_h = 0.5 * c.alpha_h * c.alpha_h;
    r.p_c = 0.5 * c.alpha_c * c.alpha_c;
    r.sigma_h = -n_max(c.hot());
    r.sigma_c = -n_max(c.cold());
    return r;
}

namespace {

// The closed forms treat the level index as continuous: a thermal endpoint
// with parameters (beta, p, sigma) has ladder E(n) = -p (n + sigma)^2 and
// partition integral Z = int_0^{-sigma} e^{-beta E(n)} dn. Every expression
// below reduces to Dawson's function F via
//     e^{b sigma^2} / erfi(sqrt(b)|sigma|) = sqrt(pi) / (2 F(sqrt(b)|sigma|)),
// so ratios of exponentially large terms never overflow.

// Mean energy of a continuum thermal endpoint:
//   <E> = (1/2beta) [1 - y/F(y)],  y = sqrt(beta p) |sigma|.
double endpoint_mean_energy(double beta, double p, double sigma) {
    const double y = std::sqrt(beta * p) * (-sigma);
    return (1.0 - y / dawson(y)) / (2.0 * beta);
}

// Cross expectation int_0^{-sigma} E'(n) P(n) dn of a foreign ladder
// E'(n) = -p' (n + sigma')^2 against the thermal density of (beta, p, sigma):
//   -p' [ d^2 - 1/(2b) - (d + sigma/2) / (sqrt(b) F(y)) ],
// d = sigma' - sigma, b = beta p, y = sqrt(b) |sigma|.
double cross_energy(double p_other, double sigma_other, double beta, double p, double sigma) {
    const double b = beta * p;
    const double d = sigma_other - sigma;
    const double y = std::sqrt(b) * (-sigma);
    const double f = dawson(y);
    const double v = d * d - 1.0 / (2.0 * b) - (d + 0.5 * sigma) / (std::sqrt(b) * f);
    const double r = -p_other * v;
    if (!std::isfinite(r)) throw NumericalError("closed-form heat: non-finite intermediate");
    return r;
}

struct SumCycle {
    std::vector<double> e_hot, e_cold;  // common level set
    std::vector<double> pop_b, pop_d;   // renormalized populations at B and D
    double loss;
};

SumCycle build_sum_cycle(const CycleConfig& c) {
    c.validate();
    const Spectrum hot = spectrum(c.hot());
    const Spectrum cold = spectrum(c.cold());
    const ThermalState b_state = thermal_state(hot, c.t_h);
    const ThermalState d_state = thermal_state(cold, c.t_c);
    const std::size_t n = std::min(hot.energies.size(), cold.energies.size());

    auto tail = [n](const std::vector<double>& probs) {
        double t = 0.0;
        for (std::size_t i = n; i < probs.size(); ++i) t += probs[i];
        return t;
    };
    SumCycle sc;
    sc.loss = std::max(tail(b_state.probs), tail(d_state.probs));
    if (sc.loss > c.truncation_bound)
        throw TruncationError("level-set truncation loss exceeds bound", sc.loss);

    sc.e_hot.assign(hot.energies.begin(), hot.energies.begin() + n);
    sc.e_cold.assign(cold.energies.begin(), cold.energies.begin() + n);
    sc.pop_b.assign(b_state.probs.begin(), b_state.probs.begin() + n);
    sc.pop_d.assign(d_state.probs.begin(), d_state.probs.begin() + n);
    auto renorm = [](std::vector<double>& v) {
        double s = 0.0;
        for (double x : v) s += x;
        for (double& x : v) x /= s;
    };
    renorm(sc.pop_b);
    renorm(sc.pop_d);
    return sc;
}

}  // namespace

double q_hot_closed(const CycleConfig& c) {
    const auto r = ReducedCycleParams::from(c);
    return endpoint_mean_energy(r.beta_h, r.p_h, r.sigma_h) -
           cross_energy(r.p_h, r.sigma_h, r.beta_c, r.p_c, r.sigma_c);
}

double q_cold_closed(const CycleConfig& c) {
    const auto r = ReducedCycleParams::from(c);
    return endpoint_mean_energy(r.beta_c, r.p_c, r.sigma_c) -
           cross_energy(r.p_c, r.sigma_c, r.beta_h, r.p_h, r.sigma_h);
}

SumHeat q_hot_sum(const CycleConfig& c) {
    const SumCycle sc = build_sum_cycle(c);
    double q = 0.0;
    for (std::size_t i = 0; i < sc.e_hot.size(); ++i)
        q += sc.e_hot[i] * (sc.pop_b[i] - sc.pop_d[i]);
    return {q, sc.loss};
}

SumHeat q_cold_sum(const CycleConfig& c) {
    const SumCycle sc = build_sum_cycle(c);
    double q = 0.0;
    for (std::size_t i = 0; i < sc.e_cold.size(); ++i)
        q += sc.e_cold[i] * (sc.pop_d[i] - sc.pop_b[i]);
    return {q, sc.loss};
}

double work(const CycleConfig& c, Method m) {
    if (m == Method::ClosedForm) return q_hot_closed(c) + q_cold_closed(c);
    const SumCycle sc = build_sum_cycle(c);
    double w = 0.0;
    for (std::size_t i = 0; i < sc.e_hot.size(); ++i)
        w += (sc.e_hot[i] - sc.e_cold[i]) * (sc.pop_b[i] - sc.pop_d[i]);
    return w;
}

Regime classify_regime(double q_hot, double q_cold, double w, double tol) {
    if (std::fabs(w) <= tol) return Regime::Idle;
    if (w > tol) {
        if (q_hot > tol && q_cold < -tol) return Regime::Engine;
        return Regime::Idle;
    }
    if (q_cold > tol && q_hot < -tol) return Regime::Refrigerator;
    if (q_hot > tol && q_cold < -tol) return Regime::Accelerator;
    if (q_cold < -tol) return Regime::Heater;
    return Regime::Idle;
}

CycleResult evaluate_cycle(const CycleConfig& c, Method m) {
    CycleResult res;
    res.method = m;
    if (m == Method::ClosedForm) {
        res.q_hot = q_hot_closed(c);
        res.q_cold = q_cold_closed(c);
        res.work = res.q_hot + res.q_cold;
        res.truncation_loss = 0.0;
    } else {
        const SumCycle sc = build_sum_cycle(c);
        res.q_hot = 0.0;
        res.q_cold = 0.0;
        res.work = 0.0;
        for (std::size_t i = 0; i < sc.e_hot.size(); ++i) {
            const double dp = sc.pop_b[i] - sc.pop_d[i];
            res.q_hot += sc.e_hot[i] * dp;
            res.q_cold -= sc.e_cold[i] * dp;
            res.work += (sc.e_hot[i] - sc.e_cold[i]) * dp;
        }
        res.truncation_loss = sc.loss;
    }
    res.regime = classify_regime(res.q_hot, res.q_cold, res.work);
    if (res.regime == Regime::Engine) {
        const double eta = res.work / res.q_hot;
        if (m == Method::DiscreteSum) {
            const double carnot = 1.0 - c.t_c / c.t_h;
            if (eta > carnot + 1e-9)
                throw NumericalError("discrete-sum efficiency exceeds the Carnot bound");
        }
        res.efficiency = eta;
    } else if (res.regime == Regime::Refrigerator) {
        res.cop = res.q_cold / std::fabs(res.work);
    }
    return res;
}

double efficiency(const CycleConfig& c, Method m) {
    const CycleResult r = evaluate_cycle(c, m);
    if (r.regime != Regime::Engine)
        throw RegimeError("efficiency undefined: cycle is not operating as an engine");
    return *r.efficiency;
}

double cop(const CycleConfig& c, Method m) {
    const CycleResult r = evaluate_cycle(c, m);
    if (r.regime != Regime::Refrigerator)
        throw RegimeError("COP undefined: cycle is not operating as a refrigerator");
    return *r.cop;
}

}  // namespace qotto
