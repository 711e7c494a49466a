#pragma once

#include <optional>
#include <string>

#include "qotto/potential.hpp"

namespace qotto {

/// Evaluation route for the cycle quantities.
enum class Method { ClosedForm, DiscreteSum };

/// Sign-pattern taxonomy of (Q_h, Q_c, W).
enum class Regime { Engine, Refrigerator, Heater, Accelerator, Idle };

const char* to_string(Method m);
const char* to_string(Regime r);

/// Four-stroke quasi-static Otto cycle: hot isochore at width alpha_h and
/// temperature t_h, cold isochore at alpha_c and t_c, connected by adiabats
/// that carry the level populations unchanged. Heat signs are relative to the
/// working substance (positive = absorbed).
struct CycleConfig {
    double q;
    double delta;
    double alpha_h;  // width on the hot isochore
    double alpha_c;  // width on the cold isochore
    double t_h;
    double t_c;
    /// Maximum probability mass the DiscreteSum route may drop when the hot
    /// and cold ladders are cut to their common index set.
    double truncation_bound = 1e-3;

    void validate() const;
    PotentialParams hot() const { return {q, delta, alpha_h}; }
    PotentialParams cold() const { return {q, delta, alpha_c}; }
};

/// Derived per-cycle quantities: beta_x = 1/t_x, p_x = alpha_x^2/2 and
/// sigma_x = 1/2 - sqrt((delta^2 - 1/4)/(alpha_x^2 q^2) + 1/4) = -n_max,x < 0.
struct ReducedCycleParams {
    double beta_h, beta_c;
    double p_h, p_c;
    double sigma_h, sigma_c;

    static ReducedCycleParams from(const CycleConfig& c);
};

struct CycleResult {
    double q_hot;
    double q_cold;
    double work;  // = q_hot + q_cold (first law)
    std::optional<double> efficiency;  // populated only in the Engine regime
    std::optional<double> cop;         // populated only in the Refrigerator regime
    Regime regime;
    Method method;
    double truncation_loss;  // DiscreteSum only; 0 for ClosedForm
};

/// Heat exchanged with the hot reservoir, closed form (continuum ladder).
double q_hot_closed(const CycleConfig& c);

/// Heat exchanged with the cold reservoir, closed form.
double q_cold_closed(const CycleConfig& c);

struct SumHeat {
    double value;
    double truncation_loss;
};

/// Q_h = sum_n E_n^(h) [P_n^(B) - P_n^(D)] over the common level set of the
/// hot and cold ladders, both thermal distributions renormalized there.
/// Throws TruncationError when the dropped mass exceeds c.truncation_bound.
SumHeat q_hot_sum(const CycleConfig& c);

/// Q_c = sum_n E_n^(c) [P_n^(D) - P_n^(B)], same conventions.
SumHeat q_cold_sum(const CycleConfig& c);

/// Total work output. DiscreteSum evaluates
///   W = sum_n [E_n^(h) - E_n^(c)] [P_n^(B) - P_n^(D)]
/// directly; ClosedForm takes q_hot_closed + q_cold_closed.
double work(const CycleConfig& c, Method m);

/// Default dead band separating genuine idle points from rounding.
inline constexpr double kRegimeTol = 1e-10;

/// Sign table: Engine (W>0, Qh>0, Qc<0), Refrigerator (W<0, Qc>0, Qh<0),
/// Accelerator (W<0, Qh>0, Qc<0), Heater (remaining W<0 with Qc<0), Idle when
/// |W| <= tol or no pattern matches.
Regime classify_regime(double q_hot, double q_cold, double work, double tol = kRegimeTol);

/// W/Q_h. Throws RegimeError unless the cycle operates as an engine. For the
/// DiscreteSum route the value is additionally checked against the Carnot
/// bound 1 - t_c/t_h (violation raises NumericalError); the closed form is an
/// approximation and may exceed the bound where the ladder is short.
double efficiency(const CycleConfig& c, Method m);

/// Q_c/|W|, reported positive. Throws RegimeError unless refrigerating.
double cop(const CycleConfig& c, Method m);

/// Full cycle evaluation: heats, work, regime and the regime-conditional
/// figure of merit.
CycleResult evaluate_cycle(const CycleConfig& c, Method m);

}  // namespace qotto
