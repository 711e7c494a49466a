#pragma once

#include <vector>

#include "qotto/potential.hpp"

namespace qotto {

/// Canonical thermal state over a bound-state ladder (k_B = 1).
struct ThermalState {
    double beta;                // 1/T
    double log_z;               // ln of the exact partition sum
    double z_value;             // exp(log_z); +inf when outside double range
    std::vector<double> probs;  // P_n, aligned with Spectrum::energies
};

/// Exact finite sum Z = sum_n exp(-E_n/T). Every term exceeds 1 (all E_n < 0),
/// so Z > num_levels. Throws OverflowError when -E_0/T exceeds the exponent
/// range; use log_partition_sum or thermal_state in that regime.
double partition_sum(const Spectrum& s, double T);

/// ln Z computed with the ground term factored out; stable at any T > 0.
double log_partition_sum(const Spectrum& s, double T);

/// Closed-form continuum approximation
///   Z = sqrt(pi) (-erfi(sqrt(beta p) sigma)) / (2 sqrt(beta p)),
/// p = alpha^2/2, sigma = 1/2 - sqrt((delta^2-1/4)/(alpha^2 q^2) + 1/4) = -n_max.
/// Equals the integral of exp(-beta E(n)) over n in [0, n_max]; approaches the
/// exact sum (in free energy) as the ladder grows. Throws OverflowError when
/// the unscaled value exceeds double range.
double partition_closed(const PotentialParams& p, double T);

/// ln of partition_closed, overflow-free.
double log_partition_closed(const PotentialParams& p, double T);

/// Occupation probabilities P_n = exp(-E_n/T)/Z using the exact sum as the
/// normalizer; computed in ground-shifted form so any T > 0 is safe.
ThermalState thermal_state(const Spectrum& s, double T);

}  // namespace qotto
