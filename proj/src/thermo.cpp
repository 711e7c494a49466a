#include "qotto/thermo.hpp"

#include <cmath>
#include <limits>

#include "qotto/deformed_math.hpp"

namespace qotto {

namespace {

void require_temperature(double T) {
    if (!(T > 0.0) || !std::isfinite(T))
        throw std::invalid_argument("temperature must be positive and finite");
}

void require_spectrum(const Spectrum& s) {
    if (s.energies.empty()) throw std::invalid_argument("spectrum has no levels");
}

}  // namespace

double partition_sum(const Spectrum& s, double T) {
    require_spectrum(s);
    require_temperature(T);
    double z = 0.0;
    for (double e : s.energies) z += std::exp(-e / T);
    if (!std::isfinite(z))
        throw OverflowError("partition_sum overflow: rescale by the ground term");
    return z;
}

double log_partition_sum(const Spectrum& s, double T) {
    require_spectrum(s);
    require_temperature(T);
    const double e0 = s.energies.front();
    double shifted = 0.0;
    for (double e : s.energies) shifted += std::exp(-(e - e0) / T);  // terms <= 1
    return -e0 / T + std::log(shifted);
}

double partition_closed(const PotentialParams& p, double T) {
    require_temperature(T);
    constexpr double kSqrtPi = 1.7724538509055160273;
    const double bp = 0.5 * p.alpha * p.alpha / T;  // beta * p
    const double y = std::sqrt(bp) * n_max(p);      // sqrt(beta p) * (-sigma)
    return kSqrtPi * erfi(y) / (2.0 * std::sqrt(bp));
}

double log_partition_closed(const PotentialParams& p, double T) {
    require_temperature(T);
    const double bp = 0.5 * p.alpha * p.alpha / T;
    const double y = std::sqrt(bp) * n_max(p);
    // Z = e^{y^2} dawson(y) / sqrt(beta p)
    return y * y + std::log(dawson(y)) - 0.5 * std::log(bp);
}

ThermalState thermal_state(const Spectrum& s, double T) {
    require_spectrum(s);
    require_temperature(T);
    ThermalState st;
    st.beta = 1.0 / T;
    const double e0 = s.energies.front();
    st.probs.resize(s.energies.size());
    double norm = 0.0;
    for (std::size_t i = 0; i < s.energies.size(); ++i) {
        st.probs[i] = std::exp(-(s.energies[i] - e0) / T);
        norm += st.probs[i];
    }
    for (double& p : st.probs) p /= norm;
    st.log_z = -e0 / T + std::log(norm);
    st.z_value = std::exp(st.log_z);  // may be +inf; log_z stays exact
    return st;
}

}  // namespace qotto
