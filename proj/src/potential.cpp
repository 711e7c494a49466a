#include "qotto/potential.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qotto/deformed_math.hpp"

namespace qotto {

void PotentialParams::validate() const {
    if (!(q > 0.0) || !std::isfinite(q))
        throw std::invalid_argument("q must be positive and finite");
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw std::invalid_argument("alpha must be positive and finite");
    if (!(delta >= 0.5) || !std::isfinite(delta))
        throw std::invalid_argument("delta must be >= 1/2 (well depth parameter)");
}

double potential(double x, const PotentialParams& p) {
    p.validate();
    const double depth = p.delta * p.delta - 0.25;
    return -0.5 * depth * inv_cosh_q_sq(p.alpha * x, p.q);
}

double potential_minimum_location(const PotentialParams& p) {
    p.validate();
    return std::log(p.q) / (2.0 * p.alpha);
}

double n_max(const PotentialParams& p) {
    p.validate();
    const double depth = p.delta * p.delta - 0.25;
    return std::sqrt(depth / (p.alpha * p.alpha * p.q * p.q) + 0.25) - 0.5;
}

Spectrum spectrum(const PotentialParams& p) {
    p.validate();
    const double nm = n_max(p);
    // ceil(nm) levels; an exact-integer nm would put level nm at E = 0, which
    // is not bound and is excluded by ceil.
    const int count = static_cast<int>(std::ceil(nm));
    if (count < 1) throw std::domain_error("no bound states: delta must exceed 1/2");
    Spectrum s;
    s.params = p;
    s.n_max_real = nm;
    s.energies.resize(count);
    const double w = nm + 0.5;
    const double pref = 0.5 * p.alpha * p.alpha;
    for (int n = 0; n < count; ++n) {
        const double d = (n + 0.5) - w;
        s.energies[n] = -pref * d * d;
    }
    return s;
}

int ReducedVariables::bound_levels() const {
    return static_cast<int>(std::ceil(w_tilde - 0.5));
}

ReducedVariables reduced_variables(const PotentialParams& p) {
    p.validate();
    ReducedVariables rv;
    rv.xi = (p.delta * p.delta - 0.25) / (p.alpha * p.alpha);
    rv.w_tilde = std::sqrt(0.25 + rv.xi / p.q);
    return rv;
}

double eigenvalue(int n, const PotentialParams& p) {
    const ReducedVariables rv = reduced_variables(p);
    if (n < 0 || n >= rv.bound_levels())
        throw std::out_of_range("level index outside the bound spectrum");
    const double nu = rv.nu(n);
    return -0.5 * p.alpha * p.alpha * nu * nu;
}

namespace {

// (1 - z)/2 with z = tanh_q(y), in a form stable for large |y|.
double half_one_minus_z(double y, double q) {
    if (y >= 0.0) {
        const double w = q * std::exp(-2.0 * y);
        return w / (1.0 + w);
    }
    const double w = std::exp(2.0 * y);
    return q / (w + q);
}

}  // namespace

double wavefunction(int n, double x, const PotentialParams& p) {
    const ReducedVariables rv = reduced_variables(p);
    if (n < 0 || n >= rv.bound_levels())
        throw std::out_of_range("level index outside the bound spectrum");
    const double nu = rv.nu(n);
    const double y = p.alpha * x;
    const double one_minus_z2 = p.q * inv_cosh_q_sq(y, p.q);  // 1 - z^2 = q/cosh_q^2
    const double envelope = std::pow(one_minus_z2, 0.5 * nu);
    const double w = rv.w_tilde;
    return envelope * hyp2f1_poly(n, -n + 2.0 * w, -n + w + 0.5, half_one_minus_z(y, p.q));
}

GridSpec GridSpec::default_for(const PotentialParams& p) {
    const double x0 = potential_minimum_location(p);
    const double half = 15.0 / p.alpha;
    return {x0 - half, x0 + half, 4001};
}

GridSpec GridSpec::for_level(const PotentialParams& p, int n) {
    const ReducedVariables rv = reduced_variables(p);
    if (n < 0 || n >= rv.bound_levels())
        throw std::out_of_range("level index outside the bound spectrum");
    const double x0 = potential_minimum_location(p);
    // Endpoint amplitude ~ e^{-nu * alpha * half}; 35/nu pushes it below 1e-15.
    const double half = std::max(15.0, 35.0 / rv.nu(n)) / p.alpha;
    int points = static_cast<int>(4001 * std::max(1.0, half * p.alpha / 15.0));
    points = std::min(points, 80001);
    if (points % 2 == 0) ++points;
    return {x0 - half, x0 + half, points};
}

double normalization_constant(int n, const PotentialParams& p, const GridSpec& grid) {
    if (grid.points < 3 || !(grid.x_max > grid.x_min))
        throw std::invalid_argument("grid must have x_min < x_max and >= 3 points");
    int m = grid.points;
    if (m % 2 == 0) ++m;  // Simpson needs an even interval count
    const double h = (grid.x_max - grid.x_min) / (m - 1);
    double integral = 0.0;
    double peak = 0.0;
    double first = 0.0, last = 0.0;
    for (int i = 0; i < m; ++i) {
        const double x = grid.x_min + i * h;
        const double psi = wavefunction(n, x, p);
        const double f = psi * psi;
        peak = std::max(peak, std::fabs(psi));
        if (i == 0) first = std::fabs(psi);
        if (i == m - 1) last = std::fabs(psi);
        const double weight = (i == 0 || i == m - 1) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
        integral += weight * f;
    }
    integral *= h / 3.0;
    if (peak <= 0.0 || !std::isfinite(integral))
        throw NumericalError("normalization: degenerate wavefunction sample");
    if (std::max(first, last) > 1e-5 * peak)
        throw NonConvergentTailError(
            "normalization: wavefunction has not decayed at the grid endpoints");
    return 1.0 / std::sqrt(integral);
}

double normalization_constant(int n, const PotentialParams& p) {
    return normalization_constant(n, p, GridSpec::for_level(p, n));
}

double schrodinger_residual(int n, const PotentialParams& p, double h) {
    if (!(h > 0.0)) throw std::invalid_argument("h must be positive");
    const ReducedVariables rv = reduced_variables(p);
    if (n < 0 || n >= rv.bound_levels())
        throw std::out_of_range("level index outside the bound spectrum");
    const double nu = rv.nu(n);
    const double energy = -0.5 * p.alpha * p.alpha * nu * nu;
    const double x0 = potential_minimum_location(p);
    const double half = std::max(12.0, 30.0 / nu) / p.alpha;
    const long m = std::lround(2.0 * half / h) + 1;

    double num = 0.0, den = 0.0;
    double psi_prev = wavefunction(n, x0 - half, p);
    double psi_cur = wavefunction(n, x0 - half + h, p);
    for (long i = 1; i + 1 < m; ++i) {
        const double x = x0 - half + i * h;
        const double psi_next = wavefunction(n, x + h, p);
        const double lap = (psi_next - 2.0 * psi_cur + psi_prev) / (h * h);
        const double r = -0.5 * lap + (potential(x, p) - energy) * psi_cur;
        num += r * r;
        den += psi_cur * psi_cur;
        psi_prev = psi_cur;
        psi_cur = psi_next;
    }
    if (den <= 0.0) throw NumericalError("residual: empty interior norm");
    return std::sqrt(num / den);
}

}  // namespace qotto
