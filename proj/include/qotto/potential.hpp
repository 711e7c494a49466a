#pragma once

#include <vector>

#include "qotto/errors.hpp"

namespace qotto {

/// One working-substance configuration: deformation q, well-depth parameter
/// delta and width parameter alpha, in natural units (hbar = mu = k_B = 1).
struct PotentialParams {
    double q;      // deformation, > 0
    double delta;  // well depth, > 1/2 for bound states
    double alpha;  // inverse width, > 0

    /// Validates q > 0, alpha > 0, delta >= 1/2. The boundary delta = 1/2
    /// (vanishing well) is admitted for potential evaluation only.
    void validate() const;
};

/// U_q(x) = -(delta^2 - 1/4) / (2 cosh_q^2(alpha x)).
/// Range [U_min, 0) with U_min = -(delta^2 - 1/4)/(2q) at x* = ln(q)/(2 alpha).
double potential(double x, const PotentialParams& p);

/// Location of the potential minimum, x* = ln(q)/(2 alpha).
double potential_minimum_location(const PotentialParams& p);

/// Real-valued upper bound of the level ladder,
///   n_max = sqrt((delta^2 - 1/4)/(alpha^2 q^2) + 1/4) - 1/2.
/// floor(n_max) + 1 levels exist (one fewer when n_max is an exact integer,
/// since a level pinned at E = 0 is not bound).
double n_max(const PotentialParams& p);

/// The finite ladder of bound-state energies,
///   E_n = -(alpha^2/2) [(n + 1/2) - w]^2,  w = n_max + 1/2,
/// strictly increasing and strictly negative. This ladder carries the
/// deformation through the 1/q^2 rescaling of n_max and is the one the
/// closed-form thermodynamics (partition function, cycle heats) is built on.
struct Spectrum {
    PotentialParams params;
    double n_max_real;
    std::vector<double> energies;  // E_0 < E_1 < ... < 0

    int num_levels() const { return static_cast<int>(energies.size()); }
};

/// Computes the bound ladder. Throws std::domain_error when no level is bound
/// (delta <= 1/2).
Spectrum spectrum(const PotentialParams& p);

/// Variables of the bound-state equation in z = tanh_q(alpha x):
///   xi = (delta^2 - 1/4)/alpha^2,   w_tilde = sqrt(1/4 + xi/q),
///   nu(n) = w_tilde - n - 1/2  (decay exponent of the n-th eigenfunction).
/// Eigenfunctions built from these variables solve the Schrodinger equation
/// for U_q exactly; the ladder above coincides with their eigenvalues at
/// q = 1 and tracks the 1/q^2 bound away from it.
struct ReducedVariables {
    double xi;
    double w_tilde;

    double nu(int n) const { return w_tilde - n - 0.5; }
    /// Number of square-integrable eigenfunctions (nu(n) > 0).
    int bound_levels() const;
};

ReducedVariables reduced_variables(const PotentialParams& p);

/// Eigenvalue paired with wavefunction(n, .): -(alpha^2/2) nu(n)^2.
double eigenvalue(int n, const PotentialParams& p);

/// Unnormalized bound eigenfunction
///   Psi_n(x) = (1 - z^2)^{nu/2} 2F1(-n, -n + 2w; -n + w + 1/2; (1-z)/2),
/// z = tanh_q(alpha x). Throws std::out_of_range for n outside the bound set.
double wavefunction(int n, double x, const PotentialParams& p);

/// Uniform quadrature grid.
struct GridSpec {
    double x_min;
    double x_max;
    int points;  // odd for Simpson

    /// 4001 points over x* +- 15/alpha.
    static GridSpec default_for(const PotentialParams& p);
    /// Widened so the n-th eigenfunction has decayed at the endpoints.
    static GridSpec for_level(const PotentialParams& p, int n);
};

/// Normalization constant N with int |N Psi_n|^2 dx = 1 (composite Simpson).
/// Throws NonConvergentTailError when the endpoint amplitude exceeds 1e-5 of
/// the peak (tail mass above the quadrature error budget).
double normalization_constant(int n, const PotentialParams& p, const GridSpec& grid);
double normalization_constant(int n, const PotentialParams& p);

/// || (-1/2 d^2/dx^2 + U_q - E_n) Psi_n ||_2 / || Psi_n ||_2 with central
/// finite differences of step h; decays as O(h^2).
double schrodinger_residual(int n, const PotentialParams& p, double h = 1e-3);

}  // namespace qotto
