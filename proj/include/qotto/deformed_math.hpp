#pragma once

#include "qotto/errors.hpp"

namespace qotto {

// q-deformed hyperbolic functions,
//   cosh_q(y) = (e^y + q e^-y)/2,   sinh_q(y) = (e^y - q e^-y)/2,
// satisfying cosh_q^2 - sinh_q^2 = q for every y. All functions require q > 0
// and are pure and reentrant.

/// (e^y + q e^-y)/2. Throws OverflowError when the result exceeds double range.
double cosh_q(double y, double q);

/// (e^y - q e^-y)/2. Throws OverflowError when the result exceeds double range.
double sinh_q(double y, double q);

/// sinh_q(y)/cosh_q(y), computed in a cancellation-safe form; lies in (-1, 1).
double tanh_q(double y, double q);

/// 1/cosh_q(y)^2 without overflow for any finite y (underflows to 0 in the tails).
double inv_cosh_q_sq(double y, double q);

/// Error function (delegates to the C library implementation).
double erf(double x);

/// Complementary error function.
double erfc(double x);

/// Dawson's integral F(x) = e^{-x^2} int_0^x e^{t^2} dt.
/// Accurate to ~1e-14 relative for |x| <= 50 (and beyond).
double dawson(double x);

/// Imaginary error function erfi(x) = 2/sqrt(pi) int_0^x e^{t^2} dt.
/// Throws OverflowError when x^2 exceeds the exponent range; use erfi_scaled
/// for ratios of exponentially large terms.
double erfi(double x);

/// e^{-x^2} erfi(x) = 2 dawson(x)/sqrt(pi); never overflows.
double erfi_scaled(double x);

/// Terminating hypergeometric polynomial 2F1(-n, b; c; x) as an exact finite
/// sum of n+1 terms. Throws std::domain_error when c is a nonpositive integer
/// in (-n, 0] (a Pochhammer factor in the denominator vanishes).
double hyp2f1_poly(int n, double b, double c, double x);

}  // namespace qotto
