#pragma once

#include <complex>
#include <numbers>

namespace zrc {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;

/// Distance below which an argument is treated as sitting on a pole of
/// Gamma, tan or tanh.
inline constexpr double kPoleRadius = 1e-9;

// Real sin(pi x) / cos(pi x) with exact reduction of x modulo 2. Integer
// arguments give exact zeros (sin) and exact +-1 (cos).
double sin_pi(double x);
double cos_pi(double x);

// Complex sin(pi z), cos(pi z) built from the exact real kernels.
Complex sin_pi(Complex z);
Complex cos_pi(Complex z);

// sin(pi s / 2), cos(pi s / 2), tan(pi s / 2).
Complex sin_pi_half(Complex s);
Complex cos_pi_half(Complex s);
/// Throws PoleError when s is within kPoleRadius of an odd integer.
Complex tan_pi_half(Complex s);
/// tanh(pi a / 2). Throws PoleError when a is within kPoleRadius of i*(odd).
Complex tanh_pi_half(Complex a);

/// Gamma function, principal branch. Lanczos (g = 7, 9 terms) for
/// Re z >= 1/2, reflection otherwise. Throws PoleError near 0, -1, -2, ...
/// and OverflowError when the result is not representable.
Complex cgamma(Complex z);

/// Principal-branch log Gamma: analytic in C minus the non-positive real
/// axis and equal to the real lgamma on the positive real axis. Satisfies
/// exp(clog_gamma(z)) == cgamma(z).
Complex clog_gamma(Complex z);

/// base^exponent = exp(exponent * log(base)) for base > 0.
Complex cpow(double base, Complex exponent);

/// Distance from z to the nearest non-positive integer.
double distance_to_gamma_pole(Complex z);

}  // namespace zrc
