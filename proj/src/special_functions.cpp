#include "zrc/special_functions.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "zrc/errors.hpp"

namespace zrc {

namespace {

// Lanczos coefficients, g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

const double kHalfLog2Pi = 0.5 * std::log(2.0 * kPi);
const double kLogPi = std::log(kPi);

// Quadrant-reduced kernel: x = q/2 + y with |y| <= 1/4, q in Z (mod 4).
struct Reduced {
  int quadrant;
  double y;
};

Reduced reduce_half_period(double x) {
  const double r = std::fmod(x, 2.0);  // exact
  const double q = std::nearbyint(2.0 * r);
  const double y = r - 0.5 * q;  // exact: q/2 and r share the binade
  int k = static_cast<int>(q) % 4;
  if (k < 0) k += 4;
  return {k, y};
}

// log Gamma(z) for Re z >= 1/2 from the Lanczos series.
Complex lanczos_log_gamma(Complex z) {
  const Complex x = z - 1.0;
  Complex a = kLanczos[0];
  for (std::size_t k = 1; k < kLanczos.size(); ++k) {
    a += kLanczos[k] / (x + static_cast<double>(k));
  }
  const Complex t = x + kLanczosG + 0.5;
  return kHalfLog2Pi + (x + 0.5) * std::log(t) - t + std::log(a);
}

void check_gamma_pole(Complex z) {
  if (distance_to_gamma_pole(z) <= kPoleRadius) {
    throw PoleError("gamma: argument at a pole (non-positive integer)");
  }
}

}  // namespace

double sin_pi(double x) {
  if (!std::isfinite(x)) return std::numeric_limits<double>::quiet_NaN();
  const auto [k, y] = reduce_half_period(x);
  const double a = kPi * y;
  switch (k) {
    case 0:
      return std::sin(a);
    case 1:
      return std::cos(a);
    case 2:
      return -std::sin(a);
    default:
      return -std::cos(a);
  }
}

double cos_pi(double x) {
  if (!std::isfinite(x)) return std::numeric_limits<double>::quiet_NaN();
  const auto [k, y] = reduce_half_period(x);
  const double a = kPi * y;
  switch (k) {
    case 0:
      return std::cos(a);
    case 1:
      return -std::sin(a);
    case 2:
      return -std::cos(a);
    default:
      return std::sin(a);
  }
}

Complex sin_pi(Complex z) {
  const double y = kPi * z.imag();
  return {sin_pi(z.real()) * std::cosh(y), cos_pi(z.real()) * std::sinh(y)};
}

Complex cos_pi(Complex z) {
  const double y = kPi * z.imag();
  return {cos_pi(z.real()) * std::cosh(y), -sin_pi(z.real()) * std::sinh(y)};
}

Complex sin_pi_half(Complex s) { return sin_pi(s * 0.5); }

Complex cos_pi_half(Complex s) { return cos_pi(s * 0.5); }

Complex tan_pi_half(Complex s) {
  const double odd = 2.0 * std::floor(s.real() / 2.0) + 1.0;
  if (std::abs(s - odd) <= kPoleRadius) {
    throw PoleError("tan(pi s/2): argument at an odd integer");
  }
  const double b = 0.5 * kPi * s.imag();
  if (std::abs(b) > 175.0) return {0.0, std::copysign(1.0, b)};
  // tan(a + ib) = (sin 2a + i sinh 2b) / (2 (cos^2 a + sinh^2 b))
  const double cos_a = cos_pi(0.5 * s.real());
  const double sinh_b = std::sinh(b);
  const double den = 2.0 * (cos_a * cos_a + sinh_b * sinh_b);
  return Complex(sin_pi(s.real()), std::sinh(2.0 * b)) / den;
}

Complex tanh_pi_half(Complex a) {
  const double odd = 2.0 * std::floor(a.imag() / 2.0) + 1.0;
  if (std::abs(a - Complex(0.0, odd)) <= kPoleRadius) {
    throw PoleError("tanh(pi a/2): argument at i times an odd integer");
  }
  const double x = 0.5 * kPi * a.real();
  if (std::abs(x) > 175.0) return {std::copysign(1.0, x), 0.0};
  // tanh(x + iy) = (sinh 2x + i sin 2y) / (2 (sinh^2 x + cos^2 y))
  const double sinh_x = std::sinh(x);
  const double cos_y = cos_pi(0.5 * a.imag());
  const double den = 2.0 * (sinh_x * sinh_x + cos_y * cos_y);
  return Complex(std::sinh(2.0 * x), sin_pi(a.imag())) / den;
}

double distance_to_gamma_pole(Complex z) {
  const double k = std::min(0.0, std::nearbyint(z.real()));
  return std::abs(z - k);
}

Complex clog_gamma(Complex z) {
  check_gamma_pole(z);
  if (z.real() >= 0.5) return lanczos_log_gamma(z);
  // Reflection with the branch correction that keeps the result on the
  // principal sheet (Hare's convention).
  const double branch =
      std::copysign(2.0 * kPi, z.imag()) * std::floor(0.5 * z.real() + 0.25);
  return Complex(kLogPi, branch) - std::log(sin_pi(z)) -
         lanczos_log_gamma(1.0 - z);
}

Complex cgamma(Complex z) {
  check_gamma_pole(z);
  Complex result;
  if (z.real() >= 0.5) {
    result = std::exp(lanczos_log_gamma(z));
  } else {
    result = kPi / (sin_pi(z) * std::exp(lanczos_log_gamma(1.0 - z)));
  }
  if (!std::isfinite(result.real()) || !std::isfinite(result.imag())) {
    throw OverflowError("gamma: result not representable");
  }
  return result;
}

Complex cpow(double base, Complex exponent) {
  if (!(base > 0.0)) throw DomainError("cpow: base must be positive");
  return std::exp(exponent * std::log(base));
}

}  // namespace zrc
