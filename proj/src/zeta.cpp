#include "zrc/zeta.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "zrc/errors.hpp"

namespace zrc {

namespace {

using LongComplex = std::complex<long double>;

constexpr double kDoubleUnitRoundoff = std::numeric_limits<double>::epsilon() / 2;
constexpr long double kLongEps = std::numeric_limits<long double>::epsilon();

// B_2j for j = 1..16 as exact rationals.
constexpr std::array<std::array<long double, 2>, 16> kBernoulli = {{
    {1.0L, 6.0L},
    {-1.0L, 30.0L},
    {1.0L, 42.0L},
    {-1.0L, 30.0L},
    {5.0L, 66.0L},
    {-691.0L, 2730.0L},
    {7.0L, 6.0L},
    {-3617.0L, 510.0L},
    {43867.0L, 798.0L},
    {-174611.0L, 330.0L},
    {854513.0L, 138.0L},
    {-236364091.0L, 2730.0L},
    {8553103.0L, 6.0L},
    {-23749461029.0L, 870.0L},
    {8615841276005.0L, 14322.0L},
    {-7709321041217.0L, 510.0L},
}};

// B_2j / (2j)!, index j - 1.
struct BernoulliTable {
  std::array<long double, 16> coeff{};
  BernoulliTable() {
    long double factorial = 1.0L;
    for (int j = 1; j <= 16; ++j) {
      factorial *= static_cast<long double>((2 * j - 1) * (2 * j));
      coeff[j - 1] = kBernoulli[j - 1][0] / kBernoulli[j - 1][1] / factorial;
    }
  }
};

const BernoulliTable& bernoulli() {
  static const BernoulliTable table;
  return table;
}

// Envelope factor applied to the first omitted Euler-Maclaurin term.
double envelope_factor(Complex s, int order) {
  const double k = 2.0 * order + 1.0;
  return std::max(2.0, std::abs(s + k) / (s.real() + k));
}

void check_em_domain(Complex s, const EmParameters& p) {
  if (p.order < 1 || p.order > EmParameters::kMaxOrder) {
    throw DomainError("Euler-Maclaurin order must be in [1, 15]");
  }
  if (p.cutoff < 1 || p.cutoff > EmParameters::kMaxCutoff) {
    throw DomainError("Euler-Maclaurin cutoff must be in [1, 1e6]");
  }
  if (!(s.real() > -(2.0 * p.order - 1.0))) {
    throw DomainError("Euler-Maclaurin: Re s outside the validity half-plane");
  }
  if (s == Complex(1.0, 0.0)) throw DomainError("Euler-Maclaurin: s = 1");
}

// Rough magnitude of sum_{k<N} k^-sigma, used only to predict rounding.
double direct_sum_magnitude(double sigma, double n) {
  if (std::abs(sigma - 1.0) < 1e-12) return 1.0 + std::log(n);
  return 1.0 + (std::pow(n, 1.0 - sigma) - 1.0) / (1.0 - sigma);
}

double predicted_rounding(Complex s, std::int64_t cutoff) {
  const double n = static_cast<double>(cutoff);
  const double magnitude = direct_sum_magnitude(s.real(), n) +
                           std::pow(n, 1.0 - s.real()) / std::abs(s - 1.0);
  return 4.0 * static_cast<double>(kLongEps) *
         (1.0 + std::abs(s) * std::log(n)) * magnitude;
}

}  // namespace

std::string_view to_string(EvalMethod m) {
  return m == EvalMethod::DirectEm ? "direct_em" : "reflected";
}

double em_truncation_bound(Complex s, const EmParameters& p) {
  const int next = p.order + 1;
  double log_term = std::log(std::abs(static_cast<double>(bernoulli().coeff[next - 1])));
  for (int i = 0; i < 2 * next - 1; ++i) log_term += std::log(std::abs(s + static_cast<double>(i)));
  log_term -= (s.real() + 2.0 * next - 1.0) * std::log(static_cast<double>(p.cutoff));
  return std::exp(log_term) * envelope_factor(s, p.order);
}

EmEstimate zeta_em_estimate(Complex s, const EmParameters& p) {
  check_em_domain(s, p);
  const LongComplex ls(s.real(), s.imag());
  const auto& coeff = bernoulli().coeff;

  LongComplex sum = 0.0L;
  long double magnitude = 0.0L;
  for (std::int64_t k = p.cutoff - 1; k >= 1; --k) {
    const LongComplex term = std::exp(-ls * std::log(static_cast<long double>(k)));
    sum += term;
    magnitude += std::abs(term);
  }

  const long double n = static_cast<long double>(p.cutoff);
  const long double log_n = std::log(n);
  const LongComplex n_pow = std::exp(-ls * log_n);  // N^-s
  const LongComplex integral = n_pow * n / (ls - 1.0L);
  const LongComplex half = n_pow * 0.5L;
  sum += integral + half;
  magnitude += std::abs(integral) + std::abs(half);

  LongComplex rising = ls;            // (s)_(2j-1)
  LongComplex power = n_pow / n;      // N^(-s-2j+1)
  for (int j = 1; j <= p.order; ++j) {
    const LongComplex term = coeff[j - 1] * rising * power;
    sum += term;
    magnitude += std::abs(term);
    rising *= (ls + static_cast<long double>(2 * j - 1)) * (ls + static_cast<long double>(2 * j));
    power /= n * n;
  }
  const LongComplex omitted = coeff[p.order] * rising * power;

  EmEstimate out;
  out.value = Complex(static_cast<double>(sum.real()), static_cast<double>(sum.imag()));
  out.truncation_bound = static_cast<double>(std::abs(omitted)) * envelope_factor(s, p.order);
  out.rounding_bound =
      static_cast<double>(4.0L * kLongEps * (1.0L + std::abs(ls) * log_n) * magnitude) +
      kDoubleUnitRoundoff * std::abs(out.value);
  return out;
}

Complex zeta_em_raw(Complex s, const EmParameters& p) {
  return zeta_em_estimate(s, p).value;
}

EmParameters choose_parameters(Complex s, double target_rel_err,
                               double reference_magnitude) {
  if (!(target_rel_err > 0.0) || !(reference_magnitude > 0.0)) {
    throw PrecisionError("choose_parameters: target must be positive");
  }
  const double tolerance = target_rel_err * reference_magnitude;
  if (2.0 * kDoubleUnitRoundoff * reference_magnitude > tolerance) {
    throw PrecisionError("choose_parameters: target below binary64 resolution");
  }
  const double budget = 0.5 * tolerance;

  EmParameters best;
  std::int64_t best_cost = std::numeric_limits<std::int64_t>::max();
  for (int order = 1; order <= EmParameters::kMaxOrder; ++order) {
    if (!(s.real() > -(2.0 * order - 1.0))) continue;
    auto bound_at = [&](std::int64_t cutoff) {
      return em_truncation_bound(s, EmParameters{cutoff, order});
    };
    if (bound_at(EmParameters::kMaxCutoff) > budget) continue;
    std::int64_t lo = 2;
    std::int64_t hi = EmParameters::kMaxCutoff;
    if (bound_at(lo) <= budget) hi = lo;
    while (hi - lo > 1) {
      const std::int64_t mid = lo + (hi - lo) / 2;
      (bound_at(mid) <= budget ? hi : lo) = mid;
    }
    if (predicted_rounding(s, hi) > budget) continue;
    // Each correction term costs about four complex products; weigh it
    // against one direct term.
    const std::int64_t cost = hi + 4 * order;
    if (cost < best_cost) {
      best_cost = cost;
      best = EmParameters{hi, order};
    }
  }
  if (best_cost == std::numeric_limits<std::int64_t>::max()) {
    throw PrecisionError("choose_parameters: no (N <= 1e6, M <= 15) meets the target");
  }
  return best;
}

double distance_to_trivial_zero(Complex s) {
  const double k = -2.0 * std::max(1.0, std::nearbyint(-s.real() / 2.0));
  return std::abs(s - k);
}

bool near_trivial_zero(Complex s, double radius) {
  return distance_to_trivial_zero(s) < radius;
}

ZetaEngine::ZetaEngine(EngineOptions options) : options_(options) {
  if (!(options_.target_rel_err > 0.0)) {
    throw ConfigError("engine target_rel_err must be positive");
  }
}

EvalResult ZetaEngine::direct(Complex s, double target) const {
  EmParameters p = choose_parameters(s, target, 1.0);
  EmEstimate est = zeta_em_estimate(s, p);
  const double magnitude = std::abs(est.value);
  if (est.abs_error_bound() > target * magnitude && magnitude > 0.0) {
    try {
      p = choose_parameters(s, target, std::max(magnitude, 1e-8));
      est = zeta_em_estimate(s, p);
    } catch (const PrecisionError&) {
      // keep the first-pass estimate
    }
  }
  EvalResult r;
  r.value = est.value;
  r.abs_error_bound = est.abs_error_bound();
  r.method = EvalMethod::DirectEm;
  r.parameters = p;
  return r;
}

EvalResult ZetaEngine::reflected(Complex s, double target) const {
  if (std::abs(s) <= kZetaPoleRadius) {
    throw PoleError("zeta: reflection needs zeta(1 - s) at the pole");
  }
  const Complex mirror = 1.0 - s;
  const EvalResult base = direct(mirror, target);
  static const double kLog2 = std::log(2.0);
  static const double kLogPi = std::log(kPi);
  const Complex log_gamma = clog_gamma(mirror);
  const Complex w = s * kLog2 + (s - 1.0) * kLogPi + log_gamma;
  const Complex chi = std::exp(w) * sin_pi_half(s);
  const double chi_rel =
      4.0 * kDoubleUnitRoundoff *
          (4.0 + std::abs(s) * kLog2 + std::abs(s - 1.0) * kLogPi +
           std::abs(log_gamma) + std::abs(w) + 0.5 * kPi * std::abs(s.imag())) +
      5e-15;

  EvalResult r;
  r.value = chi * base.value;
  r.abs_error_bound = std::abs(chi) * base.abs_error_bound + std::abs(r.value) * chi_rel;
  r.method = EvalMethod::Reflected;
  r.parameters = base.parameters;
  return r;
}

EvalResult ZetaEngine::evaluate(Complex s) const {
  const double pole_distance = std::abs(s - 1.0);
  if (!(pole_distance > kZetaPoleRadius)) {
    throw PoleError("zeta: argument within 1e-6 of the pole at s = 1");
  }
  const bool use_direct =
      options_.mode == EngineMode::DirectOnly || s.real() >= 0.5 ||
      (options_.mode == EngineMode::Standard && std::abs(s) < 1e-3);

  EvalResult r;
  bool done = false;
  for (double target : {options_.target_rel_err, std::max(options_.target_rel_err, 1e-12),
                        std::max(options_.target_rel_err, 1e-6)}) {
    try {
      r = use_direct ? direct(s, target) : reflected(s, target);
      done = true;
      break;
    } catch (const PrecisionError&) {
    }
  }
  if (!done || !(r.abs_error_bound <= 1e-6 * std::max(std::abs(r.value), 1e-6))) {
    throw PrecisionError("zeta: error bound cannot meet 1e-6 relative");
  }
  r.abs_error_bound = std::max(r.abs_error_bound, std::numeric_limits<double>::denorm_min());
  r.near_pole = pole_distance < 1e-2;
  r.near_trivial_zero = near_trivial_zero(s, 1e-2);
  return r;
}

EvalResult zeta(Complex s, double target_rel_err) {
  return ZetaEngine(EngineOptions{target_rel_err, EngineMode::Standard}).evaluate(s);
}

Complex xi(Complex s, const ZetaEngine& engine) {
  // s(s-1)/2 Gamma(s/2) = (s-1) Gamma(s/2 + 1) removes the pole at s = 0.
  // The zeta pole at s = 1 and the Gamma poles at s = -2N are cancelled by
  // zeros; both are handled through xi(s) = xi(1 - s).
  if (std::abs(s - 1.0) <= kZetaPoleRadius ||
      distance_to_gamma_pole(0.5 * s + 1.0) <= kPoleRadius) {
    const Complex mirror = 1.0 - s;
    return (mirror - 1.0) * cpow(kPi, -0.5 * mirror) * cgamma(0.5 * mirror + 1.0) *
           engine(mirror);
  }
  return (s - 1.0) * cpow(kPi, -0.5 * s) * cgamma(0.5 * s + 1.0) * engine(s);
}

}  // namespace zrc
