#pragma once

#include <cstdint>
#include <string_view>

#include "zrc/special_functions.hpp"

namespace zrc {

/// |s - 1| at or below this radius is a PoleError.
inline constexpr double kZetaPoleRadius = 1e-6;

/// Euler-Maclaurin parameters: N - 1 direct terms, M Bernoulli corrections.
struct EmParameters {
  std::int64_t cutoff = 2;
  int order = 1;

  static constexpr std::int64_t kMaxCutoff = 1'000'000;
  static constexpr int kMaxOrder = 15;

  bool valid() const {
    return cutoff >= 2 && cutoff <= kMaxCutoff && order >= 1 &&
           order <= kMaxOrder;
  }
  friend bool operator==(const EmParameters&, const EmParameters&) = default;
};

/// A raw Euler-Maclaurin evaluation together with the two parts of its
/// error bound.
struct EmEstimate {
  Complex value;
  double truncation_bound = 0.0;  // first omitted term, envelope-scaled
  double rounding_bound = 0.0;
  double abs_error_bound() const { return truncation_bound + rounding_bound; }
};

enum class EvalMethod { DirectEm, Reflected };

std::string_view to_string(EvalMethod m);

struct EvalResult {
  Complex value;
  double abs_error_bound = 0.0;
  bool near_pole = false;          // 1e-6 < |s - 1| < 1e-2
  bool near_trivial_zero = false;  // within 1e-2 of -2, -4, ...
  EvalMethod method = EvalMethod::DirectEm;
  EmParameters parameters;         // parameters of the Euler-Maclaurin stage
};

/// Euler-Maclaurin partial value
///   sum_{k<N} k^-s + N^(1-s)/(s-1) + N^-s/2 + sum_{j<=M} B_2j/(2j)! (s)_(2j-1) N^(-s-2j+1).
/// Requires Re s > -(2M - 1) and s != 1 (DomainError otherwise). N = 1 is
/// accepted (empty direct sum) for diagnostic use.
Complex zeta_em_raw(Complex s, const EmParameters& p);

/// Same as zeta_em_raw, with the remainder and floating-point error bounds.
EmEstimate zeta_em_estimate(Complex s, const EmParameters& p);

/// Truncation bound of the Euler-Maclaurin remainder for (s, N, M), without
/// evaluating the sum.
double em_truncation_bound(Complex s, const EmParameters& p);

/// Cheapest (N, M) whose total error bound is below target_rel_err times
/// reference_magnitude. Deterministic. Throws PrecisionError when no
/// N <= 1e6, M <= 15 suffices.
EmParameters choose_parameters(Complex s, double target_rel_err,
                               double reference_magnitude = 1.0);

enum class EngineMode {
  /// Euler-Maclaurin for Re s >= 1/2 and in a small disk around s = 0,
  /// reflection through the functional equation elsewhere.
  Standard,
  /// Every value with Re s < 1/2 comes from reflection of the value at 1 - s.
  ReflectionOnly,
  /// Euler-Maclaurin everywhere (cancellation makes this poor for Re s << 0).
  DirectOnly,
};

struct EngineOptions {
  double target_rel_err = 1e-13;
  EngineMode mode = EngineMode::Standard;
};

/// Evaluates zeta anywhere in C minus the pole. Stateless and cheap to copy.
class ZetaEngine {
 public:
  explicit ZetaEngine(EngineOptions options = {});

  EvalResult evaluate(Complex s) const;
  Complex operator()(Complex s) const { return evaluate(s).value; }

  const EngineOptions& options() const { return options_; }

 private:
  EvalResult direct(Complex s, double target) const;
  EvalResult reflected(Complex s, double target) const;

  EngineOptions options_;
};

/// zeta(s) with the standard engine.
EvalResult zeta(Complex s, double target_rel_err = 1e-13);

/// Riemann xi(s) = s(s-1)/2 pi^(-s/2) Gamma(s/2) zeta(s), entire.
Complex xi(Complex s, const ZetaEngine& engine = ZetaEngine{});

/// True when s is within `radius` of a negative even integer.
bool near_trivial_zero(Complex s, double radius);
/// Distance from s to the nearest negative even integer.
double distance_to_trivial_zero(Complex s);

}  // namespace zrc
