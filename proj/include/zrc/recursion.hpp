#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "zrc/catalogue.hpp"
#include "zrc/verifier.hpp"
#include "zrc/zeta.hpp"

namespace zrc {

/// Exclusion radius used by the recursion evaluators' singularity checks.
inline constexpr double kRecursionExclusion = 1e-6;

/// zeta(s) = -s(s+1) zeta(1-s) zeta(s+2) / (4 pi^2 zeta(-1-s)), from engine
/// values at the three linked points. Same code path as the n = 0 ladder.
Complex zeta_via_eq30(Complex s, const ZetaEngine& engine);

/// zeta(s) = (-1)^(n+1) prod_{j=0}^{2n+1} (s+j) zeta(1-s) zeta(s+2n+2)
///           / ((4 pi^2)^(n+1) zeta(-s-2n-1)).
/// Throws SingularityError near the singular set or when a product factor
/// vanishes, OverflowError when the prefactor leaves the floating range.
Complex zeta_ladder_eq300(Complex s, int n, const ZetaEngine& engine);

/// Right side of zeta(s+2)/zeta(-1-s) = (-1)^(m+1) (4 pi^2)^(m+1) zeta(s-2m)
///   / (zeta(2m+1-s) s(s+1) prod_{j=1}^{2m} (s-j)).
Complex ratio_eq315(Complex s, int m, const ZetaEngine& engine);

/// Right side of zeta(s)/zeta(1-s) = prod_{j=0}^{n} (s+j) zeta(n+1+s) alpha_n(s)
///   / ((2 pi)^(n+1) zeta(-s-n)).
Complex ratio_eq320(Complex s, int n, const ZetaEngine& engine);

enum class HalfIntegerKind { Eq310, Eq335 };

std::string_view to_string(HalfIntegerKind kind);
std::optional<HalfIntegerKind> parse_half_integer_kind(std::string_view text);

struct HalfIntegerRow {
  int n = 0;
  double target_arg = 0.0;  // -3/2 - 2n (eq310) or -1/2 - n (eq335)
  Complex ladder_value;     // from the positive-axis zeta value only
  Complex direct_value;     // engine value at target_arg
  double rel_diff = 0.0;
};

inline constexpr int kMaxHalfIntegerIndex = 20;

/// Rows n = 0..n_max sorted by n. Throws OverflowError for n_max > 20.
std::vector<HalfIntegerRow> half_integer_table(HalfIntegerKind kind, int n_max,
                                               const ZetaEngine& engine);

/// CSV columns kind,n,target_arg,ladder_re,ladder_im,direct_re,direct_im,rel_diff;
/// JSON is an array of objects with the same keys.
void export_table(const std::vector<HalfIntegerRow>& rows, HalfIntegerKind kind,
                  ExportFormat format, std::ostream& out);

struct LadderCandidate {
  std::string ladder;  // "eq30", "eq300", "eq315", "eq320"
  int index = 0;
  Complex value;
  double rel_diff = 0.0;  // against the engine value at s
};

/// Every ladder route to zeta(s) with index <= max_index that is nonsingular
/// at s, ranked by agreement with the direct engine value.
std::vector<LadderCandidate> ladder_candidates(Complex s, int max_index,
                                               const ZetaEngine& engine);

}  // namespace zrc
