#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zrc/special_functions.hpp"
#include "zrc/zeta.hpp"

namespace zrc {

enum class IdentityId : int {
  EQ10,
  EQ11,
  EQ14,
  EQ16_FALSE,
  EQ17,
  EQ20,
  EQ30,
  EQ40,
  EQ50,
  EQ60,
  EQ70,
  EQ80,
  EQ90_PRINTED,
  EQ90_CORRECTED,
  EQ100,
  EQ110,
  EQ120,
  EQ300,
  EQ310,
  EQ315,
  EQ320,
  EQ335,
  EQ380,
  EQ600,
  EQ610,
};

inline constexpr int kIdentityCount = 25;

std::string_view to_string(IdentityId id);
/// Accepts the exact identifier ("EQ16_FALSE"), case-insensitively.
std::optional<IdentityId> parse_identity_id(std::string_view text);

enum class ParamKind { None, Alpha, Index, AlphaOrIndex };
enum class IndexRole { None, N, M };
enum class Verdict { Holds, Fails, Inconclusive };

std::string_view to_string(ParamKind k);
std::string_view to_string(Verdict v);
std::optional<Verdict> parse_verdict(std::string_view text);

/// Ladder indices; n drives the (300)/(320)/(335)-type ladders, m the (315) one.
struct LadderIndex {
  int n = 0;
  int m = 0;
  static constexpr int kMax = 64;
  friend bool operator==(const LadderIndex&, const LadderIndex&) = default;
};

/// const_re + coeff_index * k + coeff_s * s + coeff_ia * (i alpha), where k
/// is the identity's ladder index.
struct AffineArg {
  double const_re = 0.0;
  int coeff_s = 0;
  int coeff_ia = 0;
  int coeff_index = 0;

  Complex evaluate(Complex s, Complex alpha, int index) const;
  friend bool operator==(const AffineArg&, const AffineArg&) = default;
};

struct ZetaFactor {
  AffineArg arg;
  int exponent = 1;  // +1 numerator, -1 denominator
};

/// Point and parameters as seen by coefficient functions.
struct TermContext {
  Complex s;
  Complex alpha;
  int index = 0;
};

using Coefficient = std::function<Complex(const TermContext&)>;

struct TermSpec {
  std::vector<ZetaFactor> zeta_factors;
  Coefficient coefficient;  // pure; never evaluates zeta
  int sign = 1;
};

struct Identity {
  IdentityId id{};
  int equation_number = 0;
  std::string description;
  ParamKind param_kind = ParamKind::None;
  IndexRole index_role = IndexRole::None;
  bool uses_s = true;
  std::vector<TermSpec> lhs_terms;
  std::vector<TermSpec> rhs_terms;
  Verdict expected_verdict = Verdict::Holds;
  /// Every zeta argument that divides somewhere in the displayed equation.
  std::vector<AffineArg> singular_args;
  /// Distance to poles of the coefficient functions (Gamma, tan, tanh,
  /// polynomial denominators); empty when the coefficients are entire.
  std::function<double(const TermContext&)> coefficient_singular_distance;

  std::size_t num_terms() const { return lhs_terms.size() + rhs_terms.size(); }
  bool uses_alpha() const {
    return param_kind == ParamKind::Alpha || param_kind == ParamKind::AlphaOrIndex;
  }
  bool uses_index() const {
    return param_kind == ParamKind::Index || param_kind == ParamKind::AlphaOrIndex;
  }
  /// All distinct zeta arguments of lhs and rhs terms.
  std::vector<AffineArg> zeta_args() const;
};

/// The 25 catalogued identities in equation-number order. Built once.
const std::vector<Identity>& catalogue();
const Identity& identity(IdentityId id);

struct ResidualOptions {
  double exclusion_radius = 1e-6;
  double denominator_floor = 1e-8;
};

struct ResidualSample {
  IdentityId id{};
  Complex s;
  std::optional<Complex> alpha;
  std::optional<LadderIndex> index;
  Complex lhs;
  Complex rhs;
  double residual_abs = 0.0;
  double residual_rel = 0.0;
  double scale = 0.0;  // sum of |term| over all terms

  Complex difference() const { return lhs - rhs; }
  /// |lhs - rhs| / |rhs| (or |lhs| when rhs vanishes).
  double rel_diff() const;
};

/// LHS - RHS of an identity at a point.
/// Throws ParamError when alpha/index presence does not match param_kind,
/// SingularityError near the singular set or when a denominator |zeta|
/// falls below options.denominator_floor.
ResidualSample residual(IdentityId id, Complex s, std::optional<Complex> alpha,
                        std::optional<LadderIndex> index, const ZetaEngine& engine,
                        const ResidualOptions& options = {});

/// Minimum distance from the identity's zeta arguments to s = 1 and from its
/// denominator arguments to the trivial zeros, combined with the coefficient
/// singular distance.
double singular_distance(IdentityId id, Complex s, std::optional<Complex> alpha,
                         std::optional<LadderIndex> index);

/// As above, but returns 0 when some denominator |zeta| < denominator_floor.
double singular_distance(IdentityId id, Complex s, std::optional<Complex> alpha,
                         std::optional<LadderIndex> index, const ZetaEngine& engine,
                         double denominator_floor = 1e-8);

/// alpha_n(s) = 1/2 [i^n tan(pi s/2) ((-1)^(n+1) - 1) + i^(n+3) ((-1)^n - 1)].
/// tan is evaluated only for even n, where its multiplier is nonzero.
Complex alpha_coeff(int n, Complex s);

/// prod_{j=first}^{first+count-1} (base + j) / scale^scale_power; more than
/// eight factors go through a sum of logarithms. Throws OverflowError when
/// the result is not representable.
Complex ladder_product(Complex base, int first, int count, double scale = 1.0,
                       int scale_power = 0);

}  // namespace zrc
