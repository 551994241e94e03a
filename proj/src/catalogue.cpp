#include "zrc/catalogue.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <limits>

#include "zrc/errors.hpp"

namespace zrc {

namespace {

constexpr Complex kI{0.0, 1.0};
const double kPi2 = kPi * kPi;
const double kFourPi2 = 4.0 * kPi * kPi;

constexpr std::array<std::string_view, kIdentityCount> kNames = {
    "EQ10",  "EQ11",  "EQ14",           "EQ16_FALSE",     "EQ17",  "EQ20",  "EQ30",
    "EQ40",  "EQ50",  "EQ60",           "EQ70",           "EQ80",  "EQ90_PRINTED",
    "EQ90_CORRECTED", "EQ100", "EQ110", "EQ120",          "EQ300", "EQ310", "EQ315",
    "EQ320", "EQ335", "EQ380",          "EQ600",          "EQ610"};

Complex i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0:
      return {1.0, 0.0};
    case 1:
      return {0.0, 1.0};
    case 2:
      return {-1.0, 0.0};
    default:
      return {0.0, -1.0};
  }
}

AffineArg arg(double c, int s, int ia = 0, int index = 0) { return {c, s, ia, index}; }
ZetaFactor up(AffineArg a) { return {a, 1}; }
ZetaFactor down(AffineArg a) { return {a, -1}; }

// R(x) = zeta(x) zeta(-1-x) / (zeta(1-x) zeta(x+2)) at x = s + shift + ia*(i alpha).
std::vector<ZetaFactor> ratio_r(double shift, int ia = 0) {
  return {up(arg(shift, 1, ia)), up(arg(-1.0 - shift, -1, -ia)),
          down(arg(1.0 - shift, -1, -ia)), down(arg(2.0 + shift, 1, ia))};
}

std::vector<ZetaFactor> concat(std::vector<ZetaFactor> a, const std::vector<ZetaFactor>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Coefficient constant(Complex c) {
  return [c](const TermContext&) { return c; };
}

TermSpec term(std::vector<ZetaFactor> factors, Coefficient coefficient = constant(1.0)) {
  return TermSpec{std::move(factors), std::move(coefficient), 1};
}

double odd_integer_distance(Complex z) {
  const double odd = 2.0 * std::floor(z.real() / 2.0) + 1.0;
  return std::min(std::abs(z - odd), std::abs(z - (odd + 2.0)));
}

// -s(s+1)/(4 pi^2)
Complex quadratic_ratio(Complex s) { return -s * (s + 1.0) / kFourPi2; }

std::vector<Identity> build_catalogue() {
  std::vector<Identity> out;
  auto add = [&](IdentityId id, int number, std::string description) -> Identity& {
    Identity& e = out.emplace_back();
    e.id = id;
    e.equation_number = number;
    e.description = std::move(description);
    return e;
  };

  {
    Identity& e = add(IdentityId::EQ10, 10,
                      "Riemann functional equation: zeta(s) = 2^s pi^(s-1) sin(pi s/2) "
                      "Gamma(1-s) zeta(1-s)");
    e.lhs_terms = {term({up(arg(0, 1))})};
    e.rhs_terms = {term({up(arg(1, -1))}, [](const TermContext& c) {
      return cpow(2.0, c.s) * cpow(kPi, c.s - 1.0) * sin_pi_half(c.s) * cgamma(1.0 - c.s);
    })};
    e.coefficient_singular_distance = [](const TermContext& c) {
      return distance_to_gamma_pole(1.0 - c.s);
    };
  }
  {
    Identity& e = add(IdentityId::EQ11, 11,
                      "zeta(1-s) = 2 (2 pi)^(-s) cos(pi s/2) Gamma(s) zeta(s)");
    e.lhs_terms = {term({up(arg(1, -1))})};
    e.rhs_terms = {term({up(arg(0, 1))}, [](const TermContext& c) {
      return 2.0 * cpow(2.0 * kPi, -c.s) * cos_pi_half(c.s) * cgamma(c.s);
    })};
    e.coefficient_singular_distance = [](const TermContext& c) {
      return distance_to_gamma_pole(c.s);
    };
  }
  {
    Identity& e = add(IdentityId::EQ14, 14,
                      "xi(s) = xi(1-s) with xi(s) = s(s-1)/2 pi^(-s/2) Gamma(s/2) zeta(s)");
    e.lhs_terms = {term({up(arg(0, 1))}, [](const TermContext& c) {
      return 0.5 * c.s * (c.s - 1.0) * cpow(kPi, -0.5 * c.s) * cgamma(0.5 * c.s);
    })};
    e.rhs_terms = {term({up(arg(1, -1))}, [](const TermContext& c) {
      const Complex t = 1.0 - c.s;
      return 0.5 * t * (t - 1.0) * cpow(kPi, -0.5 * t) * cgamma(0.5 * t);
    })};
    e.coefficient_singular_distance = [](const TermContext& c) {
      return std::min(distance_to_gamma_pole(0.5 * c.s), distance_to_gamma_pole(0.5 - 0.5 * c.s));
    };
  }
  {
    Identity& e = add(IdentityId::EQ16_FALSE, 16,
                      "Gamma(s/2-1) pi^(-s/2) zeta(s) = Gamma((1-s)/2-1) pi^(-(1-s)/2) "
                      "zeta(1-s), as printed; known to be false");
    e.lhs_terms = {term({up(arg(0, 1))}, [](const TermContext& c) {
      return cgamma(0.5 * c.s - 1.0) * cpow(kPi, -0.5 * c.s);
    })};
    e.rhs_terms = {term({up(arg(1, -1))}, [](const TermContext& c) {
      return cgamma(0.5 * (1.0 - c.s) - 1.0) * cpow(kPi, -0.5 * (1.0 - c.s));
    })};
    e.expected_verdict = Verdict::Fails;
    e.coefficient_singular_distance = [](const TermContext& c) {
      return std::min(distance_to_gamma_pole(0.5 * c.s - 1.0),
                      distance_to_gamma_pole(0.5 * (1.0 - c.s) - 1.0));
    };
  }
  {
    Identity& e = add(IdentityId::EQ17, 17,
                      "Gamma(s/2) zeta(s) = Gamma((1-s)/2) pi^(s-1/2) zeta(1-s)");
    e.lhs_terms = {term({up(arg(0, 1))}, [](const TermContext& c) { return cgamma(0.5 * c.s); })};
    e.rhs_terms = {term({up(arg(1, -1))}, [](const TermContext& c) {
      return cgamma(0.5 * (1.0 - c.s)) * cpow(kPi, c.s - 0.5);
    })};
    e.coefficient_singular_distance = [](const TermContext& c) {
      return std::min(distance_to_gamma_pole(0.5 * c.s), distance_to_gamma_pole(0.5 - 0.5 * c.s));
    };
  }
  {
    Identity& e = add(IdentityId::EQ20, 20,
                      "zeta(s)/zeta(1-s) = -s tan(pi s/2) zeta(1+s) / (2 pi zeta(-s))");
    e.lhs_terms = {term({up(arg(0, 1)), down(arg(1, -1))})};
    e.rhs_terms = {term({up(arg(1, 1)), down(arg(0, -1))}, [](const TermContext& c) {
      return -c.s * tan_pi_half(c.s) / (2.0 * kPi);
    })};
    e.coefficient_singular_distance = [](const TermContext& c) {
      return odd_integer_distance(c.s);
    };
  }
  {
    Identity& e = add(IdentityId::EQ30, 30,
                      "zeta(s) = -s(s+1) zeta(1-s) zeta(s+2) / (4 pi^2 zeta(-1-s))");
    e.lhs_terms = {term({up(arg(0, 1))})};
    e.rhs_terms = {term({up(arg(1, -1)), up(arg(2, 1)), down(arg(-1, -1))},
                        [](const TermContext& c) { return quadratic_ratio(c.s); })};
  }
  {
    Identity& e = add(IdentityId::EQ40, 40, "2 s^2 = -4 pi^2 R(s) - 4 pi^2 R(s-1)");
    e.lhs_terms = {term({}, [](const TermContext& c) { return 2.0 * c.s * c.s; })};
    e.rhs_terms = {term(ratio_r(0), constant(-kFourPi2)), term(ratio_r(-1), constant(-kFourPi2))};
  }
  {
    Identity& e = add(IdentityId::EQ50, 50, "2 s = -4 pi^2 R(s) + 4 pi^2 R(s-1)");
    e.lhs_terms = {term({}, [](const TermContext& c) { return 2.0 * c.s; })};
    e.rhs_terms = {term(ratio_r(0), constant(-kFourPi2)), term(ratio_r(-1), constant(kFourPi2))};
  }
  {
    Identity& e = add(IdentityId::EQ60, 60, "1/(2 pi^2) = 2 R(s) - R(s+1) - R(s-1)");
    e.lhs_terms = {term({}, constant(1.0 / (2.0 * kPi2)))};
    e.rhs_terms = {term(ratio_r(0), constant(2.0)), term(ratio_r(1), constant(-1.0)),
                   term(ratio_r(-1), constant(-1.0))};
  }
  {
    Identity& e = add(IdentityId::EQ70, 70,
                      "0 = -3 R(s) + 3 R(s+1) + R(s-1) - R(s+2), "
                      "R(x) = zeta(x) zeta(-1-x) / (zeta(1-x) zeta(x+2))");
    e.rhs_terms = {term(ratio_r(0), constant(-3.0)), term(ratio_r(1), constant(3.0)),
                   term(ratio_r(-1), constant(1.0)), term(ratio_r(2), constant(-1.0))};
  }
  {
    // Encoded with the denominators cleared:
    //   zeta(s) 2 pi zeta(-s) [-2 pi i h A + u B] = s zeta(1-s) zeta(1+s) [i u h B + 2 pi A]
    // u = s + i alpha, h = tanh(pi alpha/2), A = zeta(u) zeta(-u), B = zeta(1+u) zeta(1-u).
    Identity& e = add(IdentityId::EQ80, 80,
                      "zeta(s) = s zeta(1-s) zeta(1+s) [i u h zeta(1-u) zeta(1+u) + 2 pi zeta(u) "
                      "zeta(-u)] / (2 pi zeta(-s) [-2 pi i h zeta(u) zeta(-u) + u zeta(1+u) "
                      "zeta(1-u)]), u = s + i alpha, h = tanh(pi alpha/2); denominators cleared");
    e.param_kind = ParamKind::Alpha;
    const std::vector<ZetaFactor> a = {up(arg(0, 1, 1)), up(arg(0, -1, -1))};
    const std::vector<ZetaFactor> b = {up(arg(1, 1, 1)), up(arg(1, -1, -1))};
    const std::vector<ZetaFactor> left = {up(arg(0, 1)), up(arg(0, -1))};
    const std::vector<ZetaFactor> right = {up(arg(1, -1)), up(arg(1, 1))};
    e.lhs_terms = {
        term(concat(left, a),
             [](const TermContext& c) { return -4.0 * kPi2 * kI * tanh_pi_half(c.alpha); }),
        term(concat(left, b),
             [](const TermContext& c) { return 2.0 * kPi * (c.s + kI * c.alpha); }),
    };
    e.rhs_terms = {
        term(concat(right, b),
             [](const TermContext& c) {
               return kI * c.s * (c.s + kI * c.alpha) * tanh_pi_half(c.alpha);
             }),
        term(concat(right, a), [](const TermContext& c) { return 2.0 * kPi * c.s; }),
    };
    e.singular_args = {arg(0, -1)};
    e.coefficient_singular_distance = [](const TermContext& c) {
      return odd_integer_distance(-kI * c.alpha);
    };
  }
  auto add_eq90 = [&](IdentityId id, bool corrected) {
    Identity& e = add(id, 90,
                      corrected
                          ? "0 = 16 pi^4 (X - Y)^2 - 8 pi^2 alpha^2 (X + Y) + alpha^4 + alpha^2, "
                            "X = R(s + i alpha), Y = R(s); both 8 pi^2 alpha^2 signs flipped "
                            "relative to the printed form"
                          : "0 = 16 pi^4 X^2 + 16 pi^4 Y^2 - 32 pi^4 X Y + 8 pi^2 alpha^2 X + "
                            "alpha^4 + alpha^2 + 8 pi^2 alpha^2 Y, X = R(s + i alpha), Y = R(s); "
                            "as printed");
    e.param_kind = ParamKind::Alpha;
    const double sixteen_pi4 = 16.0 * kPi2 * kPi2;
    const double sign = corrected ? -1.0 : 1.0;
    const auto x = ratio_r(0, 1);
    const auto y = ratio_r(0, 0);
    e.rhs_terms = {
        term(concat(x, x), constant(sixteen_pi4)),
        term(concat(y, y), constant(sixteen_pi4)),
        term(concat(y, x), constant(-2.0 * sixteen_pi4)),
        term(x, [sign](const TermContext& c) { return sign * 8.0 * kPi2 * c.alpha * c.alpha; }),
        term({}, [](const TermContext& c) { return c.alpha * c.alpha * c.alpha * c.alpha; }),
        term({}, [](const TermContext& c) { return c.alpha * c.alpha; }),
        term(y, [sign](const TermContext& c) { return sign * 8.0 * kPi2 * c.alpha * c.alpha; }),
    };
    e.expected_verdict = corrected ? Verdict::Holds : Verdict::Fails;
  };
  add_eq90(IdentityId::EQ90_PRINTED, false);
  add_eq90(IdentityId::EQ90_CORRECTED, true);
  {
    Identity& e = add(IdentityId::EQ100, 100,
                      "zeta(u) = zeta(1-u) zeta(2+u) [zeta(s) zeta(-1-s) - ((2s+1) i alpha - "
                      "alpha^2) zeta(1-s) zeta(s+2) / (4 pi^2)] / (zeta(-1-u) zeta(1-s) "
                      "zeta(s+2)), u = s + i alpha");
    e.param_kind = ParamKind::Alpha;
    e.lhs_terms = {term({up(arg(0, 1, 1))})};
    e.rhs_terms = {
        term({up(arg(1, -1, -1)), up(arg(2, 1, 1)), up(arg(0, 1)), up(arg(-1, -1)),
              down(arg(-1, -1, -1)), down(arg(1, -1)), down(arg(2, 1))}),
        term({up(arg(1, -1, -1)), up(arg(2, 1, 1)), down(arg(-1, -1, -1))},
             [](const TermContext& c) {
               return -((2.0 * c.s + 1.0) * kI * c.alpha - c.alpha * c.alpha) / kFourPi2;
             }),
    };
  }
  {
    Identity& e = add(IdentityId::EQ110, 110,
                      "-i alpha/(2 pi^2) = R(s+1+i alpha) - R(s+1) - R(s+i alpha) + R(s)");
    e.param_kind = ParamKind::Alpha;
    e.lhs_terms = {term({}, [](const TermContext& c) { return -kI * c.alpha / (2.0 * kPi2); })};
    e.rhs_terms = {term(ratio_r(1, 1)), term(ratio_r(1), constant(-1.0)),
                   term(ratio_r(0, 1), constant(-1.0)), term(ratio_r(0))};
  }
  {
    Identity& e = add(IdentityId::EQ120, 120,
                      "0 = R(s+2+i alpha) - R(s+2) - 2 R(s+1+i alpha) + 2 R(s+1) + R(s+i alpha) "
                      "- R(s)");
    e.param_kind = ParamKind::Alpha;
    e.rhs_terms = {term(ratio_r(2, 1)),
                   term(ratio_r(2), constant(-1.0)),
                   term(ratio_r(1, 1), constant(-2.0)),
                   term(ratio_r(1), constant(2.0)),
                   term(ratio_r(0, 1)),
                   term(ratio_r(0), constant(-1.0))};
  }
  {
    Identity& e = add(IdentityId::EQ300, 300,
                      "zeta(s) = (-1)^(n+1) s(s+1)...(s+2n+1) zeta(1-s) zeta(s+2n+2) / "
                      "((4 pi^2)^(n+1) zeta(-s-2n-1))");
    e.param_kind = ParamKind::Index;
    e.index_role = IndexRole::N;
    e.lhs_terms = {term({up(arg(0, 1))})};
    e.rhs_terms = {term({up(arg(1, -1)), up(arg(2, 1, 0, 2)), down(arg(-1, -1, 0, -2))},
                        [](const TermContext& c) {
                          const double sign = (c.index % 2 == 0) ? -1.0 : 1.0;
                          return sign * ladder_product(c.s, 0, 2 * c.index + 2, kFourPi2,
                                                       c.index + 1);
                        })};
  }
  {
    Identity& e = add(IdentityId::EQ310, 310,
                      "zeta(-3/2-2n) = (-1)^(n+1) (1/2)(3/2)...(1/2+2n+1) zeta(5/2+2n) / "
                      "(4 pi^2)^(n+1); n = 0 is also written (-1/2)(3/2) zeta(5/2)/(4 pi^2)");
    e.param_kind = ParamKind::Index;
    e.index_role = IndexRole::N;
    e.uses_s = false;
    e.lhs_terms = {term({up(arg(-1.5, 0, 0, -2))})};
    e.rhs_terms = {term({up(arg(2.5, 0, 0, 2))}, [](const TermContext& c) {
      const double sign = (c.index % 2 == 0) ? -1.0 : 1.0;
      return sign * ladder_product(0.5, 0, 2 * c.index + 2, kFourPi2, c.index + 1);
    })};
  }
  {
    Identity& e = add(IdentityId::EQ315, 315,
                      "zeta(s+2)/zeta(-1-s) = (-1)^(m+1) (4 pi^2)^(m+1) zeta(s-2m) / "
                      "(zeta(2m+1-s) s(s+1) [(s-1)(s-2)...(s-2m)])");
    e.param_kind = ParamKind::Index;
    e.index_role = IndexRole::M;
    e.lhs_terms = {term({up(arg(2, 1)), down(arg(-1, -1))})};
    e.rhs_terms = {term({up(arg(0, 1, 0, -2)), down(arg(1, -1, 0, 2))}, [](const TermContext& c) {
      const double sign = (c.index % 2 == 0) ? -1.0 : 1.0;
      // s(s+1) prod_{j=1}^{2m} (s-j) = prod_{j=-2m}^{1} (s+j)
      const Complex denominator = ladder_product(c.s, -2 * c.index, 2 * c.index + 2, kFourPi2,
                                                 c.index + 1);
      return sign / denominator;
    })};
    e.coefficient_singular_distance = [](const TermContext& c) {
      double d = std::numeric_limits<double>::infinity();
      for (int j = -2 * c.index; j <= 1; ++j) d = std::min(d, std::abs(c.s + static_cast<double>(j)));
      return d;
    };
  }
  {
    Identity& e = add(IdentityId::EQ320, 320,
                      "zeta(s)/zeta(1-s) = s(s+1)...(s+n) zeta(n+1+s) alpha_n(s) / ((2 pi)^(n+1) "
                      "zeta(-s-n))");
    e.param_kind = ParamKind::Index;
    e.index_role = IndexRole::N;
    e.lhs_terms = {term({up(arg(0, 1)), down(arg(1, -1))})};
    e.rhs_terms = {term({up(arg(1, 1, 0, 1)), down(arg(0, -1, 0, -1))}, [](const TermContext& c) {
      return ladder_product(c.s, 0, c.index + 1, 2.0 * kPi, c.index + 1) *
             alpha_coeff(c.index, c.s);
    })};
    e.coefficient_singular_distance = [](const TermContext& c) {
      return c.index % 2 == 0 ? odd_integer_distance(c.s) : std::numeric_limits<double>::infinity();
    };
  }
  {
    Identity& e = add(IdentityId::EQ335, 335,
                      "zeta(-1/2-n) = (1/2)(3/2)...((1+2n)/2) zeta(3/2+n) alpha_n(1/2) / "
                      "(2 pi)^(n+1)");
    e.param_kind = ParamKind::Index;
    e.index_role = IndexRole::N;
    e.uses_s = false;
    e.lhs_terms = {term({up(arg(-0.5, 0, 0, -1))})};
    e.rhs_terms = {term({up(arg(1.5, 0, 0, 1))}, [](const TermContext& c) {
      return ladder_product(0.5, 0, c.index + 1, 2.0 * kPi, c.index + 1) *
             alpha_coeff(c.index, 0.5);
    })};
  }
  {
    Identity& e = add(IdentityId::EQ380, 380,
                      "zeta(-1/2)/zeta(3/2) = -1/(4 pi); printed as +-1/(4 pi), the negative "
                      "sign is the valid one");
    e.uses_s = false;
    e.lhs_terms = {term({up(arg(-0.5, 0)), down(arg(1.5, 0))})};
    e.rhs_terms = {term({}, constant(-1.0 / (4.0 * kPi)))};
  }
  {
    Identity& e = add(IdentityId::EQ600, 600,
                      "zeta(s)/zeta(1-s) = -s(s+1) zeta(s+2) / (4 pi^2 zeta(-1-s))");
    e.lhs_terms = {term({up(arg(0, 1)), down(arg(1, -1))})};
    e.rhs_terms = {term({up(arg(2, 1)), down(arg(-1, -1))},
                        [](const TermContext& c) { return quadratic_ratio(c.s); })};
  }
  {
    Identity& e = add(IdentityId::EQ610, 610,
                      "zeta(s) zeta(-1-s) / (zeta(1-s) zeta(s+2)) = -s(s+1)/(4 pi^2)");
    e.lhs_terms = {term(ratio_r(0))};
    e.rhs_terms = {term({}, [](const TermContext& c) { return quadratic_ratio(c.s); })};
  }

  for (Identity& e : out) {
    for (const auto* side : {&e.lhs_terms, &e.rhs_terms}) {
      for (const TermSpec& t : *side) {
        for (const ZetaFactor& f : t.zeta_factors) {
          if (f.exponent < 0 &&
              std::find(e.singular_args.begin(), e.singular_args.end(), f.arg) ==
                  e.singular_args.end()) {
            e.singular_args.push_back(f.arg);
          }
        }
      }
    }
  }
  return out;
}

int ladder_value(const Identity& e, const std::optional<LadderIndex>& index) {
  if (!index) return 0;
  switch (e.index_role) {
    case IndexRole::N:
      return index->n;
    case IndexRole::M:
      return index->m;
    default:
      return 0;
  }
}

void check_arity(const Identity& e, const std::optional<Complex>& alpha,
                 const std::optional<LadderIndex>& index) {
  if (e.uses_alpha() != alpha.has_value()) {
    throw ParamError(std::string(to_string(e.id)) +
                     (alpha ? ": takes no alpha parameter" : ": requires an alpha parameter"));
  }
  if (e.uses_index() != index.has_value()) {
    throw ParamError(std::string(to_string(e.id)) +
                     (index ? ": takes no ladder index" : ": requires a ladder index"));
  }
  if (index) {
    const int k = ladder_value(e, index);
    if (k < 0 || k > LadderIndex::kMax) {
      throw ParamError("ladder index must be in [0, 64]");
    }
  }
}

TermContext make_context(const Identity& e, Complex s, const std::optional<Complex>& alpha,
                         const std::optional<LadderIndex>& index) {
  return TermContext{s, alpha.value_or(Complex{}), ladder_value(e, index)};
}

double static_distance(const Identity& e, const TermContext& c) {
  double d = std::numeric_limits<double>::infinity();
  for (const AffineArg& a : e.zeta_args()) {
    d = std::min(d, std::abs(a.evaluate(c.s, c.alpha, c.index) - 1.0));
  }
  for (const AffineArg& a : e.singular_args) {
    const Complex z = a.evaluate(c.s, c.alpha, c.index);
    d = std::min(d, std::abs(z - 1.0));
    d = std::min(d, distance_to_trivial_zero(z));
  }
  if (e.coefficient_singular_distance) d = std::min(d, e.coefficient_singular_distance(c));
  return d;
}

// Zeta values for one residual evaluation, keyed by argument.
class ZetaCache {
 public:
  explicit ZetaCache(const ZetaEngine& engine) : engine_(engine) {}

  Complex operator()(Complex z) {
    for (const auto& [key, value] : entries_) {
      if (key == z) return value;
    }
    Complex v;
    try {
      v = engine_(z);
    } catch (const PoleError& err) {
      throw SingularityError(std::string("zeta argument at the pole: ") + err.what());
    }
    entries_.emplace_back(z, v);
    return v;
  }

 private:
  const ZetaEngine& engine_;
  std::vector<std::pair<Complex, Complex>> entries_;
};

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

std::string_view to_string(IdentityId id) { return kNames[static_cast<int>(id)]; }

std::optional<IdentityId> parse_identity_id(std::string_view text) {
  std::string upper(text);
  for (char& ch : upper) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  for (int i = 0; i < kIdentityCount; ++i) {
    if (kNames[i] == upper) return static_cast<IdentityId>(i);
  }
  return std::nullopt;
}

std::string_view to_string(ParamKind k) {
  switch (k) {
    case ParamKind::None:
      return "none";
    case ParamKind::Alpha:
      return "alpha";
    case ParamKind::Index:
      return "index";
    default:
      return "alpha_or_index";
  }
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds:
      return "HOLDS";
    case Verdict::Fails:
      return "FAILS";
    default:
      return "INCONCLUSIVE";
  }
}

std::optional<Verdict> parse_verdict(std::string_view text) {
  for (Verdict v : {Verdict::Holds, Verdict::Fails, Verdict::Inconclusive}) {
    if (to_string(v) == text) return v;
  }
  return std::nullopt;
}

Complex AffineArg::evaluate(Complex s, Complex alpha, int index) const {
  Complex z(const_re + static_cast<double>(coeff_index) * index, 0.0);
  if (coeff_s != 0) z += static_cast<double>(coeff_s) * s;
  if (coeff_ia != 0) z += static_cast<double>(coeff_ia) * (kI * alpha);
  return z;
}

std::vector<AffineArg> Identity::zeta_args() const {
  std::vector<AffineArg> out;
  for (const auto* side : {&lhs_terms, &rhs_terms}) {
    for (const TermSpec& t : *side) {
      for (const ZetaFactor& f : t.zeta_factors) {
        if (std::find(out.begin(), out.end(), f.arg) == out.end()) out.push_back(f.arg);
      }
    }
  }
  return out;
}

const std::vector<Identity>& catalogue() {
  static const std::vector<Identity> entries = build_catalogue();
  return entries;
}

const Identity& identity(IdentityId id) { return catalogue()[static_cast<int>(id)]; }

double ResidualSample::rel_diff() const {
  const double r = std::abs(rhs);
  const double d = std::abs(lhs - rhs);
  return r > 0.0 ? d / r : d / std::max(std::abs(lhs), std::numeric_limits<double>::min());
}

Complex alpha_coeff(int n, Complex s) {
  if (n < 0) throw ParamError("alpha_coeff: index must be non-negative");
  const bool even = n % 2 == 0;
  // (-1)^(n+1) - 1 and (-1)^n - 1
  const double tan_weight = even ? -2.0 : 0.0;
  const double const_weight = even ? 0.0 : -2.0;
  Complex out = 0.0;
  if (tan_weight != 0.0) out += i_power(n) * tan_pi_half(s) * tan_weight;
  if (const_weight != 0.0) out += i_power(n + 3) * const_weight;
  return 0.5 * out;
}

Complex ladder_product(Complex base, int first, int count, double scale, int scale_power) {
  if (count <= 8 && scale_power <= 8) {
    Complex p = 1.0;
    for (int j = first; j < first + count; ++j) p *= base + static_cast<double>(j);
    return p / std::pow(scale, scale_power);
  }
  Complex log_sum = -static_cast<double>(scale_power) * std::log(scale);
  for (int j = first; j < first + count; ++j) {
    const Complex f = base + static_cast<double>(j);
    if (f == Complex(0.0, 0.0)) return 0.0;
    log_sum += std::log(f);
  }
  if (log_sum.real() > std::log(std::numeric_limits<double>::max())) {
    throw OverflowError("ladder product exceeds the floating range");
  }
  return std::exp(log_sum);
}

double singular_distance(IdentityId id, Complex s, std::optional<Complex> alpha,
                         std::optional<LadderIndex> index) {
  const Identity& e = identity(id);
  check_arity(e, alpha, index);
  return static_distance(e, make_context(e, s, alpha, index));
}

double singular_distance(IdentityId id, Complex s, std::optional<Complex> alpha,
                         std::optional<LadderIndex> index, const ZetaEngine& engine,
                         double denominator_floor) {
  const Identity& e = identity(id);
  check_arity(e, alpha, index);
  const TermContext c = make_context(e, s, alpha, index);
  const double d = static_distance(e, c);
  if (d <= kZetaPoleRadius) return d;
  for (const AffineArg& a : e.singular_args) {
    try {
      if (std::abs(engine(a.evaluate(c.s, c.alpha, c.index))) < denominator_floor) return 0.0;
    } catch (const PoleError&) {
      return 0.0;
    }
  }
  return d;
}

ResidualSample residual(IdentityId id, Complex s, std::optional<Complex> alpha,
                        std::optional<LadderIndex> index, const ZetaEngine& engine,
                        const ResidualOptions& options) {
  const Identity& e = identity(id);
  check_arity(e, alpha, index);
  const TermContext c = make_context(e, s, alpha, index);
  if (static_distance(e, c) <= options.exclusion_radius) {
    throw SingularityError(std::string(to_string(id)) + ": point within the exclusion radius");
  }

  ZetaCache zeta_at(engine);
  for (const AffineArg& a : e.singular_args) {
    if (std::abs(zeta_at(a.evaluate(c.s, c.alpha, c.index))) < options.denominator_floor) {
      throw SingularityError(std::string(to_string(id)) + ": denominator zeta below floor");
    }
  }

  ResidualSample out;
  out.id = id;
  out.s = s;
  out.alpha = alpha;
  out.index = index;
  double scale = 0.0;
  auto side_value = [&](const std::vector<TermSpec>& terms) {
    Complex total = 0.0;
    for (const TermSpec& t : terms) {
      Complex v;
      try {
        v = static_cast<double>(t.sign) * t.coefficient(c);
      } catch (const PoleError& err) {
        throw SingularityError(std::string(to_string(id)) + ": coefficient pole: " + err.what());
      }
      for (const ZetaFactor& f : t.zeta_factors) {
        const Complex z = zeta_at(f.arg.evaluate(c.s, c.alpha, c.index));
        v = f.exponent > 0 ? v * z : v / z;
      }
      if (!finite(v)) {
        throw SingularityError(std::string(to_string(id)) + ": non-finite term");
      }
      scale += std::abs(v);
      total += v;
    }
    return total;
  };
  out.lhs = side_value(e.lhs_terms);
  out.rhs = side_value(e.rhs_terms);
  out.scale = scale;
  out.residual_abs = std::abs(out.lhs - out.rhs);
  out.residual_rel = out.residual_abs / (scale + 1e-300);
  return out;
}

}  // namespace zrc
