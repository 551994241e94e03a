// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "zrc/catalogue.hpp"
#include "zrc/errors.hpp"
#include "zrc/recursion.hpp"
#include "zrc/verifier.hpp"
#include "zrc/zeta.hpp"

using namespace zrc;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

double rel(Complex a, Complex b) {
  const double m = std::abs(b);
  return m > 0.0 ? std::abs(a - b) / m : std::abs(a - b);
}

std::vector<Complex> grid_points(const GridSpec& g) {
  std::vector<Complex> pts;
  for (double x : g.re_points()) {
    for (double y : g.im_points()) pts.emplace_back(x, y);
  }
  return pts;
}

Outcome verdict_suite() {
  const ZetaEngine engine;
  const auto t0 = std::chrono::steady_clock::now();
  const auto rows = verdict_all(engine);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  Outcome o;
  int holds = 0, fails = 0;
  double worst_true = 0.0, least_false = INFINITY;
  for (const auto& r : rows) {
    const bool false_one = r.id == IdentityId::EQ16_FALSE || r.id == IdentityId::EQ90_PRINTED;
    if (false_one) {
      if (r.verdict != Verdict::Fails || !r.median_rel || *r.median_rel <= 1e-3) {
        o.pass = false;
        o.detail += std::string(" ") + std::string(to_string(r.id)) + " not FAILS;";
      } else {
        ++fails;
        least_false = std::min(least_false, *r.median_rel);
      }
    } else {
      if (r.verdict != Verdict::Holds || !r.max_rel || *r.max_rel >= 1e-8) {
        o.pass = false;
        o.detail += std::string(" ") + std::string(to_string(r.id)) + " not HOLDS;";
      } else {
        ++holds;
        worst_true = std::max(worst_true, *r.max_rel);
      }
    }
  }
  if (rows.size() != 25 || secs >= 60.0) o.pass = false;
  std::ostringstream os;
  os << holds << "/23 HOLDS (worst max_rel " << worst_true << "), " << fails
     << "/2 FAILS (smallest median_rel " << least_false << "), " << secs << " s" << o.detail;
  o.detail = os.str();
  return o;
}

Outcome reflection_only() {
  const ZetaEngine engine(EngineOptions{1e-13, EngineMode::ReflectionOnly});
  Outcome o;
  std::ostringstream os;
  for (IdentityId id : {IdentityId::EQ30, IdentityId::EQ70, IdentityId::EQ120}) {
    const auto r = scan(id, GridSpec::standard(), standard_alphas(), {}, engine);
    const bool ok = r.max_rel && *r.max_rel < 1e-8 && r.samples_evaluated > 0;
    o.pass = o.pass && ok;
    os << to_string(id) << " max_rel " << (r.max_rel ? *r.max_rel : NAN) << " over "
       << r.samples_evaluated << "; ";
  }
  o.detail = os.str();
  return o;
}

Outcome alpha_degeneration() {
  const ZetaEngine engine;
  auto ratio = [&](Complex x) {
    return engine(x) * engine(-1.0 - x) / (engine(1.0 - x) * engine(x + 2.0));
  };
  Outcome o;
  int used = 0;
  double worst = 0.0;
  for (Complex s : grid_points(GridSpec::standard())) {
    if (used == 50) break;
    try {
      const auto r120 = residual(IdentityId::EQ120, s, Complex(0.0, -1.0), {}, engine);
      // 0 = R(s+3) - 3R(s+2) + 3R(s+1) - R(s), the EQ70 recursion one step up.
      const Complex family =
          -(ratio(s + 3.0) - 3.0 * ratio(s + 2.0) + 3.0 * ratio(s + 1.0) - ratio(s));
      const auto r70 = residual(IdentityId::EQ70, s + 1.0, {}, {}, engine);
      const double d =
          std::max(std::abs(r120.difference() - family), std::abs(r120.difference() + r70.difference()));
      worst = std::max(worst, d);
      ++used;
    } catch (const SingularityError&) {
    }
  }
  o.pass = used == 50 && worst < 1e-9;
  std::ostringstream os;
  os << used << " points, worst |difference| " << worst;
  o.detail = os.str();
  return o;
}

Outcome half_integer_tables() {
  const ZetaEngine engine;
  Outcome o;
  const auto t310 = half_integer_table(HalfIntegerKind::Eq310, 6, engine);
  const auto t335 = half_integer_table(HalfIntegerKind::Eq335, 12, engine);
  double worst = 0.0;
  for (const auto& r : t310) worst = std::max(worst, r.rel_diff);
  for (const auto& r : t335) worst = std::max(worst, r.rel_diff);
  // zeta(-1/2), zeta(-3/2) < 0; zeta(-5/2), zeta(-7/2) > 0.
  const bool signs = t335[0].direct_value.real() < 0 && t335[1].direct_value.real() < 0 &&
                     t335[2].direct_value.real() > 0 && t335[3].direct_value.real() > 0 &&
                     t335[0].ladder_value.real() < 0 && t335[1].ladder_value.real() < 0 &&
                     t335[2].ladder_value.real() > 0 && t335[3].ladder_value.real() > 0 &&
                     t310[0].ladder_value.real() < 0 && t310[1].ladder_value.real() > 0;
  o.pass = t310.size() == 7 && t335.size() == 13 && worst < 1e-9 && signs;
  std::ostringstream os;
  os << t310.size() << "+" << t335.size() << " rows, worst rel_diff " << worst << ", sign pattern "
     << (signs ? "ok" : "wrong");
  o.detail = os.str();
  return o;
}

Outcome eq380_constant() {
  const ZetaEngine engine;
  const Complex via = zeta_via_eq30(Complex(-0.5, 0.0), engine) / engine(Complex(1.5, 0.0));
  const Complex direct = engine(Complex(-0.5, 0.0)) / engine(Complex(1.5, 0.0));
  const double target = -1.0 / (4.0 * kPi);
  const double e1 = rel(via, target), e2 = rel(direct, target);
  const auto r = residual(IdentityId::EQ380, 0.0, {}, {}, engine);
  Outcome o;
  o.pass = e1 < 1e-10 && e2 < 1e-10 && via.real() < 0 && direct.real() < 0 && r.residual_rel < 1e-10;
  std::ostringstream os;
  os.precision(17);
  os << "ratio " << direct.real() << ", rel err " << e2 << " direct, " << e1 << " via recursion";
  o.detail = os.str();
  return o;
}

Outcome eq90_closed_form() {
  const ZetaEngine engine;
  const Complex i(0.0, 1.0);
  const Complex alphas[] = {{0.7, 0.0}, {1.3, 0.4}, {0.001, -1.0}, {-0.6, 0.25}, {2.1, -0.3}};
  double worst = 0.0;
  int samples = 0;
  for (double x : {-3.75, -1.25, 0.25, 2.75}) {
    for (Complex a : alphas) {
      const Complex s(x, 1.5 * x + 0.5);
      const auto r = residual(IdentityId::EQ90_PRINTED, s, a, {}, engine);
      const Complex a2 = a * a;
      const Complex closed = 4.0 * a2 * a2 - 4.0 * (2.0 * s + 1.0) * i * a2 * a - 8.0 * (s * s + s) * a2;
      worst = std::max(worst, rel(-r.difference(), closed));
      ++samples;
    }
  }
  Outcome o;
  o.pass = samples == 20 && worst < 1e-6;
  std::ostringstream os;
  os << samples << " samples, worst relative mismatch " << worst;
  o.detail = os.str();
  return o;
}

Outcome engine_invariants() {
  const ZetaEngine engine;
  const auto pts = grid_points(GridSpec::standard());
  double conj_worst = 0.0, xi_worst = 0.0;
  for (Complex s : pts) {
    conj_worst = std::max(conj_worst, rel(engine(std::conj(s)), std::conj(engine(s))));
    xi_worst = std::max(xi_worst, rel(xi(1.0 - s, engine), xi(s, engine)));
  }
  bool zeros = true;
  for (int n = 1; n <= 20; ++n) zeros = zeros && engine(Complex(-2.0 * n, 0.0)) == Complex(0.0, 0.0);

  const ZetaEngine reflected(EngineOptions{1e-13, EngineMode::ReflectionOnly});
  const ZetaEngine direct(EngineOptions{1e-13, EngineMode::DirectOnly});
  int compared = 0, violations = 0;
  for (double x = -4.9; x < 0.5; x += 0.35) {
    for (double y = -12.0; y <= 12.0; y += 2.3) {
      const Complex s(x, y);
      try {
        const auto a = reflected.evaluate(s);
        const auto b = direct.evaluate(s);
        ++compared;
        if (std::abs(a.value - b.value) > a.abs_error_bound + b.abs_error_bound) ++violations;
      } catch (const PrecisionError&) {
      }
    }
  }
  Outcome o;
  o.pass = conj_worst < 1e-12 && xi_worst < 1e-10 && zeros && compared > 0 && violations == 0;
  std::ostringstream os;
  os << "conj " << conj_worst << ", xi " << xi_worst << ", trivial zeros "
     << (zeros ? "exact" : "inexact") << ", reflection/direct " << compared - violations << "/"
     << compared << " within bounds";
  o.detail = os.str();
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "verdict suite on the standard grid", verdict_suite},
      {2, "reflection-only values satisfy EQ30/EQ70/EQ120", reflection_only},
      {3, "EQ120 at alpha=-i degenerates to the EQ70 recursion", alpha_degeneration},
      {4, "half-integer ladder tables", half_integer_tables},
      {5, "zeta(-1/2)/zeta(3/2) = -1/(4 pi)", eq380_constant},
      {6, "EQ90 printed-form remainder", eq90_closed_form},
      {7, "engine invariants", engine_invariants},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("[%s] %d %s: %s\n", o.pass ? "PASS" : "FAIL", c.number, c.name, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
