#include "zrc/recursion.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "zrc/errors.hpp"
#include "zrc/json_io.hpp"

namespace zrc {

namespace {

const double kFourPi2 = 4.0 * kPi * kPi;

void require_nonsingular(IdentityId id, Complex s, std::optional<LadderIndex> index,
                         const ZetaEngine& engine) {
  if (singular_distance(id, s, std::nullopt, index, engine) <= kRecursionExclusion) {
    throw SingularityError(std::string(to_string(id)) + ": point in the singular set");
  }
}

void require_index(int k) {
  if (k < 0 || k > LadderIndex::kMax) throw ParamError("ladder index must be in [0, 64]");
}

void require_factors(Complex s, int first, int count) {
  for (int j = first; j < first + count; ++j) {
    if (std::abs(s + static_cast<double>(j)) <= kPoleRadius) {
      throw SingularityError("ladder product factor vanishes");
    }
  }
}

Complex zeta_checked(const ZetaEngine& engine, Complex z) {
  try {
    return engine(z);
  } catch (const PoleError& err) {
    throw SingularityError(err.what());
  }
}

double relative_difference(Complex a, Complex b) {
  const double scale = std::abs(b);
  return scale > 0.0 ? std::abs(a - b) / scale : std::abs(a - b);
}

}  // namespace

Complex zeta_ladder_eq300(Complex s, int n, const ZetaEngine& engine) {
  require_index(n);
  require_factors(s, 0, 2 * n + 2);
  require_nonsingular(IdentityId::EQ300, s, LadderIndex{n, n}, engine);
  const double sign = n % 2 == 0 ? -1.0 : 1.0;
  const Complex prefactor = sign * ladder_product(s, 0, 2 * n + 2, kFourPi2, n + 1);
  const double shift = 2.0 * n;
  return prefactor * zeta_checked(engine, 1.0 - s) * zeta_checked(engine, s + (shift + 2.0)) /
         zeta_checked(engine, -s - (shift + 1.0));
}

Complex zeta_via_eq30(Complex s, const ZetaEngine& engine) {
  return zeta_ladder_eq300(s, 0, engine);
}

Complex ratio_eq315(Complex s, int m, const ZetaEngine& engine) {
  require_index(m);
  require_factors(s, -2 * m, 2 * m + 2);
  require_nonsingular(IdentityId::EQ315, s, LadderIndex{m, m}, engine);
  const double sign = m % 2 == 0 ? -1.0 : 1.0;
  // (4 pi^2)^(m+1) / (s(s+1) prod_{j=1}^{2m} (s-j))
  const Complex prefactor = sign / ladder_product(s, -2 * m, 2 * m + 2, kFourPi2, m + 1);
  const double shift = 2.0 * m;
  return prefactor * zeta_checked(engine, s - shift) /
         zeta_checked(engine, (shift + 1.0) - s);
}

Complex ratio_eq320(Complex s, int n, const ZetaEngine& engine) {
  require_index(n);
  require_nonsingular(IdentityId::EQ320, s, LadderIndex{n, n}, engine);
  const Complex prefactor = ladder_product(s, 0, n + 1, 2.0 * kPi, n + 1) * alpha_coeff(n, s);
  const double shift = static_cast<double>(n);
  return prefactor * zeta_checked(engine, s + (shift + 1.0)) / zeta_checked(engine, -s - shift);
}

std::string_view to_string(HalfIntegerKind kind) {
  return kind == HalfIntegerKind::Eq310 ? "eq310" : "eq335";
}

std::optional<HalfIntegerKind> parse_half_integer_kind(std::string_view text) {
  if (text == "eq310" || text == "EQ310") return HalfIntegerKind::Eq310;
  if (text == "eq335" || text == "EQ335") return HalfIntegerKind::Eq335;
  return std::nullopt;
}

std::vector<HalfIntegerRow> half_integer_table(HalfIntegerKind kind, int n_max,
                                               const ZetaEngine& engine) {
  if (n_max > kMaxHalfIntegerIndex) {
    throw OverflowError("half_integer_table: n_max above 20");
  }
  std::vector<HalfIntegerRow> rows;
  for (int n = 0; n <= n_max; ++n) {
    HalfIntegerRow row;
    row.n = n;
    if (kind == HalfIntegerKind::Eq310) {
      row.target_arg = -1.5 - 2.0 * n;
      const double sign = n % 2 == 0 ? -1.0 : 1.0;
      row.ladder_value = sign * ladder_product(0.5, 0, 2 * n + 2, kFourPi2, n + 1) *
                         engine(Complex(2.5 + 2.0 * n, 0.0));
    } else {
      row.target_arg = -0.5 - n;
      row.ladder_value = ladder_product(0.5, 0, n + 1, 2.0 * kPi, n + 1) *
                         alpha_coeff(n, Complex(0.5, 0.0)) * engine(Complex(1.5 + n, 0.0));
    }
    row.direct_value = engine(Complex(row.target_arg, 0.0));
    row.rel_diff = relative_difference(row.ladder_value, row.direct_value);
    rows.push_back(row);
  }
  return rows;
}

void export_table(const std::vector<HalfIntegerRow>& rows, HalfIntegerKind kind,
                  ExportFormat format, std::ostream& out) {
  if (format == ExportFormat::Csv) {
    out << "kind,n,target_arg,ladder_re,ladder_im,direct_re,direct_im,rel_diff\n";
    for (const HalfIntegerRow& r : rows) {
      out << to_string(kind) << ',' << r.n << ',' << format_double(r.target_arg) << ','
          << format_double(r.ladder_value.real()) << ',' << format_double(r.ladder_value.imag())
          << ',' << format_double(r.direct_value.real()) << ','
          << format_double(r.direct_value.imag()) << ',' << format_double(r.rel_diff) << '\n';
    }
  } else {
    nlohmann::json j = nlohmann::json::array();
    for (const HalfIntegerRow& r : rows) {
      j.push_back({{"kind", to_string(kind)},
                   {"n", r.n},
                   {"target_arg", r.target_arg},
                   {"ladder_re", r.ladder_value.real()},
                   {"ladder_im", r.ladder_value.imag()},
                   {"direct_re", r.direct_value.real()},
                   {"direct_im", r.direct_value.imag()},
                   {"rel_diff", r.rel_diff}});
    }
    write_json(j, out);
    out << '\n';
  }
  out.flush();
  if (!out) throw IoError("export_table: write failed");
}

std::vector<LadderCandidate> ladder_candidates(Complex s, int max_index,
                                               const ZetaEngine& engine) {
  const Complex direct = engine(s);
  std::vector<LadderCandidate> out;
  auto attempt = [&](const char* name, int k, auto&& compute) {
    try {
      const Complex v = compute();
      if (std::isfinite(v.real()) && std::isfinite(v.imag())) {
        out.push_back({name, k, v, relative_difference(v, direct)});
      }
    } catch (const Error&) {
      // route singular at this point
    }
  };
  attempt("eq30", 0, [&] { return zeta_via_eq30(s, engine); });
  for (int k = 1; k <= max_index; ++k) {
    attempt("eq300", k, [&] { return zeta_ladder_eq300(s, k, engine); });
  }
  for (int k = 0; k <= max_index; ++k) {
    // zeta(s) = [zeta(s'+2)/zeta(-1-s')] zeta(-1-s') with s' = s - 2
    attempt("eq315", k, [&] { return ratio_eq315(s - 2.0, k, engine) * engine(1.0 - s); });
    attempt("eq320", k, [&] { return ratio_eq320(s, k, engine) * engine(1.0 - s); });
  }
  std::stable_sort(out.begin(), out.end(), [](const LadderCandidate& a, const LadderCandidate& b) {
    return a.rel_diff < b.rel_diff;
  });
  return out;
}

}  // namespace zrc
