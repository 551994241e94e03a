#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "zrc/errors.hpp"
#include "zrc/verifier.hpp"

using zrc::Complex;
using zrc::GridSpec;
using zrc::IdentityId;
using zrc::ScanOptions;
using zrc::Verdict;
using zrc::ZetaEngine;

namespace {

const ZetaEngine& engine() {
  static const ZetaEngine e;
  return e;
}

GridSpec small_grid() { return GridSpec{-2.0, 2.0, 1.0, -3.0, 3.0, 2.0, 0.25}; }

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream is(line);
  while (std::getline(is, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

TEST_CASE("standard grid") {
  const GridSpec g = GridSpec::standard();
  const auto re = g.re_points();
  const auto im = g.im_points();
  REQUIRE(re.size() == 25);
  REQUIRE(im.size() == 14);
  CHECK(re.front() == -5.75);
  CHECK(re.back() == 6.25);
  CHECK(im.front() == -10.25);
  CHECK(im.back() == 9.25);
  CHECK(g.size() == 350);
  CHECK(zrc::standard_alphas().size() == 3);
  CHECK(zrc::standard_indices().size() == 4);
}

TEST_CASE("grid validation") {
  CHECK_THROWS_AS((GridSpec{0, 1, 0, 0, 1, 1, 0}).validate(), zrc::ConfigError);
  CHECK_THROWS_AS((GridSpec{0, 1, 1, 0, 1, -1, 0}).validate(), zrc::ConfigError);
  CHECK_THROWS_AS((GridSpec{1, 0, 1, 0, 1, 1, 0}).validate(), zrc::ConfigError);
  CHECK_THROWS_AS((GridSpec{0, 1e5, 1, 0, 1, 1, 0}).validate(), zrc::ConfigError);
  CHECK_NOTHROW((GridSpec{0, 1e4, 1, 0, 0, 1, 0}).validate());
  CHECK_THROWS_AS(zrc::scan(IdentityId::EQ70, GridSpec{0, 1, 0, 0, 1, 1, 0}, {}, {}, engine()),
                  zrc::ConfigError);
  ScanOptions bad;
  bad.hold_tol = 1e-3;
  bad.fail_tol = 1e-3;
  CHECK_THROWS_AS(zrc::scan(IdentityId::EQ70, small_grid(), {}, {}, engine(), bad),
                  zrc::ConfigError);
}

TEST_CASE("scan verdicts on the standard grid") {
  const auto g = GridSpec::standard();
  const auto r70 = zrc::scan(IdentityId::EQ70, g, {}, {}, engine());
  CHECK(r70.verdict == Verdict::Holds);
  CHECK(*r70.max_rel < 1e-8);
  const auto r16 = zrc::scan(IdentityId::EQ16_FALSE, g, {}, {}, engine());
  CHECK(r16.verdict == Verdict::Fails);
  CHECK(*r16.median_rel > 1e-3);
}

TEST_CASE("all-singular grid is inconclusive") {
  // s in {3, 5}: zeta(-1-s) is a trivial zero in the denominator.
  const GridSpec g{3.0, 5.0, 2.0, 0.0, 0.0, 1.0, 0.0};
  const auto r = zrc::scan(IdentityId::EQ70, g, {}, {}, engine());
  CHECK(r.samples_evaluated == 0);
  CHECK(r.samples_skipped == 2);
  CHECK_FALSE(r.max_rel.has_value());
  CHECK(r.verdict == Verdict::Inconclusive);
}

TEST_CASE("sample accounting and ordering") {
  const auto g = small_grid();
  const auto alphas = zrc::standard_alphas();
  const auto idx = zrc::standard_indices();
  const auto a = zrc::scan(IdentityId::EQ80, g, alphas, idx, engine());
  CHECK(a.samples.size() == g.size() * alphas.size());
  CHECK(a.samples_evaluated + a.samples_skipped == g.size() * alphas.size());
  const auto b = zrc::scan(IdentityId::EQ300, g, alphas, idx, engine());
  CHECK(b.samples_evaluated + b.samples_skipped == g.size() * idx.size());
  const auto c = zrc::scan(IdentityId::EQ30, g, alphas, idx, engine());
  CHECK(c.samples_evaluated + c.samples_skipped == g.size());
  // Row-major by (re, im, parameter).
  std::size_t k = 0;
  for (double x : g.re_points()) {
    for (double y : g.im_points()) {
      for (const Complex& al : alphas) {
        CHECK(a.samples[k].s == Complex(x, y));
        CHECK(a.samples[k].alpha == al);
        ++k;
      }
    }
  }
}

TEST_CASE("skipping with an integer lattice") {
  // Offset 0 puts zeta arguments on the trivial zeros.
  const GridSpec g{-4.0, 4.0, 1.0, 0.0, 0.0, 1.0, 0.0};
  const auto r = zrc::scan(IdentityId::EQ30, g, {}, {}, engine());
  CHECK(r.samples_skipped > 0);
  CHECK(r.samples_evaluated > 0);
  CHECK(r.verdict == Verdict::Holds);
  for (const auto& s : r.samples) {
    if (s.skipped) continue;
    CHECK(zrc::singular_distance(IdentityId::EQ30, s.s, s.alpha, s.index, engine()) > 1e-6);
  }
}

TEST_CASE("skip-soundness on the standard grid") {
  for (IdentityId id : {IdentityId::EQ80, IdentityId::EQ315, IdentityId::EQ320}) {
    const auto r = zrc::scan(id, small_grid(), zrc::standard_alphas(), zrc::standard_indices(),
                             engine());
    for (const auto& s : r.samples) {
      if (s.skipped) continue;
      CHECK(zrc::singular_distance(id, s.s, s.alpha, s.index) > r.exclusion_radius);
    }
  }
}

TEST_CASE("determinism and parallel-serial equivalence") {
  const auto g = small_grid();
  const auto alphas = zrc::standard_alphas();
  ScanOptions serial;
  ScanOptions parallel;
  parallel.threads = 4;
  const auto a = zrc::scan(IdentityId::EQ120, g, alphas, {}, engine(), serial);
  const auto b = zrc::scan(IdentityId::EQ120, g, alphas, {}, engine(), serial);
  const auto c = zrc::scan(IdentityId::EQ120, g, alphas, {}, engine(), parallel);
  CHECK(a == b);
  CHECK(a == c);
  std::ostringstream ea, eb, ec;
  zrc::export_report(a, zrc::ExportFormat::Json, ea);
  zrc::export_report(b, zrc::ExportFormat::Json, eb);
  zrc::export_report(c, zrc::ExportFormat::Json, ec);
  CHECK(ea.str() == eb.str());
  CHECK(ea.str() == ec.str());
}

TEST_CASE("classify") {
  zrc::ScanReport r;
  r.hold_tol = 1e-8;
  r.fail_tol = 1e-3;
  CHECK(zrc::classify(r) == Verdict::Inconclusive);
  r.samples_evaluated = 10;
  r.max_rel = 1e-9;
  r.median_rel = 1e-12;
  CHECK(zrc::classify(r) == Verdict::Holds);
  r.max_rel = 1.0;
  CHECK(zrc::classify(r) == Verdict::Inconclusive);
  r.median_rel = 2e-3;
  CHECK(zrc::classify(r) == Verdict::Fails);
}

TEST_CASE("verdict monotonicity under grid shrinking") {
  for (IdentityId id : {IdentityId::EQ70, IdentityId::EQ110, IdentityId::EQ335}) {
    GridSpec g = GridSpec::standard();
    for (int k = 0; k < 4; ++k) {
      const auto r = zrc::scan(id, g, zrc::standard_alphas(), zrc::standard_indices(), engine());
      CHECK(r.verdict != Verdict::Fails);
      g.re_max -= 2.5;
      g.im_max -= 4.0;
    }
  }
}

TEST_CASE("CSV export") {
  const GridSpec one{0.0, 0.0, 1.0, 1.0, 1.0, 1.0, 0.25};
  const auto r = zrc::scan(IdentityId::EQ70, one, {}, {}, engine());
  std::ostringstream os;
  zrc::export_report(r, zrc::ExportFormat::Csv, os);
  std::istringstream is(os.str());
  std::string header, row, extra;
  std::getline(is, header);
  std::getline(is, row);
  CHECK_FALSE(std::getline(is, extra));
  CHECK(header ==
        "identity,re_s,im_s,re_alpha,im_alpha,index_n,index_m,residual_abs,residual_rel,scale,"
        "skipped");
  const auto fields = split(row);
  REQUIRE(fields.size() == 11);
  CHECK(fields[0] == "EQ70");
  CHECK(fields[1] == "0.25");
  CHECK(fields[3].empty());
  CHECK(fields[10] == "0");

  const auto r80 = zrc::scan(IdentityId::EQ80, small_grid(), zrc::standard_alphas(), {}, engine());
  std::ostringstream os80;
  zrc::export_report(r80, zrc::ExportFormat::Csv, os80);
  std::istringstream is80(os80.str());
  std::size_t rows = 0;
  for (std::string line; std::getline(is80, line); ++rows) CHECK(split(line).size() == 11);
  CHECK(rows == r80.samples.size() + 1);

  // A skipped row carries empty residual fields.
  const auto skipped = zrc::scan(IdentityId::EQ70, GridSpec{3.0, 3.0, 1.0, 0.0, 0.0, 1.0, 0.0},
                                 {}, {}, engine());
  std::ostringstream os3;
  zrc::export_report(skipped, zrc::ExportFormat::Csv, os3);
  const std::string text = os3.str();
  const auto f = split(text.substr(text.find('\n') + 1, text.rfind('\n') - text.find('\n') - 1));
  REQUIRE(f.size() == 11);
  CHECK(f[7].empty());
  CHECK(f[8].empty());
  CHECK(f[9].empty());
  CHECK(f[10] == "1");
}

TEST_CASE("JSON export round-trips") {
  const auto r = zrc::scan(IdentityId::EQ315, small_grid(), {}, zrc::standard_indices(), engine());
  std::ostringstream os;
  zrc::export_report(r, zrc::ExportFormat::Json, os);
  const auto back = zrc::report_from_json(os.str());
  CHECK(back == r);
  const auto r80 = zrc::scan(IdentityId::EQ80, small_grid(), zrc::standard_alphas(), {}, engine());
  std::ostringstream os80;
  zrc::export_report(r80, zrc::ExportFormat::Json, os80);
  CHECK(zrc::report_from_json(os80.str()) == r80);
}

TEST_CASE("export to a failed stream") {
  const GridSpec one{0.0, 0.0, 1.0, 1.0, 1.0, 1.0, 0.25};
  const auto r = zrc::scan(IdentityId::EQ70, one, {}, {}, engine());
  std::ostringstream os;
  os.setstate(std::ios::badbit);
  CHECK_THROWS_AS(zrc::export_report(r, zrc::ExportFormat::Csv, os), zrc::IoError);
}
