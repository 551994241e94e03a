#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "zrc/errors.hpp"
#include "zrc/fixtures.hpp"

using zrc::Complex;

namespace {

const std::string kSample = std::string(ZRC_TEST_DATA_DIR) + "/fixtures_sample.json";

}  // namespace

TEST_CASE("load the sample fixture file") {
  const auto f = zrc::load_fixtures(kSample);
  REQUIRE(f.has_value());
  CHECK(f->schema_version == 1);
  CHECK(f->entries.size() > 20);
  bool has_zeta2 = false;
  for (const auto& e : f->entries) {
    if (e.kind == "zeta" && e.arg == Complex(2.0, 0.0)) {
      has_zeta2 = true;
      CHECK(e.value.real() == doctest::Approx(1.6449340668482264).epsilon(1e-16));
      // Decimal text round-trips to the stored binary value.
      CHECK(std::stod(e.value_text[0]) == e.value.real());
    }
  }
  CHECK(has_zeta2);
}

TEST_CASE("engine agrees with every fixture point") {
  const auto f = zrc::load_fixtures(kSample);
  REQUIRE(f.has_value());
  const zrc::ZetaEngine engine;
  const auto c = zrc::compare_fixtures(*f, engine);
  CHECK(c.checks.size() > 20);
  CHECK(c.max_rel_diff <= 1e-12);
  bool saw_zero = false;
  for (const auto& k : c.checks) {
    CAPTURE(k.entry.arg);
    CHECK(k.rel_diff <= 1e-12);
    if (k.entry.kind == "zeta" && std::abs(k.entry.arg.imag() - 14.134725141734693790) < 1e-12) {
      saw_zero = true;
      CHECK(std::abs(k.computed) < 1e-9);
    }
  }
  CHECK(saw_zero);
}

TEST_CASE("missing and malformed fixture files") {
  CHECK_FALSE(zrc::load_fixtures("/nonexistent/fixtures.json").has_value());
  CHECK_THROWS_AS(zrc::parse_fixtures("{"), zrc::ConfigError);
  CHECK_THROWS_AS(zrc::parse_fixtures(R"({"schema_version": 1})"), zrc::ConfigError);
  CHECK_THROWS_AS(zrc::parse_fixtures(R"({"schema_version": 1, "entries": [{"kind": "zeta"}]})"),
                  zrc::ConfigError);
  const auto ok = zrc::parse_fixtures(
      R"({"schema_version": 1, "entries": [{"kind": "constant", "arg": ["0", "0"],
          "value": ["3.141592653589793", "0"], "note": "pi"}]})");
  CHECK(ok.entries.size() == 1);
  const zrc::ZetaEngine engine;
  const auto c = zrc::compare_fixtures(ok, engine);
  CHECK(c.checks.empty());
  CHECK(c.skipped == 1);
}
