#include "zrc/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "zrc/errors.hpp"

namespace zrc {

namespace {

double parse_decimal(const std::string& text) {
  char* end = nullptr;
  const double x = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0') {
    throw ConfigError("fixtures: malformed decimal '" + text + "'");
  }
  return x;
}

}  // namespace

FixtureFile parse_fixtures(const std::string& text) {
  using json = nlohmann::json;
  FixtureFile out;
  try {
    const json j = json::parse(text);
    out.schema_version = j.at("schema_version").get<int>();
    for (const json& e : j.at("entries")) {
      FixtureEntry entry;
      entry.kind = e.at("kind").get<std::string>();
      for (int k = 0; k < 2; ++k) {
        entry.arg_text[k] = e.at("arg").at(k).get<std::string>();
        entry.value_text[k] = e.at("value").at(k).get<std::string>();
      }
      entry.arg = {parse_decimal(entry.arg_text[0]), parse_decimal(entry.arg_text[1])};
      entry.value = {parse_decimal(entry.value_text[0]), parse_decimal(entry.value_text[1])};
      if (e.contains("note")) entry.note = e.at("note").get<std::string>();
      out.entries.push_back(std::move(entry));
    }
  } catch (const json::exception& err) {
    throw ConfigError(std::string("fixtures: ") + err.what());
  }
  return out;
}

std::optional<FixtureFile> load_fixtures(const std::string& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_fixtures(buf.str());
}

FixtureComparison compare_fixtures(const FixtureFile& fixtures, const ZetaEngine& engine,
                                   double max_abs_im) {
  FixtureComparison out;
  for (const FixtureEntry& e : fixtures.entries) {
    if ((e.kind != "zeta" && e.kind != "gamma") || std::abs(e.arg.imag()) > max_abs_im) {
      ++out.skipped;
      continue;
    }
    FixtureCheck check{e, {}, 0.0};
    try {
      check.computed = e.kind == "zeta" ? engine(e.arg) : cgamma(e.arg);
    } catch (const Error&) {
      ++out.skipped;
      continue;
    }
    const double ref = std::abs(e.value);
    const double diff = std::abs(check.computed - e.value);
    // Points on (or within 1e-9 of) a zero compare absolutely.
    check.rel_diff = ref >= 1e-9 ? diff / ref : diff;
    out.max_rel_diff = std::max(out.max_rel_diff, check.rel_diff);
    out.checks.push_back(std::move(check));
  }
  return out;
}

}  // namespace zrc
