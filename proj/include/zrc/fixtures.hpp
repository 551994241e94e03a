#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zrc/zeta.hpp"

namespace zrc {

/// One golden value from the high-precision oracle fixture file.
struct FixtureEntry {
  std::string kind;  // "zeta", "gamma" or "constant"
  Complex arg;
  Complex value;
  std::string arg_text[2];
  std::string value_text[2];
  std::string note;
};

struct FixtureFile {
  int schema_version = 0;
  std::vector<FixtureEntry> entries;
};

/// Parses the fixture JSON document. Throws ConfigError when malformed.
FixtureFile parse_fixtures(const std::string& text);

/// std::nullopt when the file does not exist.
std::optional<FixtureFile> load_fixtures(const std::string& path);

struct FixtureCheck {
  FixtureEntry entry;
  Complex computed;
  double rel_diff = 0.0;  // absolute when |value| < 1e-9
};

struct FixtureComparison {
  std::vector<FixtureCheck> checks;
  std::size_t skipped = 0;  // constants, |Im| > max_abs_im, or engine errors
  double max_rel_diff = 0.0;
};

/// Compares zeta and gamma entries against the engine.
FixtureComparison compare_fixtures(const FixtureFile& fixtures, const ZetaEngine& engine,
                                   double max_abs_im = 60.0);

}  // namespace zrc
