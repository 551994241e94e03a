#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "zrc/catalogue.hpp"

namespace zrc {

/// Rectangular lattice: re = re_min + offset + k re_step while
/// re_min + k re_step <= re_max (same for im).
struct GridSpec {
  double re_min = 0.0;
  double re_max = 0.0;
  double re_step = 1.0;
  double im_min = 0.0;
  double im_max = 0.0;
  double im_step = 1.0;
  double offset = 0.0;

  static constexpr int kMaxPointsPerAxis = 10'000;

  /// Re in [-5.75, 6.25] step 0.5, Im in [-10.25, 9.25] step 1.5.
  static GridSpec standard();

  /// Throws ConfigError on non-positive steps, reversed bounds or more than
  /// 1e4 points per axis.
  void validate() const;
  std::vector<double> re_points() const;
  std::vector<double> im_points() const;
  std::size_t size() const { return re_points().size() * im_points().size(); }

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

struct ScanSample {
  Complex s;
  std::optional<Complex> alpha;
  std::optional<LadderIndex> index;
  bool skipped = false;
  double residual_abs = 0.0;
  double residual_rel = 0.0;
  double scale = 0.0;
  friend bool operator==(const ScanSample&, const ScanSample&) = default;
};

struct ScanReport {
  IdentityId id{};
  GridSpec grid;
  std::vector<Complex> alphas;
  std::vector<LadderIndex> indices;
  double hold_tol = 0.0;
  double fail_tol = 0.0;
  double exclusion_radius = 0.0;
  std::size_t samples_evaluated = 0;
  std::size_t samples_skipped = 0;
  std::optional<double> max_rel;
  std::optional<double> median_rel;
  std::optional<double> mean_rel;
  Verdict verdict = Verdict::Inconclusive;
  /// Row-major by (re, im, parameter).
  std::vector<ScanSample> samples;

  friend bool operator==(const ScanReport&, const ScanReport&) = default;
};

struct ScanOptions {
  double hold_tol = 1e-8;
  double fail_tol = 1e-3;
  double exclusion_radius = 1e-6;
  double denominator_floor = 1e-8;
  /// 0 picks the hardware concurrency; 1 runs serially.
  unsigned threads = 1;
};

/// Standard parameter sets: alpha in {0.7, 1.3+0.4i, -i+0.001}; n = m in {0..3}.
std::vector<Complex> standard_alphas();
std::vector<LadderIndex> standard_indices();

/// Evaluates the identity on every lattice point and parameter combination.
/// Parameters irrelevant to the identity's param_kind are ignored.
ScanReport scan(IdentityId id, const GridSpec& grid, const std::vector<Complex>& alphas,
                const std::vector<LadderIndex>& indices, const ZetaEngine& engine,
                const ScanOptions& options = {});

/// HOLDS iff max_rel < hold_tol; FAILS iff median_rel > fail_tol.
Verdict classify(const ScanReport& report);

struct VerdictRow {
  IdentityId id{};
  Verdict expected = Verdict::Holds;
  Verdict verdict = Verdict::Inconclusive;
  std::optional<double> max_rel;
  std::optional<double> median_rel;
  std::size_t samples_evaluated = 0;
  std::size_t samples_skipped = 0;
  bool matches() const { return expected == verdict; }
};

/// Scans every catalogued identity on `grid` with the standard parameters.
std::vector<VerdictRow> verdict_all(const ZetaEngine& engine,
                                    const GridSpec& grid = GridSpec::standard(),
                                    const ScanOptions& options = {});

enum class ExportFormat { Csv, Json };

/// CSV: identity,re_s,im_s,re_alpha,im_alpha,index_n,index_m,residual_abs,
/// residual_rel,scale,skipped. JSON mirrors ScanReport. 17 significant digits.
/// Throws IoError when the stream fails.
void export_report(const ScanReport& report, ExportFormat format, std::ostream& out);

/// Inverse of the JSON export.
ScanReport report_from_json(const std::string& text);

}  // namespace zrc
