#include "zrc/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <thread>

#include "zrc/errors.hpp"
#include "zrc/json_io.hpp"

namespace zrc {

namespace {

using json = nlohmann::json;

std::vector<double> axis_points(double lo, double hi, double step, double offset) {
  const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
  std::vector<double> out(count);
  for (std::size_t k = 0; k < count; ++k) out[k] = lo + offset + static_cast<double>(k) * step;
  return out;
}

void validate_axis(const char* name, double lo, double hi, double step) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !std::isfinite(step)) {
    throw ConfigError(std::string("grid ") + name + ": non-finite bound");
  }
  if (!(step > 0.0)) throw ConfigError(std::string("grid ") + name + ": step must be positive");
  if (hi < lo) throw ConfigError(std::string("grid ") + name + ": max below min");
  if ((hi - lo) / step > GridSpec::kMaxPointsPerAxis) {
    throw ConfigError(std::string("grid ") + name + ": more than 1e4 points");
  }
}

struct ParamCombo {
  std::optional<Complex> alpha;
  std::optional<LadderIndex> index;
};

std::vector<ParamCombo> combos_for(const Identity& e, const std::vector<Complex>& alphas,
                                   const std::vector<LadderIndex>& indices) {
  std::vector<ParamCombo> out;
  if (e.uses_alpha() && e.uses_index()) {
    for (Complex a : alphas) {
      for (const LadderIndex& i : indices) out.push_back({a, i});
    }
  } else if (e.uses_alpha()) {
    for (Complex a : alphas) out.push_back({a, std::nullopt});
  } else if (e.uses_index()) {
    for (const LadderIndex& i : indices) out.push_back({std::nullopt, i});
  } else {
    out.push_back({});
  }
  return out;
}

std::string optional_number(bool present, double x) { return present ? format_double(x) : ""; }

json optional_complex(const std::optional<Complex>& z) {
  return z ? complex_to_json(*z) : json(nullptr);
}

double number_or_zero(const json& j) { return j.is_null() ? 0.0 : j.get<double>(); }

std::optional<double> optional_number_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

}  // namespace

GridSpec GridSpec::standard() { return GridSpec{-6.0, 6.0, 0.5, -10.5, 10.0, 1.5, 0.25}; }

void GridSpec::validate() const {
  validate_axis("re", re_min, re_max, re_step);
  validate_axis("im", im_min, im_max, im_step);
  if (!std::isfinite(offset)) throw ConfigError("grid offset must be finite");
}

std::vector<double> GridSpec::re_points() const {
  validate();
  return axis_points(re_min, re_max, re_step, offset);
}

std::vector<double> GridSpec::im_points() const {
  validate();
  return axis_points(im_min, im_max, im_step, offset);
}

std::vector<Complex> standard_alphas() { return {{0.7, 0.0}, {1.3, 0.4}, {0.001, -1.0}}; }

std::vector<LadderIndex> standard_indices() { return {{0, 0}, {1, 1}, {2, 2}, {3, 3}}; }

Verdict classify(const ScanReport& report) {
  if (report.samples_evaluated == 0 || !report.max_rel || !report.median_rel) {
    return Verdict::Inconclusive;
  }
  if (*report.max_rel < report.hold_tol) return Verdict::Holds;
  if (*report.median_rel > report.fail_tol) return Verdict::Fails;
  return Verdict::Inconclusive;
}

ScanReport scan(IdentityId id, const GridSpec& grid, const std::vector<Complex>& alphas,
                const std::vector<LadderIndex>& indices, const ZetaEngine& engine,
                const ScanOptions& options) {
  grid.validate();
  if (!(options.hold_tol > 0.0) || !(options.hold_tol < options.fail_tol)) {
    throw ConfigError("scan: tolerances must satisfy 0 < hold_tol < fail_tol");
  }
  const Identity& e = identity(id);
  const auto re = grid.re_points();
  const auto im = grid.im_points();
  const auto combos = combos_for(e, alphas, indices);

  ScanReport report;
  report.id = id;
  report.grid = grid;
  report.alphas = alphas;
  report.indices = indices;
  report.hold_tol = options.hold_tol;
  report.fail_tol = options.fail_tol;
  report.exclusion_radius = options.exclusion_radius;
  report.samples.resize(re.size() * im.size() * combos.size());

  const ResidualOptions residual_options{options.exclusion_radius, options.denominator_floor};
  auto evaluate = [&](std::size_t k) {
    const std::size_t c = k % combos.size();
    const std::size_t j = (k / combos.size()) % im.size();
    const std::size_t i = k / (combos.size() * im.size());
    ScanSample& out = report.samples[k];
    out.s = Complex(re[i], im[j]);
    out.alpha = combos[c].alpha;
    out.index = combos[c].index;
    try {
      const ResidualSample r =
          residual(id, out.s, out.alpha, out.index, engine, residual_options);
      out.residual_abs = r.residual_abs;
      out.residual_rel = r.residual_rel;
      out.scale = r.scale;
    } catch (const SingularityError&) {
      out.skipped = true;
    } catch (const PrecisionError&) {
      // zeta not evaluable to working accuracy at some argument
      out.skipped = true;
    }
  };

  const std::size_t total = report.samples.size();
  unsigned threads = options.threads == 0 ? std::thread::hardware_concurrency() : options.threads;
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(total, 1))));
  if (threads == 1) {
    for (std::size_t k = 0; k < total; ++k) evaluate(k);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t k = t; k < total; k += threads) evaluate(k);
      });
    }
    for (auto& th : pool) th.join();
  }

  std::vector<double> rel;
  rel.reserve(total);
  for (const ScanSample& s : report.samples) {
    if (!s.skipped) rel.push_back(s.residual_rel);
  }
  report.samples_evaluated = rel.size();
  report.samples_skipped = total - rel.size();
  if (!rel.empty()) {
    report.max_rel = *std::max_element(rel.begin(), rel.end());
    report.mean_rel = std::accumulate(rel.begin(), rel.end(), 0.0) / static_cast<double>(rel.size());
    std::sort(rel.begin(), rel.end());
    const std::size_t mid = rel.size() / 2;
    report.median_rel = rel.size() % 2 == 1 ? rel[mid] : 0.5 * (rel[mid - 1] + rel[mid]);
  }
  report.verdict = classify(report);
  return report;
}

std::vector<VerdictRow> verdict_all(const ZetaEngine& engine, const GridSpec& grid,
                                    const ScanOptions& options) {
  std::vector<VerdictRow> rows;
  const auto alphas = standard_alphas();
  const auto indices = standard_indices();
  for (const Identity& e : catalogue()) {
    const ScanReport r = scan(e.id, grid, alphas, indices, engine, options);
    rows.push_back(VerdictRow{e.id, e.expected_verdict, r.verdict, r.max_rel, r.median_rel,
                              r.samples_evaluated, r.samples_skipped});
  }
  return rows;
}

void export_report(const ScanReport& report, ExportFormat format, std::ostream& out) {
  if (format == ExportFormat::Csv) {
    out << "identity,re_s,im_s,re_alpha,im_alpha,index_n,index_m,residual_abs,residual_rel,"
           "scale,skipped\n";
    for (const ScanSample& s : report.samples) {
      const bool has_alpha = s.alpha.has_value();
      const bool has_index = s.index.has_value();
      const bool has_residual = !s.skipped;
      out << to_string(report.id) << ',' << format_double(s.s.real()) << ','
          << format_double(s.s.imag()) << ','
          << optional_number(has_alpha, has_alpha ? s.alpha->real() : 0.0) << ','
          << optional_number(has_alpha, has_alpha ? s.alpha->imag() : 0.0) << ','
          << (has_index ? std::to_string(s.index->n) : "") << ','
          << (has_index ? std::to_string(s.index->m) : "") << ','
          << optional_number(has_residual, s.residual_abs) << ','
          << optional_number(has_residual, s.residual_rel) << ','
          << optional_number(has_residual, s.scale) << ',' << (s.skipped ? 1 : 0) << '\n';
    }
  } else {
    json j;
    j["identity"] = to_string(report.id);
    j["grid"] = {{"re_min", report.grid.re_min}, {"re_max", report.grid.re_max},
                 {"re_step", report.grid.re_step}, {"im_min", report.grid.im_min},
                 {"im_max", report.grid.im_max}, {"im_step", report.grid.im_step},
                 {"offset", report.grid.offset}};
    json alphas = json::array();
    for (Complex a : report.alphas) alphas.push_back(complex_to_json(a));
    json indices = json::array();
    for (const LadderIndex& i : report.indices) indices.push_back(json::array({i.n, i.m}));
    j["params"] = {{"alphas", alphas}, {"indices", indices}};
    j["hold_tol"] = report.hold_tol;
    j["fail_tol"] = report.fail_tol;
    j["exclusion_radius"] = report.exclusion_radius;
    j["samples_evaluated"] = report.samples_evaluated;
    j["samples_skipped"] = report.samples_skipped;
    j["max_rel"] = report.max_rel ? json(*report.max_rel) : json(nullptr);
    j["median_rel"] = report.median_rel ? json(*report.median_rel) : json(nullptr);
    j["mean_rel"] = report.mean_rel ? json(*report.mean_rel) : json(nullptr);
    j["verdict"] = to_string(report.verdict);
    json samples = json::array();
    for (const ScanSample& s : report.samples) {
      json row;
      row["s"] = complex_to_json(s.s);
      row["alpha"] = optional_complex(s.alpha);
      row["index"] = s.index ? json::array({s.index->n, s.index->m}) : json(nullptr);
      row["skipped"] = s.skipped;
      row["residual_abs"] = s.skipped ? json(nullptr) : json(s.residual_abs);
      row["residual_rel"] = s.skipped ? json(nullptr) : json(s.residual_rel);
      row["scale"] = s.skipped ? json(nullptr) : json(s.scale);
      samples.push_back(std::move(row));
    }
    j["samples"] = std::move(samples);
    write_json(j, out);
    out << '\n';
  }
  out.flush();
  if (!out) throw IoError("export: write failed");
}

ScanReport report_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& err) {
    throw ConfigError(std::string("report json: ") + err.what());
  }
  try {
    ScanReport r;
    const auto id = parse_identity_id(j.at("identity").get<std::string>());
    if (!id) throw ConfigError("report json: unknown identity");
    r.id = *id;
    const json& g = j.at("grid");
    r.grid = GridSpec{g.at("re_min").get<double>(), g.at("re_max").get<double>(),
                      g.at("re_step").get<double>(), g.at("im_min").get<double>(),
                      g.at("im_max").get<double>(), g.at("im_step").get<double>(),
                      g.at("offset").get<double>()};
    for (const json& a : j.at("params").at("alphas")) r.alphas.push_back(complex_from_json(a));
    for (const json& i : j.at("params").at("indices")) {
      r.indices.push_back(LadderIndex{i.at(0).get<int>(), i.at(1).get<int>()});
    }
    r.hold_tol = j.at("hold_tol").get<double>();
    r.fail_tol = j.at("fail_tol").get<double>();
    r.exclusion_radius = j.at("exclusion_radius").get<double>();
    r.samples_evaluated = j.at("samples_evaluated").get<std::size_t>();
    r.samples_skipped = j.at("samples_skipped").get<std::size_t>();
    r.max_rel = optional_number_from(j.at("max_rel"));
    r.median_rel = optional_number_from(j.at("median_rel"));
    r.mean_rel = optional_number_from(j.at("mean_rel"));
    const auto verdict = parse_verdict(j.at("verdict").get<std::string>());
    if (!verdict) throw ConfigError("report json: unknown verdict");
    r.verdict = *verdict;
    for (const json& row : j.at("samples")) {
      ScanSample s;
      s.s = complex_from_json(row.at("s"));
      if (!row.at("alpha").is_null()) s.alpha = complex_from_json(row.at("alpha"));
      if (!row.at("index").is_null()) {
        s.index = LadderIndex{row.at("index").at(0).get<int>(), row.at("index").at(1).get<int>()};
      }
      s.skipped = row.at("skipped").get<bool>();
      s.residual_abs = number_or_zero(row.at("residual_abs"));
      s.residual_rel = number_or_zero(row.at("residual_rel"));
      s.scale = number_or_zero(row.at("scale"));
      r.samples.push_back(s);
    }
    return r;
  } catch (const json::exception& err) {
    throw ConfigError(std::string("report json: ") + err.what());
  }
}

}  // namespace zrc
