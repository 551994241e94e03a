#include "zrc/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "zrc/catalogue.hpp"
#include "zrc/errors.hpp"
#include "zrc/fixtures.hpp"
#include "zrc/json_io.hpp"
#include "zrc/recursion.hpp"
#include "zrc/zeta.hpp"

namespace zrc::cli {

namespace {

using json = nlohmann::json;

constexpr const char* kVersion = "0.1.0";

double parse_real(std::string_view text, const char* what) {
  const std::string s(text);
  char* end = nullptr;
  const double x = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(x)) {
    throw ConfigError(std::string("malformed ") + what + ": '" + s + "'");
  }
  return x;
}

std::string complex_text(Complex z) {
  std::ostringstream os;
  os << format_double(z.real()) << (std::signbit(z.imag()) ? " - " : " + ")
     << format_double(std::abs(z.imag())) << "i";
  return os.str();
}

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

struct CommonOptions {
  std::string format = "text";
  std::string out_path;
  bool stamp = false;
};

void add_common(CLI::App* app, CommonOptions& c) {
  app->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app->add_option("--out", c.out_path, "Write output to PATH instead of standard output");
  app->add_flag("--stamp", c.stamp, "Add tool/version/time metadata to the output");
}

struct GridOptions {
  std::string grid;
  double offset = 0.25;
  double hold_tol = 1e-8;
  double fail_tol = 1e-3;
  double exclusion = 1e-6;
  unsigned threads = 1;
};

void add_grid(CLI::App* app, GridOptions& g) {
  app->add_option("--grid", g.grid, "RE0:RE1:STEP:IM0:IM1:STEP (default: standard grid)");
  app->add_option("--offset", g.offset, "Lattice shift added to both axes of --grid");
  app->add_option("--hold-tol", g.hold_tol, "HOLDS iff max relative residual is below this");
  app->add_option("--fail-tol", g.fail_tol, "FAILS iff median relative residual exceeds this");
  app->add_option("--exclusion", g.exclusion, "Singular-set exclusion radius");
  app->add_option("--threads", g.threads, "Worker threads (0 = hardware concurrency)");
}

GridSpec grid_from(const GridOptions& g) {
  return g.grid.empty() ? GridSpec::standard() : parse_grid(g.grid, g.offset);
}

ScanOptions scan_options_from(const GridOptions& g) {
  ScanOptions o;
  o.hold_tol = g.hold_tol;
  o.fail_tol = g.fail_tol;
  o.exclusion_radius = g.exclusion;
  o.threads = g.threads;
  return o;
}

json stamp_json() { return {{"tool", "zrc"}, {"version", kVersion}, {"utc", utc_now()}}; }

std::string stamp_line() { return std::string("# zrc ") + kVersion + " " + utc_now() + "\n"; }

json grid_json(const GridSpec& g) {
  return {{"re_min", g.re_min}, {"re_max", g.re_max}, {"re_step", g.re_step},
          {"im_min", g.im_min}, {"im_max", g.im_max}, {"im_step", g.im_step},
          {"offset", g.offset}};
}

json fixtures_json(const FixtureComparison& c) {
  json rows = json::array();
  for (const FixtureCheck& k : c.checks) {
    rows.push_back({{"kind", k.entry.kind},
                    {"arg", complex_to_json(k.entry.arg)},
                    {"expected", complex_to_json(k.entry.value)},
                    {"computed", complex_to_json(k.computed)},
                    {"rel_diff", k.rel_diff}});
  }
  return {{"compared", c.checks.size()},
          {"skipped", c.skipped},
          {"max_rel_diff", c.max_rel_diff},
          {"checks", rows}};
}

// Loads and compares fixtures if requested; absence is reported, not fatal.
std::optional<FixtureComparison> maybe_fixtures(const std::string& path,
                                                const ZetaEngine& engine, std::ostream& err) {
  if (path.empty()) return std::nullopt;
  const auto file = load_fixtures(path);
  if (!file) {
    err << "zrc: fixture file not found: " << path << " (comparison skipped)\n";
    return std::nullopt;
  }
  return compare_fixtures(*file, engine);
}

std::string fixtures_text(const FixtureComparison& c) {
  std::ostringstream os;
  os << "fixtures: " << c.checks.size() << " compared, " << c.skipped
     << " skipped, max rel diff " << format_double(c.max_rel_diff) << "\n";
  return os.str();
}

int emit(const std::string& payload, const CommonOptions& c, std::ostream& out,
         std::ostream& err) {
  if (c.out_path.empty()) {
    out << payload;
    out.flush();
    return out ? 0 : 1;
  }
  std::ofstream file(c.out_path, std::ios::binary);
  file << payload;
  file.close();
  if (!file) {
    err << "zrc: cannot write " << c.out_path << "\n";
    return 1;
  }
  return 0;
}

IdentityId require_identity(const std::string& text) {
  const auto id = parse_identity_id(text);
  if (!id) throw ConfigError("unknown identity '" + text + "' (see `zrc list`)");
  return *id;
}

std::string verdict_payload(const std::vector<VerdictRow>& rows, const GridSpec& grid,
                            const CommonOptions& c,
                            const std::optional<FixtureComparison>& fixtures) {
  const bool all_match =
      std::all_of(rows.begin(), rows.end(), [](const VerdictRow& r) { return r.matches(); });
  std::ostringstream os;
  auto opt = [](const std::optional<double>& x) { return x ? format_double(*x) : std::string(); };
  if (c.format == "json") {
    json j;
    if (c.stamp) j["stamp"] = stamp_json();
    j["grid"] = grid_json(grid);
    json list = json::array();
    for (const VerdictRow& r : rows) {
      list.push_back({{"identity", to_string(r.id)},
                      {"expected", to_string(r.expected)},
                      {"verdict", to_string(r.verdict)},
                      {"max_rel", r.max_rel ? json(*r.max_rel) : json(nullptr)},
                      {"median_rel", r.median_rel ? json(*r.median_rel) : json(nullptr)},
                      {"samples_evaluated", r.samples_evaluated},
                      {"samples_skipped", r.samples_skipped},
                      {"matches", r.matches()}});
    }
    j["rows"] = list;
    j["all_match"] = all_match;
    if (fixtures) j["fixtures"] = fixtures_json(*fixtures);
    write_json(j, os);
    os << '\n';
  } else if (c.format == "csv") {
    if (c.stamp) os << stamp_line();
    os << "identity,expected,verdict,max_rel,median_rel,samples_evaluated,samples_skipped\n";
    for (const VerdictRow& r : rows) {
      os << to_string(r.id) << ',' << to_string(r.expected) << ',' << to_string(r.verdict) << ','
         << opt(r.max_rel) << ',' << opt(r.median_rel) << ',' << r.samples_evaluated << ','
         << r.samples_skipped << '\n';
    }
  } else {
    if (c.stamp) os << stamp_line();
    os << std::left << std::setw(16) << "identity" << std::setw(14) << "expected"
       << std::setw(14) << "verdict" << std::setw(26) << "max_rel" << std::setw(26)
       << "median_rel" << std::setw(10) << "evaluated" << "skipped\n";
    for (const VerdictRow& r : rows) {
      os << std::left << std::setw(16) << to_string(r.id) << std::setw(14)
         << to_string(r.expected) << std::setw(14) << to_string(r.verdict) << std::setw(26)
         << (r.max_rel ? format_double(*r.max_rel) : "-") << std::setw(26)
         << (r.median_rel ? format_double(*r.median_rel) : "-") << std::setw(10)
         << r.samples_evaluated << r.samples_skipped << (r.matches() ? "" : "  MISMATCH") << '\n';
    }
    const auto matched = std::count_if(rows.begin(), rows.end(),
                                       [](const VerdictRow& r) { return r.matches(); });
    os << matched << "/" << rows.size() << " verdicts match expectations\n";
    if (fixtures) os << fixtures_text(*fixtures);
  }
  return os.str();
}

}  // namespace

Complex parse_complex(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) return {parse_real(text, "complex value"), 0.0};
  return {parse_real(text.substr(0, comma), "real part"),
          parse_real(text.substr(comma + 1), "imaginary part")};
}

GridSpec parse_grid(std::string_view text, double offset) {
  std::vector<double> parts;
  std::size_t start = 0;
  while (true) {
    const auto colon = text.find(':', start);
    parts.push_back(parse_real(text.substr(start, colon - start), "grid field"));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  if (parts.size() != 6) throw ConfigError("grid must be RE0:RE1:STEP:IM0:IM1:STEP");
  GridSpec g{parts[0], parts[1], parts[2], parts[3], parts[4], parts[5], offset};
  g.validate();
  return g;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Riemann zeta evaluation and functional-equation verification", "zrc"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  // eval
  CommonOptions eval_common;
  std::string eval_s;
  std::string eval_fixtures;
  double eval_target = 1e-13;
  auto* eval = app.add_subcommand("eval", "Evaluate zeta(s) with an error bound");
  eval->add_option("--s", eval_s, "Point RE[,IM]")->required();
  eval->add_option("--target", eval_target, "Target relative error");
  eval->add_option("--fixtures", eval_fixtures, "Golden fixture file to compare against");
  add_common(eval, eval_common);

  // check
  CommonOptions check_common;
  std::string check_id, check_s, check_alpha;
  std::optional<int> check_n, check_m;
  double check_exclusion = 1e-6;
  auto* check = app.add_subcommand("check", "Evaluate one identity's residual at a point");
  check->add_option("identity", check_id, "Identity id, e.g. EQ70")->required();
  check->add_option("--s", check_s, "Point RE[,IM]");
  check->add_option("--alpha", check_alpha, "Increment parameter RE[,IM]");
  check->add_option("--n", check_n, "Ladder index n");
  check->add_option("--m", check_m, "Ladder index m");
  check->add_option("--exclusion", check_exclusion, "Singular-set exclusion radius");
  add_common(check, check_common);

  // scan
  CommonOptions scan_common;
  GridOptions scan_grid;
  std::string scan_id;
  std::vector<std::string> scan_alphas;
  std::vector<int> scan_n, scan_m;
  auto* scan_cmd = app.add_subcommand("scan", "Scan one identity over a grid");
  scan_cmd->add_option("identity", scan_id, "Identity id")->required();
  scan_cmd->add_option("--alpha", scan_alphas, "Increment parameter(s); default standard set");
  scan_cmd->add_option("--n", scan_n, "Ladder index n (repeatable)");
  scan_cmd->add_option("--m", scan_m, "Ladder index m (repeatable)");
  add_grid(scan_cmd, scan_grid);
  add_common(scan_cmd, scan_common);

  // verdict
  CommonOptions verdict_common;
  GridOptions verdict_grid;
  std::string verdict_id;
  std::string verdict_fixtures;
  bool verdict_all_flag = false;
  auto* verdict = app.add_subcommand("verdict", "Certify identities; exit 1 on mismatch");
  verdict->add_option("identity", verdict_id, "Single identity id");
  verdict->add_flag("--all", verdict_all_flag, "All catalogued identities");
  verdict->add_option("--fixtures", verdict_fixtures, "Golden fixture file to compare against");
  add_grid(verdict, verdict_grid);
  add_common(verdict, verdict_common);

  // table
  CommonOptions table_common;
  std::string table_kind;
  int table_max_n = 6;
  auto* table = app.add_subcommand("table", "Half-integer ladder tables (eq310, eq335)");
  table->add_option("kind", table_kind, "eq310 or eq335")->required();
  table->add_option("--max-n", table_max_n, "Largest ladder index (<= 20)");
  add_common(table, table_common);

  // list
  CommonOptions list_common;
  auto* list = app.add_subcommand("list", "List the identity catalogue");
  add_common(list, list_common);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "zrc: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*eval) {
      const Complex s = parse_complex(eval_s);
      const ZetaEngine engine(EngineOptions{eval_target, EngineMode::Standard});
      const EvalResult r = engine.evaluate(s);
      const auto fixtures = maybe_fixtures(eval_fixtures, engine, err);
      std::ostringstream os;
      if (eval_common.format == "json") {
        json j;
        if (eval_common.stamp) j["stamp"] = stamp_json();
        j["s"] = complex_to_json(s);
        j["value"] = complex_to_json(r.value);
        j["abs_error_bound"] = r.abs_error_bound;
        j["method"] = to_string(r.method);
        j["near_pole"] = r.near_pole;
        j["near_trivial_zero"] = r.near_trivial_zero;
        j["cutoff"] = r.parameters.cutoff;
        j["order"] = r.parameters.order;
        if (fixtures) j["fixtures"] = fixtures_json(*fixtures);
        write_json(j, os);
        os << '\n';
      } else if (eval_common.format == "csv") {
        if (eval_common.stamp) os << stamp_line();
        os << "re_s,im_s,re_value,im_value,abs_error_bound,method\n"
           << format_double(s.real()) << ',' << format_double(s.imag()) << ','
           << format_double(r.value.real()) << ',' << format_double(r.value.imag()) << ','
           << format_double(r.abs_error_bound) << ',' << to_string(r.method) << '\n';
      } else {
        if (eval_common.stamp) os << stamp_line();
        os << "zeta(" << complex_text(s) << ") = " << complex_text(r.value) << "\n"
           << "  abs error bound " << format_double(r.abs_error_bound) << ", method "
           << to_string(r.method) << " (N=" << r.parameters.cutoff
           << ", M=" << r.parameters.order << ")";
        if (r.near_pole) os << ", near pole";
        if (r.near_trivial_zero) os << ", near trivial zero";
        os << "\n";
        if (fixtures) os << fixtures_text(*fixtures);
      }
      return emit(os.str(), eval_common, out, err);
    }

    if (*check) {
      const IdentityId id = require_identity(check_id);
      const Identity& e = identity(id);
      if (e.uses_s && check_s.empty()) throw ConfigError(check_id + " requires --s");
      if (e.uses_alpha() && check_alpha.empty()) throw ConfigError(check_id + " requires --alpha");
      const Complex s = check_s.empty() ? Complex{} : parse_complex(check_s);
      std::optional<Complex> alpha;
      if (e.uses_alpha()) alpha = parse_complex(check_alpha);
      std::optional<LadderIndex> index;
      if (e.uses_index()) index = LadderIndex{check_n.value_or(0), check_m.value_or(0)};
      const ZetaEngine engine;
      const ResidualSample r =
          residual(id, s, alpha, index, engine, ResidualOptions{check_exclusion, 1e-8});
      std::ostringstream os;
      if (check_common.format == "json") {
        json j;
        if (check_common.stamp) j["stamp"] = stamp_json();
        j["identity"] = to_string(id);
        j["equation_number"] = e.equation_number;
        j["s"] = complex_to_json(s);
        j["alpha"] = alpha ? complex_to_json(*alpha) : json(nullptr);
        j["index"] = index ? json::array({index->n, index->m}) : json(nullptr);
        j["lhs"] = complex_to_json(r.lhs);
        j["rhs"] = complex_to_json(r.rhs);
        j["residual_abs"] = r.residual_abs;
        j["residual_rel"] = r.residual_rel;
        j["rel_diff"] = r.rel_diff();
        j["scale"] = r.scale;
        j["expected_verdict"] = to_string(e.expected_verdict);
        write_json(j, os);
        os << '\n';
      } else if (check_common.format == "csv") {
        if (check_common.stamp) os << stamp_line();
        os << "identity,re_lhs,im_lhs,re_rhs,im_rhs,residual_abs,residual_rel,rel_diff,scale\n"
           << to_string(id) << ',' << format_double(r.lhs.real()) << ','
           << format_double(r.lhs.imag()) << ',' << format_double(r.rhs.real()) << ','
           << format_double(r.rhs.imag()) << ',' << format_double(r.residual_abs) << ','
           << format_double(r.residual_rel) << ',' << format_double(r.rel_diff()) << ','
           << format_double(r.scale) << '\n';
      } else {
        if (check_common.stamp) os << stamp_line();
        os << to_string(id) << ": " << e.description << "\n"
           << "  lhs          " << complex_text(r.lhs) << "\n"
           << "  rhs          " << complex_text(r.rhs) << "\n"
           << "  residual_abs " << format_double(r.residual_abs) << "\n"
           << "  residual_rel " << format_double(r.residual_rel) << "\n"
           << "  rel_diff     " << format_double(r.rel_diff()) << "\n";
      }
      return emit(os.str(), check_common, out, err);
    }

    if (*scan_cmd) {
      const IdentityId id = require_identity(scan_id);
      const GridSpec grid = grid_from(scan_grid);
      std::vector<Complex> alphas;
      for (const auto& a : scan_alphas) alphas.push_back(parse_complex(a));
      if (alphas.empty()) alphas = standard_alphas();
      std::vector<LadderIndex> indices;
      if (scan_n.empty() && scan_m.empty()) {
        indices = standard_indices();
      } else if (scan_m.empty()) {
        for (int n : scan_n) indices.push_back({n, n});
      } else if (scan_n.empty()) {
        for (int m : scan_m) indices.push_back({m, m});
      } else {
        for (int n : scan_n) {
          for (int m : scan_m) indices.push_back({n, m});
        }
      }
      const ZetaEngine engine;
      const ScanReport report =
          scan(id, grid, alphas, indices, engine, scan_options_from(scan_grid));
      std::ostringstream os;
      if (scan_common.format == "text") {
        if (scan_common.stamp) os << stamp_line();
        auto opt = [](const std::optional<double>& x) { return x ? format_double(*x) : "-"; };
        os << to_string(id) << ": " << to_string(report.verdict) << " (expected "
           << to_string(identity(id).expected_verdict) << ")\n"
           << "  evaluated " << report.samples_evaluated << ", skipped "
           << report.samples_skipped << "\n"
           << "  max_rel " << opt(report.max_rel) << ", median_rel " << opt(report.median_rel)
           << ", mean_rel " << opt(report.mean_rel) << "\n";
      } else {
        if (scan_common.stamp && scan_common.format == "csv") os << stamp_line();
        export_report(report, scan_common.format == "json" ? ExportFormat::Json : ExportFormat::Csv,
                      os);
      }
      return emit(os.str(), scan_common, out, err);
    }

    if (*verdict) {
      if (verdict_all_flag == !verdict_id.empty()) {
        throw ConfigError("verdict needs either --all or a single identity id");
      }
      const GridSpec grid = grid_from(verdict_grid);
      const ZetaEngine engine;
      std::vector<VerdictRow> rows;
      if (verdict_all_flag) {
        rows = verdict_all(engine, grid, scan_options_from(verdict_grid));
      } else {
        const IdentityId id = require_identity(verdict_id);
        const ScanReport r = scan(id, grid, standard_alphas(), standard_indices(), engine,
                                  scan_options_from(verdict_grid));
        rows.push_back(VerdictRow{id, identity(id).expected_verdict, r.verdict, r.max_rel,
                                  r.median_rel, r.samples_evaluated, r.samples_skipped});
      }
      const auto fixtures = maybe_fixtures(verdict_fixtures, engine, err);
      const int status = emit(verdict_payload(rows, grid, verdict_common, fixtures),
                              verdict_common, out, err);
      if (status != 0) return status;
      const bool all_match =
          std::all_of(rows.begin(), rows.end(), [](const VerdictRow& r) { return r.matches(); });
      return all_match ? 0 : 1;
    }

    if (*table) {
      const auto kind = parse_half_integer_kind(table_kind);
      if (!kind) throw ConfigError("table kind must be eq310 or eq335");
      if (table_max_n < 0) throw ConfigError("--max-n must be non-negative");
      const ZetaEngine engine;
      const auto rows = half_integer_table(*kind, table_max_n, engine);
      std::ostringstream os;
      if (table_common.format == "text") {
        if (table_common.stamp) os << stamp_line();
        os << std::left << std::setw(4) << "n" << std::setw(10) << "arg" << std::setw(26)
           << "ladder" << std::setw(26) << "direct" << "rel_diff\n";
        for (const auto& r : rows) {
          os << std::left << std::setw(4) << r.n << std::setw(10) << format_double(r.target_arg)
             << std::setw(26) << format_double(r.ladder_value.real()) << std::setw(26)
             << format_double(r.direct_value.real()) << format_double(r.rel_diff) << '\n';
        }
      } else {
        if (table_common.stamp && table_common.format == "csv") os << stamp_line();
        export_table(rows, *kind,
                     table_common.format == "json" ? ExportFormat::Json : ExportFormat::Csv, os);
      }
      return emit(os.str(), table_common, out, err);
    }

    if (*list) {
      std::ostringstream os;
      if (list_common.format == "json") {
        json j = json::array();
        for (const Identity& e : catalogue()) {
          j.push_back({{"id", to_string(e.id)},
                       {"equation_number", e.equation_number},
                       {"description", e.description},
                       {"param_kind", to_string(e.param_kind)},
                       {"expected_verdict", to_string(e.expected_verdict)},
                       {"num_terms", e.num_terms()}});
        }
        write_json(j, os);
        os << '\n';
      } else if (list_common.format == "csv") {
        os << "id,equation_number,param_kind,expected_verdict,num_terms\n";
        for (const Identity& e : catalogue()) {
          os << to_string(e.id) << ',' << e.equation_number << ',' << to_string(e.param_kind)
             << ',' << to_string(e.expected_verdict) << ',' << e.num_terms() << '\n';
        }
      } else {
        for (const Identity& e : catalogue()) {
          os << std::left << std::setw(16) << to_string(e.id) << std::setw(7)
             << to_string(e.param_kind) << std::setw(7) << to_string(e.expected_verdict) << "  "
             << e.description << '\n';
        }
      }
      return emit(os.str(), list_common, out, err);
    }
  } catch (const ConfigError& e) {
    err << "zrc: " << e.what() << "\n";
    return 2;
  } catch (const ParamError& e) {
    err << "zrc: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "zrc: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace zrc::cli
