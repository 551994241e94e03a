#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zrc/catalogue.hpp"
#include "zrc/errors.hpp"
#include "zrc/recursion.hpp"
#include "zrc/verifier.hpp"
#include "zrc/zeta.hpp"

namespace py = pybind11;
using namespace zrc;

namespace {

py::dict eval_dict(const EvalResult& r) {
  py::dict d;
  d["value"] = r.value;
  d["abs_error_bound"] = r.abs_error_bound;
  d["near_pole"] = r.near_pole;
  d["near_trivial_zero"] = r.near_trivial_zero;
  d["method"] = std::string(to_string(r.method));
  d["cutoff"] = r.parameters.cutoff;
  d["order"] = r.parameters.order;
  return d;
}

IdentityId id_from(const std::string& name) {
  const auto id = parse_identity_id(name);
  if (!id) throw ConfigError("unknown identity '" + name + "'");
  return *id;
}

EngineMode mode_from(const std::string& name) {
  if (name == "standard") return EngineMode::Standard;
  if (name == "reflection_only") return EngineMode::ReflectionOnly;
  if (name == "direct_only") return EngineMode::DirectOnly;
  throw ConfigError("engine mode must be standard, reflection_only or direct_only");
}

std::optional<double> opt(const std::optional<double>& x) { return x; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Riemann zeta engine and functional-equation verifier";

  auto base = py::register_exception<Error>(m, "ZrcError", PyExc_RuntimeError);
  py::register_exception<PoleError>(m, "PoleError", base.ptr());
  py::register_exception<PrecisionError>(m, "PrecisionError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<SingularityError>(m, "SingularityError", base.ptr());
  py::register_exception<ParamError>(m, "ParamError", base.ptr());
  py::register_exception<ConfigError>(m, "ConfigError", base.ptr());
  py::register_exception<IoError>(m, "IoError", base.ptr());
  py::register_exception<OverflowError>(m, "OverflowError", base.ptr());

  m.def("cgamma", &cgamma, py::arg("z"));
  m.def("clog_gamma", &clog_gamma, py::arg("z"));

  m.def(
      "zeta",
      [](Complex s, double target, const std::string& mode) {
        return eval_dict(ZetaEngine(EngineOptions{target, mode_from(mode)}).evaluate(s));
      },
      py::arg("s"), py::arg("target_rel_err") = 1e-13, py::arg("mode") = "standard",
      "zeta(s) as a dict with value, abs_error_bound, flags and method.");

  m.def(
      "xi", [](Complex s) { return xi(s); }, py::arg("s"));

  m.def(
      "zeta_em_raw",
      [](Complex s, std::int64_t n, int order) { return zeta_em_raw(s, EmParameters{n, order}); },
      py::arg("s"), py::arg("cutoff"), py::arg("order"));

  m.def(
      "choose_parameters",
      [](Complex s, double target) {
        const auto p = choose_parameters(s, target);
        return py::make_tuple(p.cutoff, p.order);
      },
      py::arg("s"), py::arg("target_rel_err"));

  m.def("catalogue", [] {
    py::list out;
    for (const Identity& e : catalogue()) {
      py::dict d;
      d["id"] = std::string(to_string(e.id));
      d["equation_number"] = e.equation_number;
      d["description"] = e.description;
      d["param_kind"] = std::string(to_string(e.param_kind));
      d["expected_verdict"] = std::string(to_string(e.expected_verdict));
      d["num_terms"] = e.num_terms();
      out.append(d);
    }
    return out;
  });

  m.def(
      "residual",
      [](const std::string& name, Complex s, std::optional<Complex> alpha, std::optional<int> n,
         std::optional<int> m_index) {
        std::optional<LadderIndex> index;
        if (n || m_index) index = LadderIndex{n.value_or(0), m_index.value_or(n.value_or(0))};
        if (n && !m_index) index->m = *n;
        if (m_index && !n) index->n = *m_index;
        const auto r = residual(id_from(name), s, alpha, index, ZetaEngine{});
        py::dict d;
        d["lhs"] = r.lhs;
        d["rhs"] = r.rhs;
        d["residual_abs"] = r.residual_abs;
        d["residual_rel"] = r.residual_rel;
        d["rel_diff"] = r.rel_diff();
        d["scale"] = r.scale;
        return d;
      },
      py::arg("identity"), py::arg("s") = Complex{}, py::arg("alpha") = py::none(),
      py::arg("n") = py::none(), py::arg("m") = py::none());

  m.def(
      "scan",
      [](const std::string& name, std::optional<std::vector<double>> grid,
         std::optional<std::vector<Complex>> alphas, double hold_tol, double fail_tol,
         double exclusion) {
        GridSpec g = GridSpec::standard();
        if (grid) {
          if (grid->size() != 7) throw ConfigError("grid needs 7 numbers");
          const auto& v = *grid;
          g = GridSpec{v[0], v[1], v[2], v[3], v[4], v[5], v[6]};
        }
        ScanOptions o;
        o.hold_tol = hold_tol;
        o.fail_tol = fail_tol;
        o.exclusion_radius = exclusion;
        const auto r = scan(id_from(name), g, alphas.value_or(standard_alphas()),
                            standard_indices(), ZetaEngine{}, o);
        py::dict d;
        d["identity"] = std::string(to_string(r.id));
        d["verdict"] = std::string(to_string(r.verdict));
        d["samples_evaluated"] = r.samples_evaluated;
        d["samples_skipped"] = r.samples_skipped;
        d["max_rel"] = opt(r.max_rel);
        d["median_rel"] = opt(r.median_rel);
        d["mean_rel"] = opt(r.mean_rel);
        return d;
      },
      py::arg("identity"), py::arg("grid") = py::none(), py::arg("alphas") = py::none(),
      py::arg("hold_tol") = 1e-8, py::arg("fail_tol") = 1e-3, py::arg("exclusion") = 1e-6,
      "grid is (re_min, re_max, re_step, im_min, im_max, im_step, offset).");

  m.def(
      "verdict_all",
      [] {
        py::list out;
        for (const auto& r : verdict_all(ZetaEngine{})) {
          py::dict d;
          d["identity"] = std::string(to_string(r.id));
          d["expected"] = std::string(to_string(r.expected));
          d["verdict"] = std::string(to_string(r.verdict));
          d["max_rel"] = opt(r.max_rel);
          d["median_rel"] = opt(r.median_rel);
          d["matches"] = r.matches();
          out.append(d);
        }
        return out;
      });

  m.def(
      "half_integer_table",
      [](const std::string& kind_name, int n_max) {
        const auto kind = parse_half_integer_kind(kind_name);
        if (!kind) throw ConfigError("table kind must be eq310 or eq335");
        py::list out;
        for (const auto& r : half_integer_table(*kind, n_max, ZetaEngine{})) {
          py::dict d;
          d["n"] = r.n;
          d["target_arg"] = r.target_arg;
          d["ladder_value"] = r.ladder_value;
          d["direct_value"] = r.direct_value;
          d["rel_diff"] = r.rel_diff;
          out.append(d);
        }
        return out;
      },
      py::arg("kind"), py::arg("n_max") = 6);
}
