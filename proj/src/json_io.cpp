#include "zrc/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "zrc/errors.hpp"

namespace zrc {

namespace {

void write_indent(std::ostream& out, int indent, int depth) {
  if (indent < 0) return;
  out << '\n' << std::string(static_cast<std::size_t>(indent * depth), ' ');
}

void write_value(const nlohmann::json& v, std::ostream& out, int indent, int depth) {
  using value_t = nlohmann::json::value_t;
  switch (v.type()) {
    case value_t::object: {
      if (v.empty()) {
        out << "{}";
        return;
      }
      out << '{';
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (!first) out << ',';
        first = false;
        write_indent(out, indent, depth + 1);
        out << nlohmann::json(it.key()).dump() << (indent < 0 ? ":" : ": ");
        write_value(it.value(), out, indent, depth + 1);
      }
      write_indent(out, indent, depth);
      out << '}';
      return;
    }
    case value_t::array: {
      if (v.empty()) {
        out << "[]";
        return;
      }
      // Short numeric arrays (complex pairs, index pairs) stay on one line.
      const bool inline_array =
          v.size() <= 2 && std::all_of(v.begin(), v.end(), [](const auto& x) {
            return x.is_number() || x.is_null();
          });
      out << '[';
      bool first = true;
      for (const auto& item : v) {
        if (!first) out << (inline_array && indent >= 0 ? ", " : ",");
        first = false;
        if (!inline_array) write_indent(out, indent, depth + 1);
        write_value(item, out, indent, depth + 1);
      }
      if (!inline_array) write_indent(out, indent, depth);
      out << ']';
      return;
    }
    case value_t::number_float: {
      const double x = v.get<double>();
      if (std::isfinite(x)) {
        out << format_double(x);
      } else {
        out << "null";
      }
      return;
    }
    default:
      out << v.dump();
  }
}

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_json(const nlohmann::json& value, std::ostream& out, int indent) {
  write_value(value, out, indent, 0);
}

std::string dump_json(const nlohmann::json& value, int indent) {
  std::ostringstream os;
  write_json(value, os, indent);
  return os.str();
}

nlohmann::json complex_to_json(Complex z) { return nlohmann::json::array({z.real(), z.imag()}); }

Complex complex_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2) throw ConfigError("expected [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace zrc
