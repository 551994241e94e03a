#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "zrc/special_functions.hpp"

namespace zrc {

/// %.17g; "nan"/"inf"/"-inf" for non-finite values.
std::string format_double(double x);

/// Serializes with every floating-point number printed to 17 significant
/// digits (nlohmann's own dump uses the shortest round-trip form). Non-finite
/// numbers become null. indent < 0 gives compact output.
void write_json(const nlohmann::json& value, std::ostream& out, int indent = 2);
std::string dump_json(const nlohmann::json& value, int indent = 2);

nlohmann::json complex_to_json(Complex z);
Complex complex_from_json(const nlohmann::json& j);

}  // namespace zrc
