#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "uslev/efficiency.hpp"
#include "uslev/ext_scalar.hpp"
#include "uslev/norms.hpp"
#include "uslev/order.hpp"
#include "uslev/point_cloud.hpp"
#include "uslev/scalarize.hpp"
#include "uslev/sets.hpp"

namespace uslev::io {

using Json = nlohmann::json;

/// Builds a SetExpr from its JSON description. Schema errors throw
/// InputError naming the offending field as a JSON pointer.
SetExpr set_from_json(const Json& j);
/// Reads and parses a set file; parse errors carry line and column.
SetExpr read_set_file(const std::string& path);
/// Inverse of set_from_json.
Json set_to_json(const SetExpr& s);

/// Comma-separated coordinates, e.g. "1,-2.5".
Vector parse_vector(std::string_view text);
/// One point per row; a first row whose first token is not a number is a
/// header and is skipped. Blank lines are ignored.
PointCloud parse_points_csv(std::string_view text);
PointCloud read_points_file(const std::string& path);

/// Rounds to 12 significant digits so that printed reports do not depend
/// on the last bits of a computation.
double round12(double x);

Json to_json(const ExtScalar& v);
Json to_json(const Vector& v);
Json to_json(const EffResult& r);
Json to_json(const ScalarReport& r);
Json to_json(const SeparationResult& r);
Json to_json(const RelationReport& r);
Json to_json(const ConeFlags& f);

/// Compact dump with sorted keys and a trailing newline.
std::string dump(const Json& j);

}  // namespace uslev::io
