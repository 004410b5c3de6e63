#include "uslev/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace uslev::io {

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw InputError("schema violation at " + (path.empty() ? std::string("/") : path) + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.contains(key)) schema_error(path, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

double number_at(const Json& j, const std::string& path) {
  if (!j.is_number()) schema_error(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) schema_error(path, "number must be finite");
  return v;
}

Vector vector_at(const Json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) schema_error(path, "expected a nonempty array of numbers");
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i)
    v(static_cast<Eigen::Index>(i)) = number_at(j[i], path + "/" + std::to_string(i));
  return v;
}

std::size_t dim_at(const Json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 1) schema_error(path, "expected an integer >= 1");
  return static_cast<std::size_t>(j.get<long long>());
}

SetExpr parse_node(const Json& j, const std::string& path) {
  if (!j.is_object()) schema_error(path, "expected an object");
  const Json& kind_j = field(j, "kind", path);
  if (!kind_j.is_string()) schema_error(path + "/kind", "expected a string");
  const std::string kind = kind_j.get<std::string>();
  try {
    if (kind == "halfspaces") {
      const Json& rows = field(j, "normals", path);
      const std::string rp = path + "/normals";
      if (!rows.is_array() || rows.empty()) schema_error(rp, "expected a nonempty array of rows");
      const Vector offsets = vector_at(field(j, "offsets", path), path + "/offsets");
      if (static_cast<std::size_t>(offsets.size()) != rows.size())
        schema_error(path + "/offsets", "length " + std::to_string(offsets.size()) +
                                            " does not match " + std::to_string(rows.size()) +
                                            " normal rows");
      Matrix normals;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const Vector r = vector_at(rows[i], rp + "/" + std::to_string(i));
        if (i == 0) normals.resize(static_cast<Eigen::Index>(rows.size()), r.size());
        if (r.size() != normals.cols())
          schema_error(rp + "/" + std::to_string(i), "row length differs from row 0");
        normals.row(static_cast<Eigen::Index>(i)) = r.transpose();
      }
      return SetExpr::halfspaces(std::move(normals), offsets);
    }
    if (kind == "orthant") {
      const std::size_t n = dim_at(field(j, "dim", path), path + "/dim");
      const Json& s = field(j, "sign", path);
      if (s == "nonneg") return SetExpr::orthant(n, OrthantSign::NonNeg);
      if (s == "nonpos") return SetExpr::orthant(n, OrthantSign::NonPos);
      schema_error(path + "/sign", "expected \"nonneg\" or \"nonpos\"");
    }
    if (kind == "shift") {
      Vector offset = vector_at(field(j, "offset", path), path + "/offset");
      SetExpr base = parse_node(field(j, "base", path), path + "/base");
      if (static_cast<std::size_t>(offset.size()) != base.dim())
        schema_error(path + "/offset", "dimension differs from base");
      return SetExpr::shift(std::move(offset), std::move(base));
    }
    if (kind == "negate") return SetExpr::negate(parse_node(field(j, "base", path), path + "/base"));
    if (kind == "union") {
      const Json& parts = field(j, "parts", path);
      if (!parts.is_array() || parts.empty()) schema_error(path + "/parts", "expected a nonempty array");
      std::vector<SetExpr> out;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        out.push_back(parse_node(parts[i], path + "/parts/" + std::to_string(i)));
        if (out.back().dim() != out.front().dim())
          schema_error(path + "/parts/" + std::to_string(i), "dimension differs from part 0");
      }
      return SetExpr::union_of(std::move(out));
    }
    if (kind == "oracle") {
      const Json& name = field(j, "name", path);
      if (!name.is_string()) schema_error(path + "/name", "expected a string");
      const Json& closed = field(j, "closed", path);
      if (!closed.is_boolean()) schema_error(path + "/closed", "expected a boolean");
      std::vector<Vector> recession;
      if (j.contains("recession")) {
        const Json& r = j.at("recession");
        if (!r.is_array()) schema_error(path + "/recession", "expected an array of vectors");
        for (std::size_t i = 0; i < r.size(); ++i)
          recession.push_back(vector_at(r[i], path + "/recession/" + std::to_string(i)));
      }
      std::vector<double> params;
      if (j.contains("params")) {
        const Json& p = j.at("params");
        if (!p.is_array()) schema_error(path + "/params", "expected an array of numbers");
        for (std::size_t i = 0; i < p.size(); ++i)
          params.push_back(number_at(p[i], path + "/params/" + std::to_string(i)));
      }
      std::optional<std::size_t> dim;
      if (j.contains("dim")) dim = dim_at(j.at("dim"), path + "/dim");
      return SetExpr::oracle(make_catalog_oracle(name.get<std::string>(), std::move(params),
                                                 closed.get<bool>(), std::move(recession), dim));
    }
  } catch (const InputError& e) {
    const std::string msg = e.what();
    if (msg.rfind("schema violation", 0) == 0) throw;
    schema_error(path, msg);
  }
  schema_error(path + "/kind", "unknown kind \"" + kind + "\"");
}

Json vec_json(const Vector& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

Json indices_json(const std::vector<std::size_t>& v) {
  Json a = Json::array();
  for (std::size_t i : v) a.push_back(i);
  return a;
}

Json audit_json(const std::vector<AuditEntry>& audit) {
  Json a = Json::array();
  for (const AuditEntry& e : audit) {
    Json item{{"hypothesis", e.hypothesis}, {"status", e.status}};
    if (!e.witness.empty()) item["witness"] = e.witness;
    a.push_back(item);
  }
  return a;
}

Json values_json(const std::vector<ExtScalar>& values) {
  Json a = Json::array();
  for (const ExtScalar& v : values) a.push_back(to_json(v));
  return a;
}

Json verdict_json(const PropertyVerdict& p) {
  Json j{{"verdict", to_string(p.verdict)}};
  if (p.witness) j["witness"] = Json::array({vec_json(p.witness->first), vec_json(p.witness->second)});
  if (!p.note.empty()) j["note"] = p.note;
  return j;
}

void round_all(Json& j) {
  if (j.is_number_float()) {
    j = round12(j.get<double>());
  } else if (j.is_array() || j.is_object()) {
    for (Json& child : j) round_all(child);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool parse_double(std::string_view tok, double& out) {
  const std::string s(tok);
  const char* begin = s.c_str();
  while (*begin == ' ' || *begin == '\t') ++begin;
  if (*begin == '\0') return false;
  char* end = nullptr;
  out = std::strtod(begin, &end);
  while (*end == ' ' || *end == '\t' || *end == '\r') ++end;
  return *end == '\0' && std::isfinite(out);
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i)
    if (i == text.size() || text[i] == sep) {
      out.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  return out;
}

}  // namespace

SetExpr set_from_json(const Json& j) { return parse_node(j, ""); }

SetExpr read_set_file(const std::string& path) {
  const std::string text = read_file(path);
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t stop = std::min(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw InputError(path + ":" + std::to_string(line) + ":" + std::to_string(col) +
                     ": invalid JSON");
  }
  try {
    return set_from_json(j);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

Json set_to_json(const SetExpr& s) {
  return std::visit(
      [](const auto& n) -> Json {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, PolyhedronNode>) {
          Json rows = Json::array();
          for (Eigen::Index i = 0; i < n.poly.normals.rows(); ++i)
            rows.push_back(vec_json(n.poly.normals.row(i).transpose()));
          return {{"kind", "halfspaces"}, {"normals", rows}, {"offsets", vec_json(n.poly.offsets)}};
        } else if constexpr (std::is_same_v<T, OrthantNode>) {
          return {{"kind", "orthant"},
                  {"dim", n.dim},
                  {"sign", n.sign == OrthantSign::NonNeg ? "nonneg" : "nonpos"}};
        } else if constexpr (std::is_same_v<T, ShiftNode>) {
          return {{"kind", "shift"}, {"offset", vec_json(n.offset)}, {"base", set_to_json(n.base)}};
        } else if constexpr (std::is_same_v<T, NegateNode>) {
          return {{"kind", "negate"}, {"base", set_to_json(n.base)}};
        } else if constexpr (std::is_same_v<T, UnionNode>) {
          Json parts = Json::array();
          for (const SetExpr& p : n.parts) parts.push_back(set_to_json(p));
          return {{"kind", "union"}, {"parts", parts}};
        } else {
          Json rec = Json::array();
          for (const Vector& r : n.set.recession_directions) rec.push_back(vec_json(r));
          return {{"kind", "oracle"},
                  {"name", n.set.name},
                  {"closed", n.set.declared_closed},
                  {"recession", rec},
                  {"params", n.set.params},
                  {"dim", n.set.dim}};
        }
      },
      s.node().v);
}

Vector parse_vector(std::string_view text) {
  const auto toks = split(text, ',');
  Vector v(static_cast<Eigen::Index>(toks.size()));
  for (std::size_t i = 0; i < toks.size(); ++i) {
    double x = 0.0;
    if (!parse_double(toks[i], x))
      throw InputError("invalid vector \"" + std::string(text) + "\": component " +
                       std::to_string(i) + " is not a finite number");
    v(static_cast<Eigen::Index>(i)) = x;
  }
  return v;
}

PointCloud parse_points_csv(std::string_view text) {
  std::vector<Vector> points;
  std::optional<std::vector<std::string>> header;
  std::size_t line_no = 0;
  for (std::string_view line : split(text, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;
    const auto toks = split(line, ',');
    double probe = 0.0;
    if (points.empty() && !header && !parse_double(toks.front(), probe)) {
      header.emplace();
      for (std::string_view t : toks) header->emplace_back(t);
      continue;
    }
    Vector v(static_cast<Eigen::Index>(toks.size()));
    for (std::size_t i = 0; i < toks.size(); ++i)
      if (!parse_double(toks[i], v(static_cast<Eigen::Index>(i))))
        throw InputError("points line " + std::to_string(line_no) + ", column " +
                         std::to_string(i + 1) + ": not a finite number");
    if (!points.empty() && v.size() != points.front().size())
      throw InputError("points line " + std::to_string(line_no) + ": expected " +
                       std::to_string(points.front().size()) + " columns");
    points.push_back(std::move(v));
  }
  if (points.empty()) throw InputError("points: no data rows");
  return PointCloud(std::move(points));
}

PointCloud read_points_file(const std::string& path) {
  try {
    return parse_points_csv(read_file(path));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

double round12(double x) {
  if (!std::isfinite(x) || x == 0.0) return x == 0.0 ? 0.0 : x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

Json to_json(const ExtScalar& v) {
  if (v.is_real()) return v.value();
  return v.class_name();
}

Json to_json(const Vector& v) { return vec_json(v); }

Json to_json(const EffResult& r) {
  Json j{{"indices", indices_json(r.indices)}, {"certificates", r.certificates}};
  if (!r.indeterminate.empty()) j["indeterminate"] = indices_json(r.indeterminate);
  return j;
}

Json to_json(const ScalarReport& r) {
  Json verdicts = Json::array();
  for (const PointVerdict& v : r.verdicts) {
    Json item{{"index", v.index}, {"verdict", v.verdict}, {"theorem", v.theorem}};
    if (v.anchor) item["anchor"] = *v.anchor;
    if (v.min_value) item["min_value"] = *v.min_value;
    verdicts.push_back(item);
  }
  return {{"method", r.method},
          {"values", values_json(r.values)},
          {"argmin", indices_json(r.argmin)},
          {"verdicts", verdicts},
          {"efficient", indices_json(r.efficient)},
          {"weakly_efficient", indices_json(r.weakly_efficient)},
          {"indeterminate", indices_json(r.indeterminate)},
          {"audit", audit_json(r.audit)},
          {"notes", r.notes}};
}

Json to_json(const SeparationResult& r) {
  Json j{{"verdict", r.verdict},
         {"core_verdict", r.core_verdict},
         {"values", values_json(r.values)},
         {"audit", audit_json(r.audit)}};
  j["witness"] = r.witness ? Json(*r.witness) : Json(nullptr);
  j["core_witness"] = r.core_witness ? Json(*r.core_witness) : Json(nullptr);
  return j;
}

Json to_json(const RelationReport& r) {
  return {{"reflexive", verdict_json(r.reflexive)},
          {"asymmetric", verdict_json(r.asymmetric)},
          {"antisymmetric", verdict_json(r.antisymmetric)},
          {"transitive", verdict_json(r.transitive)},
          {"cone_compatible", verdict_json(r.cone_compatible)},
          {"samples", r.samples}};
}

Json to_json(const ConeFlags& f) {
  return {{"contains_zero", f.contains_zero},
          {"pointed", to_string(f.pointed)},
          {"is_cone", to_string(f.is_cone)},
          {"core_nonempty", to_string(f.core_nonempty)},
          {"convex", to_string(f.convex)}};
}

std::string dump(const Json& j) {
  Json copy = j;
  round_all(copy);
  return copy.dump() + "\n";
}

}  // namespace uslev::io
