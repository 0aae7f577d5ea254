#include "toriccap/io.hpp"

#include <map>

#include "toriccap/error.hpp"

namespace toriccap {

using nlohmann::json;

namespace {

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::kParse, "field '" + field + "': " + what);
}

json parse_json_text(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorCode::kParse, "malformed JSON at line " + std::to_string(line) + ", column " +
                                       std::to_string(column));
  }
}

const json& require(const json& j, const std::string& key) {
  if (!j.is_object() || !j.contains(key)) field_error(key, "missing");
  return j.at(key);
}

Rational positive_field(const json& j, const std::string& key) {
  Rational value = rational_from_json(require(j, key), key);
  if (value <= 0) field_error(key, "must be positive");
  return value;
}

json point_json(const Point2& p) { return json::array({to_string(p.x), to_string(p.y)}); }

json ray_json(const LatticeVector& v) {
  return json::array({v.x().get_si(), v.y().get_si()});
}

std::string ray_key(const LatticeVector& v) { return to_string(v.x()) + "," + to_string(v.y()); }

Integer integer_from_json(const json& j, const std::string& field) {
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
  Rational r = rational_from_json(j, field);
  if (r.get_den() != 1) field_error(field, "expected an integer");
  return r.get_num();
}

const std::map<std::string, DomainKind>& kind_names() {
  static const std::map<std::string, DomainKind> names{
      {"polytope", DomainKind::kPolytope}, {"example_r", DomainKind::kExampleR},
      {"ball", DomainKind::kBall},         {"ellipsoid", DomainKind::kEllipsoid},
      {"polydisk", DomainKind::kPolydisk}};
  return names;
}

}  // namespace

Rational rational_from_json(const json& j, const std::string& field) {
  if (j.is_number_integer()) return Rational(Integer(static_cast<long>(j.get<std::int64_t>())));
  if (!j.is_string()) field_error(field, "expected a rational string such as \"3/4\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    field_error(field, e.what());
  }
}

RationalPolytope example_region(const Rational& r) {
  if (r < 1) throw Error(ErrorCode::kInvalidArgument, "example region needs r >= 1");
  return RationalPolytope::from_vertices({{0, 0}, {1, 0}, {Rational((r - 1) / r), 1}, {0, 1}});
}

RationalPolytope lower_domain(const DomainSpec& spec) {
  switch (spec.kind) {
    case DomainKind::kPolytope:
      return RationalPolytope::from_vertices(spec.vertices);
    case DomainKind::kExampleR:
      return example_region(spec.r);
    case DomainKind::kBall:
      return RationalPolytope::from_vertices({{0, 0}, {spec.capacity, 0}, {0, spec.capacity}});
    case DomainKind::kEllipsoid:
      return RationalPolytope::from_vertices({{0, 0}, {spec.a, 0}, {0, spec.b}});
    case DomainKind::kPolydisk:
      return RationalPolytope::from_vertices({{0, 0}, {spec.a, 0}, {spec.a, spec.b}, {0, spec.b}});
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown domain kind");
}

DomainSpec domain_from_json(const json& j) {
  const json& kind = require(j, "kind");
  if (!kind.is_string()) field_error("kind", "expected a string");
  auto it = kind_names().find(kind.get<std::string>());
  if (it == kind_names().end()) field_error("kind", "unknown kind '" + kind.get<std::string>() + "'");

  DomainSpec spec;
  spec.kind = it->second;
  switch (spec.kind) {
    case DomainKind::kPolytope: {
      const json& verts = require(j, "vertices");
      if (!verts.is_array() || verts.empty()) field_error("vertices", "expected a nonempty array");
      for (std::size_t i = 0; i < verts.size(); ++i) {
        const std::string name = "vertices[" + std::to_string(i) + "]";
        if (!verts[i].is_array() || verts[i].size() != 2) field_error(name, "expected a pair");
        spec.vertices.push_back({rational_from_json(verts[i][0], name + "[0]"),
                                 rational_from_json(verts[i][1], name + "[1]")});
      }
      break;
    }
    case DomainKind::kExampleR:
      spec.r = positive_field(j, "r");
      if (spec.r < 1) field_error("r", "must be >= 1");
      break;
    case DomainKind::kBall:
      spec.capacity = positive_field(j, "capacity");
      break;
    case DomainKind::kEllipsoid:
    case DomainKind::kPolydisk:
      spec.a = positive_field(j, "a");
      spec.b = positive_field(j, "b");
      break;
  }
  return spec;
}

DomainSpec parse_domain(std::string_view text) { return domain_from_json(parse_json_text(text)); }

json to_json(const DomainSpec& spec) {
  json j;
  for (const auto& [name, kind] : kind_names()) {
    if (kind == spec.kind) j["kind"] = name;
  }
  switch (spec.kind) {
    case DomainKind::kPolytope: {
      json verts = json::array();
      for (const auto& p : spec.vertices) verts.push_back(point_json(p));
      j["vertices"] = verts;
      break;
    }
    case DomainKind::kExampleR:
      j["r"] = to_string(spec.r);
      break;
    case DomainKind::kBall:
      j["capacity"] = to_string(spec.capacity);
      break;
    case DomainKind::kEllipsoid:
    case DomainKind::kPolydisk:
      j["a"] = to_string(spec.a);
      j["b"] = to_string(spec.b);
      break;
  }
  return j;
}

TangencyConstraint parse_constraint(std::string_view text) {
  json j = parse_json_text(text);
  const json& points = require(j, "points");
  const json& dim = require(j, "dim");
  if (!dim.is_number_integer()) field_error("dim", "expected an integer");
  if (!points.is_array()) field_error("points", "expected an array of arrays");
  std::vector<std::vector<long>> lists;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::string name = "points[" + std::to_string(i) + "]";
    if (!points[i].is_array()) field_error(name, "expected an array");
    std::vector<long> list;
    for (const auto& v : points[i]) {
      if (!v.is_number_integer()) field_error(name, "expected integers");
      list.push_back(v.get<long>());
    }
    lists.push_back(std::move(list));
  }
  try {
    return TangencyConstraint(std::move(lists), dim.get<int>());
  } catch (const Error& e) {
    field_error("points", e.what());
  }
}

json to_json(const TangencyConstraint& p) {
  return json{{"points", p.points()}, {"dim", p.dim()}};
}

json to_json(const CurveClass& c) {
  json rays = json::array();
  json mult = json::object();
  for (std::size_t i = 0; i < c.fan().size(); ++i) {
    rays.push_back(ray_json(c.fan().ray(i)));
    if (c[i] != 0) mult[ray_key(c.fan().ray(i))] = c[i].get_si();
  }
  return json{{"rays", rays}, {"multiplicities", mult}};
}

CurveClass curve_class_from_json(const json& j) {
  const json& rays_j = require(j, "rays");
  const json& mult_j = require(j, "multiplicities");
  if (!rays_j.is_array()) field_error("rays", "expected an array");
  std::vector<LatticeVector> rays;
  for (const auto& r : rays_j) {
    if (!r.is_array() || r.size() != 2) field_error("rays", "expected integer pairs");
    rays.emplace_back(integer_from_json(r[0], "rays"), integer_from_json(r[1], "rays"));
  }
  Fan2D fan(rays);
  std::vector<Integer> mult(fan.size(), Integer(0));
  if (!mult_j.is_object()) field_error("multiplicities", "expected an object");
  for (const auto& [key, value] : mult_j.items()) {
    auto comma = key.find(',');
    if (comma == std::string::npos) field_error("multiplicities", "bad ray key '" + key + "'");
    LatticeVector ray(Integer(key.substr(0, comma)), Integer(key.substr(comma + 1)));
    auto idx = fan.index_of(ray);
    if (!idx) field_error("multiplicities", "ray '" + key + "' is not in the fan");
    mult[*idx] = integer_from_json(value, "multiplicities");
  }
  return CurveClass(fan, std::move(mult));
}

json to_json(const CapacityReport& row) {
  return json{{"k", row.k},
              {"lk", to_string(row.lk)},
              {"uk", to_string(row.uk)},
              {"gh", to_string(row.gh)},
              {"exact", row.exact},
              {"lk_witness", to_json(row.lk_witness)},
              {"uk_witness", to_json(row.uk_witness)}};
}

CapacityReport report_from_json(const json& j) {
  const json& k = require(j, "k");
  if (!k.is_number_integer()) field_error("k", "expected an integer");
  const json& exact = require(j, "exact");
  if (!exact.is_boolean()) field_error("exact", "expected a boolean");
  return CapacityReport{k.get<int>(),
                        rational_from_json(require(j, "lk"), "lk"),
                        rational_from_json(require(j, "uk"), "uk"),
                        rational_from_json(require(j, "gh"), "gh"),
                        curve_class_from_json(require(j, "lk_witness")),
                        curve_class_from_json(require(j, "uk_witness")),
                        exact.get<bool>()};
}

}  // namespace toriccap
