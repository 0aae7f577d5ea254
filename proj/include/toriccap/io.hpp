#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "toriccap/capacities.hpp"

namespace toriccap {

enum class DomainKind { kPolytope, kExampleR, kBall, kEllipsoid, kPolydisk };

// User-facing description of a moment domain. Every kind lowers to a polytope:
//   ball(c)          conv{0, (c,0), (0,c)}
//   ellipsoid(a, b)  conv{0, (a,0), (0,b)}
//   polydisk(a, b)   [0,a] x [0,b]
//   example_r(r)     conv{0, (1,0), ((r-1)/r, 1), (0,1)}
struct DomainSpec {
  DomainKind kind = DomainKind::kPolytope;
  std::vector<Point2> vertices;
  Rational r;
  Rational capacity;
  Rational a;
  Rational b;

  friend bool operator==(const DomainSpec&, const DomainSpec&) = default;
};

RationalPolytope example_region(const Rational& r);
RationalPolytope lower_domain(const DomainSpec& spec);

// Parse failures throw Error(kParse) naming the line/column or the field.
DomainSpec parse_domain(std::string_view text);
DomainSpec domain_from_json(const nlohmann::json& j);
nlohmann::json to_json(const DomainSpec& spec);

TangencyConstraint parse_constraint(std::string_view text);
nlohmann::json to_json(const TangencyConstraint& p);

Rational rational_from_json(const nlohmann::json& j, const std::string& field);

// {"rays": [[x,y], ...], "multiplicities": {"x,y": m, ...}} with zero entries
// omitted.
nlohmann::json to_json(const CurveClass& c);
CurveClass curve_class_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CapacityReport& row);
CapacityReport report_from_json(const nlohmann::json& j);

}  // namespace toriccap
