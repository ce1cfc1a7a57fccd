#pragma once

// JSON forms of the library types. Points are integer arrays, orders are
// row-major matrices, and object keys come out sorted so equal values
// serialize to equal bytes.

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "csg/enumerate.hpp"
#include "csg/semigroup.hpp"
#include "csg/tree.hpp"

namespace csg::io {

using json = nlohmann::json;

/// Malformed input text, as opposed to well-formed input that fails a
/// mathematical condition.
class ParseError : public Error {
 public:
  using Error::Error;
};

inline json to_json(const Point& x) { return json(std::vector<Point::value_type>(x.begin(), x.end())); }

inline json to_json(const std::vector<Point>& pts) {
  json out = json::array();
  for (const auto& x : pts) out.push_back(to_json(x));
  return out;
}

inline Point point_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("expected a nonempty integer array, got " + j.dump());
  std::vector<Point::value_type> coords;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw ParseError("point coordinates must be integers, got " + j.dump());
    coords.push_back(v.get<Point::value_type>());
  }
  return Point(std::move(coords));
}

inline std::vector<Point> points_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected an array of points, got " + j.dump());
  std::vector<Point> out;
  for (const auto& v : j) out.push_back(point_from_json(v));
  for (const auto& x : out) require_same_dim(x, out.front());
  return out;
}

inline json parse_text(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

/// A point written either as JSON ("[2,1]") or comma-separated ("2,1").
inline Point parse_point(std::string_view text) {
  const auto first = text.find_first_not_of(" \t");
  if (first != std::string_view::npos && text[first] == '[') return point_from_json(parse_text(text));
  std::string wrapped = "[";
  wrapped.append(text);
  wrapped += ']';
  return point_from_json(parse_text(wrapped));
}

inline json to_json(const MatrixOrder& order) { return json{{"matrix", order.rows()}}; }

/// Accepts {"matrix": [[...]]} or a bare row-major matrix.
inline MatrixOrder order_from_json(const json& j) {
  const json& m = j.is_object() ? j.at("matrix") : j;
  if (!m.is_array()) throw ParseError("order must be an integer matrix");
  IntMatrix rows;
  for (const auto& row : m) {
    if (!row.is_array()) throw ParseError("order rows must be integer arrays");
    auto& out = rows.emplace_back();
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw ParseError("order entries must be integers");
      out.push_back(v.get<std::int64_t>());
    }
  }
  return MatrixOrder::from_rows(std::move(rows));
}

inline json to_json(const Cone& cone) {
  return json{{"rays", to_json(cone.rays())},
              {"facets", to_json(cone.facets())},
              {"hilbert_basis", to_json(cone.hilbert_basis())}};
}

/// Accepts {"rays": [...]} or a bare list of generators.
inline ConePtr cone_from_json(const json& j) {
  const json& rays = j.is_object() ? j.at("rays") : j;
  return make_cone(points_from_json(rays));
}

inline json to_json(const CSemigroup& s) {
  return json{{"cone", json{{"rays", to_json(s.cone().rays())}}}, {"gaps", to_json(s.gaps())}};
}

/// {"cone": ..., "gaps": [...]} is validated as a gap set; {"generators":
/// [...]} builds the generated semigroup over the cone of its generators.
inline CSemigroup semigroup_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("expected a semigroup object");
  if (j.contains("generators")) return CSemigroup::from_generators(points_from_json(j.at("generators")));
  if (!j.contains("cone") || !j.contains("gaps"))
    throw ParseError("semigroup needs either \"generators\" or both \"cone\" and \"gaps\"");
  return CSemigroup::from_gaps(cone_from_json(j.at("cone")), points_from_json(j.at("gaps")));
}

inline json to_json(const InvariantReport& r) {
  json j{{"genus", r.genus},
         {"type", r.type},
         {"minimal_generators", to_json(r.minimal_generators)},
         {"pseudo_frobenius", to_json(r.pf)},
         {"special_gaps", to_json(r.sg)},
         {"fundamental_gaps", to_json(r.fg)}};
  j["frobenius_vector"] = r.frobenius_vector ? to_json(*r.frobenius_vector) : json(nullptr);
  j["frobenius_number"] = r.frobenius_number ? json(*r.frobenius_number) : json(nullptr);
  j["small_elements"] = r.n ? json(*r.n) : json(nullptr);
  j["symmetry"] = r.symmetry ? json(to_string(*r.symmetry)) : json(nullptr);
  return j;
}

inline json to_json(const IrreducibleTree& tree) {
  json nodes = json::array();
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const auto& n = tree.nodes[i];
    nodes.push_back(json{{"id", i},
                         {"parent", n.parent ? json(*n.parent) : json(nullptr)},
                         {"depth", n.depth},
                         {"children", n.children},
                         {"gaps", to_json(n.semigroup.gaps())},
                         {"generators", to_json(n.semigroup.minimal_generators())}});
  }
  return json{{"f", to_json(tree.f)},
              {"order", to_json(tree.order)},
              {"cone", json{{"rays", to_json(tree.root().semigroup.cone().rays())}}},
              {"nodes", std::move(nodes)}};
}

inline json to_json(const std::vector<CSemigroup>& semigroups) {
  json out = json::array();
  for (const auto& s : semigroups)
    out.push_back(json{{"gaps", to_json(s.gaps())}, {"generators", to_json(s.minimal_generators())}});
  return out;
}

}  // namespace csg::io
