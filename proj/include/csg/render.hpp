#pragma once

#include <sstream>
#include <string>

#include "csg/semigroup.hpp"
#include "csg/tree.hpp"

namespace csg::render {

enum class Cell { outside, gap, generator, element };

/// Cell kind of x for the grid pictures.
inline Cell classify(const CSemigroup& s, const Point& x) {
  if (!s.cone().contains(x)) return Cell::outside;
  if (s.is_gap(x)) return Cell::gap;
  if (sorted_contains(s.minimal_generators(), x)) return Cell::generator;
  return Cell::element;
}

inline void require_plane(const CSemigroup& s) {
  if (s.dim() != 2) throw Error("grid rendering is 2D only");
}

/// Smallest square viewport showing every gap and minimal generator.
inline std::int64_t default_viewport(const CSemigroup& s) {
  std::int64_t v = 1;
  for (const auto& x : s.gaps()) v = std::max({v, x[0], x[1]});
  for (const auto& x : s.minimal_generators()) v = std::max({v, x[0], x[1]});
  return v;
}

/// Text grid over [0, viewport]², first coordinate to the right and second
/// upward: ◦ gap, ■ minimal generator, • other element, '.' outside the cone.
inline std::string ascii_grid(const CSemigroup& s, std::int64_t viewport, bool color = false) {
  require_plane(s);
  if (viewport < 0) throw Error("viewport must be nonnegative");
  std::ostringstream out;
  for (std::int64_t y = viewport; y >= 0; --y) {
    for (std::int64_t x = 0; x <= viewport; ++x) {
      if (x > 0) out << ' ';
      switch (classify(s, Point{x, y})) {
        case Cell::outside: out << '.'; break;
        case Cell::gap: out << (color ? "\x1b[34m◦\x1b[0m" : "◦"); break;
        case Cell::generator: out << (color ? "\x1b[1m■\x1b[0m" : "■"); break;
        case Cell::element: out << (color ? "\x1b[31m•\x1b[0m" : "•"); break;
      }
    }
    out << '\n';
  }
  return out.str();
}

inline std::string svg_grid(const CSemigroup& s, std::int64_t viewport) {
  require_plane(s);
  if (viewport < 0) throw Error("viewport must be nonnegative");
  constexpr int kStep = 20, kMargin = 15;
  const auto side = 2 * kMargin + kStep * viewport;
  auto px = [&](std::int64_t x) { return kMargin + kStep * x; };
  auto py = [&](std::int64_t y) { return kMargin + kStep * (viewport - y); };
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << side << "\" height=\"" << side
      << "\" viewBox=\"0 0 " << side << ' ' << side << "\">\n";
  out << "<g stroke=\"#ccc\" stroke-width=\"1\">\n";
  for (std::int64_t i = 0; i <= viewport; ++i) {
    out << "<line x1=\"" << px(i) << "\" y1=\"" << py(0) << "\" x2=\"" << px(i) << "\" y2=\"" << py(viewport)
        << "\"/>\n";
    out << "<line x1=\"" << px(0) << "\" y1=\"" << py(i) << "\" x2=\"" << px(viewport) << "\" y2=\"" << py(i)
        << "\"/>\n";
  }
  out << "</g>\n";
  for (std::int64_t y = 0; y <= viewport; ++y) {
    for (std::int64_t x = 0; x <= viewport; ++x) {
      const auto cx = px(x), cy = py(y);
      switch (classify(s, Point{x, y})) {
        case Cell::outside: break;
        case Cell::gap:
          out << "<circle class=\"gap\" cx=\"" << cx << "\" cy=\"" << cy
              << "\" r=\"5\" fill=\"white\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
          break;
        case Cell::generator:
          out << "<rect class=\"generator\" x=\"" << cx - 5 << "\" y=\"" << cy - 5
              << "\" width=\"10\" height=\"10\" fill=\"black\"/>\n";
          break;
        case Cell::element:
          out << "<circle class=\"element\" cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"3\" fill=\"red\"/>\n";
          break;
      }
    }
  }
  out << "</svg>\n";
  return out.str();
}

inline std::string generator_label(const CSemigroup& s) {
  std::string label = "{";
  bool first = true;
  for (const auto& g : s.minimal_generators()) {
    if (!first) label += ", ";
    first = false;
    label += g.str();
  }
  return label + "}";
}

/// Graphviz digraph with one node per tree vertex, labeled by its minimal
/// generators.
inline std::string dot(const IrreducibleTree& tree) {
  std::ostringstream out;
  out << "digraph irreducible {\n  node [shape=box, fontsize=10];\n";
  for (std::size_t i = 0; i < tree.nodes.size(); ++i)
    out << "  n" << i << " [label=\"" << generator_label(tree.nodes[i].semigroup) << "\"];\n";
  for (const auto& [parent, child] : tree.edges()) out << "  n" << parent << " -> n" << child << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace csg::render
