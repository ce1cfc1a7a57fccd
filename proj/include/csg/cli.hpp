#pragma once

// Command-line front end. run_cli() is the whole program minus process
// plumbing so tests can drive it with string streams.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "csg/enumerate.hpp"
#include "csg/gapset.hpp"
#include "csg/io.hpp"
#include "csg/oracle.hpp"
#include "csg/render.hpp"
#include "csg/tree.hpp"

namespace csg::cli {

using io::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

/// "-" reads the input stream, "@path" reads a file, anything else is literal.
inline std::string load_argument(const std::string& arg, std::istream& in) {
  if (arg == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  if (arg.starts_with('@')) {
    std::ifstream file(arg.substr(1));
    if (!file) throw UsageError("cannot read " + arg.substr(1));
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
  }
  return arg;
}

inline bool color_enabled() {
  const char* v = std::getenv("SGP_COLOR");
  return v != nullptr && *v != '\0' && std::string_view(v) != "0";
}

struct Inputs {
  std::string cone, order, gaps, gens;
  unsigned jobs = 1;

  json parsed(const std::string& arg, std::istream& in) const { return io::parse_text(load_argument(arg, in)); }

  ConePtr load_cone(std::istream& in) const {
    if (cone.empty()) throw UsageError("--cone is required");
    return io::cone_from_json(parsed(cone, in));
  }

  MatrixOrder load_order(std::size_t p, std::istream& in) const {
    if (order.empty()) return MatrixOrder::graded_lex(p);
    auto o = io::order_from_json(parsed(order, in));
    if (o.dim() != p) throw std::invalid_argument("order dimension does not match the cone");
    return o;
  }

  std::vector<Point> load_gaps(std::istream& in) const {
    if (gaps.empty()) throw UsageError("--gaps is required");
    return io::points_from_json(parsed(gaps, in));
  }

  CSemigroup load_semigroup(std::istream& in) const {
    if (!gens.empty()) {
      if (!gaps.empty()) throw UsageError("give either --gens or --cone/--gaps, not both");
      return CSemigroup::from_generators(io::points_from_json(parsed(gens, in)));
    }
    if (cone.empty() || gaps.empty()) throw UsageError("a semigroup needs --gens or both --cone and --gaps");
    return CSemigroup::from_gaps(load_cone(in), load_gaps(in));
  }
};

inline void add_cone_options(CLI::App* cmd, Inputs& inputs, bool order) {
  cmd->add_option("--cone", inputs.cone, "cone generators as JSON, @file or -");
  if (order) cmd->add_option("--order", inputs.order, "order matrix as JSON (default graded lex)");
}

inline void add_semigroup_options(CLI::App* cmd, Inputs& inputs) {
  add_cone_options(cmd, inputs, true);
  cmd->add_option("--gaps", inputs.gaps, "gap set as JSON, @file or - for stdin");
  cmd->add_option("--gens", inputs.gens, "generators as JSON or @file");
}

inline std::string join(const std::vector<Point>& pts) {
  std::string s = "{";
  for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? ", " : "") + pts[i].str();
  return s + "}";
}

inline std::string table(const InvariantReport& r) {
  std::ostringstream out;
  auto opt = [](const auto& v) -> std::string {
    if (!v) return "-";
    std::ostringstream s;
    s << *v;
    return s.str();
  };
  out << "genus               " << r.genus << '\n';
  out << "frobenius vector    " << opt(r.frobenius_vector) << '\n';
  out << "frobenius number    " << opt(r.frobenius_number) << '\n';
  out << "small elements      " << opt(r.n) << '\n';
  out << "type                " << r.type << '\n';
  out << "symmetry            " << (r.symmetry ? to_string(*r.symmetry) : std::string("-")) << '\n';
  out << "minimal generators  " << join(r.minimal_generators) << '\n';
  out << "pseudo-Frobenius    " << join(r.pf) << '\n';
  out << "special gaps        " << join(r.sg) << '\n';
  out << "fundamental gaps    " << join(r.fg) << '\n';
  return out.str();
}

inline std::string emit_grids(const std::vector<CSemigroup>& semigroups, const std::string& format,
                              std::optional<std::int64_t> viewport) {
  std::ostringstream out;
  const bool color = color_enabled();
  for (std::size_t i = 0; i < semigroups.size(); ++i) {
    const auto& s = semigroups[i];
    const auto v = viewport ? *viewport : render::default_viewport(s);
    if (format == "ascii") {
      if (i) out << '\n';
      out << "# " << i + 1 << ": gaps " << join(s.gaps()) << '\n' << render::ascii_grid(s, v, color);
    } else {
      out << render::svg_grid(s, v);
    }
  }
  return out.str();
}

inline json error_json(const std::string& kind, const std::string& message) {
  return json{{"error", kind}, {"message", message}};
}

}  // namespace detail

/// Runs one sgp command. Returns 0 on success, 1 on a domain failure (JSON
/// error object on `err`) and 2 on a usage error.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err,
                   std::istream& in = std::cin) {
  using detail::Inputs;
  CLI::App app{"Exact computations with affine C-semigroups", "sgp"};
  app.require_subcommand(1);
  Inputs inputs;
  std::function<void()> action;

  // cone info
  auto* cone_cmd = app.add_subcommand("cone", "cone geometry");
  cone_cmd->require_subcommand(1);
  auto* cone_info = cone_cmd->add_subcommand("info", "rays, facets and Hilbert basis");
  detail::add_cone_options(cone_info, inputs, false);
  cone_info->callback([&] {
    action = [&] { out << io::to_json(*inputs.load_cone(in)).dump() << '\n'; };
  });

  // invariants
  std::string inv_format = "json";
  auto* inv = app.add_subcommand("invariants", "genus, Frobenius vector, PF, SG, FG, symmetry");
  detail::add_semigroup_options(inv, inputs);
  inv->add_option("--format", inv_format)->check(CLI::IsMember({"json", "table"}));
  inv->callback([&] {
    action = [&] {
      auto s = inputs.load_semigroup(in);
      auto report = invariants(s, inputs.load_order(s.dim(), in));
      if (inv_format == "table") {
        out << detail::table(report);
      } else {
        out << io::to_json(report).dump() << '\n';
      }
    };
  });

  // check-gaps
  std::string method = "direct";
  auto* check = app.add_subcommand("check-gaps", "is C minus the given set a C-semigroup?");
  detail::add_cone_options(check, inputs, true);
  check->add_option("--gaps", inputs.gaps, "candidate gap set as JSON, @file or -");
  check->add_option("--method", method, "generator computation")->check(CLI::IsMember({"direct", "incremental"}));
  check->callback([&] {
    action = [&] {
      auto cone = inputs.load_cone(in);
      GapCandidateSet x(cone, inputs.load_gaps(in));
      auto verdict = is_complement_semigroup_direct(x);
      json result{{"valid", verdict.valid}};
      if (verdict.valid) {
        std::vector<Point> gens;
        if (method == "incremental") {
          auto inc = complement_semigroup_mingens(x, inputs.load_order(cone->dim(), in));
          if (!inc.generators) throw std::logic_error("incremental and direct verdicts disagree");
          gens = *inc.generators;
        } else {
          gens = CSemigroup::from_trusted_gaps(cone, x.elems()).minimal_generators();
        }
        result["generators"] = io::to_json(gens);
      } else {
        result["witness"] = json{{"x", io::to_json(verdict.witness->first)},
                                 {"s", io::to_json(verdict.witness->second)}};
      }
      out << result.dump() << '\n';
    };
  });

  // determines
  auto* det = app.add_subcommand("determines", "does the set determine a largest gap set?");
  detail::add_cone_options(det, inputs, false);
  det->add_option("--gaps", inputs.gaps, "point set as JSON, @file or -");
  det->callback([&] {
    action = [&] {
      auto s = determines_gapset(GapCandidateSet(inputs.load_cone(in), inputs.load_gaps(in)));
      json result{{"determines", s.has_value()}};
      result["gaps"] = s ? io::to_json(s->gaps()) : json(nullptr);
      out << result.dump() << '\n';
    };
  });

  // grid
  std::string grid_format = "ascii";
  std::optional<std::int64_t> viewport;
  auto* grid = app.add_subcommand("grid", "draw a planar semigroup");
  detail::add_semigroup_options(grid, inputs);
  grid->add_option("--format", grid_format)->check(CLI::IsMember({"ascii", "svg"}));
  grid->add_option("--viewport", viewport, "draw [0,v]^2");
  grid->callback([&] {
    action = [&] { out << detail::emit_grids({inputs.load_semigroup(in)}, grid_format, viewport); };
  });

  // tree
  std::string f_text, tree_format = "json";
  bool no_guards = false;
  auto* tree_cmd = app.add_subcommand("tree", "irreducible C-semigroups with Frobenius vector f");
  detail::add_cone_options(tree_cmd, inputs, true);
  tree_cmd->add_option("-f,--frobenius", f_text, "Frobenius vector, e.g. 4,2")->required();
  tree_cmd->add_option("--format", tree_format)->check(CLI::IsMember({"json", "dot"}));
  tree_cmd->add_option("--jobs", inputs.jobs)->check(CLI::PositiveNumber);
  tree_cmd->add_flag("--no-guards", no_guards, "revalidate every candidate child without prefiltering");
  tree_cmd->callback([&] {
    action = [&] {
      auto cone = inputs.load_cone(in);
      const auto f = io::parse_point(f_text);
      if (f.dim() != cone->dim()) throw std::invalid_argument("f dimension does not match the cone");
      if (f.is_zero()) throw Error("f must be nonzero");
      auto tree = irreducible_tree(cone, inputs.load_order(cone->dim(), in), f, inputs.jobs,
                                   ChildOptions{!no_guards});
      if (tree_format == "dot") {
        out << render::dot(tree);
      } else {
        out << io::to_json(tree).dump() << '\n';
      }
    };
  });

  // enumerate
  std::string big_f_text, emit_grid;
  bool upto = false, include_cone = false, paper_literal = false;
  auto* en = app.add_subcommand("enumerate", "all C-semigroups with a given Frobenius vector");
  detail::add_cone_options(en, inputs, true);
  en->add_option("-F,--frobenius", big_f_text, "Frobenius vector, e.g. 2,1")->required();
  en->add_flag("--upto", upto, "every Frobenius vector up to F");
  en->add_flag("--include-cone", include_cone, "with --upto, also list C itself");
  en->add_flag("--paper-literal", paper_literal, "use the pending-set worklist variant");
  en->add_option("--emit-grid", emit_grid, "draw each result")->check(CLI::IsMember({"ascii", "svg"}));
  en->add_option("--viewport", viewport, "draw [0,v]^2");
  en->add_option("--jobs", inputs.jobs)->check(CLI::PositiveNumber);
  en->callback([&] {
    action = [&] {
      if (paper_literal && upto) throw UsageError("--paper-literal cannot be combined with --upto");
      if (include_cone && !upto) throw UsageError("--include-cone requires --upto");
      auto cone = inputs.load_cone(in);
      const auto f = io::parse_point(big_f_text);
      const auto order = inputs.load_order(cone->dim(), in);
      EnumResult r = paper_literal ? all_with_frobenius_paper_literal(cone, order, f)
                     : upto        ? all_with_frobenius_upto(cone, order, f, include_cone, inputs.jobs)
                                   : all_with_frobenius(cone, order, f, inputs.jobs);
      if (!emit_grid.empty()) {
        out << detail::emit_grids(r.semigroups, emit_grid, viewport);
      } else {
        out << io::to_json(r.semigroups).dump() << '\n';
      }
    };
  });

  // oracle (debugging only)
  std::string point_text, box_text;
  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force reference computations")->group("");
  oracle_cmd->require_subcommand(1);
  auto load_box = [&](const std::string& fallback_text) {
    return oracle::BoundedBox(io::parse_point(box_text.empty() ? fallback_text : box_text));
  };
  auto* o_member = oracle_cmd->add_subcommand("membership");
  o_member->add_option("--gens", inputs.gens)->required();
  o_member->add_option("--point", point_text)->required();
  o_member->add_option("--box", box_text);
  o_member->callback([&] {
    action = [&] {
      const auto gens = io::points_from_json(inputs.parsed(inputs.gens, in));
      out << json(oracle::oracle_membership(gens, io::parse_point(point_text), load_box(point_text))).dump()
          << '\n';
    };
  });
  auto* o_pf = oracle_cmd->add_subcommand("pf");
  detail::add_semigroup_options(o_pf, inputs);
  o_pf->callback([&] {
    action = [&] { out << io::to_json(oracle::oracle_pf(inputs.load_semigroup(in))).dump() << '\n'; };
  });
  auto* o_gens = oracle_cmd->add_subcommand("mingens");
  detail::add_semigroup_options(o_gens, inputs);
  o_gens->callback([&] {
    action = [&] { out << io::to_json(oracle::oracle_mingens(inputs.load_semigroup(in))).dump() << '\n'; };
  });
  auto* o_enum = oracle_cmd->add_subcommand("enumerate");
  detail::add_cone_options(o_enum, inputs, true);
  o_enum->add_option("-F,--frobenius", big_f_text)->required();
  o_enum->add_option("--box", box_text)->required();
  o_enum->callback([&] {
    action = [&] {
      auto cone = inputs.load_cone(in);
      auto sets = oracle::oracle_enum_frobenius(*cone, inputs.load_order(cone->dim(), in),
                                                io::parse_point(big_f_text), load_box(box_text));
      json result = json::array();
      for (const auto& gaps : sets) result.push_back(io::to_json(gaps));
      out << result.dump() << '\n';
    };
  });

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    const auto code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    action();
    return 0;
  } catch (const UsageError& e) {
    err << "sgp: " << e.what() << '\n';
    return 2;
  } catch (const io::ParseError& e) {
    err << "sgp: " << e.what() << '\n';
    return 2;
  } catch (const InvalidGapSet& e) {
    auto j = detail::error_json("invalid_gap_set", e.what());
    j["witness"] = json{{"x", io::to_json(e.x())}, {"s", io::to_json(e.s())}};
    err << j.dump() << '\n';
    return 1;
  } catch (const oracle::TooLarge& e) {
    err << detail::error_json("too_large", e.what()).dump() << '\n';
    return 1;
  } catch (const Error& e) {
    err << detail::error_json("domain_error", e.what()).dump() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << detail::error_json("invalid_argument", e.what()).dump() << '\n';
    return 1;
  } catch (const std::overflow_error& e) {
    err << detail::error_json("overflow", e.what()).dump() << '\n';
    return 1;
  } catch (const json::exception& e) {
    err << "sgp: malformed input: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace csg::cli
