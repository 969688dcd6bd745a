// gizctl: command-line driver for the Gizatullin-surface combinatorics library.
//
// Exit codes: 0 success; 2 invalid input or search-limit exhaustion; 3 the
// question is well-posed but outside the implemented criteria (e.g. an
// unknown fibration-graph shape).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "giz/autgroup.hpp"
#include "giz/blowup.hpp"
#include "giz/chain.hpp"
#include "giz/configinv.hpp"
#include "giz/document.hpp"
#include "giz/enumerate.hpp"
#include "giz/error.hpp"
#include "giz/extdiv.hpp"
#include "giz/orbits.hpp"
#include "giz/serieslift.hpp"

namespace {

using namespace giz;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ExtendedDivisor load_document(const std::string& path) {
  return parse_surface_document(read_file(path));
}

// Accept "[0,-1,-2]" or "0,-1,-2" (whitespace allowed).
WeightedChain parse_chain_arg(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!isspace(static_cast<unsigned char>(c))) t += c;
  if (!t.empty() && t.front() == '[' && t.back() == ']') t = t.substr(1, t.size() - 2);
  if (t.empty()) throw ValidationError("empty chain");
  WeightedChain out;
  std::istringstream in(t);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      int w = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(w);
    } catch (const std::exception&) {
      throw ValidationError("bad chain entry: \"" + item + "\"");
    }
  }
  return out;
}

std::string int_set_str(const std::set<int>& s) {
  std::string out = "{";
  bool first = true;
  for (int x : s) {
    if (!first) out += ", ";
    out += std::to_string(x);
    first = false;
  }
  return out + "}";
}

std::string point_set_str(const PointSet& pts) {
  std::string out = "{";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += ", ";
    out += cstar_str(pts[i]);
  }
  return out + "}";
}

void deliver(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ValidationError("cannot write file: " + out_path);
    out << text;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Birational combinatorics of Gizatullin surfaces"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("--out", out_path, "write output to this file instead of stdout");

  std::string chain_arg, doc_path, word_arg, a_arg = "1", b_arg = "1", p_arg = "0";
  std::string check_arg, reduce_arg;
  int order = 16, max_blowups = 8, toric_d = 1, toric_e = 0;
  bool flat = false;

  CLI::App* standardize_cmd = app.add_subcommand("standardize", "standard form of a chain");
  standardize_cmd->add_option("--chain", chain_arg, "weighted chain, e.g. \"[0,-1,-2,-3]\"")
      ->required();

  CLI::App* reverse_cmd = app.add_subcommand("reverse", "reversion of a (1-)standard chain");
  reverse_cmd->add_option("--chain", chain_arg, "weighted chain")->required();

  CLI::App* classify_cmd = app.add_subcommand("classify", "component types of a divisor");
  classify_cmd->add_option("doc", doc_path, "surface document (JSON)")->required();

  CLI::App* exceptional_cmd =
      app.add_subcommand("exceptional", "exceptional components of a divisor");
  exceptional_cmd->add_option("doc", doc_path, "surface document (JSON)")->required();

  CLI::App* invariant_cmd =
      app.add_subcommand("invariant", "configuration invariant of a divisor");
  invariant_cmd->add_option("doc", doc_path, "surface document (JSON)")->required();

  CLI::App* orbits_cmd = app.add_subcommand("orbits", "orbit decomposition of a divisor");
  orbits_cmd->add_option("doc", doc_path, "surface document (JSON)")->required();

  CLI::App* shape_cmd = app.add_subcommand("graph-shape", "fibration graph shape");
  shape_cmd->add_option("doc", doc_path, "surface document (JSON)")->required();

  CLI::App* aut_cmd = app.add_subcommand("autgroup", "automorphism group structure");
  aut_cmd->add_option("doc", doc_path, "surface document (JSON)");
  aut_cmd->add_option("--reduce", reduce_arg,
                      "reduce a birational word, e.g. \"Rev(c) Fib(2,3,y)\"");
  aut_cmd->add_flag("--all-minus-two", flat,
                    "assume every inner weight is >= -2 (reversions over every center)");

  CLI::App* lift_cmd = app.add_subcommand("lift", "lift a triangular map through blowups");
  lift_cmd->add_option("--word", word_arg, "letters L/R, e.g. \"LR\"")->required();
  lift_cmd->add_option("--a", a_arg, "x-scaling (rational, nonzero)");
  lift_cmd->add_option("--b", b_arg, "y-scaling (rational, nonzero)");
  lift_cmd->add_option("--P", p_arg, "shear polynomial in y with P(0) = 0");
  lift_cmd->add_option("--order", order, "truncation order (default 16)");

  CLI::App* toric_cmd = app.add_subcommand("toric", "toric surface V_{d,e} report");
  toric_cmd->add_option("--d", toric_d, "d >= 1")->required();
  toric_cmd->add_option("--e", toric_e, "0 <= e < d, coprime to d")->required();

  CLI::App* enum_cmd = app.add_subcommand("enumerate", "structural sweeps over all tails");
  enum_cmd->add_option("--check", check_arg, "property: claim3 | odd-n-symmetry | "
                                             "exceptional-invariants | determinants");
  enum_cmd->add_option("--max-blowups", max_blowups, "blowup budget (default 8)");

  CLI::App* dot_cmd = app.add_subcommand("export-dot", "Graphviz source for a divisor");
  dot_cmd->add_option("doc", doc_path, "surface document (JSON)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    std::string out;

    if (standardize_cmd->parsed()) {
      StandardizeResult r = standardize(parse_chain_arg(chain_arg));
      out += chain_str(r.chain) + "\n";
      out += "moves: " + std::to_string(r.log.size()) + "\n";
      for (const std::string& move : r.log) out += "  " + move + "\n";
    } else if (reverse_cmd->parsed()) {
      out += chain_str(reverse_chain(parse_chain_arg(chain_arg))) + "\n";
    } else if (classify_cmd->parsed()) {
      ExtendedDivisor d = load_document(doc_path);
      for (auto [i, t] : classify_components(d))
        out += "C_" + std::to_string(i) + ": " + component_type_str(t) + "\n";
      out += std::string("condition_star: ") + (condition_star(d) ? "true" : "false") + "\n";
    } else if (exceptional_cmd->parsed()) {
      ExtendedDivisor d = load_document(doc_path);
      out += "E_D: " + int_set_str(exceptional_set(d)) + "\n";
      out += "E_D_reversed: " + int_set_str(exceptional_set_dual(d)) + "\n";
      out += "E: " + int_set_str(exceptional_union(d)) + "\n";
      for (const auto& [comp, kl] : tail_component_kl(d.pre_feather_tail()))
        out += "C_" + std::to_string(comp) + ": (k,l) = (" + std::to_string(kl.first) +
               "," + std::to_string(kl.second) + ")\n";
    } else if (invariant_cmd->parsed()) {
      ExtendedDivisor d = load_document(doc_path);
      for (int i = 2; i <= d.n(); ++i) {
        if (d.r(i) == 0) continue;
        SymmetryData s = symmetry_group(d.base_points(i));
        out += "C_" + std::to_string(i) + ": d = " + std::to_string(s.d) +
               ", m = " + std::to_string(s.m) + "\n";
      }
      SelfReversed q = q_self_reversed(d);
      if (q.equal) {
        out += "self-reversed: yes\n";
        for (const auto& [i, g] : q.gamma)
          out += "gamma(" + std::to_string(i) + ") = " + cstar_str(g) + "\n";
      } else {
        out += "self-reversed: no (" + q.reason + ")\n";
      }
    } else if (orbits_cmd->parsed()) {
      OrbitReport r = orbit_decomposition(load_document(doc_path));
      out += orbit_report_str(r) + "\n";
      out += "exceptional: " + int_set_str(std::set<int>(r.exceptional.begin(),
                                                         r.exceptional.end())) + "\n";
      for (const OrbitPart& p : r.parts) {
        out += "part: components {";
        for (std::size_t i = 0; i < p.components.size(); ++i)
          out += (i ? ", " : "") + std::to_string(p.components[i]);
        out += "}, points " + point_set_str(p.points) + "\n";
      }
    } else if (shape_cmd->parsed()) {
      ShapeReport r = fibration_graph_shape(load_document(doc_path));
      out += "shape: " + graph_shape_str(r.shape) + "\n";
      out += "reason: " + r.reason + "\n";
      for (const auto& [i, g] : r.gamma)
        out += "gamma(" + std::to_string(i) + ") = " + cstar_str(g) + "\n";
    } else if (aut_cmd->parsed()) {
      if (!reduce_arg.empty()) {
        BiratWord w = reduce_birational_word(parse_birat_word(reduce_arg), flat);
        out += birat_word_str(w) + "\n";
      } else if (!doc_path.empty()) {
        ExtendedDivisor d = load_document(doc_path);
        ShapeReport r = fibration_graph_shape(d);
        bool generated = aut_generated_by_fibrations(d);  // throws on Unknown
        out += "shape: " + graph_shape_str(r.shape) + "\n";
        out += "Aut = " + amalgam_presentation(r.shape) + "\n";
        out += std::string("generated by fibration automorphisms: ") +
               (generated ? "true" : "false") + "\n";
      } else {
        throw ValidationError("autgroup needs a document or --reduce WORD");
      }
    } else if (lift_cmd->parsed()) {
      TriangularMap psi{parse_rat(a_arg), parse_rat(b_arg), parse_poly(p_arg)};
      LiftResult r = lift_series(psi, parse_lift_word(word_arg), order);
      out += "(k,l) = (" + std::to_string(r.form.k) + "," + std::to_string(r.form.l) +
             "); alpha = " + rat_str(r.form.alpha) + "; beta = " + rat_str(r.form.beta) +
             "\n";
    } else if (toric_cmd->parsed()) {
      ToricReport r = toric_report(toric_d, toric_e);
      out += toric_report_str(r) + "\n";
      out += "boundary: " + chain_str(r.boundary) + "\n";
      if (r.feather)
        out += "feather: component " + std::to_string(r.feather->component) + ", tail " +
               chain_str(r.feather->tail) + "\n";
      else
        out += "feather: none\n";
    } else if (enum_cmd->parsed()) {
      std::vector<std::string> checks =
          check_arg.empty() ? sweep_property_names() : std::vector<std::string>{check_arg};
      for (const std::string& c : checks)
        out += sweep_report_str(run_sweep(c, max_blowups)) + "\n";
    } else if (dot_cmd->parsed()) {
      out += export_dot(load_document(doc_path));
    }

    deliver(out, out_path);
    return 0;
  } catch (const UndeterminedError& e) {
    std::cerr << "undetermined: " << e.what() << "\n";
    return 3;
  } catch (const TheoryError& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
