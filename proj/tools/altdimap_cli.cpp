// Command-line front end. Exit status: 0 on success, 1 when the input is
// well-formed but the request fails (bad file, unknown edge, ...), 2 on a
// usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "altdimap/binfn.hpp"
#include "altdimap/catalog.hpp"
#include "altdimap/error.hpp"
#include "altdimap/invariants.hpp"
#include "altdimap/io.hpp"
#include "altdimap/minors.hpp"
#include "altdimap/plane.hpp"

using namespace altdimap;

namespace {

std::string read_input(const std::string& path)
{
  if (path == "-")
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  if (!in)
    throw Error("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

EdgeId find_label(const MapDocument& doc, const std::string& label)
{
  for (EdgeId e : doc.map.edges())
    if (edge_label(doc.labels, e) == label)
      return e;
  throw Error("no edge labeled '" + label + "'");
}

/** 1, -1, w, w2, a real number, or "re,im". */
Complex parse_scalar(const std::string& text)
{
  if (text == "w" || text == "omega")
    return omega_scalar();
  if (text == "w2" || text == "omega2")
    return omega_scalar() * omega_scalar();
  try {
    std::size_t used = 0;
    if (auto comma = text.find(','); comma != std::string::npos) {
      const double re = std::stod(text.substr(0, comma), &used);
      if (used != comma)
        throw Error("");
      const std::string im_text = text.substr(comma + 1);
      const double im = std::stod(im_text, &used);
      if (used != im_text.size())
        throw Error("");
      return {re, im};
    }
    const double re = std::stod(text, &used);
    if (used != text.size())
      throw Error("");
    return {re, 0};
  } catch (const std::exception&) {
    throw Error("cannot read '" + text + "' as a complex parameter");
  }
}

EdgeOrder parse_order(const std::string& text, const Map& g)
{
  if (text.empty())
    return g.edges();
  EdgeOrder order;
  std::stringstream s(text);
  std::string item;
  while (std::getline(s, item, ',')) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(item, &used);
      if (used != item.size())
        throw Error("");
      order.push_back(static_cast<EdgeId>(v));
    } catch (const std::exception&) {
      throw Error("bad edge id '" + item + "' in --order");
    }
  }
  check_order(g, order);
  return order;
}

const char* flag(bool b) { return b ? "true" : "false"; }

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Alternating dimap engine: minors, triality, invariants and binary functions"};
  app.require_subcommand(1);

  std::string file;
  std::string mu_text;
  std::string nu_text;
  std::string e_label;
  std::string f_label;
  int power = 1;
  std::size_t edges = 0;
  std::string filter;
  std::size_t k = 1;
  std::string variant = "c";
  std::string order_text;
  bool flip = false;
  std::string format = "dot";
  std::size_t element = 0;

  auto* stats = app.add_subcommand("stats", "Print V, E, af, cf, k and genus");
  stats->add_option("file", file, "Map file ('-' for stdin)")->required();

  auto* trial_cmd = app.add_subcommand("trial", "Print the trial of a map");
  trial_cmd->add_option("file", file)->required();
  trial_cmd->add_option("--power", power, "Number of trial steps");

  auto* reduce_cmd = app.add_subcommand("reduce", "Print G[mu]e");
  reduce_cmd->add_option("file", file)->required();
  reduce_cmd->add_option("--edge", e_label, "Edge label")->required();
  reduce_cmd->add_option("--mu", mu_text, "1, w or w2")->required();

  auto* classify = app.add_subcommand("classify", "Per-edge loop and semiloop table");
  classify->add_option("file", file)->required();

  auto* commute = app.add_subcommand("commute", "Test whether two reductions commute");
  commute->add_option("file", file)->required();
  commute->add_option("--e", e_label)->required();
  commute->add_option("--mu", mu_text)->required();
  commute->add_option("--f", f_label)->required();
  commute->add_option("--nu", nu_text)->required();

  auto* enumerate = app.add_subcommand("enumerate", "List isomorphism classes by canonical code");
  enumerate->add_option("--edges", edges, "Edge count")->required();
  enumerate->add_option("--filter", filter)->check(CLI::IsMember({"posy", "self-trial"}));

  auto* genus = app.add_subcommand("genus-test", "Excluded-minor test for genus < k");
  genus->add_option("file", file)->required();
  genus->add_option("--k", k)->required()->check(CLI::Range(1, 64));

  auto* tutte = app.add_subcommand("tutte", "T_c, T_a or T_i of a plane graph against its Tutte polynomial");
  tutte->add_option("file", file, "Plane-graph file")->required();
  tutte->add_option("--variant", variant)->check(CLI::IsMember({"c", "a", "i"}));
  tutte->add_option("--order", order_text, "Comma-separated map edge ids");
  tutte->add_flag("--flip", flip, "Reverse the medial orientation (variant i)");

  auto* export_cmd = app.add_subcommand("export", "Export a map as DOT or JSON");
  export_cmd->add_option("file", file)->required();
  export_cmd->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));

  auto* binfn = app.add_subcommand("binfn", "Binary-function operations on JSON vectors");
  binfn->require_subcommand(1);
  auto* bf_transform = binfn->add_subcommand("transform", "Apply L^[mu]");
  bf_transform->add_option("file", file, "JSON file ('-' for stdin)")->required();
  bf_transform->add_option("--mu", mu_text, "1, -1, w, w2, a real, or re,im")->required();
  auto* bf_minor_cmd = binfn->add_subcommand("minor", "The [mu]-minor at one element");
  bf_minor_cmd->add_option("file", file)->required();
  bf_minor_cmd->add_option("--element", element)->required();
  bf_minor_cmd->add_option("--mu", mu_text)->required();
  auto* bf_solve = binfn->add_subcommand("solve", "Solve for f reducing uniformly to u");
  bf_solve->add_option("file", file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    std::ostream& out = std::cout;
    if (*stats) {
      const MapStats s = map_stats(parse_map(read_input(file)));
      out << "V: " << s.V << "\nE: " << s.E << "\naf: " << s.af << "\ncf: " << s.cf
          << "\nk: " << s.k << "\ngenus: " << s.genus << "\n";
    } else if (*trial_cmd) {
      const MapDocument doc = parse_map_document(read_input(file));
      out << serialize_map(trial(doc.map, power), doc.labels, doc.name);
    } else if (*reduce_cmd) {
      const MapDocument doc = parse_map_document(read_input(file));
      const Map m = reduce(doc.map, find_label(doc, e_label), parse_mu(mu_text));
      out << serialize_map(m, doc.labels, doc.name);
    } else if (*classify) {
      const MapDocument doc = parse_map_document(read_input(file));
      for (EdgeId e : doc.map.edges())
        out << edge_label(doc.labels, e) << "\t" << tail(doc.map, e) << " -> "
            << head(doc.map, e) << "\t" << classify_edge(doc.map, e).summary() << "\n";
    } else if (*commute) {
      const MapDocument doc = parse_map_document(read_input(file));
      const CommuteResult r = commute_check(doc.map, find_label(doc, e_label), parse_mu(mu_text),
                                            find_label(doc, f_label), parse_mu(nu_text));
      out << "actual: " << flag(r.actual) << "\npredicted: " << flag(r.predicted) << "\n";
    } else if (*enumerate) {
      std::size_t count = 0;
      for (const CanonicalCode& code : enumerate_maps(edges)) {
        if (!filter.empty()) {
          const Map g = decode(code);
          if (filter == "posy" ? !is_posy(g) : !is_self_trial(g))
            continue;
        }
        out << code.to_hex() << "\n";
        ++count;
      }
      out << "count: " << count << "\n";
    } else if (*genus) {
      const GenusTestResult r = genus_excluded_minor_test(parse_map(read_input(file)), k);
      out << "genus < " << k << ": " << flag(r.genus_lt_k) << "\n";
      if (r.witness)
        out << "witness: " << r.witness->to_hex() << "\n";
    } else if (*tutte) {
      const PlaneGraphDocument doc = parse_plane_document(read_input(file));
      const Poly2 oracle = tutte_poly(doc.graph.underlying());
      if (variant == "i") {
        std::vector<bool> flips(doc.graph.graph().component_count(), flip);
        const Map g = alt_i(doc.graph, flips);
        const Poly1 t = T_i(g, parse_order(order_text, g));
        const Poly1 d = diagonal(oracle);
        out << "T_i: " << to_string(t) << "\ntutte(x,x): " << to_string(d)
            << "\nequal: " << flag(t == d) << "\n";
      } else {
        const Map g = variant == "c" ? alt_c(doc.graph) : alt_a(doc.graph);
        const EdgeOrder order = parse_order(order_text, g);
        const Poly2 t = variant == "c" ? T_c(g, order) : T_a(g, order);
        out << "T_" << variant << ": " << to_string(t) << "\ntutte: " << to_string(oracle)
            << "\nequal: " << flag(t == oracle) << "\n";
      }
    } else if (*export_cmd) {
      const MapDocument doc = parse_map_document(read_input(file));
      out << (format == "dot" ? export_dot(doc.map, doc.labels, doc.name)
                              : export_json(doc.map, doc.labels, doc.name));
    } else if (*bf_transform) {
      out << binfn_to_json(transform(parse_binfn_json(read_input(file)), parse_scalar(mu_text)));
    } else if (*bf_minor_cmd) {
      out << binfn_to_json(
          bf_minor(parse_binfn_json(read_input(file)), element, parse_scalar(mu_text)));
    } else if (*bf_solve) {
      out << binfn_to_json(solve_uniform_reduction(parse_binfn_json(read_input(file))));
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
