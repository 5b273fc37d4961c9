#ifndef ALTDIMAP_IO_HPP
#define ALTDIMAP_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include "altdimap/binfn.hpp"
#include "altdimap/map.hpp"
#include "altdimap/plane.hpp"

namespace altdimap {

/**
 * Edge labels indexed by edge id. Ids past the end, or with an empty
 * entry, print as "e<id>".
 */
using EdgeLabels = std::vector<std::string>;

std::string edge_label(const EdgeLabels& labels, EdgeId e);

/** A parsed map file. Edge ids are positions in `labels`. */
struct MapDocument {
  std::string name = "G";
  EdgeLabels labels;
  Map map;
};

/**
 * Grammar, one statement per line, `#` starting a comment:
 *
 *     map <name>                  (optional)
 *     edges <label>...
 *     sigma_omega <cycles>
 *     sigma_omega2 <cycles>
 *
 * Cycles are parenthesized label lists such as `(a c b)(d e)`; `()` is the
 * identity and fixed points may be left out. Labels are nonempty runs of
 * letters, digits, `_`, `'` and `.`. Throws ParseError with the position
 * of the offending token.
 */
MapDocument parse_map_document(std::string_view text);
Map parse_map(std::string_view text);

/**
 * Disjoint cycles sorted by least id, each starting at its least id, fixed
 * points left out. The identity prints as `()`.
 */
std::string serialize_map(const Map& g, const EdgeLabels& labels = {},
                          std::string_view name = "G");
std::string serialize_map(const MapDocument& doc);

/** A parsed plane-graph file; edge i of the graph is the i-th `edge` line. */
struct PlaneGraphDocument {
  std::string name = "P";
  std::vector<std::string> edge_labels;
  std::vector<std::string> vertex_names;
  PlaneGraph graph;
};

/**
 * Grammar, one statement per line, `#` starting a comment:
 *
 *     plane <name>                (optional)
 *     edge <label> <u> <v>        (u = v for a loop)
 *     rotation <u> <label>...     (clockwise; a loop is listed twice)
 *     vertex <u>                  (an isolated vertex)
 *
 * Vertices are numbered in order of first appearance in a rotation or
 * vertex line. Every end of every edge must appear exactly once in the
 * rotation of its endpoint. Throws ParseError on syntax and Error if the
 * embedding is not plane.
 */
PlaneGraphDocument parse_plane_document(std::string_view text);

/**
 * One node per s1-cycle (in-star) and one arc per edge from its tail to
 * its head, labeled with the edge label and its EdgeClass summary.
 */
std::string export_dot(const Map& g, const EdgeLabels& labels = {},
                       std::string_view name = "G");

/**
 * JSON object with the name, edges, the triple as label cycles (fixed
 * points included), stats and a per-edge classification table.
 */
std::string export_json(const Map& g, const EdgeLabels& labels = {},
                        std::string_view name = "G");

/**
 * {"ground": [labels...], "values": [[re, im], ...]}. "ground" may be
 * left out for default labels and a real value may be a bare number.
 * Throws Error on a malformed document.
 */
BinFn parse_binfn_json(std::string_view text);
std::string binfn_to_json(const BinFn& f);

} // namespace altdimap

#endif
