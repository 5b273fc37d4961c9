#include "altdimap/io.hpp"

#include <cctype>
#include <optional>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "altdimap/error.hpp"

namespace altdimap {

using nlohmann::json;

std::string edge_label(const EdgeLabels& labels, EdgeId e)
{
  if (e < labels.size() && !labels[e].empty())
    return labels[e];
  return "e" + std::to_string(e);
}

namespace {

struct Token {
  enum Kind { word, open, close } kind;
  std::string text;
  std::size_t column;
};

bool label_char(char c)
{
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '.';
}

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text)
{
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view raw = text.substr(start, end - start);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos)
      raw = raw.substr(0, hash);

    Line line{number, {}};
    for (std::size_t i = 0; i < raw.size();) {
      const char c = raw[i];
      if (c == ' ' || c == '\t' || c == '\r') {
        ++i;
      } else if (c == '(' || c == ')') {
        line.tokens.push_back({c == '(' ? Token::open : Token::close, std::string(1, c), i + 1});
        ++i;
      } else if (label_char(c)) {
        std::size_t j = i;
        while (j < raw.size() && label_char(raw[j]))
          ++j;
        line.tokens.push_back({Token::word, std::string(raw.substr(i, j - i)), i + 1});
        i = j;
      } else {
        throw ParseError(number, i + 1, std::string("unexpected character '") + c + "'");
      }
    }
    if (!line.tokens.empty())
      lines.push_back(std::move(line));
    if (end == text.size())
      break;
    start = end + 1;
  }
  return lines;
}

[[noreturn]] void fail(const Line& line, const Token& tok, const std::string& what)
{
  throw ParseError(line.number, tok.column, what);
}

/** Parses `(a b)(c)...` from tokens[1..], checking labels against `id`. */
std::vector<std::vector<EdgeId>> parse_cycles(const Line& line,
                                              const std::unordered_map<std::string, EdgeId>& id)
{
  std::vector<std::vector<EdgeId>> cycles;
  std::unordered_map<EdgeId, bool> used;
  const auto& t = line.tokens;
  std::size_t i = 1;
  while (i < t.size()) {
    if (t[i].kind != Token::open)
      fail(line, t[i], "expected '(' but found '" + t[i].text + "'");
    ++i;
    std::vector<EdgeId> cycle;
    while (i < t.size() && t[i].kind == Token::word) {
      auto it = id.find(t[i].text);
      if (it == id.end())
        fail(line, t[i], "unknown edge label '" + t[i].text + "'");
      if (used[it->second])
        fail(line, t[i], "label '" + t[i].text + "' is repeated");
      used[it->second] = true;
      cycle.push_back(it->second);
      ++i;
    }
    if (i == t.size())
      throw ParseError(line.number, t.back().column + t.back().text.size(), "missing ')'");
    if (t[i].kind != Token::close)
      fail(line, t[i], "expected ')' but found '" + t[i].text + "'");
    ++i;
    if (!cycle.empty())
      cycles.push_back(std::move(cycle));
  }
  return cycles;
}

std::string cycles_to_string(const Perm& p, const EdgeLabels& labels)
{
  std::string s;
  for (const auto& cycle : p.cycles()) {
    if (cycle.size() == 1)
      continue;
    s += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i)
        s += ' ';
      s += edge_label(labels, cycle[i]);
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

} // namespace

MapDocument parse_map_document(std::string_view text)
{
  MapDocument doc;
  std::optional<std::size_t> name_line;
  std::optional<std::size_t> edges_line;
  std::unordered_map<std::string, EdgeId> id;
  std::optional<std::vector<std::vector<EdgeId>>> sw;
  std::optional<std::vector<std::vector<EdgeId>>> sw2;

  for (const Line& line : tokenize(text)) {
    const Token& head = line.tokens.front();
    if (head.kind != Token::word)
      fail(line, head, "expected a keyword");
    if (head.text == "map") {
      if (name_line)
        fail(line, head, "second 'map' line");
      if (line.tokens.size() != 2 || line.tokens[1].kind != Token::word)
        fail(line, head, "'map' takes exactly one name");
      name_line = line.number;
      doc.name = line.tokens[1].text;
    } else if (head.text == "edges") {
      if (edges_line)
        fail(line, head, "second 'edges' line");
      edges_line = line.number;
      for (std::size_t i = 1; i < line.tokens.size(); ++i) {
        const Token& t = line.tokens[i];
        if (t.kind != Token::word)
          fail(line, t, "expected an edge label");
        if (!id.emplace(t.text, static_cast<EdgeId>(doc.labels.size())).second)
          fail(line, t, "duplicate edge label '" + t.text + "'");
        doc.labels.push_back(t.text);
      }
    } else if (head.text == "sigma_omega" || head.text == "sigma_omega2") {
      if (!edges_line)
        fail(line, head, "'" + head.text + "' before the 'edges' line");
      auto& slot = head.text == "sigma_omega" ? sw : sw2;
      if (slot)
        fail(line, head, "second '" + head.text + "' line");
      slot = parse_cycles(line, id);
    } else {
      fail(line, head, "unknown keyword '" + head.text + "'");
    }
  }
  if (!edges_line)
    throw ParseError(1, 1, "missing 'edges' line");
  if (!sw)
    throw ParseError(1, 1, "missing 'sigma_omega' line");
  if (!sw2)
    throw ParseError(1, 1, "missing 'sigma_omega2' line");
  doc.map = make_map(doc.labels.size(), *sw, *sw2);
  return doc;
}

Map parse_map(std::string_view text) { return parse_map_document(text).map; }

std::string serialize_map(const Map& g, const EdgeLabels& labels, std::string_view name)
{
  std::string s = "map " + std::string(name) + "\nedges";
  for (EdgeId e : g.edges())
    s += ' ' + edge_label(labels, e);
  s += "\nsigma_omega " + cycles_to_string(g.sigma_omega(), labels);
  s += "\nsigma_omega2 " + cycles_to_string(g.sigma_omega2(), labels);
  s += '\n';
  return s;
}

std::string serialize_map(const MapDocument& doc)
{
  return serialize_map(doc.map, doc.labels, doc.name);
}

PlaneGraphDocument parse_plane_document(std::string_view text)
{
  PlaneGraphDocument doc;
  bool named = false;
  struct EdgeDecl {
    std::size_t u, v;
    unsigned seen = 0;
  };
  std::unordered_map<std::string, std::size_t> edge_index;
  std::vector<EdgeDecl> edges;
  std::unordered_map<std::string, std::size_t> vertex_index;
  std::vector<std::optional<std::vector<DartId>>> rotation;

  auto vertex = [&](const std::string& name) {
    auto [it, fresh] = vertex_index.emplace(name, doc.vertex_names.size());
    if (fresh) {
      doc.vertex_names.push_back(name);
      rotation.emplace_back();
    }
    return it->second;
  };

  // Edge endpoints may name vertices before their rotation line, so
  // rotations are resolved after the whole file is read.
  struct PendingRotation {
    Line line;
    std::size_t v;
  };
  std::vector<PendingRotation> pending;
  std::vector<std::pair<Line, std::string>> edge_ends;

  for (const Line& line : tokenize(text)) {
    const Token& head = line.tokens.front();
    const auto& t = line.tokens;
    for (const Token& tok : t)
      if (tok.kind != Token::word)
        fail(line, tok, "parentheses are not used in plane-graph files");
    if (head.text == "plane") {
      if (named)
        fail(line, head, "second 'plane' line");
      if (t.size() != 2)
        fail(line, head, "'plane' takes exactly one name");
      named = true;
      doc.name = t[1].text;
    } else if (head.text == "edge") {
      if (t.size() != 4)
        fail(line, head, "'edge' takes a label and two endpoints");
      if (!edge_index.emplace(t[1].text, edges.size()).second)
        fail(line, t[1], "duplicate edge label '" + t[1].text + "'");
      doc.edge_labels.push_back(t[1].text);
      edges.push_back({0, 0});
      edge_ends.emplace_back(line, t[1].text);
    } else if (head.text == "rotation") {
      if (t.size() < 2)
        fail(line, head, "'rotation' needs a vertex");
      const std::size_t v = vertex(t[1].text);
      if (rotation[v])
        fail(line, t[1], "second rotation for vertex '" + t[1].text + "'");
      rotation[v] = std::vector<DartId>{};
      pending.push_back({line, v});
    } else if (head.text == "vertex") {
      if (t.size() != 2)
        fail(line, head, "'vertex' takes exactly one name");
      vertex(t[1].text);
    } else {
      fail(line, head, "unknown keyword '" + head.text + "'");
    }
  }

  for (const auto& [line, label] : edge_ends) {
    const auto& t = line.tokens;
    for (int k : {2, 3})
      if (!vertex_index.count(t[k].text))
        fail(line, t[k], "vertex '" + t[k].text + "' has no rotation line");
    EdgeDecl& d = edges[edge_index.at(label)];
    d.u = vertex_index.at(t[2].text);
    d.v = vertex_index.at(t[3].text);
  }

  for (const auto& [line, v] : pending) {
    auto& darts = *rotation[v];
    for (std::size_t i = 2; i < line.tokens.size(); ++i) {
      const Token& tok = line.tokens[i];
      auto it = edge_index.find(tok.text);
      if (it == edge_index.end())
        fail(line, tok, "unknown edge label '" + tok.text + "'");
      EdgeDecl& d = edges[it->second];
      const DartId first = static_cast<DartId>(2 * it->second);
      if (d.u == v && d.v == v) {
        if (d.seen == 2)
          fail(line, tok, "loop '" + tok.text + "' listed more than twice");
        darts.push_back(first + d.seen++);
      } else if (d.u == v || d.v == v) {
        const unsigned bit = d.u == v ? 1u : 2u;
        if (d.seen & bit)
          fail(line, tok, "edge '" + tok.text + "' listed twice at one endpoint");
        d.seen |= bit;
        darts.push_back(first + (d.u == v ? 0 : 1));
      } else {
        fail(line, tok, "edge '" + tok.text + "' does not end at this vertex");
      }
    }
  }
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (edges[i].seen != 3 && !(edges[i].u == edges[i].v && edges[i].seen == 2))
      throw ParseError(edge_ends[i].first.number, 1,
                       "edge '" + doc.edge_labels[i] + "' is missing from a rotation");

  std::vector<std::vector<DartId>> darts;
  for (auto& r : rotation)
    darts.push_back(r ? std::move(*r) : std::vector<DartId>{});
  std::vector<EdgeId> ids(edges.size());
  for (std::size_t i = 0; i < ids.size(); ++i)
    ids[i] = static_cast<EdgeId>(i);
  doc.graph = PlaneGraph(EmbeddedGraph(std::move(ids), std::move(darts)));
  return doc;
}

namespace {

std::string dot_escape(const std::string& s)
{
  std::string r;
  for (char c : s) {
    if (c == '"' || c == '\\')
      r += '\\';
    r += c;
  }
  return r;
}

} // namespace

std::string export_dot(const Map& g, const EdgeLabels& labels, std::string_view name)
{
  std::ostringstream out;
  out << "digraph \"" << dot_escape(std::string(name)) << "\" {\n";
  const std::size_t vertices = g.sigma_1().cycle_count();
  for (std::size_t v = 0; v < vertices; ++v)
    out << "  v" << v << ";\n";
  for (EdgeId e : g.edges())
    out << "  v" << tail(g, e) << " -> v" << head(g, e) << " [label=\""
        << dot_escape(edge_label(labels, e)) << "\", class=\""
        << classify_edge(g, e).summary() << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string export_json(const Map& g, const EdgeLabels& labels, std::string_view name)
{
  auto cycles = [&](const Perm& p) {
    json arr = json::array();
    for (const auto& cycle : p.cycles()) {
      json c = json::array();
      for (EdgeId e : cycle)
        c.push_back(edge_label(labels, e));
      arr.push_back(std::move(c));
    }
    return arr;
  };

  json doc;
  doc["name"] = std::string(name);
  json edges = json::array();
  for (EdgeId e : g.edges())
    edges.push_back(edge_label(labels, e));
  doc["edges"] = std::move(edges);
  doc["sigma_1"] = cycles(g.sigma_1());
  doc["sigma_omega"] = cycles(g.sigma_omega());
  doc["sigma_omega2"] = cycles(g.sigma_omega2());

  const MapStats s = map_stats(g);
  doc["stats"] = {{"V", s.V}, {"E", s.E}, {"af", s.af}, {"cf", s.cf},
                  {"k", s.k}, {"genus", s.genus}};

  json table = json::array();
  for (EdgeId e : g.edges()) {
    const EdgeClass c = classify_edge(g, e);
    table.push_back({{"edge", edge_label(labels, e)},
                     {"tail", tail(g, e)},
                     {"head", head(g, e)},
                     {"loop_1", c.is_1_loop},
                     {"loop_omega", c.is_omega_loop},
                     {"loop_omega2", c.is_omega2_loop},
                     {"ultraloop", c.is_ultraloop},
                     {"standard_loop", c.is_standard_loop},
                     {"semiloop_1", c.semiloop_1},
                     {"semiloop_omega", c.semiloop_omega},
                     {"semiloop_omega2", c.semiloop_omega2},
                     {"summary", c.summary()}});
  }
  doc["classification"] = std::move(table);
  return doc.dump(2) + "\n";
}

BinFn parse_binfn_json(std::string_view text)
{
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("binary function JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("values") || !doc["values"].is_array())
    throw Error("binary function JSON needs a \"values\" array");

  std::vector<Complex> values;
  for (const json& v : doc["values"]) {
    if (v.is_number()) {
      values.emplace_back(v.get<double>(), 0.0);
    } else if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
      values.emplace_back(v[0].get<double>(), v[1].get<double>());
    } else {
      throw Error("binary function values must be numbers or [re, im] pairs");
    }
  }
  if (doc.contains("ground")) {
    std::vector<std::string> ground;
    for (const json& l : doc["ground"]) {
      if (!l.is_string())
        throw Error("binary function ground labels must be strings");
      ground.push_back(l.get<std::string>());
    }
    return BinFn(std::move(ground), std::move(values));
  }
  return BinFn(std::move(values));
}

std::string binfn_to_json(const BinFn& f)
{
  json doc;
  doc["ground"] = f.ground();
  json values = json::array();
  for (const Complex& v : f.values())
    values.push_back({v.real(), v.imag()});
  doc["values"] = std::move(values);
  return doc.dump() + "\n";
}

} // namespace altdimap
