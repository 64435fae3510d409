#include "vhlf/square_complex.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "vhlf/errors.hpp"

namespace vhlf {

std::vector<int> OneVertexComplex::inverse_map() const {
  std::vector<int> inv(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) inv[i] = edges[i].inv;
  return inv;
}

int OneVertexComplex::index_of(const std::string& id) const {
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].id == id) return static_cast<int>(i);
  }
  return -1;
}

Square canonical_square(const Square& s, const std::vector<int>& inv) {
  const Square rev{inv[s[3]], inv[s[2]], inv[s[1]], inv[s[0]]};
  Square best = s;
  for (const Square& base : {s, rev}) {
    for (int k = 0; k < 4; ++k) {
      const Square r{base[k], base[(k + 1) % 4], base[(k + 2) % 4], base[(k + 3) % 4]};
      best = std::min(best, r);
    }
  }
  return best;
}

std::array<std::pair<int, int>, 4> square_corners(const Square& s, const std::vector<int>& inv,
                                                  const std::vector<char>& cls) {
  std::array<std::pair<int, int>, 4> out;
  for (int i = 0; i < 4; ++i) {
    const int x = inv[s[i]];
    const int y = s[(i + 1) % 4];
    out[i] = cls[x] == 'V' ? std::make_pair(x, y) : std::make_pair(y, x);
  }
  return out;
}

OneVertexComplex build_sab(const AbstractVH& vh, bool strict) {
  OneVertexComplex cx;
  const int na = static_cast<int>(vh.names_a.size());
  const int nb = static_cast<int>(vh.names_b.size());
  for (int i = 0; i < na; ++i) cx.edges.push_back({vh.names_a[i], vh.inv_a[i], 'V'});
  for (int j = 0; j < nb; ++j) cx.edges.push_back({vh.names_b[j], na + vh.inv_b[j], 'H'});
  const std::vector<int> inv = cx.inverse_map();

  std::map<Square, int> hits;
  for (const auto& rel : vh.relations) {
    const int a = rel[0];
    const int b = na + rel[1];
    const int b2 = na + rel[2];
    const int a2 = rel[3];
    ++hits[canonical_square({a, b, inv[a2], inv[b2]}, inv)];
  }
  for (const auto& [sq, count] : hits) {
    if (strict && count != 4) {
      std::string ids;
      for (int e : sq) ids += cx.edges[e].id + " ";
      throw Error(ErrorCode::DedupMismatch, "square [ " + ids + "] arises from " + std::to_string(count) +
                                                " relations instead of 4");
    }
    cx.squares.push_back(sq);
  }
  return cx;
}

OneVertexComplex build_sab(const VHData& data) {
  OneVertexComplex cx = build_sab(to_abstract(data), true);
  cx.q = data.cfg.q();
  cx.tau = data.cfg.tau.code;
  cx.c = data.cfg.c.code;
  return cx;
}

int Link::max_multiplicity() const {
  return multiplicity.empty() ? 0 : *std::max_element(multiplicity.begin(), multiplicity.end());
}

Link link_of(const OneVertexComplex& cx) {
  Link lk;
  std::vector<int> pos(cx.edges.size(), -1);
  std::vector<char> cls(cx.edges.size());
  for (std::size_t e = 0; e < cx.edges.size(); ++e) {
    cls[e] = cx.edges[e].cls;
    auto& side = cls[e] == 'V' ? lk.v_vertices : lk.h_vertices;
    pos[e] = static_cast<int>(side.size());
    side.push_back(cx.edges[e].id);
  }
  lk.multiplicity.assign(lk.v_vertices.size() * lk.h_vertices.size(), 0);
  const std::vector<int> inv = cx.inverse_map();
  for (const auto& sq : cx.squares) {
    for (const auto& [v, h] : square_corners(sq, inv, cls)) {
      ++lk.multiplicity[pos[v] * lk.h_vertices.size() + pos[h]];
    }
  }
  return lk;
}

bool is_complete_bipartite(const Link& lk) {
  return std::all_of(lk.multiplicity.begin(), lk.multiplicity.end(), [](int m) { return m == 1; });
}

CellCounts counts(const OneVertexComplex& cx) {
  return {1, static_cast<long long>(cx.edges.size()) / 2, static_cast<long long>(cx.squares.size())};
}

boost::rational<long long> euler_char(const OneVertexComplex& cx) {
  const CellCounts n = counts(cx);
  return {n.vertices - n.edges + n.squares, 1};
}

nlohmann::json export_json(const OneVertexComplex& cx) {
  nlohmann::json doc;
  doc["q"] = cx.q;
  doc["tau"] = cx.tau;
  doc["c"] = cx.c;
  doc["vertices"] = 1;
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : cx.edges) {
    edges.push_back({{"id", e.id}, {"inv", cx.edges[e.inv].id}, {"class", std::string(1, e.cls)}});
  }
  doc["edges"] = edges;
  nlohmann::json squares = nlohmann::json::array();
  for (const auto& sq : cx.squares) {
    nlohmann::json row = nlohmann::json::array();
    for (int e : sq) row.push_back(cx.edges[e].id);
    squares.push_back(row);
  }
  doc["squares"] = squares;
  return doc;
}

namespace {

[[noreturn]] void schema(const std::string& what) { throw Error(ErrorCode::SchemaViolation, what); }

int require_int(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_integer()) {
    schema(std::string("missing integer field '") + key + "'");
  }
  return doc[key].get<int>();
}

}  // namespace

OneVertexComplex import_json(const nlohmann::json& doc) {
  if (!doc.is_object()) schema("document is not an object");
  OneVertexComplex cx;
  cx.q = require_int(doc, "q");
  cx.tau = require_int(doc, "tau");
  cx.c = require_int(doc, "c");
  if (require_int(doc, "vertices") != 1) schema("only one-vertex complexes are supported");
  if (!doc.contains("edges") || !doc["edges"].is_array()) schema("missing array 'edges'");
  if (!doc.contains("squares") || !doc["squares"].is_array()) schema("missing array 'squares'");

  std::map<std::string, int> index;
  std::vector<std::string> inv_names;
  bool seen_h = false;
  for (const auto& e : doc["edges"]) {
    if (!e.is_object() || !e.contains("id") || !e["id"].is_string() || !e.contains("inv") ||
        !e["inv"].is_string() || !e.contains("class") || !e["class"].is_string()) {
      schema("edge entries need string fields id, inv, class");
    }
    const std::string cls = e["class"].get<std::string>();
    if (cls != "V" && cls != "H") schema("edge class must be V or H, got " + cls);
    if (cls == "H") seen_h = true;
    if (cls == "V" && seen_h) schema("V edges must precede H edges");
    const std::string id = e["id"].get<std::string>();
    if (!index.emplace(id, static_cast<int>(cx.edges.size())).second) schema("duplicate edge id " + id);
    cx.edges.push_back({id, -1, cls[0]});
    inv_names.push_back(e["inv"].get<std::string>());
  }
  for (std::size_t i = 0; i < cx.edges.size(); ++i) {
    auto it = index.find(inv_names[i]);
    if (it == index.end()) schema("edge " + cx.edges[i].id + " has unknown inverse " + inv_names[i]);
    cx.edges[i].inv = it->second;
  }
  for (std::size_t i = 0; i < cx.edges.size(); ++i) {
    const int j = cx.edges[i].inv;
    if (j == static_cast<int>(i)) {
      throw Error(ErrorCode::InvolutionBroken, "edge " + cx.edges[i].id + " is its own inverse");
    }
    if (cx.edges[j].inv != static_cast<int>(i)) {
      throw Error(ErrorCode::InvolutionBroken, "inverse of " + cx.edges[i].id + " does not invert back");
    }
    if (cx.edges[j].cls != cx.edges[i].cls) {
      throw Error(ErrorCode::InvolutionBroken, "edge " + cx.edges[i].id + " and its inverse differ in class");
    }
  }

  const std::vector<int> inv = cx.inverse_map();
  std::set<Square> squares;
  for (const auto& row : doc["squares"]) {
    if (!row.is_array() || row.size() != 4) schema("squares must be arrays of 4 edge ids");
    Square sq{};
    for (int k = 0; k < 4; ++k) {
      if (!row[k].is_string()) schema("square entries must be edge ids");
      auto it = index.find(row[k].get<std::string>());
      if (it == index.end()) schema("square references unknown edge " + row[k].get<std::string>());
      sq[k] = it->second;
    }
    for (int k = 0; k < 4; ++k) {
      if (cx.edges[sq[k]].cls == cx.edges[sq[(k + 1) % 4]].cls) {
        schema("square boundary must alternate V and H edges");
      }
    }
    squares.insert(canonical_square(sq, inv));
  }
  cx.squares.assign(squares.begin(), squares.end());
  return cx;
}

}  // namespace vhlf
