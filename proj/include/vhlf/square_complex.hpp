#pragma once

// One-vertex square complexes with a VH-structure on the edges.

#include <array>
#include <string>
#include <vector>

#include <boost/rational.hpp>
#include "json.hpp"

#include "vhlf/vh_core.hpp"

namespace vhlf {

using Square = std::array<int, 4>;  // oriented edge indices, boundary order

struct Edge {
  std::string id;
  int inv = -1;
  char cls = 'V';  // 'V' for A-edges, 'H' for B-edges
};

struct OneVertexComplex {
  int q = 0;
  int tau = 0;
  int c = 0;
  std::vector<Edge> edges;      // canonical edge order: all V before all H
  std::vector<Square> squares;  // canonical representatives, sorted

  std::vector<int> inverse_map() const;
  int index_of(const std::string& id) const;  // -1 when absent
};

// Least of the 8 boundary readings (4 starting corners, 2 directions).
Square canonical_square(const Square& s, const std::vector<int>& inv);

// The four link corners of a square as (V edge, H edge) pairs: at the corner
// between consecutive boundary edges x, y the link edge joins x^-1 and y.
std::array<std::pair<int, int>, 4> square_corners(const Square& s, const std::vector<int>& inv,
                                                  const std::vector<char>& cls);

// One square (a, b, a2^-1, b2^-1) per relation a b = b2 a2, deduplicated.
// strict: every square must arise from exactly four relations, else
// DedupMismatch. Non-strict mode keeps whatever collapses.
OneVertexComplex build_sab(const AbstractVH& vh, bool strict = true);
OneVertexComplex build_sab(const VHData& data);

struct Link {
  std::vector<std::string> v_vertices;  // V edges
  std::vector<std::string> h_vertices;  // H edges
  std::vector<int> multiplicity;        // v * |H| + h

  int at(int v, int h) const { return multiplicity[v * h_vertices.size() + h]; }
  int max_multiplicity() const;
};

Link link_of(const OneVertexComplex& cx);
bool is_complete_bipartite(const Link& lk);

struct CellCounts {
  long long vertices = 0;
  long long edges = 0;  // unoriented
  long long squares = 0;
};

CellCounts counts(const OneVertexComplex& cx);
boost::rational<long long> euler_char(const OneVertexComplex& cx);

nlohmann::json export_json(const OneVertexComplex& cx);
// Throws SchemaViolation or InvolutionBroken.
OneVertexComplex import_json(const nlohmann::json& doc);

}  // namespace vhlf
