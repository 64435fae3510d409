#include "vhlf/invariants.hpp"

#include "vhlf/errors.hpp"

namespace vhlf {

SurfaceInvariants invariants_from_formula(long long n_vertices, int q) {
  if (n_vertices < 1 || q < 3 || q % 2 == 0) {
    throw Error(ErrorCode::InvalidParameter, "need N >= 1 and odd q >= 3");
  }
  const long long s = static_cast<long long>(q - 1) * (q - 1);
  SurfaceInvariants inv;
  inv.n_vertices = n_vertices;
  inv.chi = boost::rational<long long>(n_vertices * s, 4);
  inv.c1sq = 2 * n_vertices * s;
  const boost::rational<long long> c2 = inv.chi * 12 - inv.c1sq;
  if (c2.denominator() != 1) throw Error(ErrorCode::CountMismatch, "c2 is not an integer");
  inv.c2 = c2.numerator();
  inv.fake_quadric = inv.chi == boost::rational<long long>(1) && inv.c1sq == 8 && inv.c2 == 4;
  return inv;
}

SurfaceInvariants invariants_from_cells(const CellCounts& cells, int q) {
  SurfaceInvariants inv = invariants_from_formula(cells.vertices, q);
  const boost::rational<long long> from_cells(cells.vertices - cells.edges + cells.squares);
  if (from_cells != inv.chi) {
    throw Error(ErrorCode::CountMismatch, "V - E + S = " + std::to_string(from_cells.numerator()) + "/" +
                                              std::to_string(from_cells.denominator()) + " but N(q-1)^2/4 = " +
                                              std::to_string(inv.chi.numerator()) + "/" +
                                              std::to_string(inv.chi.denominator()));
  }
  return inv;
}

SurfaceInvariants surface_invariants(const OneVertexComplex& cx, int q) { return invariants_from_cells(counts(cx), q); }

}  // namespace vhlf
