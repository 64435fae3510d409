#pragma once

// Numerical invariants of the surface attached to N one-vertex complexes.

#include <boost/rational.hpp>

#include "vhlf/square_complex.hpp"

namespace vhlf {

struct SurfaceInvariants {
  long long n_vertices = 0;
  boost::rational<long long> chi;
  long long c1sq = 0;
  long long c2 = 0;
  bool fake_quadric = false;

  bool noether_holds() const { return chi * 12 == boost::rational<long long>(c1sq + c2); }
};

// chi = N (q-1)^2 / 4, c1^2 = 2 N (q-1)^2, c2 = 12 chi - c1^2.
SurfaceInvariants invariants_from_formula(long long n_vertices, int q);

// Cross-checks chi against V - E + S of the given cells; CountMismatch on
// disagreement.
SurfaceInvariants invariants_from_cells(const CellCounts& cells, int q);
SurfaceInvariants surface_invariants(const OneVertexComplex& cx, int q);

}  // namespace vhlf
