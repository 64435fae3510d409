#pragma once

// Counting one-vertex square complexes with VH-structure whose edges are
// labelled by A (2m symbols) and B (2n symbols): a complex is a set of squares
// whose 4mn link corners cover every pair (a, b) exactly once.

#include <cstdint>
#include <vector>

#include <boost/rational.hpp>

#include "vhlf/square_complex.hpp"

namespace vhlf {

struct MassProblem {
  std::vector<int> inv_a;  // involution on A = {0, ..., 2m-1}
  std::vector<int> inv_b;  // involution on B = {0, ..., 2n-1}

  // Pairs (2i, 2i+1) in each class.
  static MassProblem standard(int m, int n);
  int m() const noexcept { return static_cast<int>(inv_a.size()) / 2; }
  int n() const noexcept { return static_cast<int>(inv_b.size()) / 2; }
};

// Maximal m * n accepted; VHLF_BOUND overrides the default of 6.
int mass_bound();

// All canonical squares with four distinct corners, edges numbered A first
// (0..2m-1) then B (2m..2m+2n-1). Throws InvalidParameter on a broken
// involution.
std::vector<Square> admissible_squares(const MassProblem& p);

// Coefficient of the product of all x_ab in (1/4 tr((t_A X t_B X^T)^2))^(mn),
// divided by (mn)!, in the algebra where every x_ab squares to zero.
std::uint64_t mass_labeled_formula(int m, int n);

// Exact-cover backtracking on the least uncovered corner.
std::uint64_t mass_enumerate(const MassProblem& p);
std::uint64_t mass_enumerate(int m, int n);
// Reference implementation without threads.
std::uint64_t mass_enumerate_serial(const MassProblem& p);

// The labelled count divided by |Aut| = 2^m m! 2^n n!.
boost::rational<long long> mass_weighted(int m, int n);

}  // namespace vhlf
