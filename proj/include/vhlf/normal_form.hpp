#pragma once

// Word problem in Gamma: every element is uniquely (A-word)(B-word) with both
// parts freely reduced. Rewriting uses free cancellation and the swap
// b_lambda a_mu -> a_xi b_eta from the backward solver.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "vhlf/vh_core.hpp"

namespace vhlf {

struct Letter {
  bool is_b = false;
  int index = 0;  // position in the conic order
  auto operator<=>(const Letter&) const = default;
};

using GWord = std::vector<Letter>;

struct NormalForm {
  std::vector<int> a_part;
  std::vector<int> b_part;
  auto operator<=>(const NormalForm&) const = default;
};

struct NormalFormHash {
  std::size_t operator()(const NormalForm& nf) const noexcept;
};

enum class Strategy { leftmost, rightmost };

// Reduction by repeatedly applying the first (or last) applicable rule.
// Terminates: a swap removes one B-before-A inversion, a cancellation
// shortens the word.
NormalForm rewrite(const VHData& data, const GWord& w, Strategy strategy = Strategy::leftmost);

// Incremental: pushes each new A letter leftwards through the B-part.
NormalForm append(const VHData& data, NormalForm nf, Letter x);
NormalForm normal_form(const VHData& data, const GWord& w);
NormalForm multiply(const VHData& data, const NormalForm& x, const NormalForm& y);
NormalForm invert(const VHData& data, const NormalForm& x);
GWord to_word(const NormalForm& nf);
GWord inverse_word(const VHData& data, const GWord& w);
bool is_reduced(const VHData& data, const NormalForm& nf);

// Default radius: 6 for q = 3, 4 for q <= 7, 3 above. VHLF_BOUND overrides.
int sphere_bound(int q);

struct SphereTable {
  int radius = 0;
  // (k, l) -> number of distinct normal forms with |A-part| = k, |B-part| = l.
  std::map<std::pair<int, int>, std::uint64_t> counts;
  // Every element first reached at BFS depth r has k + l = r.
  bool lengths_match_depth = true;
};

// Breadth-first search over the Cayley graph on A u B up to word length
// `radius`. Throws BoundExceeded above sphere_bound(q).
SphereTable sphere_table(const VHData& data, int radius);
SphereTable sphere_table_serial(const VHData& data, int radius);
std::uint64_t sphere_count(const VHData& data, int k, int l);

// Vertices at distance (k, l) in a product of two (q+1)-regular trees.
std::uint64_t expected_sphere(int q, int k, int l);

}  // namespace vhlf
