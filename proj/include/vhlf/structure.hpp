#pragma once

// Local permutation groups of the VH-structure and the explicit isomorphisms
// between lattices for different tau.

#include <cstdint>
#include <optional>
#include <vector>

#include "vhlf/vh_core.hpp"

namespace vhlf {

struct Perm {
  std::vector<int> images;

  static Perm identity(int degree);
  int degree() const noexcept { return static_cast<int>(images.size()); }
  int operator()(int x) const { return images[x]; }
  bool is_identity() const noexcept;
  Perm inverse() const;
  bool is_bijection() const;
  auto operator<=>(const Perm&) const = default;
};

// x -> second(first(x)).
Perm then(const Perm& first, const Perm& second);

// Permutation group with a stabilizer chain built by the Schreier-Sims
// algorithm.
class PermGroup {
 public:
  PermGroup(int degree, std::vector<Perm> generators);

  int degree() const noexcept { return degree_; }
  const std::vector<Perm>& generators() const noexcept { return generators_; }
  std::uint64_t order() const;
  std::vector<int> base() const;
  bool contains(const Perm& g) const;
  bool is_transitive() const;
  // Point stabilizer of 0 is transitive on the remaining points.
  bool is_two_transitive() const;

 private:
  struct Level {
    int point = 0;
    std::vector<Perm> strong;  // subset of strong_
    std::vector<std::optional<Perm>> transversal;  // maps point -> x
    std::vector<int> orbit;
  };

  // Appends g, extending the base when g fixes every base point.
  void add_strong(const Perm& g);
  void rebuild_levels();
  // Returns the residue and the level at which sifting stopped.
  std::pair<Perm, std::size_t> sift(Perm g, std::size_t from) const;

  int degree_;
  std::vector<Perm> generators_;
  std::vector<int> base_;
  std::vector<Perm> strong_;
  std::vector<Level> levels_;  // level i uses the strong generators fixing base_[0..i)
};

// Order by enumerating all products; for cross-checking small groups.
std::uint64_t closure_order(int degree, const std::vector<Perm>& generators);

enum class LocalType { PGL, PSL };
const char* to_string(LocalType t);

// |PGL_2(F_q)| = (q+1) q (q-1).
std::uint64_t pgl_order(int q);

struct LocalGroups {
  PermGroup p_a;  // generated by sigma_eta on A, eta in B
  PermGroup p_b;  // generated by sigma_xi on B, xi in A
};

LocalGroups local_groups(const VHData& data);

// PGL iff 1 - tau (for P_A), resp. tau (for P_B), is a non-square.
struct LocalPrediction {
  LocalType p_a;
  LocalType p_b;
};
LocalPrediction predict_local_groups(const Config& cfg);

// Determinant of the linear map w -> w - omega conj(w) on F_q[Z] = F_q^2,
// omega = (parameter) / (base point of the acted-on conic), one per generator.
struct DeterminantReport {
  std::vector<Fq> det_a;  // for sigma_eta acting on A
  std::vector<Fq> det_b;  // for sigma_xi acting on B
  LocalType p_a;
  LocalType p_b;
};
DeterminantReport local_determinants(const VHData& data);

// Generator map between Gamma_tau and Gamma_tau'. Generators are numbered
// A[0..n) then B[0..n) in each lattice.
struct IsoCertificate {
  Fq source_tau;
  Fq target_tau;
  bool swaps_classes = false;
  std::vector<int> image;
  int relations_checked = 0;
};

// Every relation a b = b2 a2 of the source maps to a relation of the target.
// Throws TransportFailure with the offending quadruple.
int verify_transport(const VHData& source, const VHData& target, const std::vector<int>& image);

// Gamma_tau -> Gamma_{1-tau}: xi -> zeta xi on A (into B'), eta -> zeta eta on B (into A').
IsoCertificate iso_one_minus_tau(const Config& cfg);
// Gamma_tau -> Gamma_{tau^p}: w -> w^p / c^((p-1)/2) on both classes.
IsoCertificate iso_frobenius(const Config& cfg);

struct Commensurability {
  bool related = false;
  int frobenius_power = 0;  // k with tau' = tau^(p^k) or 1 - tau^(p^k)
  bool flip = false;
  std::optional<IsoCertificate> certificate;  // composed and re-verified
};

// Searches k in [0, 2r). The target tau must lie in F_q^* \ {1}.
Commensurability commensurable(const Config& cfg, Fq target_tau);

}  // namespace vhlf
