#pragma once

// The generating sets A (norm -c conic) and B (norm c tau / (1 - tau) conic),
// the local permutations sigma, the relation solvers and the VH-axiom checker.

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vhlf/config.hpp"

namespace vhlf {

// sigma_xi(w) = conj(w) * pe(w - xi). Throws CoincidentInput on w == xi.
Fq2 sigma(const QuadField& k, Fq2 xi, Fq2 w);

// a_xi b_eta = b_lambda a_mu, solved for (lambda, mu).
std::pair<Fq2, Fq2> solve_forward(const QuadField& k, Fq2 xi, Fq2 eta);
// The inverse: (lambda, mu) -> (xi, eta).
std::pair<Fq2, Fq2> solve_backward(const QuadField& k, Fq2 lambda, Fq2 mu);

struct VHData {
  Config cfg;
  std::vector<Fq2> A;  // canonical order
  std::vector<Fq2> B;
  std::vector<int> inv_a;  // index of -xi
  std::vector<int> inv_b;
  // sigma_b[i * n + j] = index of sigma_{A[i]}(B[j]) in B.
  std::vector<int> sigma_b;
  // sigma_a[j * n + i] = index of sigma_{B[j]}(A[i]) in A.
  std::vector<int> sigma_a;
  // forward[i * n + j] = (lambda, mu) indices for (xi, eta) = (A[i], B[j]).
  std::vector<std::pair<int, int>> forward;
  // backward[l * n + m] = (xi, eta) indices for (lambda, mu) = (B[l], A[m]).
  std::vector<std::pair<int, int>> backward;

  int n() const noexcept { return static_cast<int>(A.size()); }
  int index_a(Fq2 xi) const;  // throws InvalidParameter when absent
  int index_b(Fq2 eta) const;
  std::optional<int> find_a(Fq2 xi) const;
  std::optional<int> find_b(Fq2 eta) const;
  std::string name_a(int i) const;  // "a:(e0,e1)"
  std::string name_b(int j) const;  // "b:(e0,e1)"

 private:
  friend VHData build_vh(const Config& cfg);
  std::vector<int> lookup_a_;  // by encoding, -1 if absent
  std::vector<int> lookup_b_;
};

VHData build_vh(const Config& cfg);

// Generator-level description of a candidate VH-structure: oriented edges of
// each class with their inverses and a list of relations a * b = b2 * a2
// (indices into the A and B lists). Also used for the degenerate fixture.
struct AbstractVH {
  std::vector<std::string> names_a;
  std::vector<std::string> names_b;
  std::vector<int> inv_a;
  std::vector<int> inv_b;
  std::vector<std::array<int, 4>> relations;  // (a, b, b2, a2)
};

AbstractVH to_abstract(const VHData& data);
// <a, b | (ab)^2 = (a^-1 b)^2 = 1> with A = {a, a^-1}, B = {b, b^-1}.
AbstractVH degenerate_fixture();

struct AxiomResult {
  std::string name;
  bool ok = false;
  std::string witness;  // empty when ok
};

struct VHReport {
  std::vector<AxiomResult> checks;
  bool ok() const;
  const AxiomResult* first_failure() const;
  const AxiomResult* find(const std::string& name) const;
};

// Axioms (i)-(iv) on the relation table alone.
VHReport check_vh_axioms(const AbstractVH& vh);
// The combinatorial axioms plus the quaternion certificates: every solved
// relation holds in D, A and B are projectively distinct, and no product
// a_xi b_eta squares into the centre.
VHReport check_vh_axioms(const VHData& data);

// Conjugation by d (resp. s) on A and B.
Fq2 conj_action_d(const Config& cfg, Fq2 xi);  // xi * pe(delta)
Fq2 conj_action_s(const Config& cfg, Fq2 xi);  // -conj(xi)
// The r in Z/(q+1) with pe(xi delta^r) = -1.
int centralizer_reflection(const Config& cfg, Fq2 xi);

}  // namespace vhlf
