#include "vhlf/vh_core.hpp"

#include <algorithm>
#include <set>

#include "vhlf/errors.hpp"
#include "vhlf/quaternion.hpp"

namespace vhlf {

Fq2 sigma(const QuadField& k, Fq2 xi, Fq2 w) {
  if (w == xi) throw Error(ErrorCode::CoincidentInput, "sigma_xi(xi) is undefined");
  return k.mul(k.conj(w), k.pe(k.sub(w, xi)));
}

std::pair<Fq2, Fq2> solve_forward(const QuadField& k, Fq2 xi, Fq2 eta) {
  const Fq2 p = k.pe(k.add(xi, eta));
  return {k.mul(k.conj(eta), p), k.mul(k.conj(xi), p)};
}

std::pair<Fq2, Fq2> solve_backward(const QuadField& k, Fq2 lambda, Fq2 mu) {
  const Fq2 p = k.pe(k.add(lambda, mu));
  return {k.mul(k.conj(mu), p), k.mul(k.conj(lambda), p)};
}

std::optional<int> VHData::find_a(Fq2 xi) const {
  const int e = cfg.k().encode(xi);
  if (lookup_a_[e] < 0) return std::nullopt;
  return lookup_a_[e];
}

std::optional<int> VHData::find_b(Fq2 eta) const {
  const int e = cfg.k().encode(eta);
  if (lookup_b_[e] < 0) return std::nullopt;
  return lookup_b_[e];
}

int VHData::index_a(Fq2 xi) const {
  if (auto i = find_a(xi)) return *i;
  throw Error(ErrorCode::InvalidParameter, cfg.k().pretty(xi) + " is not on the A conic");
}

int VHData::index_b(Fq2 eta) const {
  if (auto i = find_b(eta)) return *i;
  throw Error(ErrorCode::InvalidParameter, cfg.k().pretty(eta) + " is not on the B conic");
}

std::string VHData::name_a(int i) const { return "a:" + cfg.k().to_string(A[i]); }
std::string VHData::name_b(int j) const { return "b:" + cfg.k().to_string(B[j]); }

VHData build_vh(const Config& cfg) {
  const QuadField& k = cfg.k();
  VHData d;
  d.cfg = cfg;
  d.A = conic_points(k, cfg.norm_a());
  d.B = conic_points(k, cfg.norm_b());
  d.lookup_a_.assign(k.order(), -1);
  d.lookup_b_.assign(k.order(), -1);
  const int n = d.n();
  for (int i = 0; i < n; ++i) d.lookup_a_[k.encode(d.A[i])] = i;
  for (int j = 0; j < static_cast<int>(d.B.size()); ++j) d.lookup_b_[k.encode(d.B[j])] = j;

  d.inv_a.resize(n);
  d.inv_b.resize(n);
  for (int i = 0; i < n; ++i) {
    d.inv_a[i] = d.index_a(k.neg(d.A[i]));
    d.inv_b[i] = d.index_b(k.neg(d.B[i]));
  }

  d.sigma_b.resize(static_cast<std::size_t>(n) * n);
  d.sigma_a.resize(static_cast<std::size_t>(n) * n);
  d.forward.resize(static_cast<std::size_t>(n) * n);
  d.backward.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      d.sigma_b[i * n + j] = d.index_b(sigma(k, d.A[i], d.B[j]));
      d.sigma_a[j * n + i] = d.index_a(sigma(k, d.B[j], d.A[i]));
      const auto [lambda, mu] = solve_forward(k, d.A[i], d.B[j]);
      d.forward[i * n + j] = {d.index_b(lambda), d.index_a(mu)};
      const auto [xi, eta] = solve_backward(k, d.B[j], d.A[i]);
      d.backward[j * n + i] = {d.index_a(xi), d.index_b(eta)};
    }
  }
  return d;
}

AbstractVH to_abstract(const VHData& data) {
  AbstractVH vh;
  const int n = data.n();
  for (int i = 0; i < n; ++i) {
    vh.names_a.push_back(data.name_a(i));
    vh.names_b.push_back(data.name_b(i));
  }
  vh.inv_a = data.inv_a;
  vh.inv_b = data.inv_b;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto [l, m] = data.forward[i * n + j];
      vh.relations.push_back({i, j, l, m});
    }
  }
  return vh;
}

AbstractVH degenerate_fixture() {
  // index 0 = a (resp. b), 1 = its inverse
  AbstractVH vh;
  vh.names_a = {"a+", "a-"};
  vh.names_b = {"b+", "b-"};
  vh.inv_a = {1, 0};
  vh.inv_b = {1, 0};
  vh.relations = {
      {0, 0, 1, 1},  // ab = b^-1 a^-1
      {1, 1, 0, 0},  // a^-1 b^-1 = b a
      {1, 0, 1, 0},  // a^-1 b = b^-1 a
      {0, 1, 0, 1},  // a b^-1 = b a^-1
  };
  return vh;
}

bool VHReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomResult& r) { return r.ok; });
}

const AxiomResult* VHReport::first_failure() const {
  for (const auto& r : checks) {
    if (!r.ok) return &r;
  }
  return nullptr;
}

const AxiomResult* VHReport::find(const std::string& name) const {
  for (const auto& r : checks) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

namespace {

AxiomResult check_involution(const std::string& name, const std::vector<int>& inv,
                             const std::vector<std::string>& names) {
  AxiomResult r{name, true, ""};
  const int n = static_cast<int>(inv.size());
  for (int i = 0; i < n; ++i) {
    if (inv[i] < 0 || inv[i] >= n || inv[i] == i || inv[inv[i]] != i) {
      r.ok = false;
      r.witness = names[i];
      return r;
    }
  }
  return r;
}

}  // namespace

VHReport check_vh_axioms(const AbstractVH& vh) {
  VHReport rep;
  rep.checks.push_back(check_involution("i_inverse_involution_A", vh.inv_a, vh.names_a));
  rep.checks.push_back(check_involution("i_inverse_involution_B", vh.inv_b, vh.names_b));
  // Generation is definitional: the group is the one generated by A and B.
  rep.checks.push_back({"ii_generation", true, ""});

  const int na = static_cast<int>(vh.names_a.size());
  const int nb = static_cast<int>(vh.names_b.size());
  AxiomResult bij{"iii_product_bijection", true, ""};
  std::vector<int> seen_ab(static_cast<std::size_t>(na) * nb, 0);
  std::vector<int> seen_ba(static_cast<std::size_t>(na) * nb, 0);
  for (const auto& rel : vh.relations) {
    ++seen_ab[rel[0] * nb + rel[1]];
    ++seen_ba[rel[3] * nb + rel[2]];
  }
  for (int a = 0; a < na && bij.ok; ++a) {
    for (int b = 0; b < nb; ++b) {
      if (seen_ab[a * nb + b] != 1) {
        bij.ok = false;
        bij.witness = "AB product " + vh.names_a[a] + vh.names_b[b] + " occurs " +
                      std::to_string(seen_ab[a * nb + b]) + " times";
        break;
      }
      if (seen_ba[a * nb + b] != 1) {
        bij.ok = false;
        bij.witness = "BA product " + vh.names_b[b] + vh.names_a[a] + " occurs " +
                      std::to_string(seen_ba[a * nb + b]) + " times";
        break;
      }
    }
  }
  rep.checks.push_back(bij);

  // ab is 2-torsion exactly when its relation reads ab = b^-1 a^-1; likewise
  // ba is 2-torsion when a^-1 b^-1 = b a.
  AxiomResult tor{"iv_no_2_torsion", true, ""};
  for (const auto& rel : vh.relations) {
    if (rel[2] == vh.inv_b[rel[1]] && rel[3] == vh.inv_a[rel[0]]) {
      tor.ok = false;
      tor.witness = "(" + vh.names_a[rel[0]] + " " + vh.names_b[rel[1]] + ")^2 = 1";
      break;
    }
  }
  rep.checks.push_back(tor);
  return rep;
}

VHReport check_vh_axioms(const VHData& data) {
  const Config& cfg = data.cfg;
  const QuadField& k = cfg.k();
  VHReport rep = check_vh_axioms(to_abstract(data));
  const int n = data.n();

  AxiomResult sizes{"sets_disjoint_of_size_q_plus_1", true, ""};
  if (n != cfg.q() + 1 || static_cast<int>(data.B.size()) != cfg.q() + 1) {
    sizes.ok = false;
    sizes.witness = "|A| = " + std::to_string(n) + ", |B| = " + std::to_string(data.B.size());
  }
  for (const auto& eta : data.B) {
    if (data.find_a(eta)) {
      sizes.ok = false;
      sizes.witness = k.pretty(eta) + " lies in both A and B";
    }
  }
  rep.checks.push_back(sizes);

  AxiomResult round{"iii_solvers_mutually_inverse", true, ""};
  for (int i = 0; i < n && round.ok; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto [l, m] = data.forward[i * n + j];
      if (data.backward[l * n + m] != std::make_pair(i, j)) {
        round.ok = false;
        round.witness = data.name_a(i) + " " + data.name_b(j);
        break;
      }
    }
  }
  rep.checks.push_back(round);

  std::vector<QuatElem> alpha;
  std::vector<QuatElem> beta;
  for (int i = 0; i < n; ++i) {
    alpha.push_back(make_alpha(cfg, data.A[i]));
    beta.push_back(make_beta(cfg, data.B[i]));
  }

  AxiomResult distinct{"projectively_distinct_generators", true, ""};
  std::vector<const QuatElem*> all;
  for (auto& a : alpha) all.push_back(&a);
  for (auto& b : beta) all.push_back(&b);
  for (std::size_t u = 0; u < all.size() && distinct.ok; ++u) {
    for (std::size_t v = u + 1; v < all.size(); ++v) {
      if (proj_equal(*all[u], *all[v])) {
        distinct.ok = false;
        distinct.witness = "generators " + std::to_string(u) + " and " + std::to_string(v);
        break;
      }
    }
  }
  rep.checks.push_back(distinct);

  AxiomResult exact{"relations_exact_in_D", true, ""};
  AxiomResult torsion{"iv_no_2_torsion_quaternion", true, ""};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto [l, m] = data.forward[i * n + j];
      const QuatElem ab = qmul(cfg, alpha[i], beta[j]);
      if (exact.ok && !(ab == qmul(cfg, beta[l], alpha[m]))) {
        exact.ok = false;
        exact.witness = data.name_a(i) + " " + data.name_b(j);
      }
      if (torsion.ok) {
        const QuatElem ba = qmul(cfg, beta[j], alpha[i]);
        if (is_central(qmul(cfg, ab, ab)) || is_central(qmul(cfg, ba, ba))) {
          torsion.ok = false;
          torsion.witness = data.name_a(i) + " " + data.name_b(j);
        }
      }
    }
  }
  rep.checks.push_back(exact);
  rep.checks.push_back(torsion);
  return rep;
}

Fq2 conj_action_d(const Config& cfg, Fq2 xi) { return cfg.k().mul(xi, cfg.k().pe(cfg.delta)); }

Fq2 conj_action_s(const Config& cfg, Fq2 xi) { return cfg.k().neg(cfg.k().conj(xi)); }

int centralizer_reflection(const Config& cfg, Fq2 xi) {
  const QuadField& k = cfg.k();
  const Fq2 minus_one = k.neg(k.one());
  Fq2 w = xi;
  for (int r = 0; r <= cfg.q(); ++r) {
    if (k.pe(w) == minus_one) return r;
    w = k.mul(w, cfg.delta);
  }
  throw Error(ErrorCode::InternalNonunit, "no reflection centralizes " + k.pretty(xi));
}

}  // namespace vhlf
