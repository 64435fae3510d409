#include "vhlf/structure.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "vhlf/errors.hpp"

namespace vhlf {

Perm Perm::identity(int degree) {
  Perm p;
  p.images.resize(degree);
  for (int i = 0; i < degree; ++i) p.images[i] = i;
  return p;
}

bool Perm::is_identity() const noexcept {
  for (int i = 0; i < degree(); ++i) {
    if (images[i] != i) return false;
  }
  return true;
}

Perm Perm::inverse() const {
  Perm p;
  p.images.resize(images.size());
  for (int i = 0; i < degree(); ++i) p.images[images[i]] = i;
  return p;
}

bool Perm::is_bijection() const {
  std::vector<char> hit(images.size(), 0);
  for (int x : images) {
    if (x < 0 || x >= degree() || hit[x]) return false;
    hit[x] = 1;
  }
  return true;
}

Perm then(const Perm& first, const Perm& second) {
  Perm p;
  p.images.resize(first.images.size());
  for (int i = 0; i < first.degree(); ++i) p.images[i] = second(first(i));
  return p;
}

// ---------------------------------------------------------------------------

PermGroup::PermGroup(int degree, std::vector<Perm> generators)
    : degree_(degree), generators_(std::move(generators)) {
  for (const Perm& g : generators_) {
    if (g.degree() != degree_ || !g.is_bijection()) {
      throw Error(ErrorCode::InvalidParameter, "generator is not a permutation of the given degree");
    }
  }
  for (const Perm& g : generators_) {
    if (!g.is_identity()) add_strong(g);
  }
  // Restart after every new strong generator until all Schreier generators
  // sift to the identity.
  while (true) {
    rebuild_levels();
    bool added = false;
    for (std::size_t i = levels_.size(); i-- > 0 && !added;) {
      const Level& lv = levels_[i];
      for (std::size_t oi = 0; oi < lv.orbit.size() && !added; ++oi) {
        const int x = lv.orbit[oi];
        for (const Perm& s : lv.strong) {
          const Perm schreier = then(then(*lv.transversal[x], s), lv.transversal[s(x)]->inverse());
          Perm residue = sift(schreier, i + 1).first;
          if (!residue.is_identity()) {
            add_strong(residue);
            added = true;
            break;
          }
        }
      }
    }
    if (!added) break;
  }
}

void PermGroup::add_strong(const Perm& g) {
  strong_.push_back(g);
  for (int b : base_) {
    if (g(b) != b) return;
  }
  for (int x = 0; x < degree_; ++x) {
    if (g(x) != x) {
      base_.push_back(x);
      return;
    }
  }
}

void PermGroup::rebuild_levels() {
  levels_.assign(base_.size(), Level{});
  for (std::size_t i = 0; i < base_.size(); ++i) {
    Level& lv = levels_[i];
    lv.point = base_[i];
    for (const Perm& g : strong_) {
      bool fixes = true;
      for (std::size_t j = 0; j < i && fixes; ++j) fixes = g(base_[j]) == base_[j];
      if (fixes) lv.strong.push_back(g);
    }
    lv.transversal.assign(degree_, std::nullopt);
    lv.transversal[lv.point] = Perm::identity(degree_);
    lv.orbit.push_back(lv.point);
    for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
      const int x = lv.orbit[k];
      for (const Perm& s : lv.strong) {
        const int y = s(x);
        if (!lv.transversal[y]) {
          lv.transversal[y] = then(*lv.transversal[x], s);
          lv.orbit.push_back(y);
        }
      }
    }
  }
}

std::pair<Perm, std::size_t> PermGroup::sift(Perm g, std::size_t from) const {
  for (std::size_t j = from; j < levels_.size(); ++j) {
    const Level& lv = levels_[j];
    const int x = g(lv.point);
    if (!lv.transversal[x]) return {std::move(g), j};
    g = then(g, lv.transversal[x]->inverse());
  }
  return {std::move(g), levels_.size()};
}

std::uint64_t PermGroup::order() const {
  std::uint64_t n = 1;
  for (const Level& lv : levels_) n *= lv.orbit.size();
  return n;
}

std::vector<int> PermGroup::base() const { return base_; }

bool PermGroup::contains(const Perm& g) const {
  if (g.degree() != degree_ || !g.is_bijection()) return false;
  return sift(g, 0).first.is_identity();
}

bool PermGroup::is_transitive() const {
  std::vector<char> seen(degree_, 0);
  std::vector<int> todo{0};
  seen[0] = 1;
  while (!todo.empty()) {
    const int x = todo.back();
    todo.pop_back();
    for (const Perm& g : generators_) {
      if (!seen[g(x)]) {
        seen[g(x)] = 1;
        todo.push_back(g(x));
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

bool PermGroup::is_two_transitive() const {
  if (!is_transitive()) return false;
  if (degree_ < 2) return true;
  // Orbit of the ordered pair (0, 1) must contain every ordered pair.
  std::set<std::pair<int, int>> seen{{0, 1}};
  std::deque<std::pair<int, int>> todo{{0, 1}};
  while (!todo.empty()) {
    const auto [x, y] = todo.front();
    todo.pop_front();
    for (const Perm& g : generators_) {
      const std::pair<int, int> next{g(x), g(y)};
      if (seen.insert(next).second) todo.push_back(next);
    }
  }
  return seen.size() == static_cast<std::size_t>(degree_) * (degree_ - 1);
}

std::uint64_t closure_order(int degree, const std::vector<Perm>& generators) {
  std::set<Perm> elems{Perm::identity(degree)};
  std::deque<Perm> todo{Perm::identity(degree)};
  while (!todo.empty()) {
    const Perm x = todo.front();
    todo.pop_front();
    for (const Perm& g : generators) {
      Perm y = then(x, g);
      if (elems.insert(y).second) todo.push_back(std::move(y));
    }
  }
  return elems.size();
}

// ---------------------------------------------------------------------------

const char* to_string(LocalType t) { return t == LocalType::PGL ? "PGL" : "PSL"; }

std::uint64_t pgl_order(int q) {
  const auto u = static_cast<std::uint64_t>(q);
  return (u + 1) * u * (u - 1);
}

LocalGroups local_groups(const VHData& data) {
  const int n = data.n();
  std::vector<Perm> gens_a;
  std::vector<Perm> gens_b;
  for (int j = 0; j < n; ++j) {
    Perm p;
    for (int i = 0; i < n; ++i) p.images.push_back(data.sigma_a[j * n + i]);
    gens_a.push_back(std::move(p));
  }
  for (int i = 0; i < n; ++i) {
    Perm p;
    for (int j = 0; j < n; ++j) p.images.push_back(data.sigma_b[i * n + j]);
    gens_b.push_back(std::move(p));
  }
  return {PermGroup(n, std::move(gens_a)), PermGroup(n, std::move(gens_b))};
}

LocalPrediction predict_local_groups(const Config& cfg) {
  const Field& f = cfg.f();
  const Fq one_minus_tau = f.sub(f.one(), cfg.tau);
  return {f.is_square(one_minus_tau) ? LocalType::PSL : LocalType::PGL,
          f.is_square(cfg.tau) ? LocalType::PSL : LocalType::PGL};
}

namespace {

Fq linear_lift_det(const QuadField& k, Fq2 omega) {
  const Field& f = k.base();
  // Columns: image of 1 is (1 - w0, -w1), image of Z is (c w1, 1 + w0).
  const Fq m00 = f.sub(f.one(), omega.w0);
  const Fq m10 = f.neg(omega.w1);
  const Fq m01 = f.mul(k.c(), omega.w1);
  const Fq m11 = f.add(f.one(), omega.w0);
  return f.sub(f.mul(m00, m11), f.mul(m01, m10));
}

}  // namespace

DeterminantReport local_determinants(const VHData& data) {
  const QuadField& k = data.cfg.k();
  const Field& f = data.cfg.f();
  DeterminantReport rep;
  bool a_square = true;
  bool b_square = true;
  for (const Fq2& eta : data.B) {
    const Fq d = linear_lift_det(k, k.div(eta, data.A.front()));
    rep.det_a.push_back(d);
    if (d == f.zero() || !f.is_square(d)) a_square = false;
  }
  for (const Fq2& xi : data.A) {
    const Fq d = linear_lift_det(k, k.div(xi, data.B.front()));
    rep.det_b.push_back(d);
    if (d == f.zero() || !f.is_square(d)) b_square = false;
  }
  rep.p_a = a_square ? LocalType::PSL : LocalType::PGL;
  rep.p_b = b_square ? LocalType::PSL : LocalType::PGL;
  return rep;
}

// ---------------------------------------------------------------------------

int verify_transport(const VHData& source, const VHData& target, const std::vector<int>& image) {
  const int n = source.n();
  if (target.n() != n || static_cast<int>(image.size()) != 2 * n) {
    throw Error(ErrorCode::TransportFailure, "generator counts differ");
  }
  std::vector<char> hit(2 * n, 0);
  for (int g : image) {
    if (g < 0 || g >= 2 * n || hit[g]) throw Error(ErrorCode::TransportFailure, "generator map is not a bijection");
    hit[g] = 1;
  }
  const bool swaps = image[0] >= n;
  for (int g = 0; g < 2 * n; ++g) {
    const bool src_b = g >= n;
    const bool dst_b = image[g] >= n;
    if ((src_b != dst_b) != swaps) throw Error(ErrorCode::TransportFailure, "generator map mixes classes");
  }
  auto inverse_of = [&](const VHData& d, int g) { return g < n ? d.inv_a[g] : n + d.inv_b[g - n]; };
  for (int g = 0; g < 2 * n; ++g) {
    if (image[inverse_of(source, g)] != inverse_of(target, image[g])) {
      throw Error(ErrorCode::TransportFailure, "generator map does not respect inverses at " + std::to_string(g));
    }
  }

  int checked = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto [l, m] = source.forward[i * n + j];
      // a_i b_j = b_l a_m maps to x y = u v.
      const int x = image[i];
      const int y = image[n + j];
      const int u = image[n + l];
      const int v = image[m];
      bool ok;
      if (!swaps) {
        ok = target.forward[x * n + (y - n)] == std::make_pair(u - n, v);
      } else {
        // b' a' = a' b', i.e. u v = x y read as a relation of the target.
        ok = target.forward[u * n + (v - n)] == std::make_pair(x - n, y);
      }
      if (!ok) {
        throw Error(ErrorCode::TransportFailure, "relation " + source.name_a(i) + " " + source.name_b(j) + " = " +
                                                     source.name_b(l) + " " + source.name_a(m) +
                                                     " does not map to a relation");
      }
      ++checked;
    }
  }
  return checked;
}

IsoCertificate iso_one_minus_tau(const Config& cfg) {
  const Field& f = cfg.f();
  const QuadField& k = cfg.k();
  const Config target_cfg = with_tau(cfg, f.sub(f.one(), cfg.tau));
  const VHData source = build_vh(cfg);
  const VHData target = build_vh(target_cfg);
  const int n = source.n();
  IsoCertificate cert;
  cert.source_tau = cfg.tau;
  cert.target_tau = target_cfg.tau;
  cert.swaps_classes = true;
  cert.image.resize(2 * n);
  for (int i = 0; i < n; ++i) {
    const auto img = target.find_b(k.mul(cfg.zeta, source.A[i]));
    if (!img) throw Error(ErrorCode::TransportFailure, "zeta * " + source.name_a(i) + " is not in B'");
    cert.image[i] = n + *img;
  }
  for (int j = 0; j < n; ++j) {
    const auto img = target.find_a(k.mul(cfg.zeta, source.B[j]));
    if (!img) throw Error(ErrorCode::TransportFailure, "zeta * " + source.name_b(j) + " is not in A'");
    cert.image[n + j] = *img;
  }
  cert.relations_checked = verify_transport(source, target, cert.image);
  return cert;
}

IsoCertificate iso_frobenius(const Config& cfg) {
  const Field& f = cfg.f();
  const QuadField& k = cfg.k();
  const auto p = static_cast<std::uint64_t>(f.p());
  const Config target_cfg = with_tau(cfg, f.pow(cfg.tau, p));
  const VHData source = build_vh(cfg);
  const VHData target = build_vh(target_cfg);
  const int n = source.n();
  const Fq2 scale = k.embed(f.inv(f.pow(cfg.c, (p - 1) / 2)));
  auto map = [&](Fq2 w) { return k.mul(k.pow(w, p), scale); };
  IsoCertificate cert;
  cert.source_tau = cfg.tau;
  cert.target_tau = target_cfg.tau;
  cert.image.resize(2 * n);
  for (int i = 0; i < n; ++i) {
    const auto img = target.find_a(map(source.A[i]));
    if (!img) throw Error(ErrorCode::TransportFailure, "image of " + source.name_a(i) + " is not in A'");
    cert.image[i] = *img;
  }
  for (int j = 0; j < n; ++j) {
    const auto img = target.find_b(map(source.B[j]));
    if (!img) throw Error(ErrorCode::TransportFailure, "image of " + source.name_b(j) + " is not in B'");
    cert.image[n + j] = n + *img;
  }
  cert.relations_checked = verify_transport(source, target, cert.image);
  return cert;
}

Commensurability commensurable(const Config& cfg, Fq target_tau) {
  const Field& f = cfg.f();
  if (target_tau == f.zero() || target_tau == f.one()) {
    throw Error(ErrorCode::InvalidParameter, "tau' must lie in F_q^* minus 1");
  }
  const auto p = static_cast<std::uint64_t>(f.p());
  Commensurability out;
  Fq t = cfg.tau;
  int k = 0;
  for (; k < 2 * f.r(); ++k) {
    if (t == target_tau) break;
    if (f.sub(f.one(), t) == target_tau) {
      out.flip = true;
      break;
    }
    t = f.pow(t, p);
  }
  if (k == 2 * f.r()) return out;
  out.related = true;
  out.frobenius_power = k;

  // Compose the elementary maps along the chain and re-verify the composite.
  const int n = cfg.q() + 1;
  std::vector<int> image(2 * n);
  for (int g = 0; g < 2 * n; ++g) image[g] = g;
  Config step = cfg;
  bool swaps = false;
  auto compose = [&](const IsoCertificate& c) {
    for (int& g : image) g = c.image[g];
    swaps = swaps != c.swaps_classes;
  };
  for (int i = 0; i < k; ++i) {
    const IsoCertificate c = iso_frobenius(step);
    compose(c);
    step = with_tau(step, c.target_tau);
  }
  if (out.flip) {
    const IsoCertificate c = iso_one_minus_tau(step);
    compose(c);
    step = with_tau(step, c.target_tau);
  }
  IsoCertificate cert;
  cert.source_tau = cfg.tau;
  cert.target_tau = step.tau;
  cert.swaps_classes = swaps;
  cert.image = image;
  cert.relations_checked = verify_transport(build_vh(cfg), build_vh(step), image);
  out.certificate = cert;
  return out;
}

}  // namespace vhlf
