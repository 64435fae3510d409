#include "vhlf/normal_form.hpp"

#include <cstdlib>
#include <unordered_set>

#include <omp.h>

#include "vhlf/errors.hpp"

namespace vhlf {

std::size_t NormalFormHash::operator()(const NormalForm& nf) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (int x : nf.a_part) mix(static_cast<std::size_t>(x));
  mix(0xffff);
  for (int x : nf.b_part) mix(static_cast<std::size_t>(x));
  return h;
}

namespace {

Letter inverse_letter(const VHData& data, Letter x) {
  return {x.is_b, x.is_b ? data.inv_b[x.index] : data.inv_a[x.index]};
}

// Applies one rule at position i (between w[i] and w[i+1]) if possible.
bool apply_at(const VHData& data, GWord& w, std::size_t i) {
  const Letter x = w[i];
  const Letter y = w[i + 1];
  if (x.is_b == y.is_b) {
    if (y == inverse_letter(data, x)) {
      w.erase(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(i) + 2);
      return true;
    }
    return false;
  }
  if (x.is_b && !y.is_b) {
    const int n = data.n();
    const auto [xi, eta] = data.backward[x.index * n + y.index];
    w[i] = {false, xi};
    w[i + 1] = {true, eta};
    return true;
  }
  return false;
}

}  // namespace

NormalForm rewrite(const VHData& data, const GWord& input, Strategy strategy) {
  GWord w = input;
  while (true) {
    bool changed = false;
    if (w.size() >= 2) {
      if (strategy == Strategy::leftmost) {
        for (std::size_t i = 0; i + 1 < w.size() && !changed; ++i) changed = apply_at(data, w, i);
      } else {
        for (std::size_t i = w.size() - 1; i-- > 0 && !changed;) changed = apply_at(data, w, i);
      }
    }
    if (!changed) break;
  }
  NormalForm nf;
  for (const Letter& x : w) (x.is_b ? nf.b_part : nf.a_part).push_back(x.index);
  return nf;
}

NormalForm append(const VHData& data, NormalForm nf, Letter x) {
  if (x.is_b) {
    if (!nf.b_part.empty() && nf.b_part.back() == data.inv_b[x.index]) {
      nf.b_part.pop_back();
    } else {
      nf.b_part.push_back(x.index);
    }
    return nf;
  }
  const int n = data.n();
  int mu = x.index;
  for (std::size_t j = nf.b_part.size(); j-- > 0;) {
    const auto [xi, eta] = data.backward[nf.b_part[j] * n + mu];
    nf.b_part[j] = eta;
    mu = xi;
  }
  if (!nf.a_part.empty() && nf.a_part.back() == data.inv_a[mu]) {
    nf.a_part.pop_back();
  } else {
    nf.a_part.push_back(mu);
  }
  return nf;
}

NormalForm normal_form(const VHData& data, const GWord& w) {
  NormalForm nf;
  for (const Letter& x : w) nf = append(data, std::move(nf), x);
  return nf;
}

GWord to_word(const NormalForm& nf) {
  GWord w;
  for (int i : nf.a_part) w.push_back({false, i});
  for (int j : nf.b_part) w.push_back({true, j});
  return w;
}

GWord inverse_word(const VHData& data, const GWord& w) {
  GWord out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inverse_letter(data, *it));
  return out;
}

NormalForm multiply(const VHData& data, const NormalForm& x, const NormalForm& y) {
  NormalForm out = x;
  for (const Letter& l : to_word(y)) out = append(data, std::move(out), l);
  return out;
}

NormalForm invert(const VHData& data, const NormalForm& x) { return normal_form(data, inverse_word(data, to_word(x))); }

bool is_reduced(const VHData& data, const NormalForm& nf) {
  for (std::size_t i = 1; i < nf.a_part.size(); ++i) {
    if (nf.a_part[i] == data.inv_a[nf.a_part[i - 1]]) return false;
  }
  for (std::size_t i = 1; i < nf.b_part.size(); ++i) {
    if (nf.b_part[i] == data.inv_b[nf.b_part[i - 1]]) return false;
  }
  return true;
}

int sphere_bound(int q) {
  if (const char* env = std::getenv("VHLF_BOUND")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  if (q == 3) return 6;
  if (q <= 7) return 4;
  return 3;
}

namespace {

std::vector<Letter> generators(const VHData& data) {
  std::vector<Letter> gens;
  for (int i = 0; i < data.n(); ++i) gens.push_back({false, i});
  for (int j = 0; j < data.n(); ++j) gens.push_back({true, j});
  return gens;
}

void check_radius(const VHData& data, int radius) {
  if (radius < 0) throw Error(ErrorCode::InvalidParameter, "negative radius");
  if (radius > sphere_bound(data.cfg.q())) {
    throw Error(ErrorCode::BoundExceeded, "radius " + std::to_string(radius) + " exceeds bound " +
                                              std::to_string(sphere_bound(data.cfg.q())));
  }
}

void record(SphereTable& table, const std::vector<NormalForm>& layer, int depth) {
  for (const auto& nf : layer) {
    const int k = static_cast<int>(nf.a_part.size());
    const int l = static_cast<int>(nf.b_part.size());
    ++table.counts[{k, l}];
    if (k + l != depth) table.lengths_match_depth = false;
  }
}

}  // namespace

SphereTable sphere_table_serial(const VHData& data, int radius) {
  check_radius(data, radius);
  const auto gens = generators(data);
  SphereTable table;
  table.radius = radius;
  std::unordered_set<NormalForm, NormalFormHash> seen{NormalForm{}};
  std::vector<NormalForm> frontier{NormalForm{}};
  record(table, frontier, 0);
  for (int depth = 1; depth <= radius; ++depth) {
    std::vector<NormalForm> next;
    for (const auto& nf : frontier) {
      for (const Letter& g : gens) {
        NormalForm y = append(data, nf, g);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    record(table, next, depth);
    frontier = std::move(next);
  }
  return table;
}

SphereTable sphere_table(const VHData& data, int radius) {
  check_radius(data, radius);
  const auto gens = generators(data);
  SphereTable table;
  table.radius = radius;
  std::unordered_set<NormalForm, NormalFormHash> seen{NormalForm{}};
  std::vector<NormalForm> frontier{NormalForm{}};
  record(table, frontier, 0);
  for (int depth = 1; depth <= radius; ++depth) {
    // Expand the frontier in parallel; merge in frontier order so the
    // resulting layer is independent of the thread count.
    std::vector<std::vector<NormalForm>> expanded(frontier.size());
    const long long count = static_cast<long long>(frontier.size());
#pragma omp parallel for schedule(static)
    for (long long f = 0; f < count; ++f) {
      auto& out = expanded[f];
      out.reserve(gens.size());
      for (const Letter& g : gens) out.push_back(append(data, frontier[f], g));
    }
    std::vector<NormalForm> next;
    for (auto& batch : expanded) {
      for (auto& y : batch) {
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    record(table, next, depth);
    frontier = std::move(next);
  }
  return table;
}

std::uint64_t sphere_count(const VHData& data, int k, int l) {
  const SphereTable t = sphere_table(data, k + l);
  auto it = t.counts.find({k, l});
  return it == t.counts.end() ? 0 : it->second;
}

std::uint64_t expected_sphere(int q, int k, int l) {
  auto tree = [q](int r) -> std::uint64_t {
    if (r == 0) return 1;
    std::uint64_t v = static_cast<std::uint64_t>(q + 1);
    for (int i = 1; i < r; ++i) v *= static_cast<std::uint64_t>(q);
    return v;
  };
  return tree(k) * tree(l);
}

}  // namespace vhlf
