#include "vhlf/mass_formula.hpp"

#include <bit>
#include <cstdlib>
#include <unordered_map>

#include <omp.h>

#include "vhlf/errors.hpp"

namespace vhlf {

MassProblem MassProblem::standard(int m, int n) {
  if (m < 1 || n < 1) throw Error(ErrorCode::InvalidParameter, "m and n must be positive");
  MassProblem p;
  for (int i = 0; i < 2 * m; ++i) p.inv_a.push_back(i ^ 1);
  for (int j = 0; j < 2 * n; ++j) p.inv_b.push_back(j ^ 1);
  return p;
}

int mass_bound() {
  if (const char* env = std::getenv("VHLF_BOUND")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 6;
}

namespace {

void check_problem(const MassProblem& p) {
  auto check = [](const std::vector<int>& inv, const char* name) {
    const int n = static_cast<int>(inv.size());
    if (n == 0 || n % 2 != 0) {
      throw Error(ErrorCode::InvalidParameter, std::string(name) + " must have positive even size");
    }
    for (int i = 0; i < n; ++i) {
      if (inv[i] < 0 || inv[i] >= n || inv[i] == i || inv[inv[i]] != i) {
        throw Error(ErrorCode::InvalidParameter,
                    std::string(name) + " involution is not fixed point free at " + std::to_string(i));
      }
    }
  };
  check(p.inv_a, "A");
  check(p.inv_b, "B");
  if (p.m() * p.n() > mass_bound()) {
    throw Error(ErrorCode::BoundExceeded, "m*n = " + std::to_string(p.m() * p.n()) + " exceeds bound " +
                                              std::to_string(mass_bound()));
  }
}

struct Layout {
  int na;
  int nb;
  std::vector<int> inv;  // over all edges
  std::vector<char> cls;

  explicit Layout(const MassProblem& p)
      : na(static_cast<int>(p.inv_a.size())), nb(static_cast<int>(p.inv_b.size())) {
    for (int a = 0; a < na; ++a) {
      inv.push_back(p.inv_a[a]);
      cls.push_back('V');
    }
    for (int b = 0; b < nb; ++b) {
      inv.push_back(na + p.inv_b[b]);
      cls.push_back('H');
    }
  }
  int corner(int a, int b_edge) const { return a * nb + (b_edge - na); }
  std::uint64_t mask(const Square& s) const {
    std::uint64_t m = 0;
    for (const auto& [a, b] : square_corners(s, inv, cls)) m |= std::uint64_t{1} << corner(a, b);
    return m;
  }
};

// Candidate squares grouped by every corner they cover.
struct CoverIndex {
  int corners = 0;
  std::vector<std::uint64_t> masks;
  std::vector<std::vector<std::uint64_t>> by_corner;
};

CoverIndex cover_index(const MassProblem& p) {
  const Layout lay(p);
  CoverIndex idx;
  idx.corners = lay.na * lay.nb;
  idx.by_corner.resize(idx.corners);
  for (const Square& s : admissible_squares(p)) {
    const std::uint64_t m = lay.mask(s);
    idx.masks.push_back(m);
    for (int c = 0; c < idx.corners; ++c) {
      if (m >> c & 1U) idx.by_corner[c].push_back(m);
    }
  }
  return idx;
}

std::uint64_t count_covers(const CoverIndex& idx, std::uint64_t covered, std::uint64_t full) {
  if (covered == full) return 1;
  const int c = std::countr_one(covered);
  std::uint64_t total = 0;
  for (std::uint64_t m : idx.by_corner[c]) {
    if ((m & covered) == 0) total += count_covers(idx, covered | m, full);
  }
  return total;
}

std::uint64_t full_mask(int corners) {
  return corners == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << corners) - 1;
}

}  // namespace

std::vector<Square> admissible_squares(const MassProblem& p) {
  check_problem(p);
  const Layout lay(p);
  std::vector<Square> out;
  for (int e1 = 0; e1 < lay.na; ++e1) {
    for (int e2 = lay.na; e2 < lay.na + lay.nb; ++e2) {
      for (int e3 = 0; e3 < lay.na; ++e3) {
        for (int e4 = lay.na; e4 < lay.na + lay.nb; ++e4) {
          const Square s{e1, e2, e3, e4};
          if (canonical_square(s, lay.inv) != s) continue;
          if (std::popcount(lay.mask(s)) != 4) continue;
          out.push_back(s);
        }
      }
    }
  }
  return out;
}

std::uint64_t mass_labeled_formula(int m, int n) {
  const MassProblem p = MassProblem::standard(m, n);
  check_problem(p);
  const Layout lay(p);
  const int corners = lay.na * lay.nb;

  // (1/4) tr((t_A X t_B X^T)^2) = (1/4) sum over (a, a2, b, b2) of
  //   x[a^-1, b] x[a2, b^-1] x[a2^-1, b2] x[a, b2^-1].
  std::unordered_map<std::uint64_t, std::uint64_t> poly;
  for (int a = 0; a < lay.na; ++a) {
    for (int a2 = 0; a2 < lay.na; ++a2) {
      for (int b = 0; b < lay.nb; ++b) {
        for (int b2 = 0; b2 < lay.nb; ++b2) {
          const int vars[4] = {p.inv_a[a] * lay.nb + b, a2 * lay.nb + p.inv_b[b], p.inv_a[a2] * lay.nb + b2,
                               a * lay.nb + p.inv_b[b2]};
          std::uint64_t mono = 0;
          bool square_free = true;
          for (int v : vars) {
            const std::uint64_t bit = std::uint64_t{1} << v;
            if (mono & bit) square_free = false;
            mono |= bit;
          }
          if (square_free) ++poly[mono];
        }
      }
    }
  }
  std::vector<std::pair<std::uint64_t, std::uint64_t>> terms;
  std::vector<std::vector<std::uint64_t>> by_corner(corners);
  for (const auto& [mono, coeff] : poly) {
    if (coeff % 4 != 0) {
      throw Error(ErrorCode::CountMismatch, "trace monomial with coefficient " + std::to_string(coeff));
    }
    terms.emplace_back(mono, coeff / 4);
    for (int c = 0; c < corners; ++c) {
      if (mono >> c & 1U) by_corner[c].push_back(mono);
    }
  }

  const std::uint64_t full = full_mask(corners);
  auto completable = [&](std::uint64_t state) {
    for (int c = 0; c < corners; ++c) {
      if (state >> c & 1U) continue;
      bool any = false;
      for (std::uint64_t mono : by_corner[c]) {
        if ((mono & state) == 0) {
          any = true;
          break;
        }
      }
      if (!any) return false;
    }
    return true;
  };

  std::unordered_map<std::uint64_t, std::uint64_t> states{{0, 1}};
  const int factors = m * n;
  for (int step = 0; step < factors; ++step) {
    std::unordered_map<std::uint64_t, std::uint64_t> next;
    for (const auto& [state, count] : states) {
      for (const auto& [mono, coeff] : terms) {
        if (mono & state) continue;
        next[state | mono] += count * coeff;
      }
    }
    states.clear();
    for (const auto& [state, count] : next) {
      if (completable(state)) states.emplace(state, count);
    }
  }
  const std::uint64_t ordered = states.count(full) ? states[full] : 0;
  std::uint64_t fact = 1;
  for (int i = 2; i <= factors; ++i) fact *= static_cast<std::uint64_t>(i);
  if (ordered % fact != 0) {
    throw Error(ErrorCode::CountMismatch, "coefficient " + std::to_string(ordered) + " not divisible by (mn)!");
  }
  return ordered / fact;
}

std::uint64_t mass_enumerate_serial(const MassProblem& p) {
  check_problem(p);
  const CoverIndex idx = cover_index(p);
  return count_covers(idx, 0, full_mask(idx.corners));
}

std::uint64_t mass_enumerate(const MassProblem& p) {
  check_problem(p);
  const CoverIndex idx = cover_index(p);
  const std::uint64_t full = full_mask(idx.corners);
  const auto& first = idx.by_corner[0];
  const long long branches = static_cast<long long>(first.size());
  std::uint64_t total = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
  for (long long i = 0; i < branches; ++i) {
    total += count_covers(idx, first[i], full);
  }
  return total;
}

std::uint64_t mass_enumerate(int m, int n) { return mass_enumerate(MassProblem::standard(m, n)); }

boost::rational<long long> mass_weighted(int m, int n) {
  const std::uint64_t labelled = mass_labeled_formula(m, n);
  long long aut = 1;
  for (int i = 1; i <= m; ++i) aut *= 2 * i;
  for (int j = 1; j <= n; ++j) aut *= 2 * j;
  return {static_cast<long long>(labelled), aut};
}

}  // namespace vhlf
