#include "doctest.h"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>

#include "vhlf/errors.hpp"
#include "vhlf/mass_formula.hpp"

using namespace vhlf;
using Rational = boost::rational<long long>;

namespace {

// Independent oracle. Symbols: A-edges 0..2m-1, B-edges 2m..2m+2n-1, with the
// inverse of x being x ^ 1 within each class. A square (v1, h1, v2, h2) has
// link corners (v1^-1, h1), (v2, h1^-1), (v2^-1, h2), (v1, h2^-1).
struct Oracle {
  int m;
  int n;

  int inv(int x) const { return x ^ 1; }
  int corner(int v, int h) const { return v * 2 * n + (h - 2 * m); }

  std::array<int, 4> corners(const std::array<int, 4>& s) const {
    return {corner(inv(s[0]), s[1]), corner(s[2], inv(s[1])), corner(inv(s[2]), s[3]), corner(s[0], inv(s[3]))};
  }

  // Least reading under rotation by two (keeping V first) and reversal.
  std::array<int, 4> canonical(const std::array<int, 4>& s) const {
    const std::array<int, 4> readings[4] = {
        s,
        {s[2], s[3], s[0], s[1]},
        {inv(s[2]), inv(s[1]), inv(s[0]), inv(s[3])},
        {inv(s[0]), inv(s[3]), inv(s[2]), inv(s[1])},
    };
    return *std::min_element(std::begin(readings), std::end(readings));
  }

  std::vector<std::array<int, 4>> squares() const {
    std::set<std::array<int, 4>> out;
    for (int v1 = 0; v1 < 2 * m; ++v1)
      for (int h1 = 2 * m; h1 < 2 * m + 2 * n; ++h1)
        for (int v2 = 0; v2 < 2 * m; ++v2)
          for (int h2 = 2 * m; h2 < 2 * m + 2 * n; ++h2) {
            const std::array<int, 4> s{v1, h1, v2, h2};
            auto cs = corners(s);
            std::sort(cs.begin(), cs.end());
            if (std::adjacent_find(cs.begin(), cs.end()) != cs.end()) continue;
            out.insert(canonical(s));
          }
    return {out.begin(), out.end()};
  }

  // Include/exclude over the square list; every corner covered exactly once.
  std::vector<std::vector<std::array<int, 4>>> complexes() const {
    const auto sq = squares();
    std::vector<std::vector<std::array<int, 4>>> found;
    std::vector<char> used(4 * m * n, 0);
    std::vector<std::array<int, 4>> chosen;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (static_cast<int>(chosen.size()) == m * n) {
        found.push_back(chosen);
        return;
      }
      if (i == sq.size()) return;
      const auto cs = corners(sq[i]);
      if (std::none_of(cs.begin(), cs.end(), [&](int c) { return used[c]; })) {
        for (int c : cs) used[c] = 1;
        chosen.push_back(sq[i]);
        rec(i + 1);
        chosen.pop_back();
        for (int c : cs) used[c] = 0;
      }
      rec(i + 1);
    };
    rec(0);
    return found;
  }
};

std::uint64_t factorial(int k) { return k <= 1 ? 1 : k * factorial(k - 1); }

}  // namespace

TEST_CASE("the (1,1) case by hand") {
  // ab = ba, ab = b^-1 a, ab = b a^-1 give complete links; ab = b^-1 a^-1 does not.
  const Oracle o{1, 1};
  CHECK(o.complexes().size() == 3);
  CHECK(mass_labeled_formula(1, 1) == 3);
  CHECK(mass_enumerate(1, 1) == 3);
  CHECK(mass_weighted(1, 1) == Rational(3, 4));
}

TEST_CASE("formula and enumeration agree with the brute-force oracle for mn <= 4") {
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; m * n <= 4; ++n) {
      CAPTURE(m);
      CAPTURE(n);
      const auto oracle = static_cast<std::uint64_t>(Oracle{m, n}.complexes().size());
      CHECK(mass_labeled_formula(m, n) == oracle);
      CHECK(mass_enumerate(m, n) == oracle);
      CHECK(admissible_squares(MassProblem::standard(m, n)).size() == Oracle{m, n}.squares().size());
    }
  }
}

TEST_CASE("frozen values up to mn = 6") {
  const std::map<std::pair<int, int>, std::uint64_t> labelled{
      {{1, 1}, 3},     {{1, 2}, 15},     {{1, 3}, 105},   {{1, 4}, 945},    {{1, 5}, 10395},
      {{1, 6}, 135135}, {{2, 2}, 541},   {{2, 3}, 35235},
  };
  const std::map<std::pair<int, int>, Rational> weighted{
      {{1, 1}, Rational(3, 4)},        {{1, 2}, Rational(15, 16)},   {{1, 3}, Rational(35, 32)},
      {{1, 4}, Rational(315, 256)},    {{1, 5}, Rational(693, 512)}, {{1, 6}, Rational(3003, 2048)},
      {{2, 2}, Rational(541, 64)},     {{2, 3}, Rational(11745, 128)},
  };
  for (const auto& [mn, value] : labelled) {
    const auto [m, n] = mn;
    CAPTURE(m);
    CAPTURE(n);
    CHECK(mass_labeled_formula(m, n) == value);
    CHECK(mass_labeled_formula(n, m) == value);
    CHECK(mass_enumerate(m, n) == value);
    CHECK(mass_enumerate(n, m) == value);
    CHECK(mass_weighted(m, n) == weighted.at(mn));
    CHECK(mass_weighted(n, m) == weighted.at(mn));
    const std::uint64_t aut = (1ULL << (m + n)) * factorial(m) * factorial(n);
    CHECK(mass_weighted(m, n) == Rational(static_cast<long long>(value), static_cast<long long>(aut)));
    CHECK(aut % static_cast<std::uint64_t>(mass_weighted(m, n).denominator()) == 0);
  }
}

TEST_CASE("serial and parallel enumeration agree") {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 4}, {2, 2}, {3, 2}, {1, 6}}) {
    const MassProblem p = MassProblem::standard(m, n);
    CHECK(mass_enumerate(p) == mass_enumerate_serial(p));
  }
}

TEST_CASE("non-standard involutions give the same count") {
  MassProblem p = MassProblem::standard(2, 1);
  p.inv_a = {3, 2, 1, 0};
  CHECK(mass_enumerate(p) == mass_enumerate(2, 1));
}

TEST_CASE("bad inputs") {
  MassProblem p = MassProblem::standard(1, 1);
  p.inv_a = {0, 1};
  CHECK_THROWS_AS(mass_enumerate(p), Error);
  CHECK_THROWS_AS(admissible_squares(p), Error);
  try {
    mass_labeled_formula(3, 3);
    FAIL("expected BoundExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BoundExceeded);
  }
  CHECK_THROWS_AS(mass_enumerate(4, 2), Error);
}

TEST_CASE("the q = 3 complex is one of the (2,2) complexes") {
  const OneVertexComplex cx = build_sab(build_vh(make_config(3, 2)));
  const std::vector<int> inv = cx.inverse_map();
  // Relabel V pairs as (0,1), (2,3) and H pairs as (4,5), (6,7).
  std::vector<int> label(cx.edges.size(), -1);
  int next_v = 0;
  int next_h = 4;
  for (std::size_t e = 0; e < cx.edges.size(); ++e) {
    if (label[e] >= 0) continue;
    int& next = cx.edges[e].cls == 'V' ? next_v : next_h;
    label[e] = next;
    label[inv[e]] = next + 1;
    next += 2;
  }
  const Oracle o{2, 2};
  std::vector<std::array<int, 4>> relabelled;
  for (const Square& s : cx.squares) {
    relabelled.push_back(o.canonical({label[s[0]], label[s[1]], label[s[2]], label[s[3]]}));
  }
  std::sort(relabelled.begin(), relabelled.end());
  const auto all = o.complexes();
  CHECK(std::find(all.begin(), all.end(), relabelled) != all.end());
}
