#include "doctest.h"

#include <cstdlib>

#include "test_util.hpp"
#include "vhlf/errors.hpp"
#include "vhlf/normal_form.hpp"

using namespace vhlf;
using testutil::quad;

namespace {

GWord random_word(const VHData& data, int max_len) {
  GWord w;
  const int len = testutil::uniform(0, max_len);
  for (int i = 0; i < len; ++i) w.push_back({testutil::uniform(0, 1) == 1, testutil::uniform(0, data.n() - 1)});
  return w;
}

GWord concat(GWord a, const GWord& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

TEST_CASE("rewriting examples for q = 3") {
  const VHData data = build_vh(make_config(3, 2));
  const QuadField& k = data.cfg.k();
  CHECK(rewrite(data, {}) == NormalForm{});
  CHECK(normal_form(data, {}) == NormalForm{});
  const GWord w{{true, data.index_b(quad(k, 2, 2))}, {false, data.index_a(quad(k, 2, 0))}};
  const NormalForm expected{{data.index_a(k.z())}, {data.index_b(quad(k, 1, 1))}};
  CHECK(rewrite(data, w) == expected);
  CHECK(rewrite(data, w, Strategy::rightmost) == expected);
  CHECK(normal_form(data, w) == expected);
  const int a = data.index_a(k.z());
  CHECK(normal_form(data, {{false, a}, {false, data.inv_a[a]}}) == NormalForm{});
}

TEST_CASE("group laws on random words") {
  for (int q : testutil::kOddQ) {
    const VHData data = build_vh(make_config(q, 2));
    const int trials = q == 3 ? 1000 : 250;
    for (int t = 0; t < trials; ++t) {
      const GWord w = random_word(data, 12);
      const NormalForm nf = normal_form(data, w);
      CHECK(is_reduced(data, nf));
      CHECK(normal_form(data, concat(w, inverse_word(data, w))) == NormalForm{});
      CHECK(normal_form(data, concat(inverse_word(data, w), w)) == NormalForm{});
      CHECK(multiply(data, nf, invert(data, nf)) == NormalForm{});
      CHECK(normal_form(data, to_word(nf)) == nf);
      // The normal form of a word of length L has length at most L.
      CHECK(nf.a_part.size() + nf.b_part.size() <= w.size());
    }
  }
}

TEST_CASE("leftmost and rightmost rewriting are confluent") {
  for (int q : testutil::kOddQ) {
    for (int tc = 2; tc < q; ++tc) {
      const VHData data = build_vh(make_config(q, tc));
      for (int t = 0; t < 500; ++t) {
        const GWord w = random_word(data, 14);
        const NormalForm left = rewrite(data, w, Strategy::leftmost);
        CHECK(rewrite(data, w, Strategy::rightmost) == left);
        CHECK(normal_form(data, w) == left);
      }
    }
  }
}

TEST_CASE("multiplication is associative with identity") {
  const VHData data = build_vh(make_config(5, 3));
  for (int t = 0; t < 300; ++t) {
    const NormalForm x = normal_form(data, random_word(data, 8));
    const NormalForm y = normal_form(data, random_word(data, 8));
    const NormalForm z = normal_form(data, random_word(data, 8));
    CHECK(multiply(data, multiply(data, x, y), z) == multiply(data, x, multiply(data, y, z)));
    CHECK(multiply(data, x, NormalForm{}) == x);
    CHECK(multiply(data, NormalForm{}, x) == x);
    CHECK(invert(data, multiply(data, x, y)) == multiply(data, invert(data, y), invert(data, x)));
    CHECK(multiply(data, x, y) == normal_form(data, concat(to_word(x), to_word(y))));
  }
}

TEST_CASE("square relators reduce to the identity") {
  const VHData data = build_vh(make_config(7, 3));
  const int n = data.n();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto [l, m] = data.forward[i * n + j];
      const GWord rel{{false, i}, {true, j}, {false, data.inv_a[m]}, {true, data.inv_b[l]}};
      CHECK(normal_form(data, rel) == NormalForm{});
    }
  }
}

TEST_CASE("sphere counts") {
  const VHData d3 = build_vh(make_config(3, 2));
  CHECK(sphere_count(d3, 0, 0) == 1);
  CHECK(sphere_count(d3, 1, 1) == 16);
  CHECK(sphere_count(d3, 2, 1) == 48);
  CHECK(expected_sphere(3, 2, 1) == 48);
  CHECK(expected_sphere(3, 0, 0) == 1);
  CHECK(expected_sphere(5, 3, 0) == 6 * 5 * 5);
  for (int q : testutil::kOddQ) {
    for (int tc = 2; tc < q; ++tc) {
      const VHData data = build_vh(make_config(q, tc));
      const int radius = std::min(sphere_bound(q), 3);
      const SphereTable t = sphere_table(data, radius);
      CHECK(t.lengths_match_depth);
      for (int k = 0; k <= radius; ++k) {
        for (int l = 0; k + l <= radius; ++l) {
          auto it = t.counts.find({k, l});
          REQUIRE(it != t.counts.end());
          CHECK(it->second == expected_sphere(q, k, l));
        }
      }
    }
  }
}

TEST_CASE("serial and parallel sphere tables agree") {
  for (auto [q, r] : std::vector<std::pair<int, int>>{{3, 5}, {5, 3}, {7, 3}}) {
    const VHData data = build_vh(make_config(q, 2));
    const SphereTable par = sphere_table(data, r);
    const SphereTable ser = sphere_table_serial(data, r);
    CHECK(par.counts == ser.counts);
    CHECK(par.lengths_match_depth == ser.lengths_match_depth);
  }
}

TEST_CASE("sphere radius limits") {
  const VHData data = build_vh(make_config(3, 2));
  CHECK(sphere_bound(3) == 6);
  CHECK(sphere_bound(5) == 4);
  CHECK(sphere_bound(7) == 4);
  CHECK(sphere_bound(9) == 3);
  try {
    sphere_table(data, 7);
    FAIL("expected BoundExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BoundExceeded);
  }
  CHECK_THROWS_AS(sphere_table_serial(data, -1), Error);
}
