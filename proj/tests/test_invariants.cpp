#include "doctest.h"

#include "test_util.hpp"
#include "vhlf/errors.hpp"
#include "vhlf/invariants.hpp"

using namespace vhlf;
using Rational = boost::rational<long long>;

TEST_CASE("q = 3 gives a fake quadric") {
  const OneVertexComplex cx = build_sab(build_vh(make_config(3, 2)));
  const SurfaceInvariants inv = surface_invariants(cx, 3);
  CHECK(inv.n_vertices == 1);
  CHECK(inv.chi == Rational(1));
  CHECK(inv.c1sq == 8);
  CHECK(inv.c2 == 4);
  CHECK(inv.fake_quadric);
  CHECK(inv.noether_holds());
  CHECK(inv.c1sq == 2 * inv.c2);
}

TEST_CASE("q = 5 and the doubled q = 3 counts") {
  const SurfaceInvariants five = surface_invariants(build_sab(build_vh(make_config(5, 2))), 5);
  CHECK(five.chi == Rational(4));
  CHECK(five.c1sq == 32);
  CHECK(five.c2 == 16);
  CHECK_FALSE(five.fake_quadric);

  const SurfaceInvariants two = invariants_from_formula(2, 3);
  CHECK(two.chi == Rational(2));
  CHECK(two.c1sq == 16);
  CHECK(two.c2 == 8);
  CHECK_FALSE(two.fake_quadric);
  CHECK(invariants_from_cells({2, 8, 8}, 3).chi == Rational(2));
}

TEST_CASE("formula and cell counts agree, Noether holds, c1^2 = 2 c2") {
  for (int q : testutil::kOddQ) {
    for (int tc = 2; tc < q; ++tc) {
      const OneVertexComplex cx = build_sab(build_vh(make_config(q, tc)));
      const SurfaceInvariants a = surface_invariants(cx, q);
      const SurfaceInvariants b = invariants_from_formula(1, q);
      CHECK(a.chi == b.chi);
      CHECK(a.c1sq == b.c1sq);
      CHECK(a.c2 == b.c2);
      CHECK(a.noether_holds());
      CHECK(a.c1sq == 2 * a.c2);
      CHECK(a.chi == euler_char(cx));
    }
  }
  for (long long n = 1; n <= 5; ++n) {
    for (int q : {3, 5, 7, 9, 11}) {
      const SurfaceInvariants s = invariants_from_formula(n, q);
      CHECK(s.noether_holds());
      CHECK(s.chi * 4 == Rational(n * (q - 1) * (q - 1)));
    }
  }
}

TEST_CASE("inconsistent inputs") {
  try {
    invariants_from_cells({1, 4, 5}, 3);
    FAIL("expected CountMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CountMismatch);
  }
  CHECK_THROWS_AS(invariants_from_formula(0, 3), Error);
  CHECK_THROWS_AS(invariants_from_formula(1, 4), Error);
}
