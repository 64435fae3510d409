#include "doctest.h"

#include "test_util.hpp"
#include "vhlf/errors.hpp"
#include "vhlf/quaternion.hpp"
#include "vhlf/vh_core.hpp"

using namespace vhlf;
using testutil::quad;

namespace {

QuatElem random_elem(const Config& cfg) {
  const Field& F = cfg.f();
  const RatFunc t = k_t(cfg);
  QuatElem out = q_scalar(cfg, k_const(cfg, F.zero()));
  for (auto& coord : out.x) {
    // Small polynomials in t with random coefficients.
    RatFunc v = k_const(cfg, F.element(testutil::uniform(0, F.q() - 1)));
    v = v + k_const(cfg, F.element(testutil::uniform(0, F.q() - 1))) * t;
    coord = v;
  }
  return out;
}

// Oracle for nrd directly from the coordinate formula.
RatFunc nrd_formula(const Config& cfg, const QuatElem& a) {
  const RatFunc c = k_const(cfg, cfg.c);
  const RatFunc d = k_d(cfg);
  return a.x[0] * a.x[0] - c * a.x[1] * a.x[1] - d * a.x[2] * a.x[2] + c * d * a.x[3] * a.x[3];
}

}  // namespace

TEST_CASE("basis products") {
  const Config cfg = make_config(5, 2);
  const QuatElem Z = q_Z(cfg);
  const QuatElem F = q_F(cfg);
  CHECK(qmul(cfg, Z, Z) == q_scalar(cfg, k_const(cfg, cfg.c)));
  CHECK(qmul(cfg, F, F) == q_scalar(cfg, k_d(cfg)));
  const QuatElem zf = qmul(cfg, Z, F);
  const QuatElem fz = qmul(cfg, F, Z);
  CHECK(qadd(zf, fz) == q_scalar(cfg, k_const(cfg, cfg.f().zero())));
  CHECK(qmul(cfg, q_one(cfg), zf) == zf);
  CHECK(is_central(qmul(cfg, zf, zf)));
  CHECK_FALSE(is_central(zf));
}

TEST_CASE("reduced norm and trace examples") {
  const Config cfg = make_config(3, 2);
  const Field& F = cfg.f();
  const RatFunc t = k_t(cfg);
  CHECK(nrd(cfg, q_one(cfg)) == k_const(cfg, F.one()));
  CHECK(nrd(cfg, q_Z(cfg)) == k_const(cfg, F.neg(cfg.c)));
  CHECK(nrd(cfg, q_F(cfg)) == -k_d(cfg));
  CHECK(trd(q_one(cfg)) == k_const(cfg, F.element(2)));
  CHECK(trd(q_Z(cfg)) == k_const(cfg, F.zero()));

  const Fq2 Zk = cfg.k().z();
  CHECK(nrd(cfg, make_alpha(cfg, Zk)) == t);
  const Fq2 eta = quad(cfg.k(), 1, 1);
  CHECK(nrd(cfg, make_beta(cfg, eta)) == k_const(cfg, F.element(2)) * t * (t + k_const(cfg, F.one())));
  CHECK(nrd(cfg, make_gamma(cfg, cfg.k().zero())) == k_const(cfg, F.neg(cfg.c)) * t * t);
  CHECK_THROWS_AS(make_alpha(cfg, eta), Error);
  CHECK_THROWS_AS(make_beta(cfg, Zk), Error);
}

TEST_CASE("nrd is multiplicative and matches the coordinate formula") {
  for (int q : testutil::kOddQ) {
    const Config cfg = make_config(q, 2);
    for (int i = 0; i < 100; ++i) {
      const QuatElem a = random_elem(cfg);
      const QuatElem b = random_elem(cfg);
      CHECK(nrd(cfg, a) == nrd_formula(cfg, a));
      CHECK(nrd(cfg, qmul(cfg, a, b)) == nrd(cfg, a) * nrd(cfg, b));
      CHECK(qmul(cfg, a, qconj(a)) == q_scalar(cfg, nrd(cfg, a)));
      CHECK(trd(qadd(a, qconj(a))) == trd(a) + trd(a));
    }
  }
}

TEST_CASE("gamma, alpha and beta norms for every generator") {
  for (int q : testutil::kOddQ) {
    for (int tc = 2; tc < q; ++tc) {
      const Config cfg = make_config(q, tc);
      const Field& F = cfg.f();
      const RatFunc t = k_t(cfg);
      const RatFunc c2 = k_const(cfg, F.mul(cfg.c, cfg.c));
      const RatFunc tau = k_const(cfg, cfg.tau);
      const RatFunc one_minus_tau = k_const(cfg, F.sub(F.one(), cfg.tau));
      const VHData data = build_vh(cfg);
      for (const Fq2& xi : data.A) {
        const RatFunc nx = k_const(cfg, cfg.k().norm(xi));
        CHECK(nrd(cfg, make_gamma(cfg, xi)) == t * (nx - (nx + k_const(cfg, cfg.c)) * t));
        CHECK(nrd(cfg, make_alpha(cfg, xi)) == c2 * t);
      }
      for (const Fq2& eta : data.B) {
        CHECK(nrd(cfg, make_beta(cfg, eta)) == c2 / one_minus_tau * (t - tau) * t);
      }
    }
  }
}

TEST_CASE("relation_check examples for q = 3, tau = 2") {
  const Config cfg = make_config(3, 2);
  const QuadField& k = cfg.k();
  const Fq2 Zk = k.z();
  CHECK(relation_check(cfg, Zk, quad(k, 1, 1), quad(k, 2, 2), quad(k, 2, 0)));
  // Swapped roles violate the norm precondition.
  CHECK_THROWS_AS(relation_check(cfg, Zk, quad(k, 1, 1), Zk, quad(k, 1, 1)), Error);
  // Norm-valid but not the unique solution.
  CHECK_FALSE(relation_check(cfg, Zk, quad(k, 1, 1), quad(k, 1, 1), Zk));
  const VHData data = build_vh(cfg);
  for (const Fq2& lambda : data.B) {
    for (const Fq2& mu : data.A) {
      const bool solved = lambda == quad(k, 2, 2) && mu == quad(k, 2, 0);
      CHECK(relation_check(cfg, Zk, quad(k, 1, 1), lambda, mu) == solved);
    }
  }
}

TEST_CASE("solved relations hold exactly and satisfy the coefficient identities") {
  for (int q : testutil::kOddQ) {
    const Config cfg = make_config(q, 2);
    const QuadField& k = cfg.k();
    const VHData data = build_vh(cfg);
    for (const Fq2& xi : data.A) {
      for (const Fq2& eta : data.B) {
        const auto [lambda, mu] = solve_forward(k, xi, eta);
        CHECK(relation_check(cfg, xi, eta, lambda, mu));
        CHECK(k.add(xi, eta) == k.add(lambda, mu));
        CHECK(k.mul(xi, k.conj(eta)) == k.mul(lambda, k.conj(mu)));
        CHECK_FALSE(is_central(qpow(cfg, qmul(cfg, make_alpha(cfg, xi), make_beta(cfg, eta)), 2)));
      }
    }
  }
}

TEST_CASE("splittings are algebra maps") {
  for (int q : {3, 5}) {
    for (int tc = 2; tc < q; ++tc) {
      const Config cfg = make_config(q, tc);
      const auto& f = cfg.field;
      const Mat2 rz = rho_z(cfg, q_Z(cfg));
      const Mat2 rf = rho_z(cfg, q_F(cfg));
      const RatFunc tz = t_of_z(cfg);
      const RatFunc one_z = RatFunc::constant(f, Var::z, f->one());
      CHECK(mul2(rz, rz) == Mat2::scalar(RatFunc::constant(f, Var::z, cfg.c)));
      CHECK(mul2(rf, rf) == Mat2::scalar(tz * (tz - one_z)));
      const Mat2 yz = rho_y(cfg, q_Z(cfg));
      const Mat2 yf = rho_y(cfg, q_F(cfg));
      CHECK(mul2(yz, yf) == scale2(RatFunc::constant(f, Var::y, f->neg(f->one())), mul2(yf, yz)));
      for (int i = 0; i < 30; ++i) {
        const QuatElem a = random_elem(cfg);
        const QuatElem b = random_elem(cfg);
        const QuatElem ab = qmul(cfg, a, b);
        CHECK(rho_z(cfg, ab) == mul2(rho_z(cfg, a), rho_z(cfg, b)));
        CHECK(rho_y(cfg, ab) == mul2(rho_y(cfg, a), rho_y(cfg, b)));
        CHECK(det2(rho_z(cfg, a)) == substitute(nrd(cfg, a), t_of_z(cfg)));
        CHECK(det2(rho_y(cfg, a)) == substitute(nrd(cfg, a), t_of_y(cfg)));
      }
    }
  }
}

TEST_CASE("neighbour valuations") {
  const Config cfg = make_config(3, 2);
  CHECK(neighbour_valuations_alpha(cfg, cfg.k().z()) == std::pair{1, 0});
  CHECK(neighbour_valuations_beta(cfg, quad(cfg.k(), 1, 1)) == std::pair{0, 1});
  for (int q : testutil::kOddQ) {
    for (int tc = 2; tc < q; ++tc) {
      const Config c = make_config(q, tc);
      const VHData data = build_vh(c);
      for (const Fq2& xi : data.A) CHECK(neighbour_valuations_alpha(c, xi) == std::pair{1, 0});
      for (const Fq2& eta : data.B) CHECK(neighbour_valuations_beta(c, eta) == std::pair{0, 1});
    }
  }
}

TEST_CASE("generators have unit norms away from 0, tau and infinity") {
  for (int q : {3, 5, 7}) {
    for (int tc = 2; tc < q; ++tc) {
      const Config cfg = make_config(q, tc);
      const VHData data = build_vh(cfg);
      auto unit_outside = [&](const RatFunc& n) {
        for (Fq pt : cfg.f().elements()) {
          if (pt == cfg.f().zero() || pt == cfg.tau) continue;
          if (ord_at(n, Place::at(pt)) != 0) return false;
        }
        return true;
      };
      for (const Fq2& xi : data.A) CHECK(unit_outside(nrd(cfg, make_alpha(cfg, xi))));
      for (const Fq2& eta : data.B) CHECK(unit_outside(nrd(cfg, make_beta(cfg, eta))));
    }
  }
}

TEST_CASE("dihedral relations and reduction modulo F") {
  for (int q : testutil::kOddQ) {
    for (int tc = 2; tc < q; ++tc) {
      const Config cfg = make_config(q, tc);
      CHECK(dihedral_relations_check(cfg).all());
      const VHData data = build_vh(cfg);
      const Fq2 c = cfg.k().embed(cfg.c);
      for (const Fq2& xi : data.A) CHECK(mod_F_image(cfg, make_alpha(cfg, xi)) == c);
      for (const Fq2& eta : data.B) CHECK(mod_F_image(cfg, make_beta(cfg, eta)) == c);
      CHECK(mod_F_image(cfg, q_one(cfg)) == cfg.k().one());
    }
  }
  const Config cfg = make_config(3, 2);
  const RatFunc pole = k_const(cfg, cfg.f().one()) / (k_t(cfg) - k_const(cfg, cfg.f().one()));
  CHECK_THROWS_AS(mod_F_image(cfg, q_scalar(cfg, pole)), Error);
  CHECK(cfg.k().embed(cfg.k().norm(cfg.delta)) == cfg.k().pow(cfg.delta, static_cast<std::uint64_t>(4)));
}

TEST_CASE("projective equality") {
  const Config cfg = make_config(5, 3);
  const QuatElem a = make_alpha(cfg, build_vh(cfg).A[0]);
  CHECK(proj_equal(a, qscale(k_t(cfg), a)));
  CHECK_FALSE(proj_equal(a, q_Z(cfg)));
}
