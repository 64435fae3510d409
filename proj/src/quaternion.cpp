#include "vhlf/quaternion.hpp"

#include "vhlf/errors.hpp"

namespace vhlf {

std::string QuatElem::to_string() const {
  return "[" + x[0].to_string() + ", " + x[1].to_string() + ", " + x[2].to_string() + ", " +
         x[3].to_string() + "]";
}

RatFunc k_const(const Config& cfg, Fq a) { return RatFunc::constant(cfg.field, Var::t, a); }
RatFunc k_t(const Config& cfg) { return RatFunc::x(cfg.field, Var::t); }
RatFunc k_d(const Config& cfg) {
  const RatFunc t = k_t(cfg);
  return t * (t - k_const(cfg, cfg.f().one()));
}

QuatElem q_scalar(const Config& cfg, const RatFunc& a) {
  const RatFunc zero(cfg.field, Var::t);
  return QuatElem{{a, zero, zero, zero}};
}

QuatElem q_one(const Config& cfg) { return q_scalar(cfg, k_const(cfg, cfg.f().one())); }

QuatElem q_Z(const Config& cfg) {
  const RatFunc zero(cfg.field, Var::t);
  return QuatElem{{zero, k_const(cfg, cfg.f().one()), zero, zero}};
}

QuatElem q_F(const Config& cfg) {
  const RatFunc zero(cfg.field, Var::t);
  return QuatElem{{zero, zero, k_const(cfg, cfg.f().one()), zero}};
}

QuatElem q_embed(const Config& cfg, Fq2 w) {
  const RatFunc zero(cfg.field, Var::t);
  return QuatElem{{k_const(cfg, w.w0), k_const(cfg, w.w1), zero, zero}};
}

QuatElem qmul(const Config& cfg, const QuatElem& a, const QuatElem& b) {
  const RatFunc c = k_const(cfg, cfg.c);
  const RatFunc d = k_d(cfg);
  const auto& x = a.x;
  const auto& y = b.x;
  return QuatElem{{
      x[0] * y[0] + c * x[1] * y[1] + d * x[2] * y[2] - c * d * x[3] * y[3],
      x[0] * y[1] + x[1] * y[0] - d * x[2] * y[3] + d * x[3] * y[2],
      x[0] * y[2] + x[2] * y[0] + c * x[1] * y[3] - c * x[3] * y[1],
      x[0] * y[3] + x[3] * y[0] + x[1] * y[2] - x[2] * y[1],
  }};
}

QuatElem qadd(const QuatElem& a, const QuatElem& b) {
  return QuatElem{{a.x[0] + b.x[0], a.x[1] + b.x[1], a.x[2] + b.x[2], a.x[3] + b.x[3]}};
}

QuatElem qscale(const RatFunc& s, const QuatElem& a) {
  return QuatElem{{s * a.x[0], s * a.x[1], s * a.x[2], s * a.x[3]}};
}

QuatElem qconj(const QuatElem& a) { return QuatElem{{a.x[0], -a.x[1], -a.x[2], -a.x[3]}}; }

RatFunc nrd(const Config& cfg, const QuatElem& a) {
  const RatFunc c = k_const(cfg, cfg.c);
  const RatFunc d = k_d(cfg);
  const auto& x = a.x;
  return x[0] * x[0] - c * x[1] * x[1] - d * x[2] * x[2] + c * d * x[3] * x[3];
}

RatFunc trd(const QuatElem& a) { return a.x[0] + a.x[0]; }

QuatElem qpow(const Config& cfg, QuatElem a, unsigned e) {
  QuatElem r = q_one(cfg);
  while (e > 0) {
    if (e & 1U) r = qmul(cfg, r, a);
    a = qmul(cfg, a, a);
    e >>= 1U;
  }
  return r;
}

bool is_central(const QuatElem& a) {
  return !a.x[0].is_zero() && a.x[1].is_zero() && a.x[2].is_zero() && a.x[3].is_zero();
}

bool proj_equal(const QuatElem& a, const QuatElem& b) {
  int pivot = -1;
  for (int i = 0; i < 4; ++i) {
    if (!b.x[i].is_zero()) {
      pivot = i;
      break;
    }
  }
  if (pivot < 0 || a.x[pivot].is_zero()) return false;
  const RatFunc f = a.x[pivot] / b.x[pivot];
  for (int i = 0; i < 4; ++i) {
    if (!(a.x[i] == f * b.x[i])) return false;
  }
  return true;
}

QuatElem make_gamma(const Config& cfg, Fq2 xi) {
  const RatFunc zero(cfg.field, Var::t);
  return QuatElem{{zero, k_t(cfg), k_const(cfg, xi.w0), k_const(cfg, xi.w1)}};
}

QuatElem make_alpha(const Config& cfg, Fq2 xi) {
  if (cfg.k().norm(xi) != cfg.norm_a()) {
    throw Error(ErrorCode::WrongNorm, "alpha needs N(xi) = -c, got xi = " + cfg.k().pretty(xi));
  }
  return qmul(cfg, make_gamma(cfg, xi), q_Z(cfg));
}

QuatElem make_beta(const Config& cfg, Fq2 eta) {
  if (cfg.k().norm(eta) != cfg.norm_b()) {
    throw Error(ErrorCode::WrongNorm,
                "beta needs N(eta) = c tau/(1-tau), got eta = " + cfg.k().pretty(eta));
  }
  return qmul(cfg, make_gamma(cfg, eta), q_Z(cfg));
}

bool relation_check(const Config& cfg, Fq2 xi, Fq2 eta, Fq2 lambda, Fq2 mu) {
  const QuatElem lhs = qmul(cfg, make_alpha(cfg, xi), make_beta(cfg, eta));
  const QuatElem rhs = qmul(cfg, make_beta(cfg, lambda), make_alpha(cfg, mu));
  return lhs == rhs;
}

// ---------------------------------------------------------------------------
// Splittings.

RatFunc t_of_z(const Config& cfg) {
  const Field& F = cfg.f();
  // 1 / (z (2 - z)) = 1 / (2z - z^2)
  const Poly den(cfg.field, Var::z, {F.zero(), F.from_int(2), F.neg(F.one())});
  return RatFunc(Poly::constant(cfg.field, Var::z, F.one()), den);
}

RatFunc t_of_y(const Config& cfg) {
  const Field& F = cfg.f();
  // tau / (tau - (tau - 1)(y - 1)^2)
  const RatFunc y = RatFunc::x(cfg.field, Var::y);
  const RatFunc one = RatFunc::constant(cfg.field, Var::y, F.one());
  const RatFunc tau = RatFunc::constant(cfg.field, Var::y, cfg.tau);
  const RatFunc tm1 = RatFunc::constant(cfg.field, Var::y, F.sub(cfg.tau, F.one()));
  const RatFunc ym1 = y - one;
  return tau / (tau - tm1 * ym1 * ym1);
}

namespace {

Mat2 rho_generic(const Config& cfg, const QuatElem& a, Var v, const RatFunc& t_expr, const Mat2& rz,
                 const Mat2& rf) {
  const Mat2 rzf = mul2(rz, rf);
  Mat2 out = scale2(substitute(a.x[0], t_expr), Mat2::identity(cfg.field, v));
  out = add2(out, scale2(substitute(a.x[1], t_expr), rz));
  out = add2(out, scale2(substitute(a.x[2], t_expr), rf));
  out = add2(out, scale2(substitute(a.x[3], t_expr), rzf));
  return out;
}

Mat2 rho_Z_matrix(const Config& cfg, Var v) {
  const Field& F = cfg.f();
  const RatFunc zero(cfg.field, v);
  return Mat2{{zero, RatFunc::constant(cfg.field, v, cfg.c), RatFunc::constant(cfg.field, v, F.one()), zero}};
}

}  // namespace

Mat2 rho_z(const Config& cfg, const QuatElem& a) {
  const Field& F = cfg.f();
  const RatFunc t = t_of_z(cfg);
  const RatFunc z = RatFunc::x(cfg.field, Var::z);
  const RatFunc one = RatFunc::constant(cfg.field, Var::z, F.one());
  const RatFunc zero(cfg.field, Var::z);
  const Mat2 rf{{t * (z - one), zero, zero, t * (one - z)}};
  return rho_generic(cfg, a, Var::z, t, rho_Z_matrix(cfg, Var::z), rf);
}

Mat2 rho_y(const Config& cfg, const QuatElem& a) {
  const Field& F = cfg.f();
  const RatFunc t = t_of_y(cfg);
  const RatFunc y = RatFunc::x(cfg.field, Var::y);
  const RatFunc one = RatFunc::constant(cfg.field, Var::y, F.one());
  const RatFunc z0 = RatFunc::constant(cfg.field, Var::y, cfg.zeta.w0);
  const RatFunc z1 = RatFunc::constant(cfg.field, Var::y, cfg.zeta.w1);
  const RatFunc c = RatFunc::constant(cfg.field, Var::y, cfg.c);
  const RatFunc up = t * (y - one);
  const RatFunc down = t * (one - y);
  const Mat2 rf{{z0 * up, c * z1 * down, z1 * up, z0 * down}};
  return rho_generic(cfg, a, Var::y, t, rho_Z_matrix(cfg, Var::y), rf);
}

std::pair<int, int> valuation_pattern(const Config& cfg, const QuatElem& x) {
  const Place origin = Place::at(cfg.f().zero());
  const Mat2 mz = rho_z(cfg, x);
  const Mat2 my = rho_y(cfg, x);
  for (int i = 0; i < 4; ++i) {
    if (ord_at(mz.e[i], origin) < 0) {
      throw Error(ErrorCode::IntegralityFailure, "rho_z entry " + mz.e[i].to_string() + " has a pole at z = 0");
    }
    if (ord_at(my.e[i], origin) < 0) {
      throw Error(ErrorCode::IntegralityFailure, "rho_y entry " + my.e[i].to_string() + " has a pole at y = 0");
    }
  }
  return {ord_at(det2(mz), origin), ord_at(det2(my), origin)};
}

std::pair<int, int> neighbour_valuations_alpha(const Config& cfg, Fq2 xi) {
  const RatFunc inv_t = k_t(cfg).inv();
  return valuation_pattern(cfg, qscale(inv_t, make_alpha(cfg, xi)));
}

std::pair<int, int> neighbour_valuations_beta(const Config& cfg, Fq2 eta) {
  const RatFunc inv_t = k_t(cfg).inv();
  const QuatElem b = qmul(cfg, q_embed(cfg, cfg.zeta), make_beta(cfg, eta));
  return valuation_pattern(cfg, qscale(inv_t, b));
}

DihedralReport dihedral_relations_check(const Config& cfg) {
  const QuadField& k = cfg.k();
  const QuatElem delta = q_embed(cfg, cfg.delta);
  const QuatElem f = q_F(cfg);
  const QuatElem zeta = q_embed(cfg, cfg.zeta);
  const QuatElem alpha = make_gamma(cfg, k.z());
  const QuatElem beta = make_gamma(cfg, k.div(k.z(), cfg.zeta));
  auto sq = [&](const QuatElem& a) { return qmul(cfg, a, a); };

  DihedralReport r;
  r.delta_power = is_central(qpow(cfg, delta, static_cast<unsigned>(cfg.q() + 1)));
  r.f_square = is_central(sq(f));
  r.delta_f = is_central(sq(qmul(cfg, delta, f)));
  r.alpha_square = is_central(sq(alpha));
  r.beta_square = is_central(sq(beta));
  r.f_alpha = is_central(sq(qmul(cfg, f, alpha)));
  r.f_zeta_beta = is_central(sq(qmul(cfg, qmul(cfg, f, zeta), beta)));
  return r;
}

Fq2 mod_F_image(const Config& cfg, const QuatElem& x) {
  const Fq one = cfg.f().one();
  for (int i = 0; i < 4; ++i) {
    if (ord_at(x.x[i], Place::at(one)) < 0) {
      throw Error(ErrorCode::PoleAtOne, "coordinate " + x.x[i].to_string() + " has a pole at t = 1");
    }
  }
  return {*evaluate(x.x[0], one), *evaluate(x.x[1], one)};
}

}  // namespace vhlf
