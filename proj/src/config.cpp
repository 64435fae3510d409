#include "vhlf/config.hpp"

#include "vhlf/errors.hpp"

namespace vhlf {

Fq Config::norm_a() const { return field->neg(c); }

Fq Config::norm_b() const {
  const Field& F = *field;
  return F.div(F.mul(c, tau), F.sub(F.one(), tau));
}

namespace {

bool is_generator(const QuadField& k, Fq2 w) {
  if (w == k.zero()) return false;
  const auto order = static_cast<std::uint64_t>(k.order() - 1);
  for (auto l : prime_factors(order)) {
    if (k.pow(w, order / l) == k.one()) return false;
  }
  return true;
}

}  // namespace

Config make_config(std::shared_ptr<const Field> field, Fq tau, const ConfigOverrides& ov) {
  const Field& F = *field;
  if (tau.code >= F.q()) throw Error(ErrorCode::InvalidParameter, "tau outside F_q");
  if (tau == F.zero() || tau == F.one()) {
    throw Error(ErrorCode::InvalidParameter, "tau must avoid 0 and 1");
  }
  Config cfg;
  cfg.field = field;
  cfg.tau = tau;
  if (ov.c) {
    cfg.c = F.element(*ov.c);
    if (cfg.c == F.zero() || F.is_square(cfg.c)) {
      throw Error(ErrorCode::InvalidParameter, "override c = " + std::to_string(*ov.c) + " is a square");
    }
  } else {
    cfg.c = find_nonsquare(F);
  }
  cfg.ext = std::make_shared<const QuadField>(field, cfg.c);
  const QuadField& k = *cfg.ext;

  if (ov.delta) {
    cfg.delta = k.decode(*ov.delta);
    if (!is_generator(k, cfg.delta)) {
      throw Error(ErrorCode::InvalidParameter,
                  "override delta = " + std::to_string(*ov.delta) + " does not generate F_q[Z]^*");
    }
  } else {
    cfg.delta = find_generator(k);
  }

  const Fq target = F.div(F.sub(tau, F.one()), tau);
  if (ov.zeta) {
    cfg.zeta = k.decode(*ov.zeta);
    if (k.norm(cfg.zeta) != target) {
      throw Error(ErrorCode::WrongNorm, "override zeta = " + std::to_string(*ov.zeta) +
                                            " does not have norm (tau-1)/tau");
    }
  } else {
    cfg.zeta = conic_points(k, target).front();
  }
  return cfg;
}

Config make_config(int q, int tau_code, const ConfigOverrides& ov) {
  auto field = std::make_shared<const Field>(make_field_for_order(q));
  if (tau_code < 0 || tau_code >= q) {
    throw Error(ErrorCode::InvalidParameter, "tau encoding " + std::to_string(tau_code) + " outside [0, q)");
  }
  return make_config(field, field->element(tau_code), ov);
}

Config with_tau(const Config& cfg, Fq tau) {
  ConfigOverrides ov;
  ov.c = cfg.c.code;
  ov.delta = cfg.k().encode(cfg.delta);
  return make_config(cfg.field, tau, ov);
}

}  // namespace vhlf
