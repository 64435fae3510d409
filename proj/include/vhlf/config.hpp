#pragma once

#include <memory>
#include <optional>

#include "vhlf/gf.hpp"

namespace vhlf {

// Parameters of one lattice: the field, the non-square c, tau, a generator
// delta of F_q[Z]^* and a point zeta of norm (tau - 1) / tau.
struct Config {
  std::shared_ptr<const Field> field;
  std::shared_ptr<const QuadField> ext;
  Fq c;
  Fq tau;
  Fq2 delta;
  Fq2 zeta;

  int q() const noexcept { return field->q(); }
  const Field& f() const noexcept { return *field; }
  const QuadField& k() const noexcept { return *ext; }
  // -c, the norm of the A-conic.
  Fq norm_a() const;
  // c * tau / (1 - tau), the norm of the B-conic.
  Fq norm_b() const;
};

// Integer encodings, checked against the invariants above.
struct ConfigOverrides {
  std::optional<int> c;
  std::optional<int> delta;
  std::optional<int> zeta;
};

// Throws InvalidParameter (tau in {0, 1}, bad override) or WrongNorm (zeta).
Config make_config(std::shared_ptr<const Field> field, Fq tau, const ConfigOverrides& ov = {});
Config make_config(int q, int tau_code, const ConfigOverrides& ov = {});

// The same field and c with a different tau (delta kept, zeta recomputed).
Config with_tau(const Config& cfg, Fq tau);

}  // namespace vhlf
