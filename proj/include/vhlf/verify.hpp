#pragma once

// The full per-configuration check suite behind `vhlf verify`.

#include <string>
#include <vector>

#include "vhlf/config.hpp"

namespace vhlf {

struct CheckRecord {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct SuiteOptions {
  int sphere_radius = 2;
  int mass_max_product = 4;  // check mass formula vs enumeration for m n <= this
};

// Records sorted by name.
std::vector<CheckRecord> run_checks(const Config& cfg, const SuiteOptions& opt = {});

// rho(x y) == rho(x) rho(y) on all products of basis elements and on the
// generators alpha, beta.
bool rho_z_is_homomorphism(const Config& cfg);
bool rho_y_is_homomorphism(const Config& cfg);

}  // namespace vhlf
