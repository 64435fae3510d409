#pragma once

#include <memory>
#include <random>

#include "vhlf/config.hpp"
#include "vhlf/gf.hpp"

namespace testutil {

inline std::shared_ptr<const vhlf::Field> field(int q) {
  return std::make_shared<const vhlf::Field>(vhlf::make_field_for_order(q));
}

// w0 + w1 Z from integer encodings of the two coordinates.
inline vhlf::Fq2 quad(const vhlf::QuadField& k, int w0, int w1) { return k.decode(w0 + w1 * k.base().q()); }

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240917);
  return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline const int kOddQ[] = {3, 5, 7, 9};

}  // namespace testutil
