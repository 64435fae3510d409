#pragma once

// The quaternion algebra D = K{Z, F} / (Z^2 = c, F^2 = t(t-1), ZF = -FZ)
// over K = F_q(t), with elements stored on the basis 1, Z, F, ZF.

#include <array>
#include <string>
#include <utility>

#include "vhlf/config.hpp"
#include "vhlf/funcfield.hpp"

namespace vhlf {

struct QuatElem {
  std::array<RatFunc, 4> x;
  bool operator==(const QuatElem& o) const { return x == o.x; }
  std::string to_string() const;
};

// Constants in K = F_q(t).
RatFunc k_const(const Config& cfg, Fq a);
RatFunc k_t(const Config& cfg);
RatFunc k_d(const Config& cfg);  // t(t-1) = F^2

QuatElem q_scalar(const Config& cfg, const RatFunc& a);
QuatElem q_one(const Config& cfg);
QuatElem q_Z(const Config& cfg);
QuatElem q_F(const Config& cfg);
QuatElem q_embed(const Config& cfg, Fq2 w);  // w0 + w1 Z

QuatElem qmul(const Config& cfg, const QuatElem& a, const QuatElem& b);
QuatElem qadd(const QuatElem& a, const QuatElem& b);
QuatElem qscale(const RatFunc& s, const QuatElem& a);
QuatElem qconj(const QuatElem& a);
RatFunc nrd(const Config& cfg, const QuatElem& a);
RatFunc trd(const QuatElem& a);
QuatElem qpow(const Config& cfg, QuatElem a, unsigned e);

bool is_central(const QuatElem& a);  // nonzero element of K
// a = f * b for some f in K^*.
bool proj_equal(const QuatElem& a, const QuatElem& b);

QuatElem make_gamma(const Config& cfg, Fq2 xi);  // tZ + xi F
QuatElem make_alpha(const Config& cfg, Fq2 xi);  // gamma_xi Z, needs N(xi) = -c
QuatElem make_beta(const Config& cfg, Fq2 eta);  // gamma_eta Z, needs N(eta) = c tau / (1 - tau)

// alpha_xi beta_eta == beta_lambda alpha_mu exactly in D. Throws WrongNorm.
bool relation_check(const Config& cfg, Fq2 xi, Fq2 eta, Fq2 lambda, Fq2 mu);

// t as a function of z (resp. y) in the two splitting fields.
RatFunc t_of_z(const Config& cfg);
RatFunc t_of_y(const Config& cfg);
Mat2 rho_z(const Config& cfg, const QuatElem& a);
Mat2 rho_y(const Config& cfg, const QuatElem& a);

// (ord_{z=0} det rho_z(x), ord_{y=0} det rho_y(x)) for alpha_xi / t (resp.
// zeta beta_eta / t). Throws IntegralityFailure if any matrix entry has a pole.
std::pair<int, int> neighbour_valuations_alpha(const Config& cfg, Fq2 xi);
std::pair<int, int> neighbour_valuations_beta(const Config& cfg, Fq2 eta);
std::pair<int, int> valuation_pattern(const Config& cfg, const QuatElem& x);

struct DihedralReport {
  bool delta_power = false;    // delta^{q+1}
  bool f_square = false;       // F^2
  bool delta_f = false;        // (delta F)^2
  bool alpha_square = false;   // alpha^2 with alpha = gamma_Z
  bool beta_square = false;    // beta^2 with beta = gamma_{Z/zeta}
  bool f_alpha = false;        // (F alpha)^2
  bool f_zeta_beta = false;    // (F zeta beta)^2
  bool all() const {
    return delta_power && f_square && delta_f && alpha_square && beta_square && f_alpha && f_zeta_beta;
  }
};
DihedralReport dihedral_relations_check(const Config& cfg);

// Z -> Z, F -> 0, t -> 1. Throws PoleAtOne.
Fq2 mod_F_image(const Config& cfg, const QuatElem& x);

}  // namespace vhlf
