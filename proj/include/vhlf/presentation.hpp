#pragma once

// Finite presentations of Gamma (generators A u B), Lambda' = <d, a, b> and
// Lambda = <d, s, a, b>; the (*) solver for the four-term relators; exact
// certification of relators in D; abelianization by Smith normal form.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "vhlf/quaternion.hpp"
#include "vhlf/vh_core.hpp"

namespace vhlf {

// Letters are signed 1-based generator indices: +g for gen g-1, -g for its inverse.
using Word = std::vector<int>;

struct Presentation {
  std::string name;
  std::vector<std::string> generators;
  std::vector<Word> relators;
  bool operator==(const Presentation&) const = default;
};

Word free_reduce(const Word& w);

// Generators a0..aq, b0..bq in conic order. Relators: one a_xi a_{-xi} per
// inverse pair and class, then a_xi b_eta a_mu^-1 b_lambda^-1 per relation
// a_xi b_eta = b_lambda a_mu (one per square when dedup is on).
Presentation present_gamma(const VHData& data, bool dedup = true);

// Position in F_{q^2}^* / F_q^* = Z/(q+1) relative to delta.
class DeltaClasses {
 public:
  explicit DeltaClasses(const Config& cfg);
  int of(Fq2 w) const;  // throws InternalNonunit on 0
 private:
  const QuadField* k_;
  int q_;
  std::vector<int> cls_;
};

struct StarSolution {
  int j = 0;
  int k = 0;
};

// delta^j = (delta^l - zeta pe(delta^i) delta^{ql}) Z and
// delta^k = (delta^i - zeta^-1 pe(delta^l) delta^{qi}) Z modulo F_q^*.
StarSolution star_solve(const Config& cfg, int i, int l);

// The same system in the form with delta^{(q+1)/2} standing in for Z.
bool star_alternate_form_agrees(const Config& cfg, int i, int l, const StarSolution& s);

struct Quadruple {
  Fq2 xi, eta, lambda, mu;
};
// (xi, eta, lambda, mu) = (Z pe(d^i), -Z pe(d^j)/zeta, Z pe(d^l)/zeta, -Z pe(d^k)).
Quadruple star_quadruple(const Config& cfg, int i, int j, int k, int l);

Presentation present_lambda_prime(const Config& cfg);
Presentation present_lambda(const Config& cfg);

// Images of the generators in D: Gamma uses alpha_xi, beta_eta; Lambda and
// Lambda' use d -> delta, s -> F, a -> gamma_Z, b -> gamma_{Z/zeta}.
std::vector<QuatElem> gamma_images(const VHData& data);
std::vector<QuatElem> lambda_images(const Config& cfg, bool with_s);

// Index of the first relator whose value in D is not central, if any.
// Inverses are evaluated as conjugates, which is exact projectively.
std::optional<std::size_t> first_uncertified(const Config& cfg, const std::vector<QuatElem>& images,
                                             const Presentation& p);

// Smith normal form diagonal of the exponent-sum matrix, one entry per
// generator, sorted into a divisibility chain with zeros (free rank) last.
std::vector<long long> abelianization(const Presentation& p);
// At least `count` divisors are 0 or divisible by m.
bool admits_quotient(const std::vector<long long>& divisors, long long m, int count);

struct UniformQuotientReport {
  bool additive_kills_relators = false;
  bool parity_kills_relators = false;
  int additive_rank = 0;         // dimension over F_p of the span of A u B
  long long additive_order = 0;  // p^rank
  bool spans_extension = false;  // the span is all of F_q[Z]
};

UniformQuotientReport uniform_quotients_check(const VHData& data);

enum class TextFormat { gap, plain, json };
std::string export_text(const Presentation& p, TextFormat fmt);
// Accepts the plain and json forms. Throws SchemaViolation.
Presentation import_text(const std::string& doc, TextFormat fmt);
nlohmann::json to_json(const Presentation& p);
Presentation from_json(const nlohmann::json& doc);

}  // namespace vhlf
