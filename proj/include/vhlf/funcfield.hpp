#pragma once

// Polynomials and rational functions over F_q in one named variable, 2x2
// matrices over them, and valuations at F_q-rational places and infinity.

#include <array>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "vhlf/gf.hpp"

namespace vhlf {

enum class Var { t, z, y };
char var_name(Var v) noexcept;

class Poly {
 public:
  Poly(std::shared_ptr<const Field> f, Var v);                       // zero
  Poly(std::shared_ptr<const Field> f, Var v, std::vector<Fq> coeffs);  // low degree first
  static Poly constant(std::shared_ptr<const Field> f, Var v, Fq a);
  static Poly x(std::shared_ptr<const Field> f, Var v);              // the variable itself
  static Poly linear(std::shared_ptr<const Field> f, Var v, Fq root);  // x - root

  const Field& field() const noexcept { return *field_; }
  const std::shared_ptr<const Field>& field_ptr() const noexcept { return field_; }
  Var var() const noexcept { return var_; }
  const std::vector<Fq>& coeffs() const noexcept { return coeffs_; }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  Fq lead() const noexcept;
  Fq coeff(int i) const noexcept;
  Fq eval(Fq a) const noexcept;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scale(Fq s) const;
  // Euclidean division; throws ZeroInput on a zero divisor.
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  Poly monic() const;
  // Multiplicity of the root a (0 if a is not a root; undefined for zero).
  int root_multiplicity(Fq a) const;

  bool operator==(const Poly& o) const;
  std::string to_string() const;

 private:
  void check_compatible(const Poly& o) const;
  void trim();

  std::shared_ptr<const Field> field_;
  Var var_;
  std::vector<Fq> coeffs_;
};

Poly gcd(Poly a, Poly b);  // monic, gcd(0, 0) = 0

struct Place {
  bool infinite = false;
  Fq point{};
  static Place at(Fq a) { return {false, a}; }
  static Place infinity() { return {true, Fq{}}; }
};

class RatFunc {
 public:
  static constexpr int kInfiniteOrder = std::numeric_limits<int>::max();

  RatFunc(std::shared_ptr<const Field> f, Var v);  // zero
  explicit RatFunc(Poly num);
  RatFunc(Poly num, Poly den);  // reduces; throws ZeroInput on den == 0
  static RatFunc constant(std::shared_ptr<const Field> f, Var v, Fq a);
  static RatFunc x(std::shared_ptr<const Field> f, Var v);

  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }
  const Field& field() const noexcept { return num_.field(); }
  const std::shared_ptr<const Field>& field_ptr() const noexcept { return num_.field_ptr(); }
  Var var() const noexcept { return num_.var(); }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_constant() const noexcept { return num_.degree() <= 0 && den_.degree() == 0; }
  // Constant value; meaningful only when is_constant().
  Fq constant_value() const noexcept;

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator-() const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;  // throws ZeroInput
  RatFunc scale(Fq s) const;
  RatFunc inv() const;

  bool operator==(const RatFunc& o) const;
  std::string to_string() const;

 private:
  Poly num_;
  Poly den_;
};

// Order of vanishing; kInfiniteOrder for the zero function.
int ord_at(const RatFunc& f, const Place& v);

// Value at an F_q point, nullopt at a pole.
std::optional<Fq> evaluate(const RatFunc& f, Fq a);

// f(expr) where f is in one variable and expr in another.
// Throws DegenerateComposition if the denominator of f vanishes on expr.
RatFunc substitute(const RatFunc& f, const RatFunc& expr);

struct Mat2 {
  std::array<RatFunc, 4> e;  // row major: e[0] e[1] / e[2] e[3]

  const RatFunc& operator()(int i, int j) const { return e[2 * i + j]; }
  static Mat2 identity(std::shared_ptr<const Field> f, Var v);
  static Mat2 scalar(const RatFunc& s);
  bool operator==(const Mat2& o) const { return e == o.e; }
};

Mat2 mul2(const Mat2& m, const Mat2& n);
Mat2 add2(const Mat2& m, const Mat2& n);
Mat2 scale2(const RatFunc& s, const Mat2& m);
RatFunc det2(const Mat2& m);
// Some f with m = f * n, or nullopt. Witness taken from the first nonzero
// entry of n.
std::optional<RatFunc> scalar_eq(const Mat2& m, const Mat2& n);

}  // namespace vhlf
