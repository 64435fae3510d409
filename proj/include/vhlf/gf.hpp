#pragma once

// Finite fields F_q (q = p^r odd) and the quadratic extension F_q[Z]/(Z^2 - c).
//
// Elements are small value types carrying only their integer encoding
//   e = sum coeffs[i] * p^i,   0 <= e < q,
// while all arithmetic goes through the owning field object, which holds
// precomputed addition and multiplication tables.

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace vhlf {

struct Fq {
  std::uint16_t code = 0;
  friend constexpr auto operator<=>(Fq, Fq) = default;
};

class Field {
 public:
  static constexpr int kDefaultMaxQ = 121;

  int p() const noexcept { return p_; }
  int r() const noexcept { return r_; }
  int q() const noexcept { return q_; }
  // Monic, low-degree coefficient first, length r + 1. For r == 1 this is the
  // placeholder x (prime fields need no modulus).
  const std::vector<int>& modulus() const noexcept { return modulus_; }

  Fq zero() const noexcept { return Fq{0}; }
  Fq one() const noexcept { return Fq{1}; }
  Fq from_int(long long n) const;  // n * 1
  Fq element(int code) const;      // checked decode of the integer encoding
  Fq from_coeffs(std::span<const int> coeffs) const;
  std::vector<int> coeffs(Fq a) const;

  Fq add(Fq a, Fq b) const noexcept { return Fq{add_[idx(a, b)]}; }
  Fq sub(Fq a, Fq b) const noexcept { return add(a, neg(b)); }
  Fq neg(Fq a) const noexcept { return Fq{neg_[a.code]}; }
  Fq mul(Fq a, Fq b) const noexcept { return Fq{mul_[idx(a, b)]}; }
  Fq inv(Fq a) const;  // throws ZeroInput
  Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }
  Fq pow(Fq a, std::uint64_t e) const noexcept;

  // a^((q-1)/2) is +1 on nonzero squares and -1 on non-squares.
  bool is_square(Fq a) const noexcept;

  // Position in the canonical enumeration order: coefficient vectors compared
  // lexicographically with the low-degree coefficient most significant.
  int rank(Fq a) const noexcept { return rank_[a.code]; }
  bool canonical_less(Fq a, Fq b) const noexcept { return rank(a) < rank(b); }
  const std::vector<Fq>& elements() const noexcept { return canonical_; }

  std::string to_string(Fq a) const { return std::to_string(a.code); }

  friend Field make_field(int p, int r, int max_q);

 private:
  Field() = default;
  std::size_t idx(Fq a, Fq b) const noexcept {
    return static_cast<std::size_t>(a.code) * static_cast<std::size_t>(q_) + b.code;
  }

  int p_ = 0;
  int r_ = 0;
  int q_ = 0;
  std::vector<int> modulus_;
  std::vector<std::uint16_t> add_;
  std::vector<std::uint16_t> mul_;
  std::vector<std::uint16_t> neg_;
  std::vector<std::uint16_t> inv_;
  std::vector<int> rank_;
  std::vector<Fq> canonical_;
};

// Builds F_{p^r} over the lexicographically least monic irreducible modulus.
// Errors: NotPrime, EvenCharacteristic, DegreeTooLarge (q above max_q).
Field make_field(int p, int r, int max_q = Field::kDefaultMaxQ);

// Interprets q as a prime power; throws InvalidParameter / EvenCharacteristic.
Field make_field_for_order(int q, int max_q = Field::kDefaultMaxQ);

// Least non-square in canonical order.
Fq find_nonsquare(const Field& f);

struct Fq2 {
  Fq w0;
  Fq w1;
  friend constexpr auto operator<=>(const Fq2&, const Fq2&) = default;
};

// F_q[Z] with Z^2 = c for a fixed non-square c.
class QuadField {
 public:
  QuadField(std::shared_ptr<const Field> base, Fq c);

  const Field& base() const noexcept { return *base_; }
  const std::shared_ptr<const Field>& base_ptr() const noexcept { return base_; }
  Fq c() const noexcept { return c_; }
  int order() const noexcept { return base_->q() * base_->q(); }

  Fq2 zero() const noexcept { return {}; }
  Fq2 one() const noexcept { return {base_->one(), base_->zero()}; }
  Fq2 z() const noexcept { return {base_->zero(), base_->one()}; }
  Fq2 embed(Fq a) const noexcept { return {a, base_->zero()}; }
  bool in_base(Fq2 w) const noexcept { return w.w1 == base_->zero(); }

  Fq2 add(Fq2 a, Fq2 b) const noexcept;
  Fq2 sub(Fq2 a, Fq2 b) const noexcept;
  Fq2 neg(Fq2 a) const noexcept;
  Fq2 mul(Fq2 a, Fq2 b) const noexcept;
  Fq2 scale(Fq s, Fq2 a) const noexcept;
  Fq2 inv(Fq2 a) const;  // throws ZeroInput
  Fq2 div(Fq2 a, Fq2 b) const { return mul(a, inv(b)); }
  Fq2 pow(Fq2 a, std::uint64_t e) const noexcept;
  Fq2 pow(Fq2 a, long long e) const;  // negative exponents invert first

  Fq2 conj(Fq2 a) const noexcept { return {a.w0, base_->neg(a.w1)}; }
  Fq norm(Fq2 a) const noexcept;
  // w / conj(w); throws ZeroInput on w == 0.
  Fq2 pe(Fq2 w) const;

  // Integer encoding e0 + e1 * q.
  int encode(Fq2 a) const noexcept { return a.w0.code + a.w1.code * base_->q(); }
  Fq2 decode(int e) const;
  // Canonical order: (w0, w1) lexicographically in the base canonical order.
  bool canonical_less(Fq2 a, Fq2 b) const noexcept;
  std::vector<Fq2> elements() const;

  std::string to_string(Fq2 a) const;  // "(e0,e1)"
  std::string pretty(Fq2 a) const;     // e.g. "1+2Z"

 private:
  std::shared_ptr<const Field> base_;
  Fq c_;
};

// Least element of multiplicative order q^2 - 1 (canonical order).
Fq2 find_generator(const QuadField& k);

// All w with N(w) = u, in canonical order; throws ZeroNorm for u == 0.
std::vector<Fq2> conic_points(const QuadField& k, Fq u);

// Distinct prime divisors by trial division.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

}  // namespace vhlf
