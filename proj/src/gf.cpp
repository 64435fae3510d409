#include "vhlf/gf.hpp"

#include <algorithm>
#include <numeric>

#include "vhlf/errors.hpp"

namespace vhlf {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

int mod(long long a, int p) {
  long long r = a % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

// Dense polynomials over F_p, low-degree first, used only while building the
// field tables.
using PolyP = std::vector<int>;

void trim(PolyP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PolyP poly_rem(PolyP a, const PolyP& m, int p) {
  trim(a);
  const int dm = static_cast<int>(m.size()) - 1;
  int lead_inv = 1;
  // m is monic in every call site, but keep the general form.
  for (int x = 1; x < p; ++x) {
    if (mod(static_cast<long long>(x) * m.back(), p) == 1) lead_inv = x;
  }
  while (static_cast<int>(a.size()) - 1 >= dm) {
    const int shift = static_cast<int>(a.size()) - 1 - dm;
    const int f = mod(static_cast<long long>(a.back()) * lead_inv, p);
    for (int i = 0; i <= dm; ++i) {
      a[shift + i] = mod(a[shift + i] - static_cast<long long>(f) * m[i], p);
    }
    trim(a);
  }
  return a;
}

std::vector<int> digits(int code, int p, int r) {
  std::vector<int> d(r);
  for (int i = 0; i < r; ++i) {
    d[i] = code % p;
    code /= p;
  }
  return d;
}

// Monic polynomials of degree d over F_p in the canonical order (coefficient
// tuples compared lexicographically, constant term most significant).
std::vector<PolyP> monic_polys(int p, int d) {
  int count = 1;
  for (int i = 0; i < d; ++i) count *= p;
  std::vector<PolyP> out;
  out.reserve(count);
  for (int n = 0; n < count; ++n) {
    PolyP poly(d + 1, 0);
    int x = n;
    for (int i = d - 1; i >= 0; --i) {
      poly[i] = x % p;
      x /= p;
    }
    poly[d] = 1;
    out.push_back(std::move(poly));
  }
  return out;
}

bool irreducible(const PolyP& f, int p) {
  const int deg = static_cast<int>(f.size()) - 1;
  for (int d = 1; 2 * d <= deg; ++d) {
    for (const auto& g : monic_polys(p, d)) {
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::EvenCharacteristic: return "EvenCharacteristic";
    case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::ZeroNorm: return "ZeroNorm";
    case ErrorCode::CoincidentInput: return "CoincidentInput";
    case ErrorCode::DegenerateComposition: return "DegenerateComposition";
    case ErrorCode::WrongNorm: return "WrongNorm";
    case ErrorCode::IntegralityFailure: return "IntegralityFailure";
    case ErrorCode::PoleAtOne: return "PoleAtOne";
    case ErrorCode::DedupMismatch: return "DedupMismatch";
    case ErrorCode::SchemaViolation: return "SchemaViolation";
    case ErrorCode::InvolutionBroken: return "InvolutionBroken";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::InternalNonunit: return "InternalNonunit";
    case ErrorCode::TransportFailure: return "TransportFailure";
    case ErrorCode::CountMismatch: return "CountMismatch";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
  }
  return "Unknown";
}

Field make_field(int p, int r, int max_q) {
  if (p == 2) throw Error(ErrorCode::EvenCharacteristic, "characteristic 2 is not supported");
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (r < 1) throw Error(ErrorCode::InvalidParameter, "extension degree must be >= 1");
  long long q = 1;
  for (int i = 0; i < r; ++i) {
    q *= p;
    if (q > max_q) {
      throw Error(ErrorCode::DegreeTooLarge,
                  std::to_string(p) + "^" + std::to_string(r) + " exceeds bound " +
                      std::to_string(max_q));
    }
  }

  Field f;
  f.p_ = p;
  f.r_ = r;
  f.q_ = static_cast<int>(q);
  if (r == 1) {
    f.modulus_ = {0, 1};
  } else {
    for (auto& cand : monic_polys(p, r)) {
      if (irreducible(cand, p)) {
        f.modulus_ = cand;
        break;
      }
    }
  }

  const int n = f.q_;
  f.add_.assign(static_cast<std::size_t>(n) * n, 0);
  f.mul_.assign(static_cast<std::size_t>(n) * n, 0);
  f.neg_.assign(n, 0);
  f.inv_.assign(n, 0);

  std::vector<std::vector<int>> dig(n);
  for (int a = 0; a < n; ++a) dig[a] = digits(a, p, r);
  auto encode = [&](const std::vector<int>& d) {
    int code = 0;
    for (int i = r - 1; i >= 0; --i) code = code * p + d[i];
    return code;
  };

  for (int a = 0; a < n; ++a) {
    std::vector<int> nd(r);
    for (int i = 0; i < r; ++i) nd[i] = mod(-dig[a][i], p);
    f.neg_[a] = static_cast<std::uint16_t>(encode(nd));
    for (int b = 0; b < n; ++b) {
      std::vector<int> s(r);
      for (int i = 0; i < r; ++i) s[i] = mod(dig[a][i] + dig[b][i], p);
      f.add_[static_cast<std::size_t>(a) * n + b] = static_cast<std::uint16_t>(encode(s));

      PolyP prod(2 * r - 1, 0);
      for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) {
          prod[i + j] = mod(prod[i + j] + static_cast<long long>(dig[a][i]) * dig[b][j], p);
        }
      }
      PolyP red = r == 1 ? prod : poly_rem(prod, f.modulus_, p);
      red.resize(r, 0);
      f.mul_[static_cast<std::size_t>(a) * n + b] = static_cast<std::uint16_t>(encode(red));
    }
  }
  for (int a = 1; a < n; ++a) {
    for (int b = 1; b < n; ++b) {
      if (f.mul_[static_cast<std::size_t>(a) * n + b] == 1) {
        f.inv_[a] = static_cast<std::uint16_t>(b);
        break;
      }
    }
  }

  // Canonical rank: read the digit vector with the constant coefficient as
  // the most significant digit.
  f.rank_.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    int key = 0;
    for (int i = 0; i < r; ++i) key = key * p + dig[a][i];
    f.rank_[a] = key;
  }
  f.canonical_.resize(n);
  for (int a = 0; a < n; ++a) f.canonical_[f.rank_[a]] = Fq{static_cast<std::uint16_t>(a)};
  return f;
}

Field make_field_for_order(int q, int max_q) {
  if (q < 3) throw Error(ErrorCode::InvalidParameter, "q must be an odd prime power >= 3");
  int p = 0;
  for (int d = 2; d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  int r = 0;
  int rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++r;
  }
  if (rest != 1) throw Error(ErrorCode::InvalidParameter, std::to_string(q) + " is not a prime power");
  if (p == 2) throw Error(ErrorCode::EvenCharacteristic, "q = " + std::to_string(q) + " is even");
  return make_field(p, r, max_q);
}

Fq Field::from_int(long long n) const {
  return Fq{static_cast<std::uint16_t>(mod(n, p_))};
}

Fq Field::element(int code) const {
  if (code < 0 || code >= q_) {
    throw Error(ErrorCode::InvalidParameter,
                "field element encoding " + std::to_string(code) + " outside [0, " +
                    std::to_string(q_) + ")");
  }
  return Fq{static_cast<std::uint16_t>(code)};
}

Fq Field::from_coeffs(std::span<const int> coeffs) const {
  int code = 0;
  for (int i = r_ - 1; i >= 0; --i) {
    const int c = i < static_cast<int>(coeffs.size()) ? mod(coeffs[i], p_) : 0;
    code = code * p_ + c;
  }
  return Fq{static_cast<std::uint16_t>(code)};
}

std::vector<int> Field::coeffs(Fq a) const { return digits(a.code, p_, r_); }

Fq Field::inv(Fq a) const {
  if (a.code == 0) throw Error(ErrorCode::ZeroInput, "inverse of zero in F_q");
  return Fq{inv_[a.code]};
}

Fq Field::pow(Fq a, std::uint64_t e) const noexcept {
  Fq result = one();
  while (e > 0) {
    if (e & 1U) result = mul(result, a);
    a = mul(a, a);
    e >>= 1U;
  }
  return result;
}

bool Field::is_square(Fq a) const noexcept {
  if (a.code == 0) return true;
  return pow(a, static_cast<std::uint64_t>(q_ - 1) / 2) == one();
}

Fq find_nonsquare(const Field& f) {
  for (Fq a : f.elements()) {
    if (a != f.zero() && !f.is_square(a)) return a;
  }
  // Unreachable for odd q: half of F_q^* are non-squares.
  throw Error(ErrorCode::InvalidParameter, "no non-square found");
}

// ---------------------------------------------------------------------------

QuadField::QuadField(std::shared_ptr<const Field> base, Fq c) : base_(std::move(base)), c_(c) {
  if (c_ == base_->zero() || base_->is_square(c_)) {
    throw Error(ErrorCode::InvalidParameter, "c = " + base_->to_string(c_) + " is not a non-square");
  }
}

Fq2 QuadField::add(Fq2 a, Fq2 b) const noexcept {
  return {base_->add(a.w0, b.w0), base_->add(a.w1, b.w1)};
}

Fq2 QuadField::sub(Fq2 a, Fq2 b) const noexcept {
  return {base_->sub(a.w0, b.w0), base_->sub(a.w1, b.w1)};
}

Fq2 QuadField::neg(Fq2 a) const noexcept { return {base_->neg(a.w0), base_->neg(a.w1)}; }

Fq2 QuadField::mul(Fq2 a, Fq2 b) const noexcept {
  const Field& f = *base_;
  const Fq r0 = f.add(f.mul(a.w0, b.w0), f.mul(c_, f.mul(a.w1, b.w1)));
  const Fq r1 = f.add(f.mul(a.w0, b.w1), f.mul(a.w1, b.w0));
  return {r0, r1};
}

Fq2 QuadField::scale(Fq s, Fq2 a) const noexcept {
  return {base_->mul(s, a.w0), base_->mul(s, a.w1)};
}

Fq QuadField::norm(Fq2 a) const noexcept {
  const Field& f = *base_;
  return f.sub(f.mul(a.w0, a.w0), f.mul(c_, f.mul(a.w1, a.w1)));
}

Fq2 QuadField::inv(Fq2 a) const {
  if (a == zero()) throw Error(ErrorCode::ZeroInput, "inverse of zero in F_q[Z]");
  return scale(base_->inv(norm(a)), conj(a));
}

Fq2 QuadField::pow(Fq2 a, std::uint64_t e) const noexcept {
  Fq2 result = one();
  while (e > 0) {
    if (e & 1U) result = mul(result, a);
    a = mul(a, a);
    e >>= 1U;
  }
  return result;
}

Fq2 QuadField::pow(Fq2 a, long long e) const {
  if (e < 0) return pow(inv(a), static_cast<std::uint64_t>(-e));
  return pow(a, static_cast<std::uint64_t>(e));
}

Fq2 QuadField::pe(Fq2 w) const {
  if (w == zero()) throw Error(ErrorCode::ZeroInput, "pe(0) is undefined");
  return div(w, conj(w));
}

Fq2 QuadField::decode(int e) const {
  const int q = base_->q();
  if (e < 0 || e >= q * q) {
    throw Error(ErrorCode::InvalidParameter,
                "F_q[Z] encoding " + std::to_string(e) + " outside [0, q^2)");
  }
  return {base_->element(e % q), base_->element(e / q)};
}

bool QuadField::canonical_less(Fq2 a, Fq2 b) const noexcept {
  const Field& f = *base_;
  if (a.w0 != b.w0) return f.rank(a.w0) < f.rank(b.w0);
  return f.rank(a.w1) < f.rank(b.w1);
}

std::vector<Fq2> QuadField::elements() const {
  std::vector<Fq2> out;
  out.reserve(static_cast<std::size_t>(order()));
  for (Fq a : base_->elements()) {
    for (Fq b : base_->elements()) out.push_back({a, b});
  }
  return out;
}

std::string QuadField::to_string(Fq2 a) const {
  return "(" + std::to_string(a.w0.code) + "," + std::to_string(a.w1.code) + ")";
}

std::string QuadField::pretty(Fq2 a) const {
  const bool has0 = a.w0 != base_->zero();
  const bool has1 = a.w1 != base_->zero();
  if (!has0 && !has1) return "0";
  std::string s;
  if (has0) s += std::to_string(a.w0.code);
  if (has1) {
    if (has0) s += "+";
    if (a.w1 != base_->one()) s += std::to_string(a.w1.code);
    s += "Z";
  }
  return s;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

Fq2 find_generator(const QuadField& k) {
  const auto order = static_cast<std::uint64_t>(k.order() - 1);
  const auto primes = prime_factors(order);
  for (Fq2 w : k.elements()) {
    if (w == k.zero()) continue;
    if (k.pow(w, order) != k.one()) continue;
    bool generator = true;
    for (auto l : primes) {
      if (k.pow(w, order / l) == k.one()) {
        generator = false;
        break;
      }
    }
    if (generator) return w;
  }
  throw Error(ErrorCode::InvalidParameter, "no generator of F_q[Z]^* found");
}

std::vector<Fq2> conic_points(const QuadField& k, Fq u) {
  if (u == k.base().zero()) throw Error(ErrorCode::ZeroNorm, "conic of norm 0");
  std::vector<Fq2> out;
  for (Fq2 w : k.elements()) {
    if (k.norm(w) == u) out.push_back(w);
  }
  return out;
}

}  // namespace vhlf
