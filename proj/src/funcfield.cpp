#include "vhlf/funcfield.hpp"

#include <sstream>

#include "vhlf/errors.hpp"

namespace vhlf {

char var_name(Var v) noexcept {
  switch (v) {
    case Var::t: return 't';
    case Var::z: return 'z';
    case Var::y: return 'y';
  }
  return '?';
}

Poly::Poly(std::shared_ptr<const Field> f, Var v) : field_(std::move(f)), var_(v) {}

Poly::Poly(std::shared_ptr<const Field> f, Var v, std::vector<Fq> coeffs)
    : field_(std::move(f)), var_(v), coeffs_(std::move(coeffs)) {
  trim();
}

Poly Poly::constant(std::shared_ptr<const Field> f, Var v, Fq a) {
  return Poly(std::move(f), v, {a});
}

Poly Poly::x(std::shared_ptr<const Field> f, Var v) {
  const Fq one = f->one();
  const Fq zero = f->zero();
  return Poly(std::move(f), v, {zero, one});
}

Poly Poly::linear(std::shared_ptr<const Field> f, Var v, Fq root) {
  const Fq one = f->one();
  const Fq neg = f->neg(root);
  return Poly(std::move(f), v, {neg, one});
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == field_->zero()) coeffs_.pop_back();
}

void Poly::check_compatible(const Poly& o) const {
  if (field_.get() != o.field_.get() && field_->q() != o.field_->q()) {
    throw Error(ErrorCode::FieldMismatch, "polynomials over different fields");
  }
  if (var_ != o.var_) {
    throw Error(ErrorCode::FieldMismatch,
                std::string("polynomials in ") + var_name(var_) + " and " + var_name(o.var_));
  }
}

Fq Poly::lead() const noexcept { return coeffs_.empty() ? field_->zero() : coeffs_.back(); }

Fq Poly::coeff(int i) const noexcept {
  return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[i] : field_->zero();
}

Fq Poly::eval(Fq a) const noexcept {
  Fq acc = field_->zero();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = field_->add(field_->mul(acc, a), *it);
  }
  return acc;
}

Poly Poly::operator+(const Poly& o) const {
  check_compatible(o);
  std::vector<Fq> out(std::max(coeffs_.size(), o.coeffs_.size()), field_->zero());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_->add(coeff(i), o.coeff(i));
  return Poly(field_, var_, std::move(out));
}

Poly Poly::operator-() const {
  std::vector<Fq> out(coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_->neg(coeffs_[i]);
  return Poly(field_, var_, std::move(out));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  check_compatible(o);
  if (is_zero() || o.is_zero()) return Poly(field_, var_);
  std::vector<Fq> out(coeffs_.size() + o.coeffs_.size() - 1, field_->zero());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == field_->zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      out[i + j] = field_->add(out[i + j], field_->mul(coeffs_[i], o.coeffs_[j]));
    }
  }
  return Poly(field_, var_, std::move(out));
}

Poly Poly::scale(Fq s) const {
  std::vector<Fq> out(coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_->mul(s, coeffs_[i]);
  return Poly(field_, var_, std::move(out));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  check_compatible(d);
  if (d.is_zero()) throw Error(ErrorCode::ZeroInput, "polynomial division by zero");
  std::vector<Fq> rem = coeffs_;
  const int dd = d.degree();
  const Fq lead_inv = field_->inv(d.lead());
  std::vector<Fq> quo(std::max(0, degree() - dd + 1), field_->zero());
  for (int i = degree(); i >= dd; --i) {
    const Fq f = field_->mul(rem[i], lead_inv);
    if (f == field_->zero()) continue;
    quo[i - dd] = f;
    for (int j = 0; j <= dd; ++j) {
      rem[i - dd + j] = field_->sub(rem[i - dd + j], field_->mul(f, d.coeffs_[j]));
    }
  }
  return {Poly(field_, var_, std::move(quo)), Poly(field_, var_, std::move(rem))};
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scale(field_->inv(lead()));
}

int Poly::root_multiplicity(Fq a) const {
  if (is_zero()) return RatFunc::kInfiniteOrder;
  const Poly lin = linear(field_, var_, a);
  Poly cur = *this;
  int m = 0;
  while (true) {
    auto [quo, rem] = cur.divmod(lin);
    if (!rem.is_zero()) return m;
    cur = std::move(quo);
    ++m;
  }
}

bool Poly::operator==(const Poly& o) const {
  return var_ == o.var_ && field_->q() == o.field_->q() && coeffs_ == o.coeffs_;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Fq a = coeffs_[i];
    if (a == field_->zero()) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0 || a != field_->one()) os << a.code;
    if (i >= 1) os << var_name(var_);
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// ---------------------------------------------------------------------------

RatFunc::RatFunc(std::shared_ptr<const Field> f, Var v)
    : num_(f, v), den_(Poly::constant(f, v, f->one())) {}

RatFunc::RatFunc(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.field_ptr(), num_.var(), num_.field().one())) {}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorCode::ZeroInput, "rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Poly::constant(den_.field_ptr(), den_.var(), den_.field().one());
    return;
  }
  const Poly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.divmod(g).first;
    den_ = den_.divmod(g).first;
  }
  const Fq li = den_.field().inv(den_.lead());
  num_ = num_.scale(li);
  den_ = den_.scale(li);
}

RatFunc RatFunc::constant(std::shared_ptr<const Field> f, Var v, Fq a) {
  return RatFunc(Poly::constant(std::move(f), v, a));
}

RatFunc RatFunc::x(std::shared_ptr<const Field> f, Var v) { return RatFunc(Poly::x(std::move(f), v)); }

Fq RatFunc::constant_value() const noexcept { return num_.coeff(0); }

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator-() const {
  RatFunc out = *this;
  out.num_ = -num_;
  return out;
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
  if (is_zero() || o.is_zero()) return RatFunc(field_ptr(), var());
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inv(); }

RatFunc RatFunc::scale(Fq s) const {
  RatFunc out = *this;
  if (s == field().zero()) return RatFunc(field_ptr(), var());
  out.num_ = num_.scale(s);
  return out;
}

RatFunc RatFunc::inv() const {
  if (is_zero()) throw Error(ErrorCode::ZeroInput, "inverse of the zero rational function");
  return RatFunc(den_, num_);
}

bool RatFunc::operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

std::string RatFunc::to_string() const {
  if (den_.degree() == 0) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

int ord_at(const RatFunc& f, const Place& v) {
  if (f.is_zero()) return RatFunc::kInfiniteOrder;
  if (v.infinite) return f.den().degree() - f.num().degree();
  return f.num().root_multiplicity(v.point) - f.den().root_multiplicity(v.point);
}

std::optional<Fq> evaluate(const RatFunc& f, Fq a) {
  const Fq d = f.den().eval(a);
  if (d == f.field().zero()) return std::nullopt;
  return f.field().div(f.num().eval(a), d);
}

namespace {

RatFunc horner(const Poly& p, const RatFunc& expr) {
  RatFunc acc(expr.field_ptr(), expr.var());
  for (int i = p.degree(); i >= 0; --i) {
    acc = acc * expr + RatFunc::constant(expr.field_ptr(), expr.var(), p.coeff(i));
  }
  return acc;
}

}  // namespace

RatFunc substitute(const RatFunc& f, const RatFunc& expr) {
  const RatFunc den = horner(f.den(), expr);
  if (den.is_zero()) {
    throw Error(ErrorCode::DegenerateComposition,
                "denominator " + f.den().to_string() + " vanishes on " + expr.to_string());
  }
  return horner(f.num(), expr) / den;
}

Mat2 Mat2::identity(std::shared_ptr<const Field> f, Var v) {
  const RatFunc one = RatFunc::constant(f, v, f->one());
  const RatFunc zero(f, v);
  return Mat2{{one, zero, zero, one}};
}

Mat2 Mat2::scalar(const RatFunc& s) {
  const RatFunc zero(s.field_ptr(), s.var());
  return Mat2{{s, zero, zero, s}};
}

Mat2 mul2(const Mat2& m, const Mat2& n) {
  return Mat2{{m(0, 0) * n(0, 0) + m(0, 1) * n(1, 0), m(0, 0) * n(0, 1) + m(0, 1) * n(1, 1),
               m(1, 0) * n(0, 0) + m(1, 1) * n(1, 0), m(1, 0) * n(0, 1) + m(1, 1) * n(1, 1)}};
}

Mat2 add2(const Mat2& m, const Mat2& n) {
  return Mat2{{m.e[0] + n.e[0], m.e[1] + n.e[1], m.e[2] + n.e[2], m.e[3] + n.e[3]}};
}

Mat2 scale2(const RatFunc& s, const Mat2& m) {
  return Mat2{{s * m.e[0], s * m.e[1], s * m.e[2], s * m.e[3]}};
}

RatFunc det2(const Mat2& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

std::optional<RatFunc> scalar_eq(const Mat2& m, const Mat2& n) {
  int pivot = -1;
  for (int i = 0; i < 4; ++i) {
    if (!n.e[i].is_zero()) {
      pivot = i;
      break;
    }
  }
  if (pivot < 0) return std::nullopt;
  const RatFunc f = m.e[pivot] / n.e[pivot];
  if (f.is_zero()) return std::nullopt;
  for (int i = 0; i < 4; ++i) {
    if (!(m.e[i] == f * n.e[i])) return std::nullopt;
  }
  return f;
}

}  // namespace vhlf
