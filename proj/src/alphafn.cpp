#include "xichar/alphafn.hpp"

#include <sstream>
#include <stdexcept>

namespace xichar {

namespace {

bool is_unit_den(const UniPoly& d) { return d.degree() == 0 && d.leading() == 1; }

void check_alpha(const UniPoly& p) {
  if (p.var() != Var::alpha) throw VariableMismatch(Var::alpha, p.var());
}

}  // namespace

AlphaFn::AlphaFn(UniPoly num) : num_(std::move(num)), den_(UniPoly::constant(Var::alpha, 1)) {
  check_alpha(num_);
}

AlphaFn::AlphaFn(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
  check_alpha(num_);
  check_alpha(den_);
  if (den_.is_zero()) throw std::domain_error("AlphaFn with zero denominator");
  normalize();
}

AlphaFn AlphaFn::alpha_pow(int k) {
  if (k >= 0) return AlphaFn(UniPoly::monomial(Var::alpha, 1, k));
  return AlphaFn(UniPoly::constant(Var::alpha, 1), UniPoly::monomial(Var::alpha, 1, -k));
}

void AlphaFn::normalize() {
  if (num_.is_zero()) {
    den_ = UniPoly::constant(Var::alpha, 1);
    return;
  }
  if (den_.degree() > 0) {
    UniPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divmod(num_, g).first;
      den_ = divmod(den_, g).first;
    }
  }
  Rational lead = den_.leading();
  if (lead != 1) {
    Rational inv = 1 / lead;
    num_ *= inv;
    den_ *= inv;
  }
}

const UniPoly& AlphaFn::as_polynomial() const {
  if (!is_polynomial()) throw std::domain_error("not a polynomial in alpha: " + pretty());
  return num_;
}

Rational AlphaFn::evaluate(const Rational& alpha) const {
  Rational d = den_.evaluate(alpha);
  if (sgn(d) == 0) throw std::domain_error("AlphaFn pole at alpha = " + to_string(alpha));
  return num_.evaluate(alpha) / d;
}

AlphaFn AlphaFn::operator-() const {
  AlphaFn r = *this;
  r.num_ = -r.num_;
  return r;
}

AlphaFn& AlphaFn::operator+=(const AlphaFn& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!is_unit_den(den_)) normalize();
    else if (num_.is_zero()) normalize();
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

AlphaFn& AlphaFn::operator-=(const AlphaFn& o) { return *this += -o; }

AlphaFn& AlphaFn::operator*=(const AlphaFn& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = AlphaFn();
  num_ *= o.num_;
  if (is_unit_den(den_) && is_unit_den(o.den_)) return *this;
  den_ *= o.den_;
  normalize();
  return *this;
}

AlphaFn& AlphaFn::operator/=(const AlphaFn& o) {
  if (o.is_zero()) throw std::domain_error("AlphaFn division by zero");
  if (is_zero()) return *this;
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

AlphaFn& AlphaFn::operator*=(const Rational& c) {
  num_ *= c;
  if (num_.is_zero()) den_ = UniPoly::constant(Var::alpha, 1);
  return *this;
}

std::string AlphaFn::pretty() const {
  if (is_polynomial()) return num_.pretty();
  return "(" + num_.pretty() + ")/(" + den_.pretty() + ")";
}

XPoly::XPoly(std::vector<AlphaFn> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

XPoly::XPoly(const AlphaFn& c) {
  if (!c.is_zero()) coeffs_.push_back(c);
}

XPoly XPoly::monomial(const AlphaFn& c, int degree) {
  std::vector<AlphaFn> cs(static_cast<size_t>(degree) + 1);
  cs.back() = c;
  return XPoly(std::move(cs));
}

void XPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

AlphaFn XPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return AlphaFn();
  return coeffs_[static_cast<size_t>(k)];
}

AlphaFn XPoly::evaluate(const Rational& x) const {
  AlphaFn acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

UniPoly XPoly::at_alpha(const Rational& alpha) const {
  std::vector<Rational> cs;
  cs.reserve(coeffs_.size());
  for (const auto& c : coeffs_) cs.push_back(c.evaluate(alpha));
  return UniPoly(Var::x, std::move(cs));
}

XPoly XPoly::operator-() const {
  XPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

XPoly& XPoly::operator+=(const XPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

XPoly& XPoly::operator-=(const XPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

XPoly& XPoly::operator*=(const XPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<AlphaFn> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j) {
      if (o.coeffs_[j].is_zero()) continue;
      out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

XPoly& XPoly::operator*=(const AlphaFn& c) {
  for (auto& a : coeffs_) a *= c;
  trim();
  return *this;
}

XPoly& XPoly::operator*=(const Rational& c) {
  for (auto& a : coeffs_) a *= c;
  trim();
  return *this;
}

std::string XPoly::pretty() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    out << "(" << coeffs_[k].pretty() << ")";
    if (k >= 1) out << "*x";
    if (k > 1) out << "^" << k;
  }
  return out.str();
}

}  // namespace xichar
