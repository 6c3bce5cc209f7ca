#ifndef XICHAR_ALPHAFN_HPP
#define XICHAR_ALPHAFN_HPP

#include <string>
#include <vector>

#include "xichar/poly.hpp"

namespace xichar {

// Element of Q(alpha) in canonical form: gcd(num, den) = 1 and den monic, so
// two equal functions have identical representations.
class AlphaFn {
 public:
  AlphaFn() : num_(Var::alpha), den_(UniPoly::constant(Var::alpha, 1)) {}
  AlphaFn(const Rational& c)  // NOLINT(google-explicit-constructor)
      : num_(UniPoly::constant(Var::alpha, c)), den_(UniPoly::constant(Var::alpha, 1)) {}
  AlphaFn(long c) : AlphaFn(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  explicit AlphaFn(UniPoly num);
  AlphaFn(UniPoly num, UniPoly den);

  // alpha^k, k may be negative.
  static AlphaFn alpha_pow(int k);

  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  // Numerator, after checking that the denominator is 1.
  const UniPoly& as_polynomial() const;
  // Throws std::domain_error if the denominator vanishes at the point.
  Rational evaluate(const Rational& alpha) const;

  AlphaFn operator-() const;
  AlphaFn& operator+=(const AlphaFn& o);
  AlphaFn& operator-=(const AlphaFn& o);
  AlphaFn& operator*=(const AlphaFn& o);
  AlphaFn& operator/=(const AlphaFn& o);
  AlphaFn& operator*=(const Rational& c);

  friend AlphaFn operator+(AlphaFn a, const AlphaFn& b) { return a += b; }
  friend AlphaFn operator-(AlphaFn a, const AlphaFn& b) { return a -= b; }
  friend AlphaFn operator*(AlphaFn a, const AlphaFn& b) { return a *= b; }
  friend AlphaFn operator/(AlphaFn a, const AlphaFn& b) { return a /= b; }
  friend AlphaFn operator*(AlphaFn a, const Rational& c) { return a *= c; }
  friend AlphaFn operator*(const Rational& c, AlphaFn a) { return a *= c; }
  friend bool operator==(const AlphaFn& a, const AlphaFn& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string pretty() const;

 private:
  void normalize();

  UniPoly num_;
  UniPoly den_;
};

inline bool is_zero(const AlphaFn& a) { return a.is_zero(); }
inline bool is_one(const AlphaFn& a) { return a == AlphaFn(1); }
inline AlphaFn unit_like(const AlphaFn&) { return AlphaFn(1); }

// Polynomial in the face marker x with coefficients in Q(alpha).
class XPoly {
 public:
  XPoly() = default;
  explicit XPoly(std::vector<AlphaFn> coeffs);
  XPoly(const AlphaFn& c);  // NOLINT(google-explicit-constructor)

  static XPoly monomial(const AlphaFn& c, int degree);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<AlphaFn>& coeffs() const { return coeffs_; }
  AlphaFn coeff(int k) const;
  // Substitute x -> N.
  AlphaFn evaluate(const Rational& x) const;
  // Coefficient-wise evaluation at a value of alpha.
  UniPoly at_alpha(const Rational& alpha) const;

  XPoly operator-() const;
  XPoly& operator+=(const XPoly& o);
  XPoly& operator-=(const XPoly& o);
  XPoly& operator*=(const XPoly& o);
  XPoly& operator*=(const AlphaFn& c);
  XPoly& operator*=(const Rational& c);

  friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
  friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
  friend XPoly operator*(XPoly a, const XPoly& b) { return a *= b; }
  friend XPoly operator*(XPoly a, const AlphaFn& c) { return a *= c; }
  friend XPoly operator*(XPoly a, const Rational& c) { return a *= c; }
  friend bool operator==(const XPoly& a, const XPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string pretty() const;

 private:
  void trim();
  std::vector<AlphaFn> coeffs_;
};

inline bool is_zero(const XPoly& p) { return p.is_zero(); }
inline bool is_one(const XPoly& p) { return p.degree() == 0 && is_one(p.coeff(0)); }
inline XPoly unit_like(const XPoly&) { return XPoly(AlphaFn(1)); }

}  // namespace xichar

#endif
