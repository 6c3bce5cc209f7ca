#ifndef XICHAR_POLY_HPP
#define XICHAR_POLY_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "xichar/rational.hpp"

namespace xichar {

// Polynomial variables used across the library. alpha is the Jack parameter,
// alpha = 1/gamma = b + 1.
enum class Var { b, x, N, t, z, alpha };

const char* var_name(Var v);

// Raised when two polynomials in different variables meet in one operation.
class VariableMismatch : public std::logic_error {
 public:
  VariableMismatch(Var lhs, Var rhs);
};

// Dense univariate polynomial over Q. Coefficients are indexed by degree and
// trailing zeros are trimmed, so the zero polynomial has no coefficients.
class UniPoly {
 public:
  explicit UniPoly(Var var) : var_(var) {}
  UniPoly(Var var, std::vector<Rational> coeffs);

  static UniPoly constant(Var var, const Rational& c);
  static UniPoly monomial(Var var, const Rational& c, int degree);
  // The variable itself.
  static UniPoly identity(Var var) { return monomial(var, 1, 1); }

  Var var() const { return var_; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  // Zero beyond the degree.
  Rational coeff(int k) const;
  const Rational& leading() const;

  Rational evaluate(const Rational& at) const;
  UniPoly derivative() const;
  UniPoly monic() const;
  // The same coefficient list under another variable name. Used for the
  // documented renamings only (e.g. alpha read as 1/gamma).
  UniPoly retagged(Var var) const { return UniPoly(var, coeffs_); }
  // p(v + shift) expressed in new_var.
  UniPoly shifted(const Rational& shift, Var new_var) const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Rational& c);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.var_ == b.var_ && a.coeffs_ == b.coeffs_;
  }

  // Human-readable form such as "1 + b + 3*b^2".
  std::string pretty() const;

 private:
  void trim();
  void check_var(const UniPoly& o) const {
    if (o.var_ != var_) throw VariableMismatch(var_, o.var_);
  }

  Var var_;
  std::vector<Rational> coeffs_;
};

// Euclidean division over Q. Throws std::domain_error on a zero divisor.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(UniPoly a, UniPoly b);

// Sum of k-th powers 1^k + ... + n^k as a polynomial in N.
UniPoly sum_of_powers_poly(unsigned k);

}  // namespace xichar

#endif
