#include "xichar/poly.hpp"

#include <sstream>

#include "xichar/bernoulli.hpp"

namespace xichar {

const char* var_name(Var v) {
  switch (v) {
    case Var::b: return "b";
    case Var::x: return "x";
    case Var::N: return "N";
    case Var::t: return "t";
    case Var::z: return "z";
    case Var::alpha: return "alpha";
  }
  return "?";
}

VariableMismatch::VariableMismatch(Var lhs, Var rhs)
    : std::logic_error(std::string("polynomial variable mismatch: ") + var_name(lhs) +
                       " vs " + var_name(rhs)) {}

UniPoly::UniPoly(Var var, std::vector<Rational> coeffs) : var_(var), coeffs_(std::move(coeffs)) {
  trim();
}

UniPoly UniPoly::constant(Var var, const Rational& c) { return UniPoly(var, {c}); }

UniPoly UniPoly::monomial(Var var, const Rational& c, int degree) {
  if (degree < 0) throw std::invalid_argument("negative monomial degree");
  std::vector<Rational> cs(static_cast<size_t>(degree) + 1);
  cs.back() = c;
  return UniPoly(var, std::move(cs));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational UniPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<size_t>(k)];
}

const Rational& UniPoly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return coeffs_.back();
}

Rational UniPoly::evaluate(const Rational& at) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

UniPoly UniPoly::derivative() const {
  std::vector<Rational> cs;
  for (size_t k = 1; k < coeffs_.size(); ++k) cs.push_back(coeffs_[k] * static_cast<long>(k));
  return UniPoly(var_, std::move(cs));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / leading();
  return *this * inv;
}

UniPoly UniPoly::shifted(const Rational& shift, Var new_var) const {
  // Horner in the shifted variable: p(v + c) = (...(a_d (v+c) + a_{d-1})(v+c) ...).
  UniPoly result(new_var);
  UniPoly step(new_var, {shift, Rational(1)});
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    result *= step;
    result += UniPoly::constant(new_var, *it);
  }
  return result;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  check_var(o);
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  check_var(o);
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  check_var(o);
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
  Rational tmp;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j) {
      mpq_mul(tmp.get_mpq_t(), coeffs_[i].get_mpq_t(), o.coeffs_[j].get_mpq_t());
      out[i + j] += tmp;
    }
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& a : coeffs_) a *= c;
  return *this;
}

std::string UniPoly::pretty() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << to_string(mag);
      continue;
    }
    if (mag != 1) out << to_string(mag) << "*";
    out << var_name(var_);
    if (k > 1) out << "^" << k;
  }
  return out.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (a.var() != b.var()) throw VariableMismatch(a.var(), b.var());
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) return {UniPoly(a.var()), a};
  std::vector<Rational> quot(static_cast<size_t>(da - db) + 1);
  Rational inv_lead = 1 / b.leading();
  Rational tmp;
  for (int k = da; k >= db; --k) {
    const Rational& top = rem[static_cast<size_t>(k)];
    if (sgn(top) == 0) continue;
    Rational q = top * inv_lead;
    quot[static_cast<size_t>(k - db)] = q;
    for (int j = 0; j <= db; ++j) {
      mpq_mul(tmp.get_mpq_t(), q.get_mpq_t(), b.coeffs()[static_cast<size_t>(j)].get_mpq_t());
      rem[static_cast<size_t>(k - db + j)] -= tmp;
    }
  }
  rem.resize(static_cast<size_t>(db));
  return {UniPoly(a.var(), std::move(quot)), UniPoly(a.var(), std::move(rem))};
}

UniPoly gcd(UniPoly a, UniPoly b) {
  if (a.var() != b.var()) throw VariableMismatch(a.var(), b.var());
  while (!b.is_zero()) {
    UniPoly r = divmod(a, b).second.monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UniPoly sum_of_powers_poly(unsigned k) {
  // sum_{j=1}^n j^k = 1/(k+1) sum_{r=1}^{k+1} C(k+1, r) B_{k+1-r} (-1)^{k+1-r} n^r
  std::vector<Rational> cs(k + 2);
  for (unsigned r = 1; r <= k + 1; ++r) {
    Rational term = Rational(binomial(k + 1, r)) * bernoulli(k + 1 - r);
    if ((k + 1 - r) % 2 == 1) term = -term;
    cs[r] = term / (k + 1);
  }
  return UniPoly(Var::N, std::move(cs));
}

}  // namespace xichar
