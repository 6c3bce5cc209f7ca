#ifndef XICHAR_SYMFUNC_HPP
#define XICHAR_SYMFUNC_HPP

#include <map>
#include <stdexcept>
#include <vector>

#include "xichar/alphafn.hpp"
#include "xichar/partition.hpp"

namespace xichar {

// Finite linear combination of power sums p_mu. Zero coefficients are never
// stored. Terms of different weights may coexist.
template <class C>
class PowerSum {
 public:
  using Terms = std::map<Partition, C>;

  PowerSum() = default;
  // c * p_mu
  PowerSum(const Partition& mu, C c) {
    if (!xichar::is_zero(c)) terms_.emplace(mu, std::move(c));
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  // Zero when p_mu is absent.
  C coeff(const Partition& mu) const {
    auto it = terms_.find(mu);
    return it == terms_.end() ? C{} : it->second;
  }
  // Adds c to the coefficient of p_mu.
  void add_term(const Partition& mu, const C& c) {
    if (xichar::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(mu, c);
    if (!inserted) {
      it->second += c;
      if (xichar::is_zero(it->second)) terms_.erase(it);
    }
  }
  // Terms of weight n only.
  PowerSum graded(int n) const {
    PowerSum out;
    for (const auto& [mu, c] : terms_)
      if (mu.weight() == n) out.terms_.emplace(mu, c);
    return out;
  }

  PowerSum& operator+=(const PowerSum& o) {
    for (const auto& [mu, c] : o.terms_) add_term(mu, c);
    return *this;
  }
  PowerSum& operator-=(const PowerSum& o) {
    for (const auto& [mu, c] : o.terms_) add_term(mu, -c);
    return *this;
  }
  template <class S>
  PowerSum& operator*=(const S& scalar) {
    for (auto it = terms_.begin(); it != terms_.end();) {
      it->second *= scalar;
      if (xichar::is_zero(it->second)) it = terms_.erase(it);
      else ++it;
    }
    return *this;
  }
  PowerSum operator-() const {
    PowerSum r = *this;
    for (auto& [mu, c] : r.terms_) c = -c;
    return r;
  }

  friend PowerSum operator+(PowerSum a, const PowerSum& b) { return a += b; }
  friend PowerSum operator-(PowerSum a, const PowerSum& b) { return a -= b; }
  friend PowerSum operator*(PowerSum a, const Rational& c) { return a *= c; }
  friend PowerSum operator*(PowerSum a, const AlphaFn& c) { return a *= c; }
  // Bilinear product, p_lambda p_mu = p_{lambda u mu}.
  friend PowerSum operator*(const PowerSum& f, const PowerSum& g) { return psum_multiply(f, g); }
  friend bool operator==(const PowerSum& a, const PowerSum& b) { return a.terms_ == b.terms_; }

  friend PowerSum psum_multiply(const PowerSum& f, const PowerSum& g) {
    PowerSum out;
    for (const auto& [lam, a] : f.terms_)
      for (const auto& [mu, b] : g.terms_) out.add_term(lam.merged(mu), a * b);
    return out;
  }

 private:
  Terms terms_;
};

// Symmetric function with coefficients in Q(alpha).
using SymFn = PowerSum<AlphaFn>;
// Power-sum expansion with coefficients polynomial in x over Q(alpha).
using PowerSumExpr = PowerSum<XPoly>;

template <class C>
bool is_zero(const PowerSum<C>& f) {
  return f.is_zero();
}
template <class C>
bool is_one(const PowerSum<C>& f) {
  return f.size() == 1 && f.terms().begin()->first.empty() && is_one(f.terms().begin()->second);
}
template <class C>
PowerSum<C> unit_like(const PowerSum<C>&) {
  return PowerSum<C>(Partition{}, unit_like(C{}));
}

// Lifts an x-free expansion into PowerSumExpr, multiplying by factor.
PowerSumExpr lift(const SymFn& f, const XPoly& factor);

// <p_lambda, p_mu>_alpha = z_mu alpha^{l(mu)} delta_{lambda,mu}, extended bilinearly.
AlphaFn inner_product(const SymFn& f, const SymFn& g);
// Same, for expansions whose coefficients are free of x (checked).
AlphaFn inner_product(const PowerSumExpr& f, const PowerSumExpr& g);

// Change of basis p_lambda = sum_mu M[lambda][mu] m_mu within weight n. Rows
// and columns follow partitions_of(n).
struct TransitionTable {
  int n = 0;
  std::vector<Partition> basis;
  std::vector<std::vector<Rational>> matrix;

  int index_of(const Partition& mu) const;
  const Rational& at(const Partition& lam, const Partition& mu) const {
    return matrix[static_cast<size_t>(index_of(lam))][static_cast<size_t>(index_of(mu))];
  }
};

// Cached; safe to call from several threads.
const TransitionTable& power_to_monomial(int n);
// The inverse change of basis: m_mu = sum_lambda Inv[mu][lambda] p_lambda.
const TransitionTable& monomial_to_power(int n);

// Monomial coefficients of a weight-n function given in power sums.
std::vector<AlphaFn> to_monomial_basis(const SymFn& f, int n);

}  // namespace xichar

#endif
