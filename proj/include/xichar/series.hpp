#ifndef XICHAR_SERIES_HPP
#define XICHAR_SERIES_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "xichar/poly.hpp"

namespace xichar {

// Power series in one variable truncated at max_order. The coefficient ring C
// must provide +, -, *, scaling by Rational, a zero default value, and the
// free functions is_zero/is_one/unit_like.
template <class C>
class TruncatedSeries {
 public:
  TruncatedSeries(Var var, int max_order) : var_(var), coeffs_(check_order(max_order) + 1) {}
  TruncatedSeries(Var var, std::vector<C> coeffs) : var_(var), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("series needs at least one coefficient");
  }

  Var var() const { return var_; }
  int max_order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const C& operator[](int k) const { return coeffs_.at(static_cast<size_t>(k)); }
  C& operator[](int k) { return coeffs_.at(static_cast<size_t>(k)); }
  const std::vector<C>& coeffs() const { return coeffs_; }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    check_compatible(o);
    for (size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    check_compatible(o);
    for (size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
  }
  template <class S>
  TruncatedSeries& scale(const S& c) {
    for (auto& a : coeffs_) a *= c;
    return *this;
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check_compatible(b);
    TruncatedSeries out(a.var_, a.max_order());
    for (int i = 0; i <= a.max_order(); ++i) {
      if (is_zero(a[i])) continue;
      for (int j = 0; i + j <= a.max_order(); ++j) {
        if (is_zero(b[j])) continue;
        out[i + j] += a[i] * b[j];
      }
    }
    return out;
  }
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.var_ == b.var_ && a.coeffs_ == b.coeffs_;
  }

 private:
  static size_t check_order(int max_order) {
    if (max_order < 0) throw std::invalid_argument("negative truncation order");
    return static_cast<size_t>(max_order);
  }
  void check_compatible(const TruncatedSeries& o) const {
    if (o.var_ != var_) throw VariableMismatch(var_, o.var_);
    if (o.coeffs_.size() != coeffs_.size()) throw std::invalid_argument("truncation order mismatch");
  }

  Var var_;
  std::vector<C> coeffs_;
};

/// log s for a series with constant term 1, to the same order.
///
/// Uses n L_n = n s_n - sum_{k=1}^{n-1} k L_k s_{n-k}, which is the
/// coefficient form of L' s = s' and agrees term by term with the Mercator
/// expansion log(1+u) = sum (-1)^{m+1} u^m / m.
template <class C>
TruncatedSeries<C> series_log(const TruncatedSeries<C>& s) {
  if (!is_one(s[0])) throw std::domain_error("series_log: constant term is not 1");
  TruncatedSeries<C> out(s.var(), s.max_order());
  for (int n = 1; n <= s.max_order(); ++n) {
    C acc = s[n] * Rational(n);
    for (int k = 1; k < n; ++k) {
      if (is_zero(out[k]) || is_zero(s[n - k])) continue;
      acc -= (out[k] * s[n - k]) * Rational(k);
    }
    out[n] = acc * Rational(1, n);
  }
  return out;
}

// exp s for a series with zero constant term.
template <class C>
TruncatedSeries<C> series_exp(const TruncatedSeries<C>& s) {
  if (!is_zero(s[0])) throw std::domain_error("series_exp: constant term is not 0");
  TruncatedSeries<C> out(s.var(), s.max_order());
  // The unit of the coefficient ring, borrowed from the shape of s.
  out[0] = unit_like(s[0]);
  for (int n = 1; n <= s.max_order(); ++n) {
    C acc{};
    for (int k = 1; k <= n; ++k) {
      if (is_zero(s[k]) || is_zero(out[n - k])) continue;
      acc += (s[k] * out[n - k]) * Rational(k);
    }
    out[n] = acc * Rational(1, n);
  }
  return out;
}

// z d/dz: the coefficient of z^n is multiplied by n.
template <class C>
TruncatedSeries<C> series_z_ddz(const TruncatedSeries<C>& s) {
  TruncatedSeries<C> out = s;
  for (int n = 0; n <= s.max_order(); ++n) {
    if (n == 0) out[0] = C{};
    else out[n] = s[n] * Rational(n);
  }
  return out;
}

}  // namespace xichar

#endif
