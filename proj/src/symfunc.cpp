#include "xichar/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>

namespace xichar {

PowerSumExpr lift(const SymFn& f, const XPoly& factor) {
  PowerSumExpr out;
  for (const auto& [mu, c] : f.terms()) out.add_term(mu, factor * c);
  return out;
}

AlphaFn inner_product(const SymFn& f, const SymFn& g) {
  AlphaFn acc;
  const auto& small = f.size() <= g.size() ? f : g;
  const auto& large = f.size() <= g.size() ? g : f;
  for (const auto& [mu, a] : small.terms()) {
    auto it = large.terms().find(mu);
    if (it == large.terms().end()) continue;
    acc += a * it->second * AlphaFn::alpha_pow(mu.length()) * Rational(z_of(mu));
  }
  return acc;
}

namespace {

SymFn drop_x(const PowerSumExpr& f) {
  SymFn out;
  for (const auto& [mu, c] : f.terms()) {
    if (c.degree() > 0) throw std::invalid_argument("inner_product: coefficient depends on x");
    out.add_term(mu, c.coeff(0));
  }
  return out;
}

// Expands p_lambda in n variables and reads off the coefficient of x^mu for
// each partition mu of n (exponent vectors padded with zeros).
std::vector<Rational> expand_power_product(const Partition& lam, int n,
                                           const std::vector<Partition>& basis) {
  using Exponents = std::vector<int>;
  std::map<Exponents, Integer> poly{{Exponents(static_cast<size_t>(n), 0), Integer(1)}};
  for (int part : lam.parts()) {
    std::map<Exponents, Integer> next;
    for (const auto& [e, c] : poly) {
      for (int v = 0; v < n; ++v) {
        Exponents f = e;
        f[static_cast<size_t>(v)] += part;
        next[f] += c;
      }
    }
    poly = std::move(next);
  }
  std::vector<Rational> row;
  row.reserve(basis.size());
  for (const auto& mu : basis) {
    Exponents e(static_cast<size_t>(n), 0);
    std::copy(mu.parts().begin(), mu.parts().end(), e.begin());
    auto it = poly.find(e);
    row.emplace_back(it == poly.end() ? Integer(0) : it->second);
  }
  return row;
}

TransitionTable build_power_to_monomial(int n) {
  TransitionTable t;
  t.n = n;
  t.basis = partitions_of(n);
  for (const auto& lam : t.basis) t.matrix.push_back(expand_power_product(lam, n, t.basis));
  return t;
}

// Gauss-Jordan inverse over Q.
TransitionTable invert(const TransitionTable& fwd) {
  const size_t p = fwd.basis.size();
  std::vector<std::vector<Rational>> a = fwd.matrix;
  std::vector<std::vector<Rational>> inv(p, std::vector<Rational>(p));
  for (size_t i = 0; i < p; ++i) inv[i][i] = 1;
  for (size_t col = 0; col < p; ++col) {
    size_t piv = col;
    while (piv < p && sgn(a[piv][col]) == 0) ++piv;
    if (piv == p) throw std::logic_error("power-to-monomial transition is singular");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rational scale = 1 / a[col][col];
    for (size_t j = 0; j < p; ++j) {
      a[col][j] *= scale;
      inv[col][j] *= scale;
    }
    for (size_t r = 0; r < p; ++r) {
      if (r == col || sgn(a[r][col]) == 0) continue;
      Rational f = a[r][col];
      for (size_t j = 0; j < p; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  // fwd: row lambda gives p_lambda in m. inv of that matrix maps m back to p:
  // m_mu = sum_lambda inv[mu][lambda] p_lambda.
  TransitionTable t;
  t.n = fwd.n;
  t.basis = fwd.basis;
  t.matrix = std::move(inv);
  return t;
}

template <class Build>
const TransitionTable& cached(std::map<int, std::unique_ptr<TransitionTable>>& cache, std::mutex& m,
                              int n, Build build) {
  std::lock_guard lock(m);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<TransitionTable>(build());
  return *slot;
}

}  // namespace

AlphaFn inner_product(const PowerSumExpr& f, const PowerSumExpr& g) {
  return inner_product(drop_x(f), drop_x(g));
}

int TransitionTable::index_of(const Partition& mu) const {
  // basis is in decreasing order
  auto it = std::lower_bound(basis.begin(), basis.end(), mu, std::greater<>());
  if (it == basis.end() || *it != mu) throw std::out_of_range("partition not in basis: " + mu.to_string());
  return static_cast<int>(it - basis.begin());
}

const TransitionTable& power_to_monomial(int n) {
  static std::map<int, std::unique_ptr<TransitionTable>> cache;
  static std::mutex m;
  if (n < 0) throw std::invalid_argument("power_to_monomial: negative weight");
  return cached(cache, m, n, [n] { return build_power_to_monomial(n); });
}

const TransitionTable& monomial_to_power(int n) {
  static std::map<int, std::unique_ptr<TransitionTable>> cache;
  static std::mutex m;
  const TransitionTable& fwd = power_to_monomial(n);
  return cached(cache, m, n, [&fwd] { return invert(fwd); });
}

std::vector<AlphaFn> to_monomial_basis(const SymFn& f, int n) {
  const auto& t = power_to_monomial(n);
  std::vector<AlphaFn> out(t.basis.size());
  for (const auto& [lam, c] : f.terms()) {
    if (lam.weight() != n) throw std::invalid_argument("to_monomial_basis: mixed weights");
    const auto& row = t.matrix[static_cast<size_t>(t.index_of(lam))];
    for (size_t k = 0; k < row.size(); ++k)
      if (sgn(row[k]) != 0) out[k] += c * row[k];
  }
  return out;
}

}  // namespace xichar
