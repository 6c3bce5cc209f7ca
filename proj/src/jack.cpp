#include "xichar/jack.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <sstream>

namespace xichar {

namespace {

// Reduced row echelon form of an augmented rational system. Returns the
// particular solution (free variables at 0) and one null-space vector per
// free column, or nullopt when inconsistent.
struct AffineSolution {
  std::vector<Rational> particular;
  std::vector<std::vector<Rational>> directions;
};

std::optional<AffineSolution> solve_rational(std::vector<std::vector<Rational>> rows, size_t unknowns) {
  std::vector<size_t> pivot_cols;
  size_t r = 0;
  for (size_t col = 0; col < unknowns && r < rows.size(); ++col) {
    size_t piv = r;
    while (piv < rows.size() && sgn(rows[piv][col]) == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    Rational inv = 1 / rows[r][col];
    for (auto& v : rows[r]) v *= inv;
    for (size_t o = 0; o < rows.size(); ++o) {
      if (o == r || sgn(rows[o][col]) == 0) continue;
      Rational f = rows[o][col];
      for (size_t j = col; j <= unknowns; ++j) rows[o][j] -= f * rows[r][j];
    }
    pivot_cols.push_back(col);
    ++r;
  }
  for (size_t o = r; o < rows.size(); ++o)
    if (sgn(rows[o][unknowns]) != 0) return std::nullopt;

  AffineSolution sol;
  sol.particular.assign(unknowns, 0);
  for (size_t k = 0; k < pivot_cols.size(); ++k) sol.particular[pivot_cols[k]] = rows[k][unknowns];
  std::vector<bool> is_pivot(unknowns, false);
  for (size_t c : pivot_cols) is_pivot[c] = true;
  for (size_t f = 0; f < unknowns; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> dir(unknowns, 0);
    dir[f] = 1;
    for (size_t k = 0; k < pivot_cols.size(); ++k) dir[pivot_cols[k]] = -rows[k][f];
    sol.directions.push_back(std::move(dir));
  }
  return sol;
}

// Square system A tau = rhs over Q(alpha); nullopt if singular.
std::optional<std::vector<AlphaFn>> solve_alpha(std::vector<std::vector<AlphaFn>> a, std::vector<AlphaFn> rhs) {
  const size_t n = rhs.size();
  for (size_t col = 0; col < n; ++col) {
    // prefer the pivot of lowest numerator+denominator degree
    size_t piv = n;
    int best = 0;
    for (size_t r = col; r < n; ++r) {
      if (a[r][col].is_zero()) continue;
      int cost = a[r][col].num().degree() + a[r][col].den().degree();
      if (piv == n || cost < best) {
        piv = r;
        best = cost;
      }
    }
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(rhs[piv], rhs[col]);
    for (size_t r = col + 1; r < n; ++r) {
      if (a[r][col].is_zero()) continue;
      AlphaFn f = a[r][col] / a[col][col];
      for (size_t j = col; j < n; ++j)
        if (!a[col][j].is_zero()) a[r][j] -= f * a[col][j];
      rhs[r] -= f * rhs[col];
    }
  }
  std::vector<AlphaFn> x(n);
  for (size_t i = n; i-- > 0;) {
    AlphaFn acc = rhs[i];
    for (size_t j = i + 1; j < n; ++j)
      if (!a[i][j].is_zero()) acc -= a[i][j] * x[j];
    x[i] = acc / a[i][i];
  }
  return x;
}

JackRecord finish_record(const Partition& shape, SymFn expansion) {
  JackRecord rec;
  rec.shape = shape;
  rec.expansion = std::move(expansion);
  rec.norm = inner_product(rec.expansion, rec.expansion);
  std::vector<AlphaFn> principal;
  for (const auto& [mu, c] : rec.expansion.terms()) {
    if (principal.size() <= static_cast<size_t>(mu.length())) principal.resize(static_cast<size_t>(mu.length()) + 1);
    principal[static_cast<size_t>(mu.length())] += c;
    if (!c.is_polynomial()) rec.alpha_polynomial = false;
  }
  rec.principal = XPoly(std::move(principal));
  const int n = shape.weight();
  if (n % 2 == 0) rec.p2coeff = rec.expansion.coeff(Partition(std::vector<int>(static_cast<size_t>(n / 2), 2)));
  return rec;
}

}  // namespace

JackRecord solve_jack(const Partition& shape) {
  const int n = shape.weight();
  const auto& fwd = power_to_monomial(n);
  const auto& inv = monomial_to_power(n);
  const size_t p = fwd.basis.size();
  const auto t = static_cast<size_t>(fwd.index_of(shape));

  // Rational block: [m_nu] J = 0 for nu above the shape, [m_{1^n}] J = n!.
  std::vector<std::vector<Rational>> rows;
  for (size_t nu = 0; nu < t; ++nu) {
    std::vector<Rational> row(p + 1);
    for (size_t lam = 0; lam < p; ++lam) row[lam] = fwd.matrix[lam][nu];
    rows.push_back(std::move(row));
  }
  {
    std::vector<Rational> row(p + 1);
    for (size_t lam = 0; lam < p; ++lam) row[lam] = fwd.matrix[lam][p - 1];
    row[p] = Rational(factorial(static_cast<unsigned>(n)));
    rows.push_back(std::move(row));
  }
  auto affine = solve_rational(std::move(rows), p);
  if (!affine) throw SingularJackSystem(shape);
  const size_t free_count = affine->directions.size();
  if (free_count != p - 1 - t) throw SingularJackSystem(shape);

  // <p_lambda, m_nu> = z_lambda alpha^{l(lambda)} Inv[nu][lambda]
  std::vector<AlphaFn> weight(p);
  for (size_t lam = 0; lam < p; ++lam)
    weight[lam] = AlphaFn::alpha_pow(fwd.basis[lam].length()) * Rational(z_of(fwd.basis[lam]));
  auto pair_with = [&](const std::vector<Rational>& c, size_t nu) {
    AlphaFn acc;
    for (size_t lam = 0; lam < p; ++lam) {
      const Rational& s = inv.matrix[nu][lam];
      if (sgn(c[lam]) == 0 || sgn(s) == 0) continue;
      acc += weight[lam] * Rational(c[lam] * s);
    }
    return acc;
  };

  std::vector<std::vector<AlphaFn>> a;
  std::vector<AlphaFn> rhs;
  for (size_t nu = t + 1; nu < p; ++nu) {
    std::vector<AlphaFn> row(free_count);
    for (size_t f = 0; f < free_count; ++f) row[f] = pair_with(affine->directions[f], nu);
    a.push_back(std::move(row));
    rhs.push_back(-pair_with(affine->particular, nu));
  }
  auto tau = solve_alpha(std::move(a), std::move(rhs));
  if (!tau) throw SingularJackSystem(shape);

  SymFn expansion;
  for (size_t lam = 0; lam < p; ++lam) {
    AlphaFn c = affine->particular[lam];
    for (size_t f = 0; f < free_count; ++f) {
      const Rational& d = affine->directions[f][lam];
      if (sgn(d) != 0) c += (*tau)[f] * d;
    }
    expansion.add_term(fwd.basis[lam], c);
  }
  return finish_record(shape, std::move(expansion));
}

std::vector<JackRecord> jack_weight_serial(int n) {
  std::vector<JackRecord> out;
  for (const auto& shape : partitions_of(n)) out.push_back(solve_jack(shape));
  return out;
}

std::vector<JackRecord> jack_weight_parallel(int n) {
  const auto shapes = partitions_of(n);
  power_to_monomial(n);
  monomial_to_power(n);
  std::vector<JackRecord> out(shapes.size());
  std::vector<std::exception_ptr> errors(shapes.size());
  const long count = static_cast<long>(shapes.size());
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < count; ++k) {
    try {
      out[static_cast<size_t>(k)] = solve_jack(shapes[static_cast<size_t>(k)]);
    } catch (...) {
      errors[static_cast<size_t>(k)] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

namespace {

struct JackCache {
  std::shared_mutex mutex;
  std::map<int, std::vector<std::shared_ptr<const JackRecord>>> by_weight;
  std::mutex compute_mutex;
};

JackCache& jack_cache() {
  static JackCache c;
  return c;
}

}  // namespace

std::vector<std::shared_ptr<const JackRecord>> jacks_of_weight(int n) {
  auto& cache = jack_cache();
  {
    std::shared_lock lock(cache.mutex);
    auto it = cache.by_weight.find(n);
    if (it != cache.by_weight.end()) return it->second;
  }
  std::lock_guard compute(cache.compute_mutex);
  {
    std::shared_lock lock(cache.mutex);
    auto it = cache.by_weight.find(n);
    if (it != cache.by_weight.end()) return it->second;
  }
  std::vector<std::shared_ptr<const JackRecord>> records;
  for (auto& r : jack_weight_parallel(n)) records.push_back(std::make_shared<const JackRecord>(std::move(r)));
  std::unique_lock lock(cache.mutex);
  cache.by_weight[n] = records;
  return records;
}

std::shared_ptr<const JackRecord> jack(const Partition& shape) {
  const auto records = jacks_of_weight(shape.weight());
  const auto& basis = power_to_monomial(shape.weight());
  return records[static_cast<size_t>(basis.index_of(shape))];
}

void evict_jack_weight(int n) {
  auto& cache = jack_cache();
  std::unique_lock lock(cache.mutex);
  cache.by_weight.erase(n);
}

void clear_jack_cache() {
  auto& cache = jack_cache();
  std::unique_lock lock(cache.mutex);
  cache.by_weight.clear();
}

namespace {

// Sum over rows x cols nonnegative integer matrices K with the given margins
// of prod_cells weight[K_rc]. With unit weights this counts the matrices.
AlphaFn contingency_sum(std::vector<int> rows, std::vector<int> cols, size_t r, size_t c,
                        const std::vector<AlphaFn>& weight) {
  if (r == rows.size()) {
    for (int v : cols)
      if (v != 0) return AlphaFn(0);
    return AlphaFn(1);
  }
  if (c + 1 == cols.size()) {
    // last cell of the row takes the remainder
    const int v = rows[r];
    if (v > cols[c]) return AlphaFn(0);
    cols[c] -= v;
    rows[r] = 0;
    AlphaFn rest = contingency_sum(rows, cols, r + 1, 0, weight);
    return rest.is_zero() ? rest : rest * weight[static_cast<size_t>(v)];
  }
  AlphaFn total;
  const int limit = std::min(rows[r], cols[c]);
  for (int v = 0; v <= limit; ++v) {
    rows[r] -= v;
    cols[c] -= v;
    AlphaFn rest = contingency_sum(rows, cols, r, c + 1, weight);
    if (!rest.is_zero()) total += rest * weight[static_cast<size_t>(v)];
    rows[r] += v;
    cols[c] += v;
  }
  return total;
}

std::vector<int> padded(const Partition& mu, int len) {
  std::vector<int> v(static_cast<size_t>(len), 0);
  std::copy(mu.parts().begin(), mu.parts().end(), v.begin());
  return v;
}

}  // namespace

CauchyReport cauchy_check(int n, int num_vars) {
  if (num_vars < 1) throw std::invalid_argument("cauchy_check: need at least one variable");
  CauchyReport report;
  const auto records = jacks_of_weight(n);
  const auto& basis = power_to_monomial(n).basis;
  std::vector<std::vector<AlphaFn>> mono;
  for (const auto& rec : records) mono.push_back(to_monomial_basis(rec->expansion, n));
  // (1 - u)^{-1/alpha} = sum_k (1/alpha)(1/alpha + 1)...(1/alpha + k - 1)/k! u^k
  std::vector<AlphaFn> kernel{AlphaFn(1)}, ones(static_cast<size_t>(n + 1), AlphaFn(1));
  for (int k = 1; k <= n; ++k)
    kernel.push_back(kernel.back() * (AlphaFn::alpha_pow(-1) + AlphaFn(k - 1)) * Rational(1, k));

  for (size_t a = 0; a < basis.size(); ++a) {
    if (basis[a].length() > num_vars) continue;
    for (size_t b = 0; b < basis.size(); ++b) {
      if (basis[b].length() > num_vars) continue;
      const auto rows = padded(basis[a], num_vars), cols = padded(basis[b], num_vars);
      const AlphaFn lhs = contingency_sum(rows, cols, 0, 0, kernel);
      AlphaFn rhs;
      for (size_t k = 0; k < records.size(); ++k) {
        if (mono[k][a].is_zero() || mono[k][b].is_zero()) continue;
        rhs += mono[k][a] * mono[k][b] / records[k]->norm;
      }
      ++report.coefficients_checked;
      // At alpha = 1 the kernel is prod (1 - x_i y_j)^{-1}, whose coefficients
      // count the matrices themselves.
      const bool literal_ok = rhs.evaluate(1) == contingency_sum(rows, cols, 0, 0, ones).evaluate(1);
      if (!(rhs == lhs && literal_ok) && report.pass) {
        report.pass = false;
        std::ostringstream msg;
        msg << "m" << basis[a].to_string() << "(x) m" << basis[b].to_string() << "(y): lhs " << lhs.pretty()
            << ", rhs " << rhs.pretty();
        report.first_discrepancy = msg.str();
      }
    }
  }
  return report;
}

}  // namespace xichar
