#include <doctest.h>

#include <functional>

#include "support.hpp"
#include "xichar/jack.hpp"

using namespace xichar;
using testsupport::alpha;

namespace {

SymFn p(const Partition& mu, const AlphaFn& c = AlphaFn(1)) { return SymFn(mu, c); }

// Coefficient of x^mu in p_lambda(x_1..x_L), L = length(mu), by trying every
// assignment of the parts of lambda to variables.
Rational brute_power_to_monomial(const Partition& lam, const Partition& mu) {
  const int vars = mu.length();
  const int parts = lam.length();
  long count = 0;
  std::vector<int> choice(static_cast<size_t>(parts), 0);
  for (;;) {
    std::vector<int> exps(static_cast<size_t>(vars), 0);
    for (int k = 0; k < parts; ++k) exps[static_cast<size_t>(choice[static_cast<size_t>(k)])] += lam.parts()[static_cast<size_t>(k)];
    if (exps == mu.parts()) ++count;
    int k = 0;
    while (k < parts && ++choice[static_cast<size_t>(k)] == vars) choice[static_cast<size_t>(k++)] = 0;
    if (k == parts) break;
  }
  return Rational(count);
}

std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> a) {
  const size_t n = a.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (size_t k = 0; k < n; ++k) inv[k][k] = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (a[piv][c] == 0) ++piv;
    std::swap(a[piv], a[c]);
    std::swap(inv[piv], inv[c]);
    const Rational d = a[c][c];
    for (size_t k = 0; k < n; ++k) {
      a[c][k] /= d;
      inv[c][k] /= d;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rational f = a[r][c];
      for (size_t k = 0; k < n; ++k) {
        a[r][k] -= f * a[c][k];
        inv[r][k] -= f * inv[c][k];
      }
    }
  }
  return inv;
}

// Jack functions by Gram-Schmidt in the monomial basis, from (1^n) upward,
// scaled so that [m_{1^n}] = n!. Rows follow partitions_of(n).
std::vector<std::vector<AlphaFn>> gram_schmidt_jacks(int n) {
  const auto basis = partitions_of(n);
  const size_t d = basis.size();
  std::vector<std::vector<Rational>> fwd(d, std::vector<Rational>(d));
  for (size_t r = 0; r < d; ++r)
    for (size_t c = 0; c < d; ++c) fwd[r][c] = brute_power_to_monomial(basis[r], basis[c]);
  const auto inv = invert(fwd);  // m_mu = sum_lambda inv[mu][lambda] p_lambda

  std::vector<AlphaFn> pnorm(d);
  for (size_t k = 0; k < d; ++k)
    pnorm[k] = AlphaFn(Rational(z_of(basis[k]))) * AlphaFn::alpha_pow(basis[k].length());
  auto gram = [&](const std::vector<AlphaFn>& u, const std::vector<AlphaFn>& v) {
    AlphaFn total;
    for (size_t lam = 0; lam < d; ++lam) {
      AlphaFn cu, cv;
      for (size_t mu = 0; mu < d; ++mu) {
        cu += u[mu] * inv[mu][lam];
        cv += v[mu] * inv[mu][lam];
      }
      total += cu * cv * pnorm[lam];
    }
    return total;
  };

  std::vector<std::vector<AlphaFn>> out(d);
  for (size_t t = d; t-- > 0;) {
    std::vector<AlphaFn> v(d);
    v[t] = 1;
    for (size_t lower = t + 1; lower < d; ++lower) {
      const auto& w = out[lower];
      const AlphaFn f = gram(v, w) / gram(w, w);
      for (size_t k = 0; k < d; ++k) v[k] -= f * w[k];
    }
    const AlphaFn scale = AlphaFn(Rational(factorial(static_cast<unsigned>(n)))) / v[d - 1];
    for (auto& c : v) c *= scale;
    out[t] = std::move(v);
  }
  return out;
}

// m_mu(1^N): distinct arrangements of the exponent vector.
Rational monomial_at_ones(const Partition& mu, int N) {
  if (mu.length() > N) return 0;
  Integer r = factorial(static_cast<unsigned>(N)) / factorial(static_cast<unsigned>(N - mu.length()));
  for (int k = 1; k <= mu.weight(); ++k) r /= factorial(static_cast<unsigned>(mu.multiplicity(k)));
  return Rational(r);
}

}  // namespace

TEST_CASE("power-sum products and inner product") {
  CHECK(p({2}) * p({1}) == p({2, 1}));
  CHECK((p({1}) + p({2})) * p({1}) == p({1, 1}) + p({2, 1}));
  const SymFn f = p({3, 1}, 2) + p({2}, alpha());
  CHECK(p({}) * f == f);
  CHECK(inner_product(p({2}), p({2})) == AlphaFn(2) * alpha());
  CHECK(inner_product(p({1, 1}), p({2})).is_zero());
  CHECK(inner_product(p({1, 1}), p({1, 1})) == AlphaFn(2) * alpha() * alpha());

  PowerSumExpr with_x = lift(p({1}), XPoly::monomial(AlphaFn(1), 1));
  CHECK_THROWS_AS(inner_product(with_x, with_x), std::invalid_argument);
}

TEST_CASE("power to monomial transition against brute-force expansion") {
  for (int n = 0; n <= 6; ++n) {
    const auto& fwd = power_to_monomial(n);
    const auto& inv = monomial_to_power(n);
    CHECK(fwd.basis == partitions_of(n));
    const size_t d = fwd.basis.size();
    for (size_t r = 0; r < d; ++r)
      for (size_t c = 0; c < d; ++c) {
        CHECK(fwd.matrix[r][c] == brute_power_to_monomial(fwd.basis[r], fwd.basis[c]));
        Rational id = 0;
        for (size_t k = 0; k < d; ++k) id += inv.matrix[r][k] * fwd.matrix[k][c];
        CHECK(id == (r == c ? 1 : 0));
      }
  }
  CHECK(power_to_monomial(2).at({1, 1}, {1, 1}) == 2);
  CHECK_THROWS_AS(power_to_monomial(2).index_of(Partition{3}), std::out_of_range);
  CHECK_THROWS_AS(to_monomial_basis(p({1}) + p({2}), 2), std::invalid_argument);
}

TEST_CASE("small Jack functions") {
  const AlphaFn a = alpha();
  const auto j1 = jack({1});
  CHECK(j1->expansion == p({1}));
  CHECK(j1->norm == a);
  CHECK(j1->principal == XPoly::monomial(AlphaFn(1), 1));
  CHECK(j1->p2coeff.is_zero());

  const auto j2 = jack({2});
  CHECK(j2->expansion == p({1, 1}) + p({2}, a));
  CHECK(j2->norm == AlphaFn(2) * a * a * (AlphaFn(1) + a));
  CHECK(j2->principal == XPoly({AlphaFn(0), a, AlphaFn(1)}));
  CHECK(j2->p2coeff == a);

  const auto j11 = jack({1, 1});
  CHECK(j11->expansion == p({1, 1}) - p({2}));
  CHECK(j11->norm == AlphaFn(2) * a * (AlphaFn(1) + a));
  CHECK(j11->principal == XPoly({AlphaFn(0), AlphaFn(-1), AlphaFn(1)}));
  CHECK(j11->p2coeff == AlphaFn(-1));
}

TEST_CASE("Jack functions against Gram-Schmidt in the monomial basis") {
  for (int n = 1; n <= 5; ++n) {
    const auto oracle = gram_schmidt_jacks(n);
    const auto shapes = partitions_of(n);
    for (size_t t = 0; t < shapes.size(); ++t) {
      INFO("shape " << shapes[t].to_string());
      CHECK(to_monomial_basis(jack(shapes[t])->expansion, n) == oracle[t]);
    }
  }
}

TEST_CASE("principal specialization against monomial evaluation") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& shape : partitions_of(n)) {
      const auto rec = jack(shape);
      const auto mono = to_monomial_basis(rec->expansion, n);
      const auto basis = partitions_of(n);
      for (int N = 1; N <= 4; ++N) {
        AlphaFn direct;
        for (size_t k = 0; k < basis.size(); ++k) direct += mono[k] * monomial_at_ones(basis[k], N);
        CHECK(rec->principal.evaluate(N) == direct);
      }
    }
}

TEST_CASE("Jack properties up to weight 6") {
  for (int n = 1; n <= 6; ++n) {
    const auto recs = jacks_of_weight(n);
    const auto basis = partitions_of(n);
    for (size_t t = 0; t < recs.size(); ++t) {
      const auto& r = *recs[t];
      const auto mono = to_monomial_basis(r.expansion, n);
      for (size_t k = 0; k < t; ++k) CHECK(mono[k].is_zero());
      CHECK(mono.back() == AlphaFn(Rational(factorial(static_cast<unsigned>(n)))));
      CHECK(r.norm == inner_product(r.expansion, r.expansion));
      for (size_t u = t + 1; u < recs.size(); ++u) CHECK(inner_product(r.expansion, recs[u]->expansion).is_zero());
      if (n % 2 == 1) CHECK(r.p2coeff.is_zero());
      CHECK(r.alpha_polynomial);
    }
    // At alpha = 1 the Jack functions are n!/dim times Schur functions, still
    // orthogonal under the Hall inner product.
    for (size_t t = 0; t < recs.size(); ++t)
      for (size_t u = 0; u < recs.size(); ++u) {
        const Rational v = inner_product(recs[t]->expansion, recs[u]->expansion).evaluate(1);
        if (t != u) CHECK(v == 0);
        else CHECK(v > 0);
      }
  }
}

TEST_CASE("serial and parallel Jack solves agree") {
  const auto serial = jack_weight_serial(6);
  const auto parallel = jack_weight_parallel(6);
  REQUIRE(serial.size() == parallel.size());
  for (size_t k = 0; k < serial.size(); ++k) {
    CHECK(serial[k].shape == parallel[k].shape);
    CHECK(serial[k].expansion == parallel[k].expansion);
    CHECK(serial[k].norm == parallel[k].norm);
    CHECK(serial[k].principal == parallel[k].principal);
  }
}

TEST_CASE("Cauchy identity") {
  CHECK(cauchy_check(0, 1).pass);
  for (auto [n, v] : {std::pair{1, 1}, {2, 2}, {3, 3}, {4, 4}}) {
    const auto report = cauchy_check(n, v);
    INFO(report.first_discrepancy);
    CHECK(report.pass);
    CHECK(report.coefficients_checked > 0);
  }
  CHECK_THROWS_AS(cauchy_check(2, 0), std::invalid_argument);
}

TEST_CASE("Jack cache eviction") {
  const auto before = jack({3, 1});
  evict_jack_weight(4);
  const auto after = jack({3, 1});
  CHECK(before->expansion == after->expansion);
  clear_jack_cache();
  CHECK(jack({3, 1})->norm == before->norm);
}
