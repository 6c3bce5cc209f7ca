#include "xichar/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "xichar/bernoulli.hpp"
#include "xichar/table1.hpp"

namespace xichar {

namespace {

class CheckFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw CheckFailure(what);
}

template <class A, class B>
void expect_eq(const A& got, const B& want, const std::string& what) {
  if (!(got == want)) throw CheckFailure(what);
}

using Notes = std::vector<std::string>;

// ---- arith -----------------------------------------------------------------

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen); }
  Rational rational() {
    Rational r(integer(-9, 9), integer(1, 7));
    r.canonicalize();
    return r;
  }
  UniPoly poly(Var v, int max_degree) {
    std::vector<Rational> c(static_cast<size_t>(integer(0, max_degree) + 1));
    for (auto& r : c) r = rational();
    return UniPoly(v, c);
  }
  UniPoly nonzero_poly(Var v, int max_degree) {
    for (;;) {
      UniPoly p = poly(v, max_degree);
      if (!p.is_zero()) return p;
    }
  }
  AlphaFn alpha_fn() { return AlphaFn(poly(Var::alpha, 2), nonzero_poly(Var::alpha, 2)); }
};

template <class T>
void ring_axioms(const T& a, const T& b, const T& c, const T& zero, const T& one, const std::string& what) {
  expect((a + b) + c == a + (b + c), what + ": additive associativity");
  expect(a + b == b + a, what + ": additive commutativity");
  expect((a * b) * c == a * (b * c), what + ": multiplicative associativity");
  expect(a * (b + c) == a * b + a * c, what + ": distributivity");
  expect(a + zero == a && a * one == a, what + ": identities");
  expect(a - a == zero, what + ": additive inverse");
}

// B_n from the reciprocal of (e^t - 1)/t = sum_k t^k/(k+1)!, by series
// inversion; shares nothing with the cached recurrence.
std::vector<Rational> bernoulli_by_inversion(int max_j) {
  std::vector<Rational> a(static_cast<size_t>(max_j + 1)), c(static_cast<size_t>(max_j + 1));
  for (int k = 0; k <= max_j; ++k) a[static_cast<size_t>(k)] = Rational(1) / Rational(factorial(static_cast<unsigned>(k + 1)));
  c[0] = 1;
  for (int n = 1; n <= max_j; ++n) {
    Rational acc = 0;
    for (int k = 1; k <= n; ++k) acc -= a[static_cast<size_t>(k)] * c[static_cast<size_t>(n - k)];
    c[static_cast<size_t>(n)] = acc;
  }
  for (int n = 0; n <= max_j; ++n) c[static_cast<size_t>(n)] *= Rational(factorial(static_cast<unsigned>(n)));
  return c;
}

void check_arith(const VerifyConfig& cfg, Notes& notes) {
  Rng rng(cfg.seed);
  for (int t = 0; t < cfg.random_trials; ++t) {
    ring_axioms(rng.rational(), rng.rational(), rng.rational(), Rational(0), Rational(1), "Rational");
    ring_axioms(rng.poly(Var::b, 4), rng.poly(Var::b, 4), rng.poly(Var::b, 4), UniPoly(Var::b),
                UniPoly::constant(Var::b, 1), "UniPoly");
    ring_axioms(rng.alpha_fn(), rng.alpha_fn(), rng.alpha_fn(), AlphaFn(0), AlphaFn(1), "AlphaFn");
    UniPoly p = rng.poly(Var::alpha, 3), q = rng.nonzero_poly(Var::alpha, 3), r = rng.nonzero_poly(Var::alpha, 2);
    expect(AlphaFn(p, q) == AlphaFn(p * r, q * r), "AlphaFn canonical form: p/q vs pr/qr");
  }
  notes.push_back("ring axioms on " + std::to_string(cfg.random_trials) + " random triples, seed " +
                  std::to_string(cfg.seed));

  const auto reference = bernoulli_by_inversion(32);
  for (unsigned j = 0; j <= 32; ++j)
    expect(bernoulli(j) == reference[j], "bernoulli(" + std::to_string(j) + ") = " + to_string(bernoulli(j)) +
                                             ", series inversion gives " + to_string(reference[j]));
  expect(bernoulli(1) == Rational(-1, 2) && bernoulli(12) == Rational(-691, 2730), "bernoulli examples");
  for (unsigned k = 1; k <= 15; ++k) expect(bernoulli(2 * k + 1) == 0, "odd Bernoulli numbers vanish");

  for (unsigned k = 0; k <= 6; ++k) {
    const UniPoly poly = sum_of_powers_poly(k);
    expect(poly.var() == Var::N && poly.degree() == static_cast<int>(k) + 1 && poly.coeff(0) == 0,
           "sum_of_powers_poly shape");
    Rational direct = 0;
    for (int n = 1; n <= 20; ++n) {
      direct += rational_pow(n, static_cast<long>(k));
      expect(poly.evaluate(n) == direct, "sum_of_powers_poly(" + std::to_string(k) + ") at " + std::to_string(n));
    }
  }

  for (int t = 0; t < 5; ++t) {
    TruncatedSeries<Rational> s(Var::t, 6);
    for (int k = 1; k <= 6; ++k) s[k] = rng.rational();
    expect(series_log(series_exp(s)) == s, "series_log(series_exp(s)) = s");
  }
  TruncatedSeries<Rational> one_plus_z(Var::z, std::vector<Rational>{1, 1, 0});
  expect(series_log(one_plus_z) == TruncatedSeries<Rational>(Var::z, std::vector<Rational>{0, 1, Rational(-1, 2)}),
         "log(1 + z)");
  TruncatedSeries<Rational> harmonic(Var::z, std::vector<Rational>{0, 1, Rational(1, 2), Rational(1, 3), Rational(1, 4)});
  expect(series_z_ddz(harmonic) == TruncatedSeries<Rational>(Var::z, std::vector<Rational>{0, 1, 1, 1, 1}), "z d/dz");
  bool threw = false;
  try {
    series_log(TruncatedSeries<Rational>(Var::z, std::vector<Rational>{2, 1}));
  } catch (const std::domain_error&) {
    threw = true;
  }
  expect(threw, "series_log rejects a constant term other than 1");
  threw = false;
  try {
    (void)(UniPoly::identity(Var::b) + UniPoly::identity(Var::x));
  } catch (const VariableMismatch&) {
    threw = true;
  }
  expect(threw, "mixing variable tags is rejected");
}

// ---- partitions --------------------------------------------------------------

long brute_partition_count(int n, int max_part) {
  if (n == 0) return 1;
  long c = 0;
  for (int k = std::min(n, max_part); k >= 1; --k) c += brute_partition_count(n - k, k);
  return c;
}

void check_partitions(Notes&) {
  for (int n = 0; n <= 14; ++n) {
    const auto ps = partitions_of(n);
    expect_eq(static_cast<long>(ps.size()), brute_partition_count(n, n), "p(" + std::to_string(n) + ")");
    for (size_t k = 1; k < ps.size(); ++k) expect(ps[k - 1] > ps[k], "reverse-lex order is strict");
    if (n <= 10) {
      Integer total = 0;
      const Integer nf = factorial(static_cast<unsigned>(n));
      for (const auto& mu : ps) total += nf / z_of(mu);
      expect(total == nf, "class sizes sum to n!");
    }
    for (const auto& mu : ps)
      expect(partition_from_vertex_distribution(vertex_distribution_of(mu)) == mu, "vertex distribution round trip");
  }
  expect(partitions_of(10).size() == 42, "p(10) = 42");
  expect(z_of(Partition{2}) == 2 && z_of(Partition{1, 1}) == 2 && z_of(Partition{}) == 1, "z examples");
  expect((vertex_distribution_of(Partition{3, 1, 1}) == std::vector<int>{2, 0, 1}), "vertex distribution of (3,1,1)");
}

// ---- jack --------------------------------------------------------------------

XPoly principal_from_expansion(const SymFn& f) {
  XPoly out;
  for (const auto& [mu, c] : f.terms()) out += XPoly::monomial(c, mu.length());
  return out;
}

void check_jack(Notes& notes) {
  const AlphaFn a = AlphaFn::alpha_pow(1);
  // Building blocks.
  SymFn p1(Partition{1}, AlphaFn(1)), p2(Partition{2}, AlphaFn(1));
  expect(psum_multiply(p2, p1) == SymFn(Partition{2, 1}, AlphaFn(1)), "p2 p1 = p21");
  expect(psum_multiply(p1 + p2, p1) == SymFn(Partition{1, 1}, AlphaFn(1)) + SymFn(Partition{2, 1}, AlphaFn(1)),
         "bilinearity of the product");
  expect(psum_multiply(SymFn(Partition{}, AlphaFn(1)), p2) == p2, "p_() is the unit");
  expect(inner_product(p2, p2) == AlphaFn(2) * a, "<p2, p2> = 2 alpha");
  SymFn p11(Partition{1, 1}, AlphaFn(1));
  expect(inner_product(p11, p2).is_zero() && inner_product(p11, p11) == AlphaFn(2) * a * a, "<p11, .>");
  const auto& m2 = power_to_monomial(2);
  expect(m2.at({2}, {2}) == 1 && m2.at({2}, {1, 1}) == 0 && m2.at({1, 1}, {2}) == 1 && m2.at({1, 1}, {1, 1}) == 2,
         "power_to_monomial(2)");
  expect(power_to_monomial(3).at({1, 1, 1}, {1, 1, 1}) == 6, "power_to_monomial(3) multinomial");

  // Known small shapes.
  const auto j2 = jack(Partition{2});
  expect(j2->expansion == p11 + p2 * a, "J_(2) = p11 + alpha p2");
  expect(j2->norm == AlphaFn(2) * a * a * (AlphaFn(1) + a), "<J_(2), J_(2)> = 2 alpha^2 (1 + alpha)");
  expect(j2->p2coeff == a, "[p2] J_(2) = alpha");
  const auto j11 = jack(Partition{1, 1});
  expect(j11->expansion == p11 - p2 && j11->p2coeff == AlphaFn(-1), "J_(1,1) = p11 - p2");
  expect(jack(Partition{1})->expansion == p1, "J_(1) = p1");

  int shapes = 0;
  for (int n = 0; n <= 6; ++n) {
    const auto recs = jacks_of_weight(n);
    const auto basis = partitions_of(n);
    const AlphaFn nf(Rational(factorial(static_cast<unsigned>(n))));
    for (size_t k = 0; k < recs.size(); ++k) {
      const auto& rec = *recs[k];
      const std::string tag = "J_" + rec.shape.to_string();
      ++shapes;
      expect(rec.shape == basis[k], tag + ": weight order");
      for (const auto& [mu, c] : rec.expansion.terms()) expect(mu.weight() == n, tag + ": homogeneous");
      const auto mono = to_monomial_basis(rec.expansion, n);
      for (size_t q = 0; q < k; ++q)
        expect(mono[q].is_zero(), tag + ": nonzero coefficient on m_" + basis[q].to_string() + " above the shape");
      expect(mono.back() == nf, tag + ": [m_(1^n)] J = n!");
      for (size_t q = 0; q < k; ++q)
        expect(inner_product(rec.expansion, recs[q]->expansion).is_zero(),
               tag + " not orthogonal to J_" + recs[q]->shape.to_string());
      expect(!rec.norm.is_zero() && rec.norm == inner_product(rec.expansion, rec.expansion), tag + ": norm");
      expect(rec.principal == principal_from_expansion(rec.expansion), tag + ": principal specialization");
      if (n % 2 == 1) expect(rec.p2coeff.is_zero(), tag + ": p2coeff vanishes on odd weight");
      else {
        std::vector<int> twos(static_cast<size_t>(n / 2), 2);
        expect(rec.p2coeff == rec.expansion.coeff(Partition(twos)), tag + ": p2coeff");
      }
      expect(rec.alpha_polynomial, tag + ": coefficients polynomial in alpha");
    }
  }
  notes.push_back(std::to_string(shapes) + " shapes of weight <= 6");
}

void check_cauchy(Notes& notes) {
  int coefficients = 0;
  for (int n = 0; n <= 4; ++n) {
    const auto report = cauchy_check(n, 4);
    expect(report.pass, "degree " + std::to_string(n) + ": " + report.first_discrepancy);
    coefficients += report.coefficients_checked;
  }
  expect(cauchy_check(2, 2).pass, "degree 2 in 2 variables");
  notes.push_back(std::to_string(coefficients) + " coefficients through degree 4 in 4 variables");
}

// ---- map table -------------------------------------------------------------

void check_table(const MapCountTable& table, Notes& notes) {
  const AlphaFn a = AlphaFn::alpha_pow(1);
  const XPoly x = XPoly::monomial(AlphaFn(1), 1);

  const auto partition_sum = jack_partition_sum(1);
  PowerSumExpr z1;
  z1.add_term(Partition{1, 1}, x * (AlphaFn(1) / (AlphaFn(2) * a)));
  z1.add_term(Partition{2}, (x * x + x * (a - AlphaFn(1))) * (AlphaFn(1) / (AlphaFn(2) * a)));
  expect(partition_sum[1] == z1, "z^1 coefficient of the Jack partition sum");
  expect(partition_sum == jack_partition_sum_serial(1), "parallel and serial partition sums agree");
  const auto series = map_series(1);
  PowerSumExpr m1;
  m1.add_term(Partition{1, 1}, x);
  m1.add_term(Partition{2}, x * x + x * (a - AlphaFn(1)));
  expect(series[0].is_zero() && series[1] == m1, "z^1 coefficient of the map series");

  int rows = 0;
  for (const auto& row : published_map_counts()) {
    if (row.key.n > table.max_n) continue;
    std::vector<Rational> c(row.b_coeffs.begin(), row.b_coeffs.end());
    const UniPoly want(Var::b, c);
    auto it = table.entries.find(row.key);
    expect(it != table.entries.end(), "missing row " + to_string(row.key));
    expect(it->second == want, to_string(row.key) + ": got " + it->second.pretty() + ", published " + want.pretty());
    ++rows;
  }
  const int limit = std::min(table.max_n, 3);
  int computed = 0;
  for (const auto& [key, poly] : table.entries)
    if (key.n <= limit) ++computed;
  expect(computed == rows, "computed table has " + std::to_string(computed) + " rows with n <= " +
                               std::to_string(limit) + ", published " + std::to_string(rows));
  notes.push_back(std::to_string(rows) + " published rows reproduced");

  for (const auto& [key, poly] : table.entries) {
    key.validate();
    const int bound = key.n - key.vertex_count() + 2;
    expect(key.j <= bound, to_string(key) + " violates the Euler bound");
    if (key.j == bound) expect(poly.degree() == 0, to_string(key) + ": sphere rows carry no b terms");
  }
  for (const auto& b : {Rational(0), Rational(1)})
    for (const auto& [key, v] : specialize_counts(table, b))
      expect(v.get_den() == 1 && sgn(v) >= 0, to_string(key) + " specializes to " + to_string(v));

  const MapKey torus{{0, 0, 0, 1}, 1, 2};
  if (table.max_n >= 2) {
    expect(specialize_counts(table, 0).at(torus) == 1 && specialize_counts(table, 1).at(torus) == 5,
           "one orientable and four nonorientable rooted maps at (0,0,0,1),1,2");
  }
  expect(specialize_counts(MapCountTable{}, 1).empty(), "empty table specializes to empty");
  MapCountTable synthetic;
  synthetic.entries.emplace(MapKey{{2}, 1, 1}, UniPoly(Var::b, {1, -1}));
  expect(nonneg_report(synthetic).violations.size() == 1, "nonnegativity detector flags a negative coefficient");
  synthetic.entries.begin()->second = UniPoly(Var::b, {1, 1});
  expect(nonneg_report(synthetic).empty(), "nonnegativity detector accepts 1 + b");
}

void check_oracle(const MapCountTable& table, Notes& notes) {
  const int top = std::min(table.max_n, kDefaultOracleBound);
  for (int n = 1; n <= top; ++n) {
    const auto orientable = rooted_orientable_counts(n);
    const auto all = rooted_locally_orientable_counts(n);
    expect(orientable == rooted_orientable_counts_serial(n), "orientable oracle: serial and parallel differ");
    if (n <= 2) expect(all == rooted_locally_orientable_counts_serial(n), "oracle: serial and parallel differ");
    for (const auto& [b, census, label] :
         {std::tuple{Rational(0), &orientable, "orientable"}, std::tuple{Rational(1), &all, "all surfaces"}}) {
      std::map<MapKey, Rational> at_b;
      for (const auto& [key, v] : specialize_counts(table, b))
        if (key.n == n && sgn(v) != 0) at_b.emplace(key, v);
      std::map<MapKey, Rational> oracle;
      for (const auto& [key, c] : *census) oracle.emplace(key, Rational(static_cast<long>(c)));
      for (const auto& [key, v] : oracle) {
        auto it = at_b.find(key);
        expect(it != at_b.end() && it->second == v, std::string(label) + " oracle " + to_string(key) + " = " +
                                                        to_string(v) + ", table gives " +
                                                        (it == at_b.end() ? "0" : to_string(it->second)));
      }
      expect(at_b.size() == oracle.size(), std::string(label) + ": table has keys the oracle never produced at n = " +
                                               std::to_string(n));
    }
  }
  notes.push_back("rooted censuses agree with the table at b = 0 and b = 1 for n <= " + std::to_string(top));

  const auto two = glue_census({2});
  expect(two.configurations == 2 && two.by_surface.at({2, true}).all == 1 && two.by_surface.at({1, false}).all == 1,
         "a 2-gon glues to one sphere and one projective plane");
  expect(glue_census({4}).configurations == 12, "12 raw configurations for a 4-gon");

  // Orientable double covers of two-polygon gluings.
  int lifted = 0;
  for (const auto& sides : std::vector<std::vector<int>>{{1, 1}, {2, 2}, {3, 1}, {3, 3}, {4, 2}}) {
    const int m = sides[0] + sides[1];
    std::vector<int> partner(static_cast<size_t>(m), -1);
    std::function<void()> walk = [&] {
      auto it = std::find(partner.begin(), partner.end(), -1);
      if (it == partner.end()) {
        Gluing g{sides, partner, std::vector<std::uint8_t>(static_cast<size_t>(m), 0)};
        std::vector<int> heads;
        for (int u = 0; u < m; ++u)
          if (partner[static_cast<size_t>(u)] > u) heads.push_back(u);
        for (unsigned long mask = 0; mask < (1UL << heads.size()); ++mask) {
          for (size_t q = 0; q < heads.size(); ++q) {
            const std::uint8_t t = (mask >> q) & 1UL;
            g.twisted[static_cast<size_t>(heads[q])] = g.twisted[static_cast<size_t>(partner[static_cast<size_t>(heads[q])])] = t;
          }
          const auto base = classify_gluing(g);
          if (!base.connected || base.orientable) continue;
          std::set<std::pair<std::vector<int>, std::vector<std::uint8_t>>> distinct;
          for (int e = 0; e < 4; ++e) {
            const Gluing lift = orientable_lift(g, {(e & 1) != 0, (e & 2) != 0});
            const auto cover = classify_gluing(lift);
            expect(cover.orientable && cover.connected && cover.euler_char == 2 * base.euler_char,
                   "lift of " + g.word() + " is not a connected orientable double cover");
            distinct.insert({lift.partner, lift.twisted});
          }
          expect(distinct.size() == 2, "gluing " + g.word() + " has " + std::to_string(distinct.size()) + " lifts");
          ++lifted;
        }
        return;
      }
      const int u = static_cast<int>(it - partner.begin());
      for (int v = u + 1; v < m; ++v) {
        if (partner[static_cast<size_t>(v)] != -1) continue;
        partner[static_cast<size_t>(u)] = v;
        partner[static_cast<size_t>(v)] = u;
        walk();
        partner[static_cast<size_t>(u)] = partner[static_cast<size_t>(v)] = -1;
      }
    };
    walk();
  }
  notes.push_back(std::to_string(lifted) + " nonorientable two-polygon gluings each have exactly 2 orientable lifts");

  const auto lam = lambda_from_census(1, 1);
  expect(lam.all == Rational(-1, 12) && lam.orientable == Rational(-1, 12) && lam.nonorientable == 0,
         "Lambda(1,1) from the census");
  bool threw = false;
  try {
    lambda_from_census(1, 2);
  } catch (const std::out_of_range&) {
    threw = true;
  }
  expect(threw, "lambda_from_census refuses (1,2) at bound 3");
}

// ---- euler characteristics ----------------------------------------------------

GammaPoly gamma_poly(std::vector<Rational> c) { return GammaPoly{UniPoly(Var::alpha, std::move(c))}; }

void check_xi_routes(Notes& notes) {
  for (int g = 1; g <= 6; ++g)
    for (int s = 1; s <= 4; ++s) {
      const auto closed = xi_closed(g, s);
      const auto logw = xi_from_logW(g, s);
      expect(closed == logw, "xi(" + std::to_string(g) + "," + std::to_string(s) + "): closed " + closed.pretty() +
                                 ", logW " + logw.pretty());
      // Odd g keeps the B_0 B_{g+1} / gamma^{g+1} term.
      expect(closed.degree() == (g % 2 == 0 ? g : g + 1), "degree of xi_closed");
      if (g % 2 == 0) {
        expect(closed.at_gamma(1) == 0, "xi vanishes at gamma = 1 for even g");
        const Rational c0 = Rational(s % 2 ? -1 : 1) * Rational(factorial(static_cast<unsigned>(g + s - 2))) *
                            bernoulli(static_cast<unsigned>(g)) / (2 * Rational(factorial(static_cast<unsigned>(g))));
        expect(closed.coeff(0) == 0 && closed.coeff(g) == c0 && closed.coeff(1) == -c0,
               "even-g coefficients of xi");
      }
    }
  expect(xi_closed(1, 1) == gamma_poly({Rational(1, 12), Rational(-1, 4), Rational(1, 12)}),
         "xi(1,1) = 1/12 - 1/(4 gamma) + 1/(12 gamma^2)");
  const auto logw = logW_series(6);
  for (int d = 1; d <= 6; ++d) expect(logw[d].degree() <= d + 2, "x-degree of the t^d coefficient");
  notes.push_back("closed form = logW route for 1 <= g <= 6, 1 <= s <= 4");
}

void check_xi_from_maps(const MapCountTable& table, Notes& notes) {
  const auto xi = xi_from_maps(1, 1, table);
  expect(xi == gamma_poly({Rational(1, 12), Rational(-1, 4), Rational(1, 12)}), "xi_from_maps(1,1) = " + xi.pretty());
  notes.push_back("xi_from_maps(1,1) = " + xi.pretty());
}

void check_chi(Notes& notes) {
  for (int g = 1; g <= 10; ++g)
    for (int s = 1; s <= 4; ++s) {
      const std::string tag = "(" + std::to_string(g) + "," + std::to_string(s) + ")";
      const auto xi = xi_closed(g, s);
      const Rational via_xi = rational_pow(2, s - 1) * (xi.at_gamma(Rational(1, 2)) - xi.at_gamma(1));
      expect(via_xi == chi_real(g, s).value, "2^(s-1)(xi(1/2) - xi(1)) differs from chi_real at " + tag);
      expect(chi_real_from_lambda(g, s).value == via_xi, "chi_real_from_lambda at " + tag);
      Rational hz = 0;
      if (g % 2 == 1)
        hz = Rational(s % 2 ? -1 : 1) * Rational(factorial(static_cast<unsigned>(g + s - 2))) *
             bernoulli(static_cast<unsigned>(g + 1)) / ((g + 1) * Rational(factorial(static_cast<unsigned>(g - 1))));
      expect(xi.at_gamma(1) == hz && chi_complex(g, s).value == hz, "complex Euler characteristic at " + tag);
      if (g % 2 == 1 && g + s > 1) expect(chi_real(g, s).value == 0, "chi_real vanishes for odd g at " + tag);
      expect(chi_fixed_curves(g, s, 0, false).value == chi_real(g, s).value, "m = 0 fixed curves at " + tag);
    }
  expect(chi_real(1, 0).value == Rational(1, 2), "chi_real(1,0) = 1/2");
  expect(chi_real(0, 0).value == 1 && chi_real(0, 1).value == 1, "chi_real(0,0) = chi_real(0,1) = 1");
  for (int s = 2; s <= 6; ++s) expect(chi_real(0, s).value == 0, "chi_real(0,s) = 0 for s >= 2");
  expect(chi_real(2, 1).value == Rational(-1, 12) && chi_real(3, 2).value == 0, "chi_real examples");
  expect(chi_complex(1, 1).value == Rational(-1, 12) && chi_complex(3, 1).value == Rational(1, 120),
         "chi_complex examples");
  const auto l11 = lambda_values(1, 1);
  expect(l11.all == Rational(-1, 12) && l11.orientable == Rational(-1, 12) && l11.nonorientable == 0,
         "lambda_values(1,1)");
  const auto l21 = lambda_values(2, 1);
  expect(l21.all == Rational(-1, 12) && l21.orientable == 0, "lambda_values(2,1)");
  expect(chi_fixed_curves(2, 1, 1, true).value == Rational(1, 12), "separating (2,1,1) = 1/12");
  bool threw = false;
  try {
    chi_fixed_curves(3, 1, 1, true);
  } catch (const std::invalid_argument&) {
    threw = true;
  }
  expect(threw, "separating (3,1,1) is a parity error");
  notes.push_back("Euler characteristic identities for 1 <= g <= 10, 1 <= s <= 4");
}

void check_lambda_glue(Notes& notes) {
  const auto census = glue_census({4});
  expect(census.lambda(1, false) == 4, "lambda_1^N(2) = " + std::to_string(census.lambda(1, false)));
  const auto patterns = glue_patterns({4}, SurfaceClass{0, false}, true);
  const std::set<std::string> got(patterns.begin(), patterns.end());
  const std::set<std::string> want{"aabb", "abba", "abab^-1", "aba^-1b"};
  expect(got == want && patterns.size() == 4, "patterns of lambda_1^N(2)");
  std::string joined;
  for (const auto& p : patterns) joined += (joined.empty() ? "" : ", ") + p;
  notes.push_back("lambda_1^N(2) = 4: " + joined);
}

}  // namespace

const CheckResult* VerifyReport::first_failure() const {
  for (const auto& c : checks)
    if (c.status == CheckStatus::fail) return &c;
  return nullptr;
}

int VerifyReport::exit_code() const {
  if (first_failure()) return 2;
  if (!nonneg_violations.empty()) return 3;
  return 0;
}

std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "?";
}

VerifyReport verify_all(const VerifyConfig& cfg) {
  if (cfg.max_edges < 1) throw std::invalid_argument("max_edges must be at least 1");
  VerifyReport report;
  std::optional<MapCountTable> table;
  std::string table_error;

  auto run = [&](const std::string& name, const std::function<void(Notes&)>& body) {
    CheckResult r;
    r.name = name;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      body(r.notes);
    } catch (const std::exception& e) {
      r.status = CheckStatus::fail;
      r.detail = e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report.checks.push_back(std::move(r));
  };
  auto need_table = [&]() -> const MapCountTable& {
    if (!table) {
      if (!table_error.empty()) throw CheckFailure("map table unavailable: " + table_error);
      try {
        table = map_count_table(cfg.max_edges);
      } catch (const std::exception& e) {
        table_error = e.what();
        throw;
      }
    }
    return *table;
  };
  auto skip = [&](const std::string& name, const std::string& why) {
    CheckResult r;
    r.name = name;
    r.status = CheckStatus::skipped;
    r.detail = why;
    report.checks.push_back(std::move(r));
  };

  run("arith", [&](Notes& n) { check_arith(cfg, n); });
  run("partitions", check_partitions);
  run("jack", check_jack);
  run("cauchy", check_cauchy);
  run("table1", [&](Notes& n) { check_table(need_table(), n); });
  run("oracle", [&](Notes& n) { check_oracle(need_table(), n); });
  run("xi-routes", check_xi_routes);
  if (cfg.max_edges < 3)
    skip("xi-from-maps", "insufficient truncation: xi_from_maps(1,1) needs maps with 3 edges, max_edges is " +
                             std::to_string(cfg.max_edges));
  else
    run("xi-from-maps", [&](Notes& n) { check_xi_from_maps(need_table(), n); });
  run("chi", check_chi);
  run("lambda-glue", check_lambda_glue);
  run("nonnegativity", [&](Notes& n) {
    report.nonneg_violations = nonneg_report(need_table()).violations;
    n.push_back(report.nonneg_violations.empty()
                    ? "no negative b-coefficient for n <= " + std::to_string(cfg.max_edges)
                    : std::to_string(report.nonneg_violations.size()) + " rows with a negative b-coefficient");
  });
  return report;
}

json to_json(const VerifyReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    json row;
    row["name"] = c.name;
    row["status"] = status_name(c.status);
    row["seconds"] = c.seconds;
    if (!c.detail.empty()) row["detail"] = c.detail;
    if (!c.notes.empty()) row["notes"] = c.notes;
    checks.push_back(std::move(row));
  }
  json out;
  out["checks"] = std::move(checks);
  out["nonnegativity_report"] = report.nonneg_violations;
  out["exit_code"] = report.exit_code();
  return out;
}

std::string to_pretty(const VerifyReport& report) {
  std::ostringstream out;
  for (const auto& c : report.checks) {
    out << status_name(c.status) << "  " << c.name;
    char buf[32];
    std::snprintf(buf, sizeof buf, "  (%.2fs)", c.seconds);
    if (c.status != CheckStatus::skipped) out << buf;
    out << '\n';
    if (!c.detail.empty()) out << "    " << c.detail << '\n';
    for (const auto& n : c.notes) out << "    " << n << '\n';
  }
  for (const auto& v : report.nonneg_violations) out << "nonnegativity: " << v << '\n';
  out << "exit " << report.exit_code() << '\n';
  return out.str();
}

}  // namespace xichar
