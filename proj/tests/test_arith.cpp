#include <doctest.h>

#include <omp.h>

#include "support.hpp"
#include "xichar/bernoulli.hpp"
#include "xichar/series.hpp"

using namespace xichar;
using testsupport::Rng;

namespace {

// Akiyama-Tanigawa; yields B_n with B_1 = +1/2, so the sign of B_1 is flipped.
Rational akiyama_tanigawa(int n) {
  std::vector<Rational> a(static_cast<size_t>(n + 1));
  for (int m = 0; m <= n; ++m) {
    a[static_cast<size_t>(m)] = Rational(1, m + 1);
    for (int j = m; j >= 1; --j) a[static_cast<size_t>(j - 1)] = j * (a[static_cast<size_t>(j - 1)] - a[static_cast<size_t>(j)]);
  }
  return n == 1 ? -a[0] : a[0];
}

UniPoly bpoly(std::vector<Rational> c) { return UniPoly(Var::b, std::move(c)); }

}  // namespace

TEST_CASE("rational strings") {
  CHECK(to_string(Rational(3, 4)) == "3/4");
  CHECK(to_string(Rational(-6)) == "-6");
  CHECK(to_string(Rational(0)) == "0");
  CHECK(parse_rational("-10/4") == Rational(-5, 2));
  CHECK(parse_rational("7") == 7);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  Rng rng;
  for (int t = 0; t < 50; ++t) {
    const Rational r = rng.rational(1000);
    CHECK(parse_rational(to_string(r)) == r);
  }
}

TEST_CASE("integer helpers") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
  CHECK(binomial(6, 2) == 15);
  CHECK(binomial(4, 5) == 0);
  CHECK(rational_pow(Rational(2, 3), -2) == Rational(9, 4));
  CHECK(rational_pow(-2, 3) == -8);
}

TEST_CASE("ring axioms on random inputs") {
  Rng rng;
  for (int t = 0; t < 60; ++t) {
    const Rational a = rng.rational(), b = rng.rational(), c = rng.rational();
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);

    const UniPoly p = rng.poly(Var::b, 4), q = rng.poly(Var::b, 4), r = rng.poly(Var::b, 4);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p + UniPoly(Var::b) == p);
    CHECK(p * UniPoly::constant(Var::b, 1) == p);
    CHECK((p - p).is_zero());

    const AlphaFn f = rng.alpha_fn(), g = rng.alpha_fn(), h = rng.alpha_fn();
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
    CHECK(f + AlphaFn(0) == f);
    CHECK(f * AlphaFn(1) == f);
    if (!g.is_zero()) CHECK((f / g) * g == f);
  }
}

TEST_CASE("AlphaFn canonical form") {
  Rng rng;
  for (int t = 0; t < 60; ++t) {
    const UniPoly p = rng.poly(Var::alpha, 3), q = rng.nonzero_poly(Var::alpha, 3), r = rng.nonzero_poly(Var::alpha, 2);
    const AlphaFn plain(p, q), scaled(p * r, q * r);
    CHECK(plain == scaled);
    CHECK(plain.den().leading() == 1);
    CHECK(gcd(plain.num(), plain.den()).degree() <= 0);
  }
  const UniPoly a = UniPoly::identity(Var::alpha);
  const AlphaFn f(a * a - UniPoly::constant(Var::alpha, 1), UniPoly::constant(Var::alpha, 2) * (a - UniPoly::constant(Var::alpha, 1)));
  CHECK(f.is_polynomial());
  CHECK(f.num() == UniPoly(Var::alpha, {Rational(1, 2), Rational(1, 2)}));
  CHECK_THROWS(AlphaFn(a, UniPoly(Var::alpha)));
  CHECK(AlphaFn(a, a + UniPoly::constant(Var::alpha, 1)).evaluate(1) == Rational(1, 2));
  CHECK(AlphaFn(a, a).evaluate(0) == 1);
  CHECK_THROWS_AS(AlphaFn(UniPoly::constant(Var::alpha, 1), a).evaluate(0), std::domain_error);
}

TEST_CASE("variable tags") {
  CHECK_THROWS_AS(UniPoly::identity(Var::b) + UniPoly::identity(Var::x), VariableMismatch);
  CHECK_THROWS_AS(UniPoly::identity(Var::z) * UniPoly::identity(Var::t), VariableMismatch);
  CHECK(UniPoly(Var::alpha, {1, 2}).shifted(1, Var::b) == bpoly({3, 2}));
  CHECK(UniPoly::identity(Var::alpha).retagged(Var::b) == UniPoly::identity(Var::b));
}

TEST_CASE("polynomial division and gcd") {
  Rng rng;
  for (int t = 0; t < 40; ++t) {
    const UniPoly a = rng.poly(Var::x, 5), b = rng.nonzero_poly(Var::x, 3);
    const auto [q, r] = divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
    const UniPoly c = rng.nonzero_poly(Var::x, 2);
    const UniPoly g = gcd(a * c, b * c);
    CHECK(divmod(g, c.monic()).second.is_zero());
  }
  CHECK_THROWS_AS(divmod(UniPoly::identity(Var::x), UniPoly(Var::x)), std::domain_error);
  CHECK(gcd(UniPoly(Var::x), UniPoly(Var::x)).is_zero());
  CHECK(bpoly({1, 1, 3}).pretty() == "1 + b + 3*b^2");
}

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(3) == 0);
  CHECK(bernoulli(12) == Rational(-691, 2730));
  for (unsigned k = 1; k <= 15; ++k) CHECK(bernoulli(2 * k + 1) == 0);
  for (int n = 0; n <= 30; ++n) CHECK(bernoulli(static_cast<unsigned>(n)) == akiyama_tanigawa(n));
  for (int n = 1; n <= 30; ++n) {
    Rational s = 0;
    for (int k = 0; k <= n; ++k) s += Rational(binomial(n + 1, k)) * bernoulli(static_cast<unsigned>(k));
    CHECK(s == 0);
  }
}

TEST_CASE("bernoulli cache under concurrent use") {
  testing::reset_bernoulli_cache();
  std::vector<Rational> got(200);
#pragma omp parallel for
  for (int q = 0; q < 200; ++q) got[static_cast<size_t>(q)] = bernoulli(static_cast<unsigned>((q * 37) % 41));
  for (int q = 0; q < 200; ++q) CHECK(got[static_cast<size_t>(q)] == akiyama_tanigawa((q * 37) % 41));

  testing::corrupt_bernoulli_cache(2, Rational(5));
  CHECK(bernoulli(2) == 5);
  testing::reset_bernoulli_cache();
  CHECK(bernoulli(2) == Rational(1, 6));
}

TEST_CASE("sum of powers") {
  CHECK(sum_of_powers_poly(0) == UniPoly(Var::N, {0, 1}));
  CHECK(sum_of_powers_poly(1) == UniPoly(Var::N, {0, Rational(1, 2), Rational(1, 2)}));
  CHECK(sum_of_powers_poly(3) == UniPoly(Var::N, {0, 0, Rational(1, 4), Rational(1, 2), Rational(1, 4)}));
  for (unsigned k = 0; k <= 6; ++k) {
    Rational direct = 0;
    for (int n = 1; n <= 20; ++n) {
      direct += rational_pow(n, k);
      CHECK(sum_of_powers_poly(k).evaluate(n) == direct);
    }
  }
}

TEST_CASE("truncated series") {
  using S = TruncatedSeries<Rational>;
  CHECK(series_log(S(Var::z, std::vector<Rational>{1, 1, 0})) == S(Var::z, std::vector<Rational>{0, 1, Rational(-1, 2)}));
  CHECK(series_log(S(Var::z, std::vector<Rational>{1, 0, 0})) == S(Var::z, 2));
  CHECK_THROWS_AS(series_log(S(Var::z, std::vector<Rational>{0, 1})), std::domain_error);
  CHECK_THROWS_AS(series_exp(S(Var::z, std::vector<Rational>{1, 1})), std::domain_error);

  // exp(z) truncated at order 3, then log
  const S e(Var::z, std::vector<Rational>{1, 1, Rational(1, 2), Rational(1, 6)});
  CHECK(series_log(e) == S(Var::z, std::vector<Rational>{0, 1, 0, 0}));

  CHECK(series_z_ddz(S(Var::z, std::vector<Rational>{0, 1})) == S(Var::z, std::vector<Rational>{0, 1}));
  CHECK(series_z_ddz(S(Var::z, std::vector<Rational>{0, 0, 3})) == S(Var::z, std::vector<Rational>{0, 0, 6}));
  CHECK(series_z_ddz(S(Var::z, std::vector<Rational>{0, 1, Rational(1, 2), Rational(1, 3), Rational(1, 4)})) ==
        S(Var::z, std::vector<Rational>{0, 1, 1, 1, 1}));

  Rng rng;
  for (int t = 0; t < 20; ++t) {
    S s(Var::t, 7);
    for (int k = 1; k <= 7; ++k) s[k] = rng.rational();
    CHECK(series_log(series_exp(s)) == s);
    S twice = s;
    twice += s;
    CHECK(series_exp(twice) == series_exp(s) * series_exp(s));
  }
  S in_t(Var::t, 2);
  CHECK_THROWS_AS(in_t += S(Var::z, 2), VariableMismatch);
  CHECK_THROWS_AS(in_t += S(Var::t, 3), std::invalid_argument);
}

TEST_CASE("series over polynomials in x") {
  // log of 1 + x z over Q(alpha)[x]
  TruncatedSeries<XPoly> s(Var::z, 3);
  s[0] = XPoly(AlphaFn(1));
  s[1] = XPoly::monomial(AlphaFn(1), 1);
  const auto l = series_log(s);
  CHECK(l[2] == XPoly::monomial(AlphaFn(Rational(-1, 2)), 2));
  CHECK(l[3] == XPoly::monomial(AlphaFn(Rational(1, 3)), 3));
  CHECK(series_exp(l) == s);
}
