#include <doctest.h>

#include "xichar/bernoulli.hpp"
#include "xichar/eulerchar.hpp"

using namespace xichar;

namespace {

GammaPoly gp(std::vector<Rational> c) { return GammaPoly{UniPoly(Var::alpha, std::move(c))}; }

Rational fact(int n) { return Rational(factorial(static_cast<unsigned>(n))); }

}  // namespace

TEST_CASE("xi for one handle and one face") {
  const GammaPoly expected = gp({Rational(1, 12), Rational(-1, 4), Rational(1, 12)});
  CHECK(xi_closed(1, 1) == expected);
  CHECK(xi_from_logW(1, 1) == expected);
  CHECK(xi_from_maps(1, 1, map_count_table(3)) == expected);
  CHECK(expected.pretty().find("gamma") != std::string::npos);
}

TEST_CASE("closed form and log W agree") {
  for (int g = 1; g <= 6; ++g)
    for (int s = 1; s <= 4; ++s) {
      INFO("g=" << g << " s=" << s);
      CHECK(xi_closed(g, s) == xi_from_logW(g, s));
    }
}

TEST_CASE("shape of the closed form") {
  for (int g = 1; g <= 10; ++g)
    for (int s = 1; s <= 4; ++s) {
      const auto xi = xi_closed(g, s);
      if (g % 2 == 0) {
        const Rational c = fact(g + s - 2) *
                           rational_pow(-1, s) * bernoulli(static_cast<unsigned>(g)) / (2 * fact(g));
        CHECK(xi.degree() == g);
        CHECK(xi.coeff(0) == 0);
        CHECK(xi.coeff(g) == c);
        CHECK(xi.coeff(1) == -c);
        CHECK(xi.at_gamma(1) == 0);
      } else {
        CHECK(xi.degree() == g + 1);
      }
    }
  CHECK_THROWS_AS(xi_closed(0, 1), std::invalid_argument);
}

TEST_CASE("lambda values") {
  const auto v = lambda_values(1, 1);
  CHECK(v.all == Rational(-1, 12));
  CHECK(v.orientable == Rational(-1, 12));
  CHECK(v.nonorientable == 0);
  for (int g = 1; g <= 8; ++g)
    for (int s = 1; s <= 3; ++s) {
      const auto w = lambda_values(g, s);
      CHECK(w.all == xi_closed(g, s).at_gamma(Rational(1, 2)));
      CHECK(w.all == w.orientable + w.nonorientable);
    }
}

TEST_CASE("real moduli spaces") {
  CHECK(chi_real(1, 0).value == Rational(1, 2));
  CHECK(chi_real(0, 0).value == 1);
  CHECK(chi_real(0, 1).value == 1);
  CHECK(chi_real(0, 2).value == 0);
  CHECK(chi_real(0, 5).value == 0);
  CHECK(chi_real(2, 1).value == Rational(-1, 12));
  CHECK(chi_real(3, 2).value == 0);
  CHECK(chi_real_from_lambda(1, 1).value == 0);
  CHECK(chi_real(1, 1).value == 0);
  CHECK(chi_real_from_lambda(2, 1).value == Rational(-1, 12));
  CHECK(chi_real_from_lambda(2, 2).value == chi_real(2, 2).value);
  for (int g = 1; g <= 10; ++g)
    for (int s = 1; s <= 4; ++s) {
      const auto xi = xi_closed(g, s);
      const Rational lhs = rational_pow(2, s - 1) * (xi.at_gamma(Rational(1, 2)) - xi.at_gamma(1));
      const Rational rhs = rational_pow(-2, s - 1) * (1 - rational_pow(2, g - 1)) * fact(g + s - 2) / fact(g) *
                           bernoulli(static_cast<unsigned>(g));
      CHECK(lhs == rhs);
      CHECK(chi_real(g, s).value == rhs);
    }
  CHECK_THROWS_AS(chi_real(-1, 0), std::invalid_argument);
}

TEST_CASE("complex moduli spaces") {
  CHECK(chi_complex(1, 1).value == Rational(-1, 12));
  CHECK(chi_complex(2, 1).value == 0);
  CHECK(chi_complex(3, 1).value == Rational(1, 120));
  for (int g = 1; g <= 10; ++g)
    for (int s = 1; s <= 4; ++s) {
      const Rational at1 = xi_closed(g, s).at_gamma(1);
      if (g % 2 == 0) CHECK(at1 == 0);
      else
        CHECK(at1 == rational_pow(-1, s) * fact(g + s - 2) * bernoulli(static_cast<unsigned>(g + 1)) /
                         (Rational(g + 1) * fact(g - 1)));
    }
}

TEST_CASE("involutions with fixed curves") {
  CHECK(chi_fixed_curves(2, 1, 1, true).value == Rational(1, 12));
  CHECK_THROWS_AS(chi_fixed_curves(3, 1, 1, true), std::invalid_argument);
  for (int g = 1; g <= 6; ++g)
    for (int s = 1; s <= 3; ++s) CHECK(chi_fixed_curves(g, s, 0, false).value == chi_real(g, s).value);
}

TEST_CASE("maps route needs enough edges") {
  CHECK_THROWS_AS(xi_from_maps(1, 1, map_count_table(2)), std::out_of_range);
  CHECK_THROWS_AS(xi_from_maps(2, 1, map_count_table(3)), std::out_of_range);
}
