#ifndef XICHAR_TESTS_SUPPORT_HPP
#define XICHAR_TESTS_SUPPORT_HPP

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>

#include "xichar/alphafn.hpp"

namespace testsupport {

// XICHAR_SEED overrides the default seed of the randomized checks.
inline std::uint64_t seed() {
  if (const char* s = std::getenv("XICHAR_SEED")) return std::stoull(s);
  return 20261018;
}

struct Rng {
  std::mt19937_64 gen{seed()};
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen); }
  xichar::Rational rational(long span = 9) {
    xichar::Rational r(integer(-span, span), integer(1, 7));
    r.canonicalize();
    return r;
  }
  xichar::UniPoly poly(xichar::Var v, int max_degree) {
    std::vector<xichar::Rational> c(static_cast<size_t>(integer(0, max_degree) + 1));
    for (auto& r : c) r = rational();
    return xichar::UniPoly(v, c);
  }
  xichar::UniPoly nonzero_poly(xichar::Var v, int max_degree) {
    for (;;) {
      auto p = poly(v, max_degree);
      if (!p.is_zero()) return p;
    }
  }
  xichar::AlphaFn alpha_fn() {
    return xichar::AlphaFn(poly(xichar::Var::alpha, 2), nonzero_poly(xichar::Var::alpha, 2));
  }
};

inline xichar::AlphaFn alpha() { return xichar::AlphaFn::alpha_pow(1); }

}  // namespace testsupport

#endif
