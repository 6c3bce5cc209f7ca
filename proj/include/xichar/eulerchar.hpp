#ifndef XICHAR_EULERCHAR_HPP
#define XICHAR_EULERCHAR_HPP

#include <stdexcept>
#include <string>

#include "xichar/alphafn.hpp"
#include "xichar/mapseries.hpp"
#include "xichar/series.hpp"

namespace xichar {

// Polynomial in 1/gamma. Stored with the alpha tag since alpha = 1/gamma.
struct GammaPoly {
  UniPoly poly{Var::alpha};

  Rational coeff(int k) const { return poly.coeff(k); }
  int degree() const { return poly.degree(); }
  Rational at_gamma(const Rational& gamma) const { return poly.evaluate(1 / gamma); }
  friend bool operator==(const GammaPoly& a, const GammaPoly& b) { return a.poly == b.poly; }
  std::string pretty() const;
};

enum class ChiVariant { complex, real_fixed_point_free, fixed_curves };

struct ChiValue {
  Rational value;
  int g = 0;
  int s = 0;
  ChiVariant variant = ChiVariant::real_fixed_point_free;
  int m = 0;               // fixed curves only
  bool separating = false;  // fixed curves only
};

// Two routes to a quantity the theory proves equal disagreed.
class RouteMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// log W_gamma(x, t) through t^max_delta as a formal series. Coefficients are
// polynomials in x over Q(alpha), alpha = 1/gamma.
TruncatedSeries<XPoly> logW_series(int max_delta);

// xi^s_g(gamma) = s! (-1)^s [x^s t^{g+s-1}] (1/gamma) log W_gamma(x, t).
GammaPoly xi_from_logW(int g, int s);

// Bernoulli closed form, split by the parity of g.
GammaPoly xi_closed(int g, int s);

// Sum over rooted maps with s faces and no vertices of valence 1 or 2:
// xi = s! sum_n (-1)^{n-s}/(2n) sum_i m_gamma(i, s, n). Requires
// table.max_n >= 3g + 3s - 3 (std::out_of_range otherwise) and checks the
// result against xi_closed.
GammaPoly xi_from_maps(int g, int s, const MapCountTable& table);

struct LambdaValues {
  Rational all;             // Lambda^s_g = xi(1/2)
  Rational orientable;      // Lambda^{s,O} = xi(1)
  Rational nonorientable;   // Lambda^{s,N} = all - orientable
};

// Evaluates xi_closed at gamma = 1/2 and 1, then checks both against the
// Bernoulli closed forms for Lambda and Lambda^O.
LambdaValues lambda_values(int g, int s);

// chi(M_g^s(tau_0)) for a fixed-point-free involution, including the
// g = 0 and (g, s) = (1, 0) special values.
ChiValue chi_real(int g, int s);
// 2^{s-1} Lambda^{s,N}_g, checked against chi_real.
ChiValue chi_real_from_lambda(int g, int s);
// Complex moduli space, checked against xi_closed(g, s) at gamma = 1.
ChiValue chi_complex(int g, int s);
// Involution fixing m curves. Throws std::invalid_argument when separating
// and g - m + 1 is odd, or when indices are out of range.
ChiValue chi_fixed_curves(int g, int s, int m, bool separating);

}  // namespace xichar

#endif
