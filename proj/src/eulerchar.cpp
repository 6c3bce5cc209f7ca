#include "xichar/eulerchar.hpp"

#include <sstream>

#include "xichar/bernoulli.hpp"

namespace xichar {

namespace {

Rational fact(int n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  return Rational(factorial(static_cast<unsigned>(n)));
}

Rational binom(int n, int k) { return Rational(binomial(n, k)); }

Rational sign(int e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

void require_positive(int g, int s) {
  if (g < 1 || s < 1) throw std::invalid_argument("g and s must both be at least 1");
}

std::string gs_label(int g, int s) {
  std::ostringstream out;
  out << "(g=" << g << ", s=" << s << ")";
  return out.str();
}

}  // namespace

std::string GammaPoly::pretty() const {
  if (poly.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = 0; k <= poly.degree(); ++k) {
    const Rational& c = poly.coeffs()[static_cast<size_t>(k)];
    if (sgn(c) == 0) continue;
    if (!first) out << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) out << "-";
    first = false;
    out << to_string(abs(c));
    if (k == 1) out << "/gamma";
    if (k > 1) out << "/gamma^" << k;
  }
  return out.str();
}

TruncatedSeries<XPoly> logW_series(int max_delta) {
  if (max_delta < 1) throw std::invalid_argument("logW_series: max_delta must be at least 1");
  TruncatedSeries<XPoly> out(Var::t, max_delta);
  // Writing q = 1/gamma = alpha and K = N gamma = x/alpha.
  const AlphaFn inv_alpha = AlphaFn::alpha_pow(-1);

  // -K sum_k B_{2k} t^{2k-1} / (2k(2k-1))
  for (int k = 1; 2 * k - 1 <= max_delta; ++k) {
    Rational c = -bernoulli(static_cast<unsigned>(2 * k)) / (2 * k * (2 * k - 1));
    out[2 * k - 1] += XPoly::monomial(inv_alpha * c, 1);
  }

  // sum_delta t^delta/(delta(delta+1)) sum_r C(delta+1,r) B_{delta+1-r} (-1)^{delta+1-r}
  //   * (q^delta K^r - q^r/(r+1) sum_m C(r+1,m) B_{r+1-m} (-1)^{r+1-m} K^m)
  for (int delta = 1; delta <= max_delta; ++delta) {
    XPoly acc;
    for (int r = 1; r <= delta + 1; ++r) {
      Rational outer = binom(delta + 1, r) * bernoulli(static_cast<unsigned>(delta + 1 - r)) * sign(delta + 1 - r);
      if (sgn(outer) == 0) continue;
      XPoly inner = XPoly::monomial(AlphaFn::alpha_pow(delta - r), r);
      for (int m = 1; m <= r + 1; ++m) {
        Rational c = binom(r + 1, m) * bernoulli(static_cast<unsigned>(r + 1 - m)) * sign(r + 1 - m) / (r + 1);
        if (sgn(c) == 0) continue;
        inner -= XPoly::monomial(AlphaFn::alpha_pow(r - m) * c, m);
      }
      acc += inner * outer;
    }
    out[delta] += acc * Rational(1, delta * (delta + 1));
  }
  return out;
}

GammaPoly xi_from_logW(int g, int s) {
  require_positive(g, s);
  const int order = g + s - 1;
  const auto series = logW_series(order);
  AlphaFn c = series[order].coeff(s) * AlphaFn::alpha_pow(1);
  c *= fact(s) * sign(s);
  if (!c.is_polynomial()) throw RouteMismatch("xi_from_logW: non-polynomial coefficient for " + gs_label(g, s));
  return GammaPoly{c.num()};
}

GammaPoly xi_closed(int g, int s) {
  require_positive(g, s);
  const auto bg = bernoulli(static_cast<unsigned>(g));
  UniPoly p(Var::alpha);
  if (g % 2 == 0) {
    // (g+s-2)!/g! (-1)^s B_g/2 (1/gamma^g - 1/gamma)
    Rational c = fact(g + s - 2) / fact(g) * sign(s) * bg / 2;
    p += UniPoly::monomial(Var::alpha, c, g);
    p -= UniPoly::monomial(Var::alpha, c, 1);
  } else {
    // (g+s-2)! (-1)^{s+1}/(g+1)! { (g+1) B_g/gamma^g + sum_r C(g+1,r) B_{g+1-r} B_r / gamma^r }
    Rational pre = fact(g + s - 2) * sign(s + 1) / fact(g + 1);
    UniPoly braces = UniPoly::monomial(Var::alpha, Rational(g + 1) * bg, g);
    for (int r = 0; r <= g + 1; ++r) {
      Rational c = binom(g + 1, r) * bernoulli(static_cast<unsigned>(g + 1 - r)) * bernoulli(static_cast<unsigned>(r));
      if (sgn(c) != 0) braces += UniPoly::monomial(Var::alpha, c, r);
    }
    p = braces * pre;
  }
  return GammaPoly{p};
}

GammaPoly xi_from_maps(int g, int s, const MapCountTable& table) {
  require_positive(g, s);
  const int lo = g + s;
  const int hi = 3 * g + 3 * s - 3;
  if (table.max_n < hi) {
    std::ostringstream msg;
    msg << "xi_from_maps " << gs_label(g, s) << " needs maps with up to " << hi << " edges; table has "
        << table.max_n;
    throw std::out_of_range(msg.str());
  }
  UniPoly sum(Var::alpha);
  for (const auto& [key, poly_b] : table.entries) {
    if (key.j != s || key.n < lo || key.n > hi) continue;
    if (!key.i.empty() && key.i[0] != 0) continue;
    if (key.i.size() > 1 && key.i[1] != 0) continue;
    if (key.vertex_count() != key.n - g - s + 1) continue;
    Rational w = fact(s) * sign(key.n - s) / (2 * key.n);
    sum += poly_b.shifted(-1, Var::alpha) * w;  // b = alpha - 1
  }
  GammaPoly result{sum};
  if (!(result == xi_closed(g, s)))
    throw RouteMismatch("xi_from_maps " + gs_label(g, s) + " = " + result.pretty() + " but closed form gives " +
                        xi_closed(g, s).pretty());
  return result;
}

LambdaValues lambda_values(int g, int s) {
  require_positive(g, s);
  const GammaPoly xi = xi_closed(g, s);
  LambdaValues v;
  v.all = xi.at_gamma(Rational(1, 2));
  v.orientable = xi.at_gamma(1);
  v.nonorientable = v.all - v.orientable;

  Rational all_closed, orientable_closed;
  if (g % 2 == 0) {
    all_closed = fact(g + s - 2) / fact(g) * sign(s) * (rational_pow(2, g - 1) - 1) *
                 bernoulli(static_cast<unsigned>(g));
    orientable_closed = 0;
  } else {
    all_closed = fact(g + s - 2) * sign(s) / ((g + 1) * fact(g - 1)) * bernoulli(static_cast<unsigned>(g + 1));
    orientable_closed = all_closed;
  }
  if (v.all != all_closed || v.orientable != orientable_closed)
    throw RouteMismatch("lambda_values " + gs_label(g, s) + ": evaluation gives (" + to_string(v.all) + ", " +
                        to_string(v.orientable) + "), closed forms give (" + to_string(all_closed) + ", " +
                        to_string(orientable_closed) + ")");
  return v;
}

ChiValue chi_real(int g, int s) {
  if (g < 0 || s < 0) throw std::invalid_argument("chi_real: negative index");
  ChiValue out{0, g, s, ChiVariant::real_fixed_point_free};
  if (g == 0) {
    out.value = s <= 1 ? 1 : 0;
    return out;
  }
  if (g == 1 && s == 0) {
    out.value = Rational(1, 2);
    return out;
  }
  // (-2)^{s-1} (1 - 2^{g-1}) (g+s-2)!/g! B_g
  out.value = rational_pow(-2, s - 1) * (1 - rational_pow(2, g - 1)) * fact(g + s - 2) / fact(g) *
              bernoulli(static_cast<unsigned>(g));
  return out;
}

ChiValue chi_real_from_lambda(int g, int s) {
  require_positive(g, s);
  ChiValue out{0, g, s, ChiVariant::real_fixed_point_free};
  out.value = rational_pow(2, s - 1) * lambda_values(g, s).nonorientable;
  const ChiValue direct = chi_real(g, s);
  if (out.value != direct.value)
    throw RouteMismatch("chi_real_from_lambda " + gs_label(g, s) + " = " + to_string(out.value) +
                        ", chi_real = " + to_string(direct.value));
  return out;
}

ChiValue chi_complex(int g, int s) {
  require_positive(g, s);
  ChiValue out{0, g, s, ChiVariant::complex};
  if (g % 2 == 1)
    out.value = sign(s) * fact(g + s - 2) / ((g + 1) * fact(g - 1)) * bernoulli(static_cast<unsigned>(g + 1));
  const Rational at_one = xi_closed(g, s).at_gamma(1);
  if (at_one != out.value)
    throw RouteMismatch("chi_complex " + gs_label(g, s) + " = " + to_string(out.value) + ", xi(1) = " +
                        to_string(at_one));
  return out;
}

ChiValue chi_fixed_curves(int g, int s, int m, bool separating) {
  if (g < 1 || s < 0 || m < 0) throw std::invalid_argument("chi_fixed_curves: index out of range");
  ChiValue out{0, g, s, ChiVariant::fixed_curves, m, separating};
  if (!separating) {
    if (m > g) throw std::invalid_argument("chi_fixed_curves: need m <= g");
    if (g + s < 2) throw std::invalid_argument("chi_fixed_curves: need g + s >= 2");
    // (-2)^{s+m-1} (1 - 2^{g-m-1}) (g+s-2)!/(m!(g-m)!) B_{g-m}
    out.value = rational_pow(-2, s + m - 1) * (1 - rational_pow(2, g - m - 1)) * fact(g + s - 2) /
                (fact(m) * fact(g - m)) * bernoulli(static_cast<unsigned>(g - m));
    return out;
  }
  if ((g - m + 1) % 2 != 0) throw std::invalid_argument("chi_fixed_curves: separating case needs g - m + 1 even");
  if (m < 1 || g - m - 1 < 0 || g - m + s - 2 < 0)
    throw std::invalid_argument("chi_fixed_curves: separating case needs m >= 1, g - m >= 1, g - m + s >= 2");
  // (-1)^{s+m} (g-m+s-2)!/(m!(g-m+1)(g-m-1)!) B_{g-m+1}
  out.value = sign(s + m) * fact(g - m + s - 2) / (fact(m) * (g - m + 1) * fact(g - m - 1)) *
              bernoulli(static_cast<unsigned>(g - m + 1));
  return out;
}

}  // namespace xichar
