#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "bcpoly/interpolation.hpp"

namespace bcpoly {

struct ParamTriple {
  Rational theta;
  Rational a;
  Rational b;

  ParamTriple(Rational theta_, Rational a_, Rational b_)
      : theta(std::move(theta_)), a(std::move(a_)), b(std::move(b_)) {
    if (theta <= 0) throw Error("theta must be positive");
    if (a <= -1) throw Error("a must exceed -1");
    if (b <= -1) throw Error("b must exceed -1");
  }

  Rational sigma() const { return (a + b + 1) / 2; }

  /// a >= b >= -1/2, where the formal multiplicities are nonnegative.
  bool positivity_regime() const { return a >= b && b >= make_rational(-1, 2); }
};

/// W-invariant Laurent polynomial stored over m_nu(y),
/// y_i = (z_i + 1/z_i - 2) / 2.
struct TorusPoly {
  int n = 0;
  SymPoly y;

  Rational value_at_identity() const { return y.coefficient(Partition()); }

  /// Expansion in z_1..z_n with negative exponents.
  RationalPolynomial to_laurent() const {
    std::vector<RationalPolynomial> images;
    for (int i = 0; i < n; ++i) {
      RationalPolynomial yi(n);
      Exponent e(static_cast<std::size_t>(n), 0);
      e[static_cast<std::size_t>(i)] = 1;
      yi.add_term(e, make_rational(1, 2));
      e[static_cast<std::size_t>(i)] = -1;
      yi.add_term(e, make_rational(1, 2));
      yi.add_term(Exponent(static_cast<std::size_t>(n), 0), -1);
      images.push_back(std::move(yi));
    }
    return compose(y.to_polynomial(), images);
  }

  /// Expansion in x_i = (z_i + 1/z_i) / 2 = y_i + 1.
  RationalPolynomial to_x_polynomial() const { return translate(y.to_polynomial(), -1); }

  bool operator==(const TorusPoly& o) const { return n == o.n && y == o.y; }
};

/// C(n, mu) = 4^{|mu|} (H/H') prod_i ((n-i+1) theta)_{mu_i} ((n-i) theta + a + 1)_{mu_i}.
inline Rational c_denominator(int n, const Partition& mu, const ParamTriple& p) {
  if (mu.length() > n) throw Error("too many rows");
  auto [h, hp] = hook_products(mu, p.theta);
  Rational out = power(Rational(4), mu.size()) * h / hp;
  for (int i = 1; i <= n; ++i) {
    int m = mu.part(i - 1);
    out *= rising((n - i + 1) * p.theta, m) * rising((n - i) * p.theta + p.a + 1, m);
  }
  return out;
}

/// J_lambda(1, ..., 1) = C(n, lambda) / I_lambda(lambda; theta; sigma + theta n).
inline Rational jacobi_value_at_identity(const Partition& lambda, int n, const ParamTriple& p) {
  if (lambda.length() > n) throw Error("too many rows");
  Rational norm = interp_normalization(lambda, p.theta, p.sigma() + p.theta * n);
  if (norm == 0) throw Error("degenerate parameters");
  return c_denominator(n, lambda, p) / norm;
}

/// Value at the identity from the product over positive roots, with every
/// Gamma ratio regrouped into rising factorials of integer length.
/// Returns nullopt when a factor degenerates to 0/0.
inline std::optional<Rational> opdam_value_at_identity(const Partition& mu, int n, const ParamTriple& p) {
  if (mu.length() > n) throw Error("too many rows");
  const Rational& th = p.theta;
  Rational two_sigma = 2 * p.sigma();
  Rational num = 1, den = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      int d = mu.part(i - 1) - mu.part(j - 1), s = mu.part(i - 1) + mu.part(j - 1);
      num *= rising(th * (j - i + 1), d) * rising(th * (2 * n - i - j + 1) + two_sigma, s);
      den *= rising(th * (j - i), d) * rising(th * (2 * n - i - j) + two_sigma, s);
    }
  for (int i = 1; i <= n; ++i) {
    int m = mu.part(i - 1);
    num *= rising(2 * th * (n - i) + 2 * p.a + 1, 2 * m) * rising(th * (n - i) + two_sigma, m);
    den *= rising(2 * th * (n - i) + two_sigma, 2 * m) * rising(th * (n - i) + p.a + make_rational(1, 2), m);
  }
  if (den == 0) return std::nullopt;
  return num / den;
}

/// Phi_lambda by the binomial formula:
/// sum_{mu in lambda} I_mu(lambda; theta; sigma + theta n) / C(n, mu) * 2^{|mu|} P_mu(y).
inline TorusPoly normalized_jacobi(const Partition& lambda, int n, const ParamTriple& p) {
  if (lambda.length() > n) throw Error("too many rows");
  Rational h = p.sigma() + p.theta * n;
  TorusPoly out{n, SymPoly(n)};
  for (const auto& mu : subpartitions(lambda)) {
    if (mu.length() > n) continue;
    Rational coef = interp_value(mu, lambda, n, p.theta, h) / c_denominator(n, mu, p) * power(Rational(2), mu.size());
    if (coef == 0) continue;
    out.y += jack_polynomial(mu, n, p.theta) * coef;
  }
  return out;
}

/// J_lambda = Phi_lambda * J_lambda(1, ..., 1), monic in z^lambda.
inline TorusPoly jacobi_monic(const Partition& lambda, int n, const ParamTriple& p) {
  TorusPoly phi = normalized_jacobi(lambda, n, p);
  phi.y *= jacobi_value_at_identity(lambda, n, p);
  return phi;
}

/// Coefficients u_{lambda mu} of J_lambda over the orbit sums of z^mu.
/// Throws if the Laurent expansion fails to be W-invariant.
inline std::map<Partition, Rational> u_coefficients(const Partition& lambda, int n, const ParamTriple& p) {
  RationalPolynomial laurent = jacobi_monic(lambda, n, p).to_laurent();
  std::map<Partition, Rational> out;
  for (const auto& [e, c] : laurent.terms()) {
    std::vector<int> rep;
    for (int v : e) rep.push_back(v < 0 ? -v : v);
    std::sort(rep.begin(), rep.end(), std::greater<int>());
    if (laurent.coefficient(Exponent(rep.begin(), rep.end())) != c) throw Error("Laurent expansion is not W-invariant");
    if (Exponent(rep.begin(), rep.end()) == e) out.emplace(Partition(rep), c);
  }
  return out;
}

namespace detail {
inline RationalPolynomial laurent_power(const RationalPolynomial& base, int k, int n) {
  RationalPolynomial out = RationalPolynomial::constant(n, 1);
  for (int i = 0; i < k; ++i) out *= base;
  return out;
}

/// |1 - s z_i|^2 = (1 - s z_i)(1 - s / z_i), with s = +-1.
inline RationalPolynomial abs_square_one_minus(int n, int i, int s) {
  RationalPolynomial f(n);
  Exponent e(static_cast<std::size_t>(n), 0);
  f.add_term(e, 2);
  e[static_cast<std::size_t>(i)] = 1;
  f.add_term(e, -s);
  e[static_cast<std::size_t>(i)] = -1;
  f.add_term(e, -s);
  return f;
}

/// |z_i - z_j|^2 = 2 - z_i/z_j - z_j/z_i and |1 - z_i z_j|^2 = 2 - z_i z_j - 1/(z_i z_j).
inline RationalPolynomial pair_factor(int n, int i, int j, int sj) {
  RationalPolynomial f(n);
  Exponent e(static_cast<std::size_t>(n), 0);
  f.add_term(e, 2);
  e[static_cast<std::size_t>(i)] = 1;
  e[static_cast<std::size_t>(j)] = sj;
  f.add_term(e, -1);
  e[static_cast<std::size_t>(i)] = -1;
  e[static_cast<std::size_t>(j)] = -sj;
  f.add_term(e, -1);
  return f;
}
}  // namespace detail

/// The weight as a Laurent polynomial; needs theta, a + 1/2 and b + 1/2 to
/// be nonnegative integers.
inline RationalPolynomial torus_weight(int n, const ParamTriple& p) {
  Rational ka = p.a + make_rational(1, 2), kb = p.b + make_rational(1, 2);
  if (!is_integer(p.theta) || !is_integer(ka) || !is_integer(kb) || ka < 0 || kb < 0)
    throw Error("exact mode unavailable; use numeric quadrature");
  int t = static_cast<int>(p.theta.get_num().get_si());
  int ea = static_cast<int>(ka.get_num().get_si()), eb = static_cast<int>(kb.get_num().get_si());
  RationalPolynomial w = RationalPolynomial::constant(n, 1);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      w *= detail::laurent_power(detail::pair_factor(n, i, j, -1) * detail::pair_factor(n, i, j, 1), t, n);
  for (int i = 0; i < n; ++i)
    w *= detail::laurent_power(detail::abs_square_one_minus(n, i, 1), ea, n) *
         detail::laurent_power(detail::abs_square_one_minus(n, i, -1), eb, n);
  return w;
}

/// Constant term of f(z) g(1/z) w(z).
inline Rational exact_inner_product(const TorusPoly& f, const TorusPoly& g, const ParamTriple& p) {
  if (f.n != g.n) throw Error("inner product of polynomials in different numbers of variables");
  RationalPolynomial fw = f.to_laurent() * torus_weight(f.n, p);
  RationalPolynomial gl = g.to_laurent();
  Rational out = 0;
  for (const auto& [e, c] : gl.terms()) {
    // g(1/z) contributes z^{-e}; pair it with the z^{e} term of f w.
    out += c * fw.coefficient(e);
  }
  return out;
}

/// Coefficients d_nu in J_lambda(z_1..z_{n-1}, 1) = sum d_nu J_nu(z_1..z_{n-1}).
inline std::map<Partition, Rational> branching_expand(const Partition& lambda, int n, const ParamTriple& p) {
  if (n < 2) throw Error("branching needs n >= 2");
  if (lambda.length() > n) throw Error("too many rows");
  SymPoly rest = jacobi_monic(lambda, n, p).y.drop_last_variable();
  // (|kappa|, lex) descending refines the order in which J_kappa is
  // unitriangular over m_kappa(y).
  auto later = [](const Partition& x, const Partition& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  };
  std::map<Partition, Rational> out;
  while (!rest.is_zero()) {
    Partition top = rest.terms().begin()->first;
    for (const auto& [kappa, c] : rest.terms())
      if (later(top, kappa)) top = kappa;
    Rational d = rest.coefficient(top) / power(Rational(2), top.size());
    out[top] = d;
    rest -= jacobi_monic(top, n - 1, p).y * d;
    if (rest.coefficient(top) != 0) throw Error("branching back-substitution failed");
  }
  return out;
}

/// Phi_lambda(z, 1, ..., 1) as a polynomial in y = (z + 1/z - 2)/2; only the
/// one-row terms of the binomial formula survive.
inline UniPoly one_variable_restriction(const Partition& lambda, int n, const ParamTriple& p) {
  if (lambda.length() > n) throw Error("too many rows");
  Rational h = p.sigma() + p.theta * n;
  std::vector<Rational> coeffs;
  for (int m = 0; m <= lambda.part(0); ++m) {
    Partition mu = m ? Partition{m} : Partition();
    coeffs.push_back(interp_value(mu, lambda, n, p.theta, h) / c_denominator(n, mu, p) * power(Rational(2), m));
  }
  return UniPoly(coeffs);
}

/// Laurent coefficients in z of Phi_lambda(z, 1, ..., 1).
inline std::map<int, Rational> one_variable_fourier(const Partition& lambda, int n, const ParamTriple& p) {
  UniPoly f = one_variable_restriction(lambda, n, p);
  // y^m = 2^{-m} (z^{1/2} - z^{-1/2})^{2m} = 2^{-m} sum_k C(2m, k) (-1)^k z^{m-k}
  std::map<int, Rational> out;
  for (int m = 0; m <= f.degree(); ++m) {
    Rational c = f.coefficient(m) / power(Rational(2), m);
    if (c == 0) continue;
    for (int k = 0; k <= 2 * m; ++k) out[m - k] += c * Rational(binomial(2 * m, k)) * sign_power(k);
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace bcpoly
