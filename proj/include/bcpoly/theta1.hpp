#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "bcpoly/jacobi.hpp"

namespace bcpoly {

/// p_l(x; a, b) = (a+1)_l / l! * 2F1(-l, l+a+b+1; a+1; (1-x)/2).
inline UniPoly classical_jacobi(int l, const Rational& a, const Rational& b) {
  if (l < 0) throw Error("degree must be nonnegative");
  UniPoly t = UniPoly({make_rational(1, 2), make_rational(-1, 2)});  // (1 - x)/2
  UniPoly sum;
  UniPoly tk = UniPoly::constant(1);
  for (int k = 0; k <= l; ++k) {
    Rational term = rising(Rational(-l), k) * rising(l + a + b + 1, k) / (rising(a + 1, k) * Rational(factorial(k)));
    sum += tk * term;
    tk = tk * t;
  }
  return sum * (rising(a + 1, l) / Rational(factorial(l)));
}

/// Gamma(l+a+1) / (Gamma(l+1) Gamma(a+1)).
inline Rational classical_jacobi_at_one(int l, const Rational& a) { return rising(a + 1, l) / Rational(factorial(l)); }

/// kappa(l; a, b) = 2^{-l} Gamma(2l+a+b+1) / (Gamma(l+a+b+1) Gamma(l+1)).
inline Rational classical_jacobi_leading(int l, const Rational& a, const Rational& b) {
  return rising(l + a + b + 1, l) / (power(Rational(2), l) * Rational(factorial(l)));
}

namespace detail {
inline std::vector<int> identity_permutation(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

inline int permutation_sign(const std::vector<int>& p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

/// det[f(i, j)] by the Leibniz expansion, for polynomial entries.
template <class Entry>
RationalPolynomial polynomial_determinant(int n, int nvars, Entry&& f) {
  RationalPolynomial out(nvars);
  auto perm = identity_permutation(n);
  do {
    RationalPolynomial t = RationalPolynomial::constant(nvars, permutation_sign(perm));
    for (int i = 0; i < n; ++i) t *= f(i, perm[static_cast<std::size_t>(i)]);
    out += t;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

template <class Entry>
Rational scalar_determinant(int n, Entry&& f) {
  Rational out = 0;
  auto perm = identity_permutation(n);
  do {
    Rational t = permutation_sign(perm);
    for (int i = 0; i < n; ++i) t *= f(i, perm[static_cast<std::size_t>(i)]);
    out += t;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// u(x_j) as a polynomial in n variables.
inline RationalPolynomial lift(const UniPoly& u, int n, int j) {
  RationalPolynomial out(n);
  Exponent e(static_cast<std::size_t>(n), 0);
  for (int k = 0; k <= u.degree(); ++k) {
    e[static_cast<std::size_t>(j)] = k;
    out.add_term(e, u.coefficient(k));
  }
  return out;
}

/// det[f_{lambda_i + n - i}(x_j)] / V(x) for a family of one-variable polynomials.
template <class Family>
RationalPolynomial alternant_ratio(const Partition& lambda, int n, Family&& family) {
  std::map<int, UniPoly> polys;
  for (int i = 0; i < n; ++i) {
    int d = lambda.part(i) + n - 1 - i;
    if (!polys.count(d)) polys.emplace(d, family(d));
  }
  std::vector<std::vector<RationalPolynomial>> entries(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) entries[static_cast<std::size_t>(i)].push_back(lift(polys.at(lambda.part(i) + n - 1 - i), n, j));
  RationalPolynomial det = polynomial_determinant(n, n, [&](int i, int j) -> const RationalPolynomial& {
    return entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  });
  return divide_by_vandermonde(det);
}
}  // namespace detail

/// det[p_{lambda_i+n-i}(x_j; a, b)] / V(x).
inline SymPoly determinantal_jacobi(const Partition& lambda, int n, const Rational& a, const Rational& b) {
  if (lambda.length() > n) throw Error("too many rows");
  return SymPoly::from_polynomial(
      detail::alternant_ratio(lambda, n, [&](int d) { return classical_jacobi(d, a, b); }));
}

/// 2^{|lambda|} / prod kappa(lambda_i + n - i; a, b).
inline Rational determinantal_const(const Partition& lambda, int n, const Rational& a, const Rational& b) {
  Rational out = power(Rational(2), lambda.size());
  for (int i = 1; i <= n; ++i) out /= classical_jacobi_leading(lambda.part(i - 1) + n - i, a, b);
  return out;
}

/// Parameters (A_1, A_2, ...) of the generalized powers (y|A)^m.
struct FactorialGrid {
  std::vector<Rational> values;

  const Rational& at(int k) const {
    if (k < 1 || k > static_cast<int>(values.size())) throw Error("factorial grid horizon exceeded");
    return values[static_cast<std::size_t>(k - 1)];
  }

  Rational generalized_power(const Rational& y, int m) const {
    Rational out = 1;
    for (int k = 1; k <= m; ++k) out *= y - at(k);
    return out;
  }

  UniPoly generalized_power(int m) const {
    UniPoly out = UniPoly::constant(1);
    for (int k = 1; k <= m; ++k) out = out * UniPoly::linear_root(at(k));
    return out;
  }
};

/// A = ((h-n)^2, (h-n+1)^2, ...) up to the given horizon.
inline FactorialGrid theta1_grid(int n, const Rational& h, int horizon) {
  FactorialGrid g;
  for (int k = 1; k <= horizon; ++k) {
    Rational v = h - n + k - 1;
    g.values.push_back(v * v);
  }
  return g;
}

/// s_mu(y | A) as a polynomial, from the determinant ratio.
inline RationalPolynomial factorial_schur_polynomial(const Partition& mu, int n, const FactorialGrid& grid) {
  if (mu.length() > n) throw Error("too many rows");
  return detail::alternant_ratio(mu, n, [&](int d) { return grid.generalized_power(d); });
}

/// s_mu(y | A) by the sum over reverse tableaux of prod (y_T - A_{j-i+n+1-T}).
inline Rational factorial_schur_tableau(const Partition& mu, std::span<const Rational> y, const FactorialGrid& grid) {
  const int n = static_cast<int>(y.size());
  if (mu.length() > n) return 0;
  Rational out = 0;
  auto stream = enumerate_reverse_tableaux(mu, n);
  while (auto t = stream.next()) {
    Rational term = 1;
    for (int i = 1; i <= mu.length(); ++i)
      for (int j = 1; j <= mu.part(i - 1); ++j) {
        int e = t->at(i - 1, j - 1);
        term *= y[static_cast<std::size_t>(e - 1)] - grid.at(j - i + n + 1 - e);
      }
    out += term;
  }
  return out;
}

/// s_mu(y | A) at a point: the determinant ratio when the y_i are distinct,
/// the tableau sum otherwise.
inline Rational factorial_schur(const Partition& mu, std::span<const Rational> y, const FactorialGrid& grid) {
  const int n = static_cast<int>(y.size());
  if (mu.length() > n) throw Error("too many rows");
  Rational vandermonde = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) vandermonde *= y[static_cast<std::size_t>(i)] - y[static_cast<std::size_t>(j)];
  if (vandermonde == 0) return factorial_schur_tableau(mu, y, grid);
  Rational det = detail::scalar_determinant(n, [&](int i, int j) {
    return grid.generalized_power(y[static_cast<std::size_t>(i)], mu.part(j) + n - 1 - j);
  });
  return det / vandermonde;
}

/// I_mu(x; 1; h) = s_mu((x_1+h-1)^2, ..., (x_n+h-n)^2 | A).
inline ShiftedSymPoly interp_theta1(const Partition& mu, int n, const Rational& h) {
  if (mu.length() > n) throw Error("too many rows");
  FactorialGrid grid = theta1_grid(n, h, mu.part(0) + n);
  return ShiftedSymPoly{n, Rational(1), h, SymPoly::from_polynomial(factorial_schur_polynomial(mu, n, grid))};
}

/// I_mu(point; 1; h) from the tableau form of the factorial Schur polynomial.
inline Rational interp_theta1_tableau_value(const Partition& mu, std::span<const Rational> point, const Rational& h) {
  const int n = static_cast<int>(point.size());
  FactorialGrid grid = theta1_grid(n, h, mu.part(0) + n);
  std::vector<Rational> ys;
  for (int i = 0; i < n; ++i) {
    Rational s = point[static_cast<std::size_t>(i)] + h - (i + 1);
    ys.push_back(s * s);
  }
  return factorial_schur_tableau(mu, ys, grid);
}

/// r_l = p_l(x; a, b) / p_l(1; a, b).
inline UniPoly unit_jacobi(int l, const Rational& a, const Rational& b) {
  return classical_jacobi(l, a, b) * (1 / classical_jacobi_at_one(l, a));
}

struct RecurrenceCoefficients {
  Rational a, b, c;
};

/// r_{m+1} = (a_m x + b_m) r_m - c_m r_{m-1}, read off by polynomial
/// division; c_0 is reported as 0.
inline RecurrenceCoefficients recurrence_coefficients(int m, const Rational& a, const Rational& b) {
  if (m < 0) throw Error("recurrence index must be nonnegative");
  UniPoly next = unit_jacobi(m + 1, a, b), cur = unit_jacobi(m, a, b);
  RecurrenceCoefficients out;
  out.a = next.leading() / cur.leading();
  UniPoly rest = next - UniPoly::x() * cur * out.a;
  out.b = rest.coefficient(m) / cur.leading();
  rest -= cur * out.b;
  out.c = 0;
  if (m >= 1) {
    UniPoly prev = unit_jacobi(m - 1, a, b);
    out.c = -rest.coefficient(m - 1) / prev.leading();
    rest += prev * out.c;
  }
  if (!rest.is_zero()) throw Error("three-term recurrence does not close");
  return out;
}

/// B(m, l) = (prod_{l<p<=m} c_p) a_l.
inline Rational branching_B_product(int m, int l, const Rational& a, const Rational& b) {
  if (l < 0 || m < l) throw Error("branching_B needs m >= l >= 0");
  Rational out = recurrence_coefficients(l, a, b).a;
  for (int p = l + 1; p <= m; ++p) out *= recurrence_coefficients(p, a, b).c;
  return out;
}

/// Closed form of B(m, l):
/// (2m+a+b+2) G(m+b+1) m! (2l+a+b+1) G(l+a+b+1) G(l+a+1)
///   / (2 G(m+a+b+2) G(m+a+2) G(l+b+1) l!),
/// with (2l+a+b+1) G(l+a+b+1) read as G(a+b+2) at l = 0.
inline Rational branching_B_closed(int m, int l, const Rational& a, const Rational& b) {
  if (l < 0 || m < l) throw Error("branching_B needs m >= l >= 0");
  int d = m - l;
  Rational out = (2 * m + a + b + 2) / 2;
  out *= rising(l + b + 1, d);                      // G(m+b+1) / G(l+b+1)
  out *= Rational(factorial(m)) / Rational(factorial(l));
  out /= rising(l + a + 1, d + 1);                  // G(l+a+1) / G(m+a+2)
  if (l == 0)
    out /= rising(a + b + 2, m);                    // G(a+b+2) / G(m+a+b+2)
  else
    out *= (2 * l + a + b + 1) / rising(l + a + b + 1, d + 1);
  return out;
}

inline Rational branching_B(int m, int l, const Rational& a, const Rational& b) {
  Rational p = branching_B_product(m, l, a, b);
  if (p != branching_B_closed(m, l, a, b)) throw Error("closed form and recurrence product for B disagree");
  return p;
}

/// A(mu, nu) = prod_{i<n} B(mu_i + n-1-i, nu_i + n-1-i); zero off the interlacing support.
inline Rational branching_A(const Partition& mu, const Partition& nu, int n, const Rational& a, const Rational& b) {
  if (mu.length() > n - 1) throw Error("mu has too many rows");
  if (!interlaces(nu, mu, n - 1)) return 0;
  Rational out = 1;
  for (int i = 1; i <= n - 1; ++i) out *= branching_B_product(mu.part(i - 1) + n - 1 - i, nu.part(i - 1) + n - 1 - i, a, b);
  return out;
}

namespace detail {
/// Partitions kappa with bound_1 >= kappa_1 >= bound_2 >= ... >= kappa_slots >= floor.
inline std::vector<Partition> interlacing_below(const Partition& bound, int slots) {
  std::vector<Partition> out;
  std::vector<int> cur(static_cast<std::size_t>(slots), 0);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == slots) {
      out.emplace_back(cur);
      return;
    }
    for (int v = bound.part(i + 1); v <= bound.part(i); ++v) {
      cur[static_cast<std::size_t>(i)] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}
}  // namespace detail

/// Total coefficients on R_nu in R_lambda(x_1..x_{n-1}, 1) after both branching steps.
inline std::map<Partition, Rational> two_step_branching(const Partition& lambda, int n, const Rational& a,
                                                        const Rational& b) {
  if (n < 2) throw Error("branching needs n >= 2");
  if (lambda.length() > n) throw Error("too many rows");
  std::map<Partition, Rational> out;
  for (const auto& mu : detail::interlacing_below(lambda, n - 1))
    for (const auto& nu : detail::interlacing_below(mu, n - 1)) out[nu] += branching_A(mu, nu, n, a, b);
  return out;
}

/// R_lambda = det[r_{lambda_i+n-i}(x_j)] / V(x).
inline RationalPolynomial unit_determinantal(const Partition& lambda, int n, const Rational& a, const Rational& b) {
  return detail::alternant_ratio(lambda, n, [&](int d) { return unit_jacobi(d, a, b); });
}

/// J_lambda = K_n(lambda) R_lambda with K_n(lambda) = const * prod p_{lambda_i+n-i}(1).
inline Rational unit_to_monic_factor(const Partition& lambda, int n, const Rational& a, const Rational& b) {
  Rational out = determinantal_const(lambda, n, a, b);
  for (int i = 1; i <= n; ++i) out *= classical_jacobi_at_one(lambda.part(i - 1) + n - i, a);
  return out;
}

/// Two-step coefficients rescaled to the monic J-normalization.
inline std::map<Partition, Rational> two_step_branching_monic(const Partition& lambda, int n, const Rational& a,
                                                              const Rational& b) {
  std::map<Partition, Rational> out;
  Rational top = unit_to_monic_factor(lambda, n, a, b);
  for (const auto& [nu, t] : two_step_branching(lambda, n, a, b))
    out[nu] = top * t / unit_to_monic_factor(nu, n - 1, a, b);
  return out;
}

/// (r_{l+1} - r_l) / (x - 1).
inline UniPoly r_tilde(int l, const Rational& a, const Rational& b) {
  return (unit_jacobi(l + 1, a, b) - unit_jacobi(l, a, b)).divide_exact_by_root(1);
}

/// int f(x) (1-x)^p (1+x)^q dx divided by int (1-x)^p (1+x)^q dx, using
/// the Beta moments 2^k (p+1)_k / (p+q+2)_k of (1-x)^k.
inline Rational normalized_beta_moment(const UniPoly& f, const Rational& p, const Rational& q) {
  UniPoly shifted = f.compose(UniPoly({Rational(1), Rational(-1)}));  // f(1 - t)
  Rational out = 0;
  for (int k = 0; k <= shifted.degree(); ++k)
    out += shifted.coefficient(k) * power(Rational(2), k) * rising(p + 1, k) / rising(p + q + 2, k);
  return out;
}

/// c(n, mu; a) = 2^{|mu|} prod_i (n-i+1)_{mu_i} (n-i+a+1)_{mu_i}.
inline Rational theta1_binomial_denominator(int n, const Partition& mu, const Rational& a) {
  Rational out = power(Rational(2), mu.size());
  for (int i = 1; i <= n; ++i) {
    int m = mu.part(i - 1);
    out *= rising(Rational(n - i + 1), m) * rising(n - i + a + 1, m);
  }
  return out;
}

/// Right-hand side of the theta = 1 binomial formula, as a polynomial in x:
/// sum_mu I_mu(lambda; 1; sigma+n) s_mu(x - 1) / c(n, mu; a).
inline RationalPolynomial theta1_binomial_expansion(const Partition& lambda, int n, const Rational& a,
                                                    const Rational& b) {
  Rational h = (a + b + 1) / 2 + n;
  RationalPolynomial out(n);
  for (const auto& mu : subpartitions(lambda)) {
    if (mu.length() > n) continue;
    Rational coef = interp_theta1(mu, n, h).evaluate(lambda) / theta1_binomial_denominator(n, mu, a);
    if (coef != 0) out += translate(jack_polynomial(mu, n, Rational(1)).to_polynomial(), -1) * coef;
  }
  return out;
}

}  // namespace bcpoly
