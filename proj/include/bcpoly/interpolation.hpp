#pragma once

#include <map>
#include <set>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "bcpoly/jack.hpp"
#include "bcpoly/linalg.hpp"
#include "bcpoly/unipoly.hpp"

namespace bcpoly {

/// Polynomial in x_1..x_n stored as a symmetric polynomial in
/// u_i = (x_i + h - theta i)^2 (i is 1-based).
struct ShiftedSymPoly {
  int n = 0;
  Rational theta;
  Rational h;
  SymPoly u;

  Rational u_coordinate(int i, const Rational& x) const {
    Rational s = x + h - theta * (i + 1);
    return s * s;
  }

  Rational evaluate(std::span<const Rational> point) const {
    if (static_cast<int>(point.size()) != n) throw Error("evaluation point has wrong length");
    std::vector<Rational> us;
    for (int i = 0; i < n; ++i) us.push_back(u_coordinate(i, point[static_cast<std::size_t>(i)]));
    return u.evaluate(us);
  }

  Rational evaluate(const Partition& lambda) const {
    if (lambda.length() > n) throw Error("partition has more parts than variables");
    std::vector<Rational> pt;
    for (int v : lambda.padded(n)) pt.emplace_back(v);
    return evaluate(pt);
  }

  /// Expansion in the x variables.
  RationalPolynomial to_x_polynomial() const {
    std::vector<RationalPolynomial> images;
    for (int i = 0; i < n; ++i) {
      RationalPolynomial s = RationalPolynomial::variable(n, i) + RationalPolynomial::constant(n, h - theta * (i + 1));
      images.push_back(s * s);
    }
    return compose(u.to_polynomial(), images);
  }

  bool operator==(const ShiftedSymPoly& o) const {
    return n == o.n && theta == o.theta && h == o.h && u == o.u;
  }
};

inline Rational interp_eval(const ShiftedSymPoly& f, std::span<const Rational> point) { return f.evaluate(point); }

/// I_mu(mu; theta; h) = prod (1 + mu_i - j + theta(mu'_j - i)) (2h - 1 + mu_i + j - theta(mu'_j + i)).
inline Rational interp_normalization(const Partition& mu, const Rational& theta, const Rational& h) {
  Partition conj = conjugate(mu);
  Rational out = 1;
  for (int i = 1; i <= mu.length(); ++i)
    for (int j = 1; j <= mu.part(i - 1); ++j) {
      int mi = mu.part(i - 1), cj = conj.part(j - 1);
      out *= (1 + mi - j + theta * (cj - i)) * (2 * h - 1 + mi + j - theta * (cj + i));
    }
  return out;
}

namespace detail {
inline void check_interp_args(const Partition& mu, int n, const Rational& theta) {
  require_positive_theta(theta);
  if (n < 1) throw Error("n must be positive");
  if (mu.length() > n) throw Error("too many rows");
}

inline ShiftedSymPoly solve_newton(const Partition& mu, int n, const Rational& theta, const Rational& h) {
  std::vector<Partition> basis = partitions_up_to(mu.size(), n);
  const std::size_t m = basis.size();
  ShiftedSymPoly out{n, theta, h, SymPoly(n)};
  RationalMatrix a(m, std::vector<Rational>(m));
  RationalMatrix rhs(m, std::vector<Rational>(1, Rational(0)));
  for (std::size_t r = 0; r < m; ++r) {
    std::vector<Rational> us;
    auto padded = basis[r].padded(n);
    for (int i = 0; i < n; ++i) us.push_back(out.u_coordinate(i, padded[static_cast<std::size_t>(i)]));
    for (std::size_t c = 0; c < m; ++c) a[r][c] = monomial_symmetric_value(basis[c], us);
    if (basis[r] == mu) rhs[r][0] = interp_normalization(mu, theta, h);
  }
  RationalMatrix sol;
  try {
    sol = solve_linear(std::move(a), std::move(rhs));
  } catch (const Error&) {
    throw Error("degenerate grid at h = " + to_string(h));
  }
  for (std::size_t c = 0; c < m; ++c) out.u.add_term(basis[c], sol[c][0]);
  return out;
}
}  // namespace detail

/// I_mu by the Newton interpolation conditions on {lambda : |lambda| <= |mu|, l(lambda) <= n}.
/// Throws Error("degenerate grid at h") when two nodes share a u-point and
/// the square system is singular.
inline ShiftedSymPoly interp_newton_strict(const Partition& mu, int n, const Rational& theta, const Rational& h) {
  detail::check_interp_args(mu, n, theta);
  using Key = std::tuple<Partition, int, std::string, std::string>;
  static MemoCache<Key, ShiftedSymPoly> cache;
  return cache.get_or_compute({mu, n, to_string(theta), to_string(h)},
                              [&] { return detail::solve_newton(mu, n, theta, h); });
}

inline bool newton_grid_degenerate(const Partition& mu, int n, const Rational& theta, const Rational& h) {
  try {
    interp_newton_strict(mu, n, theta, h);
    return false;
  } catch (const Error&) {
    return true;
  }
}

/// Reads an x-polynomial that is symmetric in u_i = (x_i + h - theta i)^2
/// back into the u-basis, peeling the top homogeneous part m_nu(x^2).
inline ShiftedSymPoly shifted_from_x_polynomial(RationalPolynomial q, const Rational& theta, const Rational& h) {
  const int n = q.nvars();
  ShiftedSymPoly out{n, theta, h, SymPoly(n)};
  while (!q.is_zero()) {
    int d = q.total_degree();
    const Exponent* lead = nullptr;
    for (const auto& [e, c] : q.terms()) {
      int s = 0;
      for (int v : e) s += v;
      if (s == d && std::is_sorted(e.begin(), e.end(), std::greater<int>()) && (!lead || e > *lead)) lead = &e;
    }
    if (!lead || d % 2) throw Error("polynomial is not invariant in the shifted variables");
    std::vector<int> half;
    for (int v : *lead) {
      if (v % 2) throw Error("polynomial is not invariant in the shifted variables");
      half.push_back(v / 2);
    }
    Partition nu(half);
    Rational c = q.coefficient(*lead);
    ShiftedSymPoly piece{n, theta, h, SymPoly(n)};
    piece.u.add_term(nu, c);
    out.u.add_term(nu, c);
    q -= piece.to_x_polynomial();
  }
  return out;
}
/// I_mu by the sum over reverse tableaux.
inline ShiftedSymPoly interp_combinatorial(const Partition& mu, int n, const Rational& theta, const Rational& h) {
  detail::check_interp_args(mu, n, theta);
  RationalPolynomial acc(n);
  auto stream = enumerate_reverse_tableaux(mu, n);
  while (auto t = stream.next()) {
    Rational w = psi_tableau_weight(*t, theta);
    if (w == 0) continue;
    RationalPolynomial term = RationalPolynomial::constant(n, w);
    for (int i = 0; i < mu.length(); ++i)
      for (int j = 0; j < mu.part(i); ++j) {
        int e = t->at(i, j);
        Rational c = j - theta * i + h - theta * e;
        term *= RationalPolynomial::variable(n, e - 1) - RationalPolynomial::constant(n, c * c);
      }
    acc += term;
  }
  return ShiftedSymPoly{n, theta, h, SymPoly::from_polynomial(acc)};
}

/// I_mu(point; theta; h) by dynamic programming over the chain of shapes
/// S_k = {boxes with entry >= k}; handles large n without building I_mu.
inline Rational interp_value(const Partition& mu, std::span<const Rational> point, const Rational& theta,
                             const Rational& h) {
  detail::require_positive_theta(theta);
  const int n = static_cast<int>(point.size());
  if (mu.length() > n) return 0;
  std::map<Partition, Rational> states{{Partition(), Rational(1)}};
  for (int k = n; k >= 1; --k) {
    Rational xk = point[static_cast<std::size_t>(k - 1)] + h - theta * k;
    Rational uk = xk * xk;
    std::map<Partition, Rational> next;
    for (const auto& [s, val] : states) {
      std::vector<int> grown(static_cast<std::size_t>(mu.length()), 0);
      // Row i of the new shape lies in [s_i, min(mu_i, s_{i-1})].
      auto rec = [&](auto&& self, int i, Rational factor) -> void {
        if (i == mu.length()) {
          Partition big(grown);
          next[big] += val * factor * psi_closed_form(big, s, theta);
          return;
        }
        int lo = s.part(i);
        int hi = i == 0 ? mu.part(0) : std::min(mu.part(i), s.part(i - 1));
        Rational f = factor;
        for (int len = lo; len <= hi; ++len) {
          if (len > lo) {
            Rational c = (len - 1) - theta * i + h - theta * k;
            f *= uk - c * c;
          }
          grown[static_cast<std::size_t>(i)] = len;
          self(self, i + 1, f);
        }
      };
      rec(rec, 0, Rational(1));
    }
    states = std::move(next);
  }
  auto it = states.find(mu);
  return it == states.end() ? Rational(0) : it->second;
}

inline Rational interp_value(const Partition& mu, const Partition& lambda, int n, const Rational& theta,
                             const Rational& h) {
  if (lambda.length() > n) throw Error("partition has more parts than variables");
  std::vector<Rational> pt;
  for (int v : lambda.padded(n)) pt.emplace_back(v);
  return interp_value(mu, pt, theta, h);
}

/// I_mu with h kept symbolic: coefficients[k] is the x-polynomial
/// multiplying h^k.
struct SymbolicInterp {
  int n = 0;
  Rational theta;
  std::vector<RationalPolynomial> coefficients;

  int h_degree() const { return static_cast<int>(coefficients.size()) - 1; }

  RationalPolynomial at(const Rational& h) const {
    RationalPolynomial out(n);
    Rational hk = 1;
    for (const auto& c : coefficients) {
      out += c * hk;
      hk *= h;
    }
    return out;
  }

  /// Value at a point as a polynomial in h.
  UniPoly value_polynomial(std::span<const Rational> point) const {
    std::vector<Rational> cs;
    for (const auto& c : coefficients) cs.push_back(c.evaluate(point));
    return UniPoly(cs);
  }

  /// Part of total degree 2 deg with h given degree 1, evaluated at h.
  RationalPolynomial top_term(int degree, const Rational& h) const {
    RationalPolynomial out(n);
    Rational hk = 1;
    for (std::size_t k = 0; k < coefficients.size(); ++k) {
      for (const auto& [e, c] : coefficients[k].terms()) {
        int d = 0;
        for (int v : e) d += v;
        if (d + static_cast<int>(k) == 2 * degree) out.add_term(e, c * hk);
      }
      hk *= h;
    }
    return out;
  }
};

/// Recovers the h-dependence by Lagrange interpolation over |mu|+1 samples.
inline SymbolicInterp interp_symbolic_h(const Partition& mu, int n, const Rational& theta,
                                        const Rational& avoid = Rational(-1)) {
  detail::check_interp_args(mu, n, theta);
  const int need = mu.size() + 1;
  std::vector<Rational> hs;
  std::vector<RationalPolynomial> samples;
  for (int attempt = 0; static_cast<int>(hs.size()) < need; ++attempt) {
    if (attempt > 8 * need + 16) throw Error("no non-degenerate h samples found");
    Rational h = make_rational(37 + 11 * attempt, 7);
    if (h == avoid) continue;
    try {
      samples.push_back(interp_newton_strict(mu, n, theta, h).to_x_polynomial());
      hs.push_back(h);
    } catch (const Error&) {
      // degenerate sample; try another h
    }
  }
  std::set<Exponent> support;
  for (const auto& s : samples)
    for (const auto& [e, c] : s.terms()) support.insert(e);
  SymbolicInterp out{n, theta, std::vector<RationalPolynomial>(static_cast<std::size_t>(need), RationalPolynomial(n))};
  for (const auto& e : support) {
    std::vector<Rational> ys;
    for (const auto& s : samples) ys.push_back(s.coefficient(e));
    UniPoly p = lagrange_interpolate(hs, ys);
    for (int k = 0; k <= p.degree(); ++k) out.coefficients[static_cast<std::size_t>(k)].add_term(e, p.coefficient(k));
  }
  while (out.coefficients.size() > 1 && out.coefficients.back().is_zero()) out.coefficients.pop_back();
  return out;
}

/// I_mu by the Newton conditions. On a degenerate grid the conditions are
/// solved at generic h and the result, a polynomial in h, is specialized.
inline ShiftedSymPoly interp_newton(const Partition& mu, int n, const Rational& theta, const Rational& h) {
  try {
    return interp_newton_strict(mu, n, theta, h);
  } catch (const Error& e) {
    if (std::string(e.what()).rfind("degenerate grid", 0) != 0) throw;
  }
  using Key = std::tuple<Partition, int, std::string, std::string>;
  static MemoCache<Key, ShiftedSymPoly> cache;
  return cache.get_or_compute({mu, n, to_string(theta), to_string(h)}, [&] {
    return shifted_from_x_polynomial(interp_symbolic_h(mu, n, theta, h).at(h), theta, h);
  });
}

}  // namespace bcpoly
