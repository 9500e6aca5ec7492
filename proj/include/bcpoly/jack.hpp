#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "bcpoly/cache.hpp"
#include "bcpoly/symfunc.hpp"
#include "bcpoly/tableau.hpp"

namespace bcpoly {

/// All Jack symmetric functions P_lambda of one degree, each stored by its
/// full monomial expansion (infinitely many variables).
using JackTable = std::map<Partition, std::map<Partition, Rational>>;

namespace detail {

inline void require_positive_theta(const Rational& theta) {
  if (theta <= 0) throw Error("theta must be positive");
}

inline std::shared_ptr<const JackTable> build_jack_table(int degree, const Rational& theta) {
  const auto& t = power_sum_transition(degree);
  const std::size_t n = t.parts.size();
  std::vector<Rational> weight(n);
  for (std::size_t r = 0; r < n; ++r)
    weight[r] = Rational(z_lambda(t.parts[r])) / power(theta, t.parts[r].length());

  // Gram matrix of the monomial basis under <p_rho, p_rho> = z_rho theta^{-l(rho)}.
  RationalMatrix gram(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Rational s = 0;
      for (std::size_t r = 0; r < n; ++r) s += t.monomial_to_power[i][r] * t.monomial_to_power[j][r] * weight[r];
      gram[i][j] = gram[j][i] = s;
    }
  auto pair = [&](const std::vector<Rational>& u, const std::vector<Rational>& v) {
    Rational s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (u[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (v[j] != 0) s += u[i] * gram[i][j] * v[j];
    }
    return s;
  };

  // partitions_of lists decreasing lex; orthogonalize from the bottom up,
  // which is a linear extension of dominance.
  std::vector<std::vector<Rational>> basis;
  std::vector<Rational> norms;
  auto table = std::make_shared<JackTable>();
  for (std::size_t k = n; k-- > 0;) {
    std::vector<Rational> v(n, Rational(0));
    v[k] = 1;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      Rational c = pair(v, basis[b]) / norms[b];
      if (c == 0) continue;
      for (std::size_t i = 0; i < n; ++i) v[i] -= c * basis[b][i];
    }
    norms.push_back(pair(v, v));
    std::map<Partition, Rational> expansion;
    for (std::size_t i = 0; i < n; ++i)
      if (v[i] != 0) expansion.emplace(t.parts[i], v[i]);
    (*table)[t.parts[k]] = std::move(expansion);
    basis.push_back(std::move(v));
  }
  return table;
}

inline MemoCache<std::pair<int, std::string>, std::shared_ptr<const JackTable>>& jack_cache() {
  static MemoCache<std::pair<int, std::string>, std::shared_ptr<const JackTable>> cache;
  return cache;
}

}  // namespace detail

inline const JackTable& jack_table(int degree, const Rational& theta) {
  detail::require_positive_theta(theta);
  auto ptr = detail::jack_cache().get_or_compute({degree, to_string(theta)},
                                                 [&] { return detail::build_jack_table(degree, theta); });
  return *ptr;
}

/// P_mu(x_1, ..., x_n; theta), monic in m_mu.
inline SymPoly jack_polynomial(const Partition& mu, int n, const Rational& theta) {
  detail::require_positive_theta(theta);
  if (mu.length() > n) throw Error("too many rows");
  SymPoly out(n);
  for (const auto& [nu, c] : jack_table(mu.size(), theta).at(mu))
    if (nu.length() <= n) out.add_term(nu, c);
  return out;
}

/// P_mu as an element of the ring of symmetric functions.
inline SymFunc jack_symmetric(const Partition& mu, const Rational& theta) {
  return monomial_to_power_sums(jack_table(mu.size(), theta).at(mu));
}

/// Hook products H = prod (a(s) + theta l(s) + 1), H' = prod (a(s) + theta l(s) + theta).
inline std::pair<Rational, Rational> hook_products(const Partition& mu, const Rational& theta) {
  Partition conj = conjugate(mu);
  Rational h = 1, hp = 1;
  for (int i = 0; i < mu.length(); ++i)
    for (int j = 0; j < mu.part(i); ++j) {
      Rational base = arm_length(mu, i, j) + theta * leg_length(mu, conj, i, j);
      h *= base + 1;
      hp *= base + theta;
    }
  return {h, hp};
}

/// Branching coefficients psi_{mu/nu} read off P_mu in l(mu)+1 variables:
/// the coefficient of x_k^r is expanded back over P_nu in k-1 variables.
inline std::map<Partition, Rational> jack_branching_table(const Partition& mu, const Rational& theta) {
  const int k = mu.length() + 1;
  SymPoly p = jack_polynomial(mu, k, theta);
  std::map<int, std::map<Partition, Rational>> slices;
  for (const auto& [kappa, c] : p.terms()) {
    std::vector<int> parts = kappa.padded(k);
    std::vector<int> seen;
    for (std::size_t pos = 0; pos < parts.size(); ++pos) {
      int r = parts[pos];
      if (std::find(seen.begin(), seen.end(), r) != seen.end()) continue;
      seen.push_back(r);
      std::vector<int> rest = parts;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pos));
      slices[r][Partition(rest)] += c;
    }
  }
  std::map<Partition, Rational> out;
  for (auto& [r, slice] : slices) {
    // Peel off the dominant monomial each time; P_nu is monic and
    // supported below nu in dominance, which refines reverse lex.
    while (!slice.empty()) {
      auto top = std::prev(slice.end());
      Partition nu = top->first;
      Rational c = top->second;
      if (c == 0) {
        slice.erase(top);
        continue;
      }
      out[nu] = c;
      SymPoly pn = jack_polynomial(nu, k - 1, theta);
      for (const auto& [kappa, v] : pn.terms()) slice[kappa] -= c * v;
      if (slice.at(nu) != 0) throw Error("branching extraction failed");
      slice.erase(nu);
    }
  }
  return out;
}

/// psi_{mu/nu}(theta) by coefficient extraction; zero unless mu/nu is a
/// horizontal strip.
inline Rational jack_branching_psi(const Partition& mu, const Partition& nu, const Rational& theta) {
  detail::require_positive_theta(theta);
  if (!is_horizontal_strip(mu, nu)) return 0;
  static MemoCache<std::pair<Partition, std::string>, std::map<Partition, Rational>> cache;
  auto table = cache.get_or_compute({mu, to_string(theta)}, [&] { return jack_branching_table(mu, theta); });
  auto it = table.find(nu);
  return it == table.end() ? Rational(0) : it->second;
}

/// Closed form prod_{s in R - C} b_nu(s) / b_mu(s), with
/// b(s) = (a(s) + theta (l(s) + 1)) / (a(s) + 1 + theta l(s)).
inline Rational psi_closed_form(const Partition& mu, const Partition& nu, const Rational& theta) {
  if (!is_horizontal_strip(mu, nu)) return 0;
  Partition cm = conjugate(mu), cn = conjugate(nu);
  std::vector<bool> row_hit(static_cast<std::size_t>(mu.length()), false);
  std::vector<bool> col_hit(static_cast<std::size_t>(mu.part(0)), false);
  for (int i = 0; i < mu.length(); ++i)
    for (int j = nu.part(i); j < mu.part(i); ++j) {
      row_hit[static_cast<std::size_t>(i)] = true;
      col_hit[static_cast<std::size_t>(j)] = true;
    }
  auto b = [&](const Partition& lam, const Partition& conj, int i, int j) -> Rational {
    Rational a = arm_length(lam, i, j), l = leg_length(lam, conj, i, j);
    return (a + theta * (l + 1)) / (a + 1 + theta * l);
  };
  Rational out = 1;
  for (int i = 0; i < nu.length(); ++i) {
    if (!row_hit[static_cast<std::size_t>(i)]) continue;
    for (int j = 0; j < nu.part(i); ++j)
      if (!col_hit[static_cast<std::size_t>(j)]) out *= b(nu, cn, i, j) / b(mu, cm, i, j);
  }
  return out;
}

/// psi_T: product of the layer weights along S_{m+1} = {} c ... c S_1 = shape,
/// where S_k holds the boxes with entry >= k.
inline Rational psi_tableau_weight(const ReverseTableau& t, const Rational& theta) {
  detail::require_positive_theta(theta);
  Rational out = 1;
  for (int k = 1; k <= t.max_entry(); ++k) {
    out *= jack_branching_psi(t.shape_at_least(k), t.shape_at_least(k + 1), theta);
    if (out == 0) break;
  }
  return out;
}

/// sum_T psi_T x^T over reverse tableaux of shape mu with entries <= n.
inline SymPoly jack_from_tableaux(const Partition& mu, int n, const Rational& theta) {
  RationalPolynomial acc(n);
  auto stream = enumerate_reverse_tableaux(mu, n);
  while (auto t = stream.next()) {
    Exponent e(static_cast<std::size_t>(n), 0);
    for (const auto& row : t->rows())
      for (int v : row) ++e[static_cast<std::size_t>(v - 1)];
    acc.add_term(e, psi_tableau_weight(*t, theta));
  }
  return SymPoly::from_polynomial(acc);
}

}  // namespace bcpoly
