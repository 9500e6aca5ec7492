#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "bcpoly/partition.hpp"
#include "bcpoly/polynomial.hpp"

namespace bcpoly {

namespace detail {
/// Calls f on every distinct permutation of the padded exponent vector.
inline void for_each_orbit_point(const Partition& nu, int n, const std::function<void(const Exponent&)>& f) {
  Exponent e = nu.padded(n);
  std::sort(e.begin(), e.end());
  do {
    f(e);
  } while (std::next_permutation(e.begin(), e.end()));
}
}  // namespace detail

/// m_nu(x_1, ..., x_n) evaluated at a point.
inline Rational monomial_symmetric_value(const Partition& nu, std::span<const Rational> point) {
  int n = static_cast<int>(point.size());
  if (nu.length() > n) return 0;
  Rational out = 0;
  detail::for_each_orbit_point(nu, n, [&](const Exponent& e) {
    Rational t = 1;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) t *= power(point[i], e[i]);
    out += t;
  });
  return out;
}

/// Symmetric polynomial in n variables over the monomial basis m_nu.
class SymPoly {
public:
  explicit SymPoly(int n = 0) : n_(n) {}

  static SymPoly constant(int n, const Rational& c) {
    SymPoly p(n);
    p.add_term(Partition(), c);
    return p;
  }

  int nvars() const { return n_; }
  const std::map<Partition, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Partition& nu, const Rational& c) {
    if (nu.length() > n_) throw Error("monomial " + to_string(nu) + " has more parts than variables");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(nu, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rational coefficient(const Partition& nu) const {
    auto it = terms_.find(nu);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  int degree() const {
    int d = 0;
    for (const auto& [nu, c] : terms_) d = std::max(d, nu.size());
    return d;
  }

  SymPoly& operator+=(const SymPoly& o) {
    check(o);
    for (const auto& [nu, c] : o.terms_) add_term(nu, c);
    return *this;
  }
  SymPoly& operator-=(const SymPoly& o) {
    check(o);
    for (const auto& [nu, c] : o.terms_) add_term(nu, -c);
    return *this;
  }
  SymPoly& operator*=(const Rational& s) {
    if (s == 0) terms_.clear();
    for (auto& [nu, c] : terms_) c *= s;
    return *this;
  }
  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  friend SymPoly operator*(SymPoly a, const Rational& s) { return a *= s; }
  friend SymPoly operator*(const Rational& s, SymPoly a) { return a *= s; }
  bool operator==(const SymPoly& o) const { return n_ == o.n_ && terms_ == o.terms_; }

  Rational evaluate(std::span<const Rational> point) const {
    if (static_cast<int>(point.size()) != n_) throw Error("evaluation point has wrong length");
    Rational out = 0;
    for (const auto& [nu, c] : terms_) out += c * monomial_symmetric_value(nu, point);
    return out;
  }

  /// Sets the last variable to zero.
  SymPoly drop_last_variable() const {
    if (n_ == 0) throw Error("no variable to drop");
    SymPoly out(n_ - 1);
    for (const auto& [nu, c] : terms_)
      if (nu.length() < n_) out.add_term(nu, c);
    return out;
  }

  /// Multiplies the coefficient of m_nu by s^{|nu|}, i.e. f(s x).
  SymPoly scale_variables(const Rational& s) const {
    SymPoly out(n_);
    for (const auto& [nu, c] : terms_) out.add_term(nu, c * power(s, nu.size()));
    return out;
  }

  RationalPolynomial to_polynomial() const {
    RationalPolynomial out(n_);
    for (const auto& [nu, c] : terms_)
      detail::for_each_orbit_point(nu, n_, [&](const Exponent& e) { out.add_term(e, c); });
    return out;
  }

  /// Reads a symmetric polynomial off its dominant monomials; throws if the
  /// input is not symmetric.
  static SymPoly from_polynomial(const RationalPolynomial& p) {
    SymPoly out(p.nvars());
    for (const auto& [e, c] : p.terms()) {
      if (std::any_of(e.begin(), e.end(), [](int v) { return v < 0; }))
        throw Error("from_polynomial: negative exponent");
      if (std::is_sorted(e.begin(), e.end(), std::greater<int>())) out.add_term(Partition(e), c);
    }
    if (!(out.to_polynomial() == p)) throw Error("polynomial is not symmetric");
    return out;
  }

private:
  void check(const SymPoly& o) const {
    if (o.n_ != n_) throw Error("symmetric polynomial arity mismatch");
  }
  int n_;
  std::map<Partition, Rational> terms_;
};

}  // namespace bcpoly
