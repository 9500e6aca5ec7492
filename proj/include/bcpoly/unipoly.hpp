#pragma once

#include <vector>

#include "bcpoly/rational.hpp"

namespace bcpoly {

/// Dense univariate polynomial, coefficients in ascending degree with
/// trailing zeros stripped. The zero polynomial has no coefficients.
class UniPoly {
public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UniPoly constant(const Rational& c) { return UniPoly({c}); }
  static UniPoly x() { return UniPoly({Rational(0), Rational(1)}); }
  /// x - r
  static UniPoly linear_root(const Rational& r) { return UniPoly({-r, Rational(1)}); }

  const std::vector<Rational>& coefficients() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational coefficient(int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(k)] : Rational(0);
  }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  Rational operator()(const Rational& x) const {
    Rational out = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) out = out * x + *it;
    return out;
  }

  double evaluate(double x) const {
    double out = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) out = out * x + it->get_d();
    return out;
  }

  UniPoly& operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  UniPoly& operator*=(const Rational& s) {
    for (auto& v : c_) v *= s;
    trim();
    return *this;
  }
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
  friend UniPoly operator*(const Rational& s, UniPoly a) { return a *= s; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(out));
  }
  bool operator==(const UniPoly&) const = default;

  UniPoly pow(int k) const {
    UniPoly out = constant(1);
    for (int i = 0; i < k; ++i) out = out * *this;
    return out;
  }

  /// p(q(x))
  UniPoly compose(const UniPoly& q) const {
    UniPoly out;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) out = out * q + constant(*it);
    return out;
  }

  /// Quotient by (x - r); throws unless r is a root.
  UniPoly divide_exact_by_root(const Rational& r) const {
    if (c_.empty()) return UniPoly();
    std::vector<Rational> q(c_.size() - 1, Rational(0));
    Rational carry = 0;
    for (std::size_t k = c_.size() - 1; k >= 1; --k) {
      carry = c_[k] + carry * r;
      q[k - 1] = carry;
    }
    if (c_[0] + carry * r != 0) throw Error("polynomial division by (x - r) is not exact");
    return UniPoly(std::move(q));
  }

private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

/// Lagrange interpolation through (xs[k], ys[k]); xs must be distinct.
inline UniPoly lagrange_interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size()) throw Error("lagrange_interpolate: size mismatch");
  UniPoly out;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    UniPoly basis = UniPoly::constant(1);
    Rational denom = 1;
    for (std::size_t m = 0; m < xs.size(); ++m) {
      if (m == k) continue;
      if (xs[m] == xs[k]) throw Error("lagrange_interpolate: repeated node");
      basis = basis * UniPoly::linear_root(xs[m]);
      denom *= xs[k] - xs[m];
    }
    out += basis * (ys[k] / denom);
  }
  return out;
}

}  // namespace bcpoly
