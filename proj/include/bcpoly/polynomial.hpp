#pragma once

#include <map>
#include <span>
#include <vector>

#include "bcpoly/rational.hpp"

namespace bcpoly {

using Exponent = std::vector<int>;

/// Sparse multivariate Laurent polynomial over a coefficient ring. Zero
/// coefficients are never stored.
template <class Coef>
class Polynomial {
public:
  explicit Polynomial(int nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(int nvars, const Coef& c) {
    Polynomial p(nvars);
    p.add_term(Exponent(static_cast<std::size_t>(nvars), 0), c);
    return p;
  }

  static Polynomial variable(int nvars, int index) {
    Exponent e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(index)] = 1;
    Polynomial p(nvars);
    p.add_term(e, Coef(1));
    return p;
  }

  int nvars() const { return nvars_; }
  const std::map<Exponent, Coef>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponent& e, const Coef& c) {
    if (static_cast<int>(e.size()) != nvars_) throw Error("exponent arity mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Coef coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coef(0) : it->second;
  }

  int total_degree() const {
    int d = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int x : e) s += x;
      d = first ? s : std::max(d, s);
      first = false;
    }
    return d;
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Polynomial& operator*=(const Coef& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Coef& s) { return a *= s; }
  friend Polynomial operator*(const Coef& s, Polynomial a) { return a *= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_arity(b);
    Polynomial out(a.nvars_);
    Exponent e(static_cast<std::size_t>(a.nvars_));
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    return out;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  bool operator==(const Polynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  /// Evaluates at a point; negative exponents require nonzero coordinates.
  Coef evaluate(std::span<const Coef> point) const {
    if (static_cast<int>(point.size()) != nvars_) throw Error("evaluation point has wrong length");
    Coef out = 0;
    for (const auto& [e, c] : terms_) {
      Coef t = c;
      for (std::size_t i = 0; i < e.size(); ++i) t *= power(point[i], e[i]);
      out += t;
    }
    return out;
  }

  Polynomial pow(int k) const {
    Polynomial out = constant(nvars_, Coef(1));
    for (int i = 0; i < k; ++i) out *= *this;
    return out;
  }

private:
  void check_arity(const Polynomial& o) const {
    if (o.nvars_ != nvars_) throw Error("polynomial arity mismatch");
  }

  int nvars_;
  std::map<Exponent, Coef> terms_;
};

using RationalPolynomial = Polynomial<Rational>;

/// Substitutes x_i -> images[i] for every variable (nonnegative exponents).
inline RationalPolynomial compose(const RationalPolynomial& p, const std::vector<RationalPolynomial>& images) {
  if (static_cast<int>(images.size()) != p.nvars()) throw Error("compose: wrong number of images");
  int m = images.empty() ? 0 : images.front().nvars();
  std::vector<std::vector<RationalPolynomial>> powers(images.size());
  RationalPolynomial out(m);
  for (const auto& [e, c] : p.terms()) {
    RationalPolynomial t = RationalPolynomial::constant(m, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 0) throw Error("compose: negative exponent");
      auto& pw = powers[i];
      while (static_cast<int>(pw.size()) <= e[i])
        pw.push_back(pw.empty() ? RationalPolynomial::constant(m, 1) : pw.back() * images[i]);
      t *= pw[static_cast<std::size_t>(e[i])];
    }
    out += t;
  }
  return out;
}

/// Exact quotient p / (x_i - x_j). Throws when the division is not exact.
inline RationalPolynomial divide_by_difference(const RationalPolynomial& p, int i, int j) {
  int n = p.nvars();
  auto ui = static_cast<std::size_t>(i);
  // Group terms by the power of x_i; the remaining exponent is the key.
  std::map<int, RationalPolynomial> by_power;
  int top = 0;
  for (const auto& [e, c] : p.terms()) {
    if (e[ui] < 0) throw Error("divide_by_difference: negative exponent");
    Exponent rest = e;
    rest[ui] = 0;
    auto [it, ins] = by_power.try_emplace(e[ui], RationalPolynomial(n));
    it->second.add_term(rest, c);
    top = std::max(top, e[ui]);
  }
  RationalPolynomial xj = RationalPolynomial::variable(n, j);
  RationalPolynomial xi = RationalPolynomial::variable(n, i);
  // Synthetic division in x_i with root x_j.
  RationalPolynomial carry(n), quotient(n);
  for (int k = top; k >= 1; --k) {
    RationalPolynomial ck = by_power.count(k) ? by_power.at(k) : RationalPolynomial(n);
    carry = ck + carry * xj;
    quotient += carry * xi.pow(k - 1);
  }
  RationalPolynomial c0 = by_power.count(0) ? by_power.at(0) : RationalPolynomial(n);
  RationalPolynomial remainder = c0 + carry * xj;
  if (!remainder.is_zero()) throw Error("division by a variable difference is not exact");
  return quotient;
}

/// Divides by the Vandermonde product prod_{i<j} (x_i - x_j).
inline RationalPolynomial divide_by_vandermonde(RationalPolynomial p) {
  for (int i = 0; i < p.nvars(); ++i)
    for (int j = i + 1; j < p.nvars(); ++j) p = divide_by_difference(p, i, j);
  return p;
}

/// Shifts every variable: returns p(x_1 + s, ..., x_n + s).
inline RationalPolynomial translate(const RationalPolynomial& p, const Rational& s) {
  std::vector<RationalPolynomial> images;
  for (int i = 0; i < p.nvars(); ++i)
    images.push_back(RationalPolynomial::variable(p.nvars(), i) + RationalPolynomial::constant(p.nvars(), s));
  return compose(p, images);
}

}  // namespace bcpoly
