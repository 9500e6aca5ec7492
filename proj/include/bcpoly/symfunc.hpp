#pragma once

#include <map>
#include <memory>
#include <vector>

#include "bcpoly/cache.hpp"
#include "bcpoly/linalg.hpp"
#include "bcpoly/partition.hpp"
#include "bcpoly/sympoly.hpp"

namespace bcpoly {

/// z_rho = prod_i i^{m_i} m_i!, the order of the centralizer of a
/// permutation of cycle type rho.
inline Integer z_lambda(const Partition& rho) {
  Integer out = 1;
  std::map<int, int> mult;
  for (int p : rho.parts()) ++mult[p];
  for (const auto& [part, m] : mult) {
    for (int k = 0; k < m; ++k) out *= part;
    out *= factorial(m);
  }
  return out;
}

/// Change of basis between power sums and monomials at one degree.
/// power_to_monomial[r][l] is the coefficient of m_{parts[l]} in p_{parts[r]};
/// monomial_to_power is its inverse.
struct PowerSumTransition {
  std::vector<Partition> parts;
  std::map<Partition, std::size_t> index;
  RationalMatrix power_to_monomial;
  RationalMatrix monomial_to_power;
};

namespace detail {
/// Number of ways to distribute the parts of rho over the slots of lambda
/// so that slot j receives total lambda_j.
inline long count_distributions(const std::vector<int>& rho, std::size_t k, std::vector<int>& remaining) {
  if (k == rho.size()) {
    for (int r : remaining)
      if (r) return 0;
    return 1;
  }
  long total = 0;
  for (auto& slot : remaining) {
    if (slot >= rho[k]) {
      slot -= rho[k];
      total += count_distributions(rho, k + 1, remaining);
      slot += rho[k];
    }
  }
  return total;
}

inline std::shared_ptr<const PowerSumTransition> build_transition(int degree) {
  auto t = std::make_shared<PowerSumTransition>();
  t->parts = partitions_of(degree);
  for (std::size_t i = 0; i < t->parts.size(); ++i) t->index[t->parts[i]] = i;
  const std::size_t n = t->parts.size();
  t->power_to_monomial.assign(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t l = 0; l < n; ++l) {
      std::vector<int> slots = t->parts[l].parts();
      t->power_to_monomial[r][l] = Rational(count_distributions(t->parts[r].parts(), 0, slots));
    }
  t->monomial_to_power = invert(t->power_to_monomial);
  return t;
}

inline MemoCache<int, std::shared_ptr<const PowerSumTransition>>& transition_cache() {
  static MemoCache<int, std::shared_ptr<const PowerSumTransition>> cache;
  return cache;
}
}  // namespace detail

inline const PowerSumTransition& power_sum_transition(int degree) {
  auto ptr = detail::transition_cache().get_or_compute(degree, [degree] { return detail::build_transition(degree); });
  return *ptr;
}

/// Element of the ring of symmetric functions, stored over power sums
/// p_rho with |rho| <= degree_bound.
class SymFunc {
public:
  explicit SymFunc(int degree_bound = 0) : bound_(degree_bound) {}

  static SymFunc power_sum(const Partition& rho, const Rational& c = 1) {
    SymFunc f(rho.size());
    f.add_term(rho, c);
    return f;
  }
  static SymFunc constant(const Rational& c) { return power_sum(Partition(), c); }

  int degree_bound() const { return bound_; }
  const std::map<Partition, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Partition& rho, const Rational& c) {
    if (rho.size() > bound_) throw Error("power sum exceeds the degree bound");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(rho, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rational coefficient(const Partition& rho) const {
    auto it = terms_.find(rho);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  SymFunc& operator+=(const SymFunc& o) {
    bound_ = std::max(bound_, o.bound_);
    for (const auto& [r, c] : o.terms_) add_term(r, c);
    return *this;
  }
  SymFunc& operator-=(const SymFunc& o) {
    bound_ = std::max(bound_, o.bound_);
    for (const auto& [r, c] : o.terms_) add_term(r, -c);
    return *this;
  }
  SymFunc& operator*=(const Rational& s) {
    if (s == 0) terms_.clear();
    for (auto& [r, c] : terms_) c *= s;
    return *this;
  }
  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
  friend SymFunc operator*(SymFunc a, const Rational& s) { return a *= s; }
  friend SymFunc operator*(const Rational& s, SymFunc a) { return a *= s; }

  friend SymFunc operator*(const SymFunc& a, const SymFunc& b) {
    SymFunc out(a.bound_ + b.bound_);
    for (const auto& [ra, ca] : a.terms_)
      for (const auto& [rb, cb] : b.terms_) {
        std::vector<int> merged = ra.parts();
        merged.insert(merged.end(), rb.parts().begin(), rb.parts().end());
        std::sort(merged.begin(), merged.end(), std::greater<int>());
        out.add_term(Partition(std::move(merged)), ca * cb);
      }
    return out;
  }

  /// Equality of the represented function; the degree bound is ignored.
  bool operator==(const SymFunc& o) const { return terms_ == o.terms_; }

private:
  int bound_;
  std::map<Partition, Rational> terms_;
};

/// Converts a full monomial expansion (every m_nu of the relevant degrees,
/// without truncation of the number of parts) into power sums.
inline SymFunc monomial_to_power_sums(const std::map<Partition, Rational>& monomial_coeffs) {
  int bound = 0;
  for (const auto& [nu, c] : monomial_coeffs) bound = std::max(bound, nu.size());
  SymFunc out(bound);
  for (const auto& [nu, c] : monomial_coeffs) {
    const auto& t = power_sum_transition(nu.size());
    std::size_t row = t.index.at(nu);
    for (std::size_t r = 0; r < t.parts.size(); ++r)
      out.add_term(t.parts[r], c * t.monomial_to_power[row][r]);
  }
  return out;
}

/// Monomial expansion in infinitely many variables (all parts kept).
inline std::map<Partition, Rational> power_sums_to_monomials(const SymFunc& f) {
  std::map<Partition, Rational> out;
  for (const auto& [rho, c] : f.terms()) {
    const auto& t = power_sum_transition(rho.size());
    std::size_t row = t.index.at(rho);
    for (std::size_t l = 0; l < t.parts.size(); ++l) {
      const Rational& v = t.power_to_monomial[row][l];
      if (v == 0) continue;
      Rational& slot = out[t.parts[l]];
      slot += c * v;
      if (slot == 0) out.erase(t.parts[l]);
    }
  }
  return out;
}

/// Specializes a symmetric function to n variables.
inline SymPoly restrict_to_variables(const SymFunc& f, int n) {
  SymPoly out(n);
  for (const auto& [nu, c] : power_sums_to_monomials(f))
    if (nu.length() <= n) out.add_term(nu, c);
  return out;
}

/// Parameters (alpha, beta, gamma) of a Vershik-Kerov sequence, with
/// finitely many nonzero entries.
struct VKParams {
  std::vector<Rational> alpha;
  std::vector<Rational> beta;
  Rational gamma = 0;

  VKParams() = default;
  VKParams(std::vector<Rational> a, std::vector<Rational> b, Rational g)
      : alpha(std::move(a)), beta(std::move(b)), gamma(std::move(g)) {
    validate();
  }

  void validate() const {
    auto check_seq = [](const std::vector<Rational>& s, const char* name) {
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0) throw Error(std::string(name) + " entries must be nonnegative");
        if (i > 0 && s[i] > s[i - 1]) throw Error(std::string(name) + " must be weakly decreasing");
      }
    };
    check_seq(alpha, "alpha");
    check_seq(beta, "beta");
    if (gamma < 0) throw Error("gamma must be nonnegative");
  }

  /// delta = gamma + sum(alpha_i + beta_i)
  Rational delta() const {
    Rational d = gamma;
    for (const auto& a : alpha) d += a;
    for (const auto& b : beta) d += b;
    return d;
  }
};

/// Image of p_k under epsilon_{alpha,beta,gamma}: taking logarithms of
/// prod (1 - x_j t)^{-theta} -> e^{gamma theta t} prod (1 + beta_i theta t)
/// / (1 - alpha_i t)^theta and matching t^k gives
/// sum alpha_i^k + (-theta)^{k-1} sum beta_i^k + gamma [k = 1].
inline Rational epsilon_power_sum(int k, const VKParams& vk, const Rational& theta) {
  Rational out = 0;
  for (const auto& a : vk.alpha) out += power(a, k);
  Rational bsum = 0;
  for (const auto& b : vk.beta) bsum += power(b, k);
  out += power(-theta, k - 1) * bsum;
  if (k == 1) out += vk.gamma;
  return out;
}

inline Rational epsilon_specialize(const SymFunc& f, const VKParams& vk, const Rational& theta) {
  if (theta <= 0) throw Error("theta must be positive");
  std::map<int, Rational> images;
  Rational out = 0;
  for (const auto& [rho, c] : f.terms()) {
    Rational t = c;
    for (int k : rho.parts()) {
      auto it = images.find(k);
      if (it == images.end()) it = images.emplace(k, epsilon_power_sum(k, vk, theta)).first;
      t *= it->second;
    }
    out += t;
  }
  return out;
}

/// pi_tau : f(x_1, x_2, ...) -> f(x_1 (x_1 + tau), x_2 (x_2 + tau), ...).
/// On generators p_k -> sum_j C(k, j) tau^{k-j} p_{k+j}.
inline SymFunc pi_tau(const SymFunc& f, const Rational& tau) {
  std::map<int, SymFunc> images;
  auto image = [&](int k) -> const SymFunc& {
    auto it = images.find(k);
    if (it != images.end()) return it->second;
    SymFunc g(2 * k);
    for (int j = 0; j <= k; ++j) g.add_term(Partition{k + j}, Rational(binomial(k, j)) * power(tau, k - j));
    return images.emplace(k, std::move(g)).first->second;
  };
  SymFunc out(2 * f.degree_bound());
  for (const auto& [rho, c] : f.terms()) {
    SymFunc t = SymFunc::constant(c);
    for (int k : rho.parts()) t = t * image(k);
    for (const auto& [r, v] : t.terms()) out.add_term(r, v);
  }
  return out;
}

/// Homogeneous components g_0..g_degree of prod_j (1 - x_j t)^{-theta}:
/// g_k = sum_{rho |- k} theta^{l(rho)} p_rho / z_rho.
inline std::vector<SymFunc> cauchy_kernel_components(const Rational& theta, int degree) {
  std::vector<SymFunc> out;
  for (int k = 0; k <= degree; ++k) {
    SymFunc g(k);
    for (const auto& rho : partitions_of(k))
      g.add_term(rho, power(theta, rho.length()) / Rational(z_lambda(rho)));
    out.push_back(std::move(g));
  }
  return out;
}

/// Deformed Hall pairing <p_rho, p_sigma> = delta z_rho theta^{-l(rho)}.
inline Rational hall_inner_product(const SymFunc& f, const SymFunc& g, const Rational& theta) {
  Rational out = 0;
  for (const auto& [rho, c] : f.terms()) {
    Rational d = g.coefficient(rho);
    if (d != 0) out += c * d * Rational(z_lambda(rho)) / power(theta, rho.length());
  }
  return out;
}

}  // namespace bcpoly
