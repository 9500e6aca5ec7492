#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "bcpoly/asymptotics.hpp"
#include "bcpoly/theta1.hpp"

namespace bcpoly {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  int trials = 200;
  std::uint32_t seed = 7;
};

namespace detail {

inline std::string case_label(const Partition& mu, int n, const Rational& theta) {
  return to_string(mu) + " n=" + std::to_string(n) + " theta=" + to_string(theta);
}

/// Runs one case; an exception counts as a failure and its message becomes the detail.
inline void run_case(std::vector<CheckResult>& out, std::string name, const std::function<std::string()>& body) {
  try {
    std::string problem = body();
    out.push_back({std::move(name), problem.empty(), problem});
  } catch (const std::exception& e) {
    out.push_back({std::move(name), false, e.what()});
  }
}

inline std::vector<std::pair<Rational, Rational>> theta1_ab_grid() {
  const Rational h = make_rational(1, 2);
  return {{0, 0}, {h, h}, {-h, -h}, {h, -h}, {1, 0}};
}

inline std::vector<std::pair<Rational, Rational>> positivity_ab_grid() {
  const Rational h = make_rational(1, 2);
  return {{-h, -h}, {0, -h}, {h, h}, {1, 0}};
}

inline std::vector<Rational> interp_theta_grid() {
  return {make_rational(1, 2), Rational(1), Rational(2), make_rational(5, 3)};
}

}  // namespace detail

/// Newton vs tableau construction, normalization, extra vanishing and the
/// evaluation recursion, on |mu| <= 4, n <= 4.
inline std::vector<CheckResult> verify_interp_equivalence() {
  std::vector<CheckResult> out;
  for (const auto& theta : detail::interp_theta_grid())
    for (const auto& h : {Rational(3), make_rational(7, 2), make_rational(13, 4)})
      for (int n = 1; n <= 4; ++n)
        for (const auto& mu : partitions_up_to(4, n))
          detail::run_case(out, "interp " + detail::case_label(mu, n, theta) + " h=" + to_string(h), [&]() -> std::string {
            ShiftedSymPoly f = interp_newton(mu, n, theta, h);
            if (!(f == interp_combinatorial(mu, n, theta, h))) return "Newton and tableau routes differ";
            if (f.evaluate(mu) != interp_normalization(mu, theta, h)) return "normalization fails";
            for (const auto& lambda : partitions_up_to(mu.size() + 2, n)) {
              Rational v = f.evaluate(lambda);
              if (!contained_in(mu, lambda) && v != 0) return "nonzero at " + to_string(lambda);
              if (v != interp_value(mu, lambda, n, theta, h)) return "evaluation recursion differs at " + to_string(lambda);
            }
            return "";
          });
  return out;
}

/// theta = 1 determinantal and factorial-Schur routes against the general ones.
inline std::vector<CheckResult> verify_theta1_crosscheck() {
  std::vector<CheckResult> out;
  for (const auto& h : {Rational(3), make_rational(7, 2)})
    for (int n = 1; n <= 4; ++n)
      for (const auto& mu : partitions_up_to(4, n))
        detail::run_case(out, "interp_theta1 " + detail::case_label(mu, n, 1) + " h=" + to_string(h), [&]() -> std::string {
          ShiftedSymPoly f = interp_theta1(mu, n, h);
          if (!(f == interp_newton(mu, n, 1, h))) return "factorial Schur route differs from Newton";
          if (mu.size() <= 3 && n <= 3)
            for (const auto& lambda : partitions_up_to(4, n)) {
              std::vector<Rational> point;
              for (int v : lambda.padded(n)) point.emplace_back(v);
              if (interp_theta1_tableau_value(mu, point, h) != f.evaluate(point))
                return "tableau sum differs at " + to_string(lambda);
            }
          return "";
        });
  for (const auto& [a, b] : detail::theta1_ab_grid()) {
    ParamTriple p(1, a, b);
    const std::string ab = " a=" + to_string(a) + " b=" + to_string(b);
    for (int n = 1; n <= 3; ++n)
      for (const auto& lambda : partitions_up_to(4, n))
        detail::run_case(out, "determinantal " + to_string(lambda) + " n=" + std::to_string(n) + ab, [&]() -> std::string {
          RationalPolynomial lhs = determinantal_jacobi(lambda, n, a, b).to_polynomial() * determinantal_const(lambda, n, a, b);
          return lhs == jacobi_monic(lambda, n, p).to_x_polynomial() ? "" : "determinantal and binomial routes differ";
        });
    for (int l = 0; l <= 6; ++l)
      detail::run_case(out, "classical l=" + std::to_string(l) + ab, [&]() -> std::string {
        UniPoly classical = classical_jacobi(l, a, b) * (1 / classical_jacobi_at_one(l, a));
        UniPoly phi = one_variable_restriction(l ? Partition{l} : Partition(), 1, p).compose(UniPoly({Rational(-1), Rational(1)}));
        return phi == classical ? "" : "n = 1 polynomial is not the normalized classical one";
      });
    for (int m = 0; m <= 8; ++m)
      for (int l = 0; l <= m; ++l)
        detail::run_case(out, "B(" + std::to_string(m) + "," + std::to_string(l) + ")" + ab, [&]() -> std::string {
          return branching_B_product(m, l, a, b) == branching_B_closed(m, l, a, b) ? "" : "closed form differs from product";
        });
  }
  return out;
}

/// Constant-term orthogonality at n = 2, theta = 1, a = b = 1/2.
inline std::vector<CheckResult> verify_orthogonality() {
  std::vector<CheckResult> out;
  const Rational h = make_rational(1, 2);
  ParamTriple p(1, h, h);
  auto shapes = partitions_up_to(3, 2);
  std::vector<TorusPoly> phis;
  for (const auto& lambda : shapes) phis.push_back(normalized_jacobi(lambda, 2, p));
  for (std::size_t i = 0; i < shapes.size(); ++i)
    for (std::size_t j = i; j < shapes.size(); ++j)
      detail::run_case(out, "<" + to_string(shapes[i]) + "," + to_string(shapes[j]) + ">", [&]() -> std::string {
        Rational v = exact_inner_product(phis[i], phis[j], p);
        if (i == j) return v > 0 ? "" : "norm is not positive: " + to_string(v);
        return v == 0 ? "" : "inner product is " + to_string(v);
      });
  return out;
}

/// u-coefficients, branching coefficients, one-variable Fourier coefficients,
/// and the theta = 1 recurrence and branching constants.
inline std::vector<CheckResult> verify_positivity() {
  std::vector<CheckResult> out;
  for (const auto& theta : {make_rational(1, 2), Rational(1), Rational(2)})
    for (const auto& [a, b] : detail::positivity_ab_grid()) {
      ParamTriple p(theta, a, b);
      const std::string ab = " a=" + to_string(a) + " b=" + to_string(b);
      for (int n = 1; n <= 3; ++n)
        for (const auto& lambda : partitions_up_to(4, n))
          detail::run_case(out, "positivity " + detail::case_label(lambda, n, theta) + ab, [&]() -> std::string {
            for (const auto& [nu, c] : u_coefficients(lambda, n, p))
              if (c < 0) return "u-coefficient at " + to_string(nu) + " is " + to_string(c);
            if (n >= 2)
              for (const auto& [nu, c] : branching_expand(lambda, n, p))
                if (c < 0) return "branching coefficient at " + to_string(nu) + " is " + to_string(c);
            Rational total = 0;
            for (const auto& [k, c] : one_variable_fourier(lambda, n, p)) {
              if (c < 0) return "Fourier coefficient at " + std::to_string(k) + " is " + to_string(c);
              total += c;
            }
            return total == 1 ? "" : "Fourier coefficients sum to " + to_string(total);
          });
    }
  for (const auto& [a, b] : detail::theta1_ab_grid()) {
    const std::string ab = " a=" + to_string(a) + " b=" + to_string(b);
    detail::run_case(out, "recurrence" + ab, [&]() -> std::string {
      for (int m = 0; m <= 10; ++m) {
        auto r = recurrence_coefficients(m, a, b);
        if (r.a <= 0) return "a_" + std::to_string(m) + " = " + to_string(r.a);
        if (m >= 1 && r.c <= 0) return "c_" + std::to_string(m) + " = " + to_string(r.c);
        if (r.a + r.b - r.c != 1) return "a + b - c != 1 at m = " + std::to_string(m);
      }
      for (int m = 0; m <= 8; ++m)
        for (int l = 0; l <= m; ++l)
          if (branching_B(m, l, a, b) <= 0) return "B(" + std::to_string(m) + "," + std::to_string(l) + ") not positive";
      return "";
    });
    for (int n = 2; n <= 3; ++n)
      for (const auto& mu : partitions_up_to(3, n - 1))
        detail::run_case(out, "A " + to_string(mu) + " n=" + std::to_string(n) + ab, [&]() -> std::string {
          for (const auto& nu : partitions_up_to(mu.size(), n - 1))
            if (interlaces(nu, mu, n - 1) && branching_A(mu, nu, n, a, b) <= 0)
              return "A(" + to_string(mu) + "," + to_string(nu) + ") not positive";
          return "";
        });
  }
  return out;
}

/// Jack branching, tableau reconstruction and the Jacobi branching rule.
inline std::vector<CheckResult> verify_branching() {
  std::vector<CheckResult> out;
  for (const auto& theta : detail::interp_theta_grid())
    for (int n = 1; n <= 4; ++n)
      for (const auto& mu : partitions_up_to(4, n))
        detail::run_case(out, "jack " + detail::case_label(mu, n, theta), [&]() -> std::string {
          SymPoly p = jack_polynomial(mu, n, theta);
          if (!(jack_from_tableaux(mu, n, theta) == p)) return "tableau sum differs from the orthogonal basis";
          if (n < 4 && !(jack_polynomial(mu, n + 1, theta).drop_last_variable() == p)) return "not stable in n";
          for (const auto& nu : subpartitions(mu))
            if (jack_branching_psi(mu, nu, theta) != psi_closed_form(mu, nu, theta))
              return "psi closed form differs at " + to_string(nu);
          return "";
        });
  for (const auto& [a, b] : detail::theta1_ab_grid())
    for (int n = 2; n <= 3; ++n)
      for (const auto& lambda : partitions_up_to(3, n))
        detail::run_case(out, "two-step " + to_string(lambda) + " n=" + std::to_string(n) + " a=" + to_string(a) + " b=" + to_string(b),
                         [&]() -> std::string {
                           auto two_step = two_step_branching_monic(lambda, n, a, b);
                           std::erase_if(two_step, [](const auto& kv) { return kv.second == 0; });
                           return two_step == branching_expand(lambda, n, ParamTriple(1, a, b)) ? "" : "two-step rule differs";
                         });
  return out;
}

/// I_(2)(lambda) <= I_(1)(lambda)^2 at random lambda with h >= theta n - 1/2.
inline std::vector<CheckResult> verify_lemma41(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  std::mt19937 rng(opt.seed);
  const std::vector<Rational> thetas{make_rational(1, 2), Rational(1), Rational(2)};
  for (int t = 0; t < opt.trials; ++t) {
    const Rational& theta = thetas[rng() % thetas.size()];
    int n = 1 + static_cast<int>(rng() % 6);
    std::vector<Partition> pool;
    int size = static_cast<int>(rng() % 21);
    for (const auto& p : partitions_of(size, n)) pool.push_back(p);
    Partition lambda = pool[rng() % pool.size()];
    Rational h = theta * n - make_rational(1, 2) + make_rational(static_cast<long>(rng() % 13), 4);
    detail::run_case(out, "trial " + std::to_string(t) + " " + detail::case_label(lambda, n, theta) + " h=" + to_string(h),
                     [&]() -> std::string {
                       Rational i1 = interp_value(Partition{1}, lambda, n, theta, h);
                       Rational i2 = interp_value(Partition{2}, lambda, n, theta, h);
                       return i2 <= i1 * i1 ? "" : "I_(2) = " + to_string(i2) + " exceeds I_(1)^2 = " + to_string(i1 * i1);
                     });
  }
  return out;
}

/// theta = 1 binomial formula with factorial Schur coefficients against the general one.
inline std::vector<CheckResult> verify_binomial_theta1() {
  std::vector<CheckResult> out;
  for (const auto& [a, b] : detail::theta1_ab_grid())
    for (int n = 1; n <= 3; ++n)
      for (const auto& lambda : partitions_up_to(3, n))
        detail::run_case(out, "binomial " + to_string(lambda) + " n=" + std::to_string(n) + " a=" + to_string(a) + " b=" + to_string(b),
                         [&]() -> std::string {
                           RationalPolynomial lhs = theta1_binomial_expansion(lambda, n, a, b);
                           return lhs == normalized_jacobi(lambda, n, ParamTriple(1, a, b)).to_x_polynomial() ? "" : "expansions differ";
                         });
  return out;
}

/// epsilon o pi_tau on the kernel against its closed-form series through t^6.
inline std::vector<CheckResult> verify_prop32(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  std::mt19937 rng(opt.seed);
  auto draw = [&](long max_num) -> Rational { return make_rational(static_cast<long>(rng() % (max_num + 1)), 1 + static_cast<long>(rng() % 4)); };
  auto draw_sequence = [&] {
    std::vector<Rational> s;
    int len = static_cast<int>(rng() % 3);
    for (int k = 0; k < len; ++k) s.push_back(draw(4) / 4);
    std::sort(s.begin(), s.end(), std::greater<Rational>());
    return s;
  };
  for (int t = 0; t < 5; ++t) {
    VKParams vk;
    vk.alpha = draw_sequence();
    vk.beta = draw_sequence();
    vk.gamma = draw(3);
    Rational tau = draw(6) - 1;
    Rational theta = draw(5) + make_rational(1, 3);
    detail::run_case(out, "instance " + std::to_string(t) + " tau=" + to_string(tau) + " theta=" + to_string(theta), [&]() -> std::string {
      return kernel_image_series(vk, tau, theta, 6) == kernel_image_closed_form(vk, tau, theta, 6) ? "" : "series differ";
    });
  }
  return out;
}

inline const std::vector<std::string>& verify_targets() {
  static const std::vector<std::string> names{"interp-equivalence", "theta1-crosscheck", "orthogonality", "positivity",
                                              "branching",          "lemma41",           "binomial-theta1", "prop32"};
  return names;
}

inline std::vector<CheckResult> run_verify(const std::string& target, const VerifyOptions& opt = {}) {
  if (target == "interp-equivalence") return verify_interp_equivalence();
  if (target == "theta1-crosscheck") return verify_theta1_crosscheck();
  if (target == "orthogonality") return verify_orthogonality();
  if (target == "positivity") return verify_positivity();
  if (target == "branching") return verify_branching();
  if (target == "lemma41") return verify_lemma41(opt);
  if (target == "binomial-theta1") return verify_binomial_theta1();
  if (target == "prop32") return verify_prop32(opt);
  throw Error("unknown verify target " + target);
}

}  // namespace bcpoly
