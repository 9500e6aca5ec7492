#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <future>
#include <optional>
#include <string>
#include <vector>

#include "bcpoly/jacobi.hpp"
#include "bcpoly/symfunc.hpp"

namespace bcpoly {

/// Realizes lambda(n) from (alpha, beta, gamma). The alpha rows come first,
/// the beta columns hang below them as a left-justified block, and the
/// floor(gamma n) extra cells form a near-square block of side
/// ceil(sqrt(floor(gamma n))), so they contribute o(n) to every row and
/// column and show up only in |lambda(n)| / n.
inline Partition vk_realize(const VKParams& vk, int n) {
  vk.validate();
  if (n < 1) throw Error("n must be positive");
  std::vector<int> rows;
  for (const auto& a : vk.alpha) {
    Rational v = a * n;
    int len = static_cast<int>(mpz_class(v.get_num() / v.get_den()).get_si());
    if (len > 0) rows.push_back(len);
  }
  std::vector<int> heights;
  for (const auto& b : vk.beta) {
    Rational v = b * n;
    int h = static_cast<int>(mpz_class(v.get_num() / v.get_den()).get_si());
    if (h > 0) heights.push_back(h);
  }
  int tallest = heights.empty() ? 0 : heights.front();
  for (int k = 1; k <= tallest; ++k) {
    int len = 0;
    for (int h : heights)
      if (h >= k) ++len;
    rows.push_back(len);
  }
  Rational gv = vk.gamma * n;
  long cells = mpz_class(gv.get_num() / gv.get_den()).get_si();
  if (cells > 0) {
    int side = 1;
    while (static_cast<long>(side) * side < cells) ++side;
    for (long left = cells; left > 0; left -= side) rows.push_back(static_cast<int>(std::min<long>(left, side)));
  }
  if (static_cast<int>(rows.size()) > n) throw Error("n too small for vk");
  std::sort(rows.begin(), rows.end(), std::greater<int>());
  return Partition(rows);
}

/// phi_{alpha, beta, gamma, abar, bbar}(x) in product form.
inline double limit_phi(const VKParams& vk, const Rational& abar, const Rational& bbar, const Rational& theta, double x) {
  vk.validate();
  if (theta <= 0) throw Error("theta must be positive");
  if (abar < 0 || bbar < 0) throw Error("abar and bbar must be nonnegative");
  if (!(x >= -1.0 && x <= 1.0)) throw Error("x must lie in [-1, 1]");
  const double t = to_double(theta), ab = to_double(abar), bb = to_double(bbar);
  double out = std::exp(to_double(vk.gamma) * (x - 1));
  for (const auto& b : vk.beta) {
    double be = to_double(b);
    out *= 1 + be / 2 * ((2 * t + ab + bb - t * be) / (t + ab)) * (x - 1);
  }
  for (const auto& a : vk.alpha) {
    double al = to_double(a);
    double den = 1 - al / (2 * t) * ((2 * t + ab + bb + al) / (t + ab)) * (x - 1);
    if (den <= 0) throw Error("pole encountered");
    out /= std::pow(den, t);
  }
  return out;
}

/// The same function at abar = bbar = 0, written in z with x = (z + 1/z)/2.
inline double limit_phi_torus(const VKParams& vk, const Rational& theta, std::complex<double> z) {
  vk.validate();
  if (theta <= 0) throw Error("theta must be positive");
  if (std::abs(std::abs(z) - 1.0) > 1e-12) throw Error("z must have unit modulus");
  const double t = to_double(theta);
  const std::complex<double> zi = 1.0 / z;
  std::complex<double> out = std::exp(to_double(vk.gamma) / 2 * (z + zi - 2.0));
  for (const auto& b : vk.beta) {
    double be = to_double(b);
    out *= (1.0 + be / 2 * (z - 1.0)) * (1.0 + be / 2 * (zi - 1.0));
  }
  for (const auto& a : vk.alpha) {
    double c = to_double(a) / (2 * t);
    std::complex<double> den = (1.0 - c * (z - 1.0)) * (1.0 - c * (zi - 1.0));
    if (std::abs(den) == 0.0) throw Error("pole encountered");
    out /= std::pow(den, t);
  }
  return out.real();
}

/// prod_j phi((z_j + 1/z_j)/2) at abar = bbar = 0.
inline double limit_Phi_product(const VKParams& vk, const Rational& theta, const std::vector<std::complex<double>>& z) {
  double out = 1;
  for (const auto& zj : z) {
    if (std::abs(std::abs(zj) - 1.0) > 1e-12) throw Error("z must have unit modulus");
    out *= limit_phi(vk, 0, 0, theta, std::clamp(zj.real(), -1.0, 1.0));
  }
  return out;
}

struct ConvergenceRow {
  int n = 0;
  Partition lambda;
  double sup_error = 0;
  std::vector<double> grid;
  std::vector<double> values;
  std::vector<double> limits;
};

/// The x-grid -1, -1 + 2/(m-1), ..., 1 with exact rational nodes.
inline std::vector<Rational> uniform_grid(int points) {
  if (points < 2) throw Error("grid needs at least two points");
  std::vector<Rational> out;
  for (int k = 0; k < points; ++k) out.push_back(Rational(-1) + make_rational(2 * k, points - 1));
  return out;
}

/// Phi_{lambda(n)}(z, 1, ..., 1) against phi on the grid, one row per n.
/// Rows are computed concurrently and returned in the order of n_list.
inline std::vector<ConvergenceRow> convergence_experiment(const VKParams& vk, const ParamTriple& p,
                                                          const std::vector<int>& n_list,
                                                          const std::vector<Rational>& grid) {
  for (const auto& x : grid)
    if (x < -1 || x > 1) throw Error("grid points must lie in [-1, 1]");
  std::vector<Partition> shapes;
  for (int n : n_list) {
    try {
      shapes.push_back(vk_realize(vk, n));
    } catch (const Error& e) {
      throw Error(std::string(e.what()) + " at n = " + std::to_string(n));
    }
  }
  std::vector<std::future<ConvergenceRow>> jobs;
  for (std::size_t k = 0; k < n_list.size(); ++k) {
    jobs.push_back(std::async(std::launch::async, [&, k] {
      ConvergenceRow row;
      row.n = n_list[k];
      row.lambda = shapes[k];
      UniPoly f = one_variable_restriction(row.lambda, row.n, p);
      for (const auto& x : grid) {
        double value = to_double(f(x - 1));
        double limit = limit_phi(vk, 0, 0, p.theta, to_double(x));
        row.grid.push_back(to_double(x));
        row.values.push_back(value);
        row.limits.push_back(limit);
        row.sup_error = std::max(row.sup_error, std::abs(value - limit));
      }
      return row;
    }));
  }
  std::vector<ConvergenceRow> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

/// n -> constant + slope n.
struct AffineRule {
  Rational constant = 0;
  Rational slope = 0;
  Rational operator()(int n) const { return constant + slope * n; }
};

struct CAsymptoticsRow {
  int n = 0;
  Rational a_n;
  Rational b_n;
  Rational ratio;
};

/// C(n, mu; theta; a_n, b_n) / ((H/H') 4^|mu| theta^|mu| (theta + abar)^|mu| n^{2|mu|}).
inline std::vector<CAsymptoticsRow> c_asymptotics_check(const Partition& mu, const Rational& theta,
                                                        const AffineRule& a_rule, const AffineRule& b_rule,
                                                        const std::vector<int>& n_list) {
  if (a_rule.slope < 0 || b_rule.slope < 0) throw Error("abar and bbar must be nonnegative");
  auto [h, hp] = hook_products(mu, theta);
  const int k = mu.size();
  Rational base = h / hp * power(Rational(4), k) * power(theta, k) * power(theta + a_rule.slope, k);
  std::vector<CAsymptoticsRow> out;
  for (int n : n_list) {
    ParamTriple p(theta, a_rule(n), b_rule(n));
    Rational limit = base * power(Rational(n), 2 * k);
    out.push_back({n, p.a, p.b, c_denominator(n, mu, p) / limit});
  }
  return out;
}

struct GrowthRow {
  int n = 0;
  Partition lambda;
  Rational h;
  Rational i2;
  Rational i1;
  bool inequality_holds = false;
  Rational size_over_n;
  Rational i1_over_n2;
};

/// Compares I_(2)(lambda; theta; h) with I_(1)(lambda; theta; h)^2 along a
/// sequence, and reports the first moments scaled by n.
inline std::vector<GrowthRow> growth_checks(const std::vector<std::pair<int, Partition>>& seq, const Rational& theta,
                                            const AffineRule& h_rule) {
  std::vector<GrowthRow> out;
  for (const auto& [n, lambda] : seq) {
    Rational h = h_rule(n);
    if (h < theta * n - make_rational(1, 2))
      throw Error("requires h >= theta n - 1/2, violated at n = " + std::to_string(n) + " (h = " + to_string(h) + ")");
    if (lambda.length() > n) throw Error("too many rows");
    GrowthRow row;
    row.n = n;
    row.lambda = lambda;
    row.h = h;
    row.i1 = interp_value(Partition{1}, lambda, n, theta, h);
    row.i2 = interp_value(Partition{2}, lambda, n, theta, h);
    row.inequality_holds = row.i2 <= row.i1 * row.i1;
    row.size_over_n = make_rational(lambda.size(), n);
    row.i1_over_n2 = row.i1 / (n * n);
    out.push_back(row);
  }
  return out;
}

struct SeriesEntry {
  int series_id = 0;
  std::string group_pair;
  Rational theta;
  Rational a;
  Rational b;
  std::string root_system;
  std::optional<std::string> parity;
  std::optional<std::string> caveat;

  bool operator==(const SeriesEntry&) const = default;
};

/// Parameters attached to the symmetric-space series 4..10. For series 7 and
/// 10 the parity selects n~ = 2n (even) or n~ = 2n + 1 (odd).
inline SeriesEntry table2_params(int series_id, const std::optional<std::string>& parity = std::nullopt) {
  if (series_id >= 1 && series_id <= 3) throw Error("series 1-3 are the Jack cases and are out of scope");
  if (series_id < 1 || series_id > 10) throw Error("series must be in 4..10");
  const bool needs_parity = series_id == 7 || series_id == 10;
  if (needs_parity && !parity) throw Error("series " + std::to_string(series_id) + " needs parity even or odd");
  if (!needs_parity && parity) throw Error("parity applies only to series 7 and 10");
  if (parity && *parity != "even" && *parity != "odd") throw Error("parity must be even or odd");
  const bool odd = parity && *parity == "odd";
  const Rational half = make_rational(1, 2);
  SeriesEntry e;
  switch (series_id) {
    case 4: e = {4, "O(2n) / O(n) x O(n)", half, -half, -half, "D_n", parity, std::nullopt}; break;
    case 5: e = {5, "Sp(n) / U(n)", half, 0, 0, "C_n", parity, std::nullopt}; break;
    case 6: e = {6, "U(2n) / U(n) x U(n)", 1, 0, 0, "C_n", parity, std::nullopt}; break;
    case 7:
      e = odd ? SeriesEntry{7, "O(2n+1) x O(2n+1) / O(2n+1)", 1, half, -half, "B_n", parity, std::nullopt}
              : SeriesEntry{7, "O(2n) x O(2n) / O(2n)", 1, -half, -half, "D_n", parity, std::nullopt};
      break;
    case 8: e = {8, "Sp(n) x Sp(n) / Sp(n)", 1, half, half, "C_n", parity, std::nullopt}; break;
    case 9: e = {9, "Sp(2n) / Sp(n) x Sp(n)", 2, 1, 1, "C_n", parity, std::nullopt}; break;
    case 10:
      e = odd ? SeriesEntry{10, "O(2(2n+1)) / U(2n+1)", 2, 2, 0, "BC_n", parity, std::nullopt}
              : SeriesEntry{10, "O(4n) / U(2n)", 2, 0, 0, "C_n", parity, std::nullopt};
      break;
  }
  if (e.root_system == "D_n")
    e.caveat = "D_n caveat: the restricted Weyl group has index 2 in W, so spherical functions are not all W-invariant";
  return e;
}

/// Leading-term check: I_mu(lambda(n); sigma + theta n) / n^{2|mu|} against
/// epsilon(pi_{2 theta} P_mu).
struct LeadingTermCheck {
  double scaled_value = 0;
  double limit = 0;
};

inline LeadingTermCheck leading_term_check(const Partition& mu, const VKParams& vk, const ParamTriple& p, int n) {
  Partition lambda = vk_realize(vk, n);
  Rational h = p.sigma() + p.theta * n;
  Rational value = interp_value(mu, lambda, n, p.theta, h) / power(Rational(n), 2 * mu.size());
  Rational limit = epsilon_specialize(pi_tau(jack_symmetric(mu, p.theta), 2 * p.theta), vk, p.theta);
  return {to_double(value), to_double(limit)};
}

/// Coefficients of t^0..t^degree in sum_k epsilon(pi_tau g_k) t^k.
inline std::vector<Rational> kernel_image_series(const VKParams& vk, const Rational& tau, const Rational& theta,
                                                 int degree) {
  std::vector<Rational> out;
  for (const auto& g : cauchy_kernel_components(theta, degree)) out.push_back(epsilon_specialize(pi_tau(g, tau), vk, theta));
  return out;
}

namespace detail {
inline std::vector<Rational> series_mul(const std::vector<Rational>& f, const std::vector<Rational>& g) {
  std::vector<Rational> out(f.size(), Rational(0));
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; i + j < f.size(); ++j) out[i + j] += f[i] * g[j];
  return out;
}

/// (1 - c t)^{-e} through t^degree.
inline std::vector<Rational> negative_binomial_series(const Rational& c, const Rational& e, int degree) {
  std::vector<Rational> out{Rational(1)};
  for (int k = 1; k <= degree; ++k) out.push_back(out.back() * (e + k - 1) / k * c);
  return out;
}
}  // namespace detail

/// e^{gamma theta tau t} prod (1 + theta beta_i (tau - theta beta_i) t)
/// / (1 - alpha_i (tau + alpha_i) t)^theta through t^degree.
inline std::vector<Rational> kernel_image_closed_form(const VKParams& vk, const Rational& tau, const Rational& theta,
                                                      int degree) {
  std::vector<Rational> out(static_cast<std::size_t>(degree + 1), Rational(0));
  Rational g = vk.gamma * theta * tau;
  Rational term = 1;
  for (int k = 0; k <= degree; ++k) {
    out[static_cast<std::size_t>(k)] = term;
    term = term * g / (k + 1);
  }
  for (const auto& b : vk.beta) {
    std::vector<Rational> lin(out.size(), Rational(0));
    lin[0] = 1;
    if (degree >= 1) lin[1] = theta * b * (tau - theta * b);
    out = detail::series_mul(out, lin);
  }
  for (const auto& a : vk.alpha) out = detail::series_mul(out, detail::negative_binomial_series(a * (tau + a), theta, degree));
  return out;
}

}  // namespace bcpoly
