#include <gtest/gtest.h>

#include "bcpoly/jack.hpp"

using namespace bcpoly;

namespace {

const std::vector<Rational> kThetas{make_rational(1, 2), Rational(1), Rational(2), make_rational(5, 3)};

// Kostka number: semistandard tableaux of shape lambda and content mu, by
// filling the values 1, 2, ... one horizontal strip at a time.
long kostka(const Partition& lambda, const Partition& mu) {
  long total = 0;
  auto rec = [&](auto&& self, const Partition& inner, int value) -> void {
    if (value == mu.length()) {
      if (inner == lambda) ++total;
      return;
    }
    int add = mu.part(value);
    for (const auto& outer : partitions_of(inner.size() + add))
      if (contained_in(outer, lambda) && is_horizontal_strip(outer, inner)) self(self, outer, value + 1);
  };
  rec(rec, Partition(), 0);
  return total;
}

RationalPolynomial embed(const SymPoly& f, int total, int offset) {
  RationalPolynomial p = f.to_polynomial();
  std::vector<RationalPolynomial> images;
  for (int i = 0; i < p.nvars(); ++i) images.push_back(RationalPolynomial::variable(total, offset + i));
  return compose(p, images);
}

}  // namespace

TEST(Jack, ThetaOneIsSchur) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& lambda : partitions_up_to(5, n)) {
      SymPoly expected(n);
      for (const auto& mu : partitions_of(lambda.size(), n)) expected.add_term(mu, Rational(kostka(lambda, mu)));
      EXPECT_EQ(jack_polynomial(lambda, n, 1), expected) << to_string(lambda);
    }
}

TEST(Jack, TwoBoxesClosedForm) {
  for (const auto& theta : kThetas) {
    SymPoly p = jack_polynomial(Partition{2}, 2, theta);
    EXPECT_EQ(p.coefficient(Partition{2}), 1);
    EXPECT_EQ(p.coefficient(Partition({1, 1})), 2 * theta / (1 + theta));
    EXPECT_EQ(jack_polynomial(Partition({1, 1}), 3, theta).terms().size(), 1u);
  }
}

TEST(Jack, DominanceTriangularAndStable) {
  for (const auto& theta : kThetas)
    for (int n = 1; n <= 3; ++n)
      for (const auto& mu : partitions_up_to(5, n)) {
        SymPoly p = jack_polynomial(mu, n, theta);
        EXPECT_EQ(p.coefficient(mu), 1);
        for (const auto& [nu, c] : p.terms()) EXPECT_TRUE(dominated_by(nu, mu)) << to_string(nu) << " in P" << to_string(mu);
        EXPECT_EQ(jack_polynomial(mu, n + 1, theta).drop_last_variable(), p);
      }
}

TEST(Jack, RejectsBadArguments) {
  EXPECT_THROW(jack_polynomial(Partition({1, 1, 1}), 2, 1), Error);
  EXPECT_THROW(jack_polynomial(Partition{1}, 2, 0), Error);
}

TEST(Jack, HallNormIsHookRatio) {
  for (const auto& theta : kThetas)
    for (int d = 1; d <= 5; ++d)
      for (const auto& lambda : partitions_of(d))
        for (const auto& mu : partitions_of(d)) {
          Rational v = hall_inner_product(jack_symmetric(lambda, theta), jack_symmetric(mu, theta), theta);
          if (lambda == mu) {
            auto [h, hp] = hook_products(lambda, theta);
            EXPECT_EQ(v, h / hp);
          } else {
            EXPECT_EQ(v, 0);
          }
        }
}

TEST(Jack, HookProductsOfTwoOne) {
  Rational theta = make_rational(5, 3);
  auto [h, hp] = hook_products(Partition({2, 1}), theta);
  EXPECT_EQ(h, 2 + theta);
  EXPECT_EQ(hp, (1 + 2 * theta) * theta * theta);
}

TEST(Jack, TableauSumReconstructsJack) {
  for (const auto& theta : kThetas)
    for (int n = 1; n <= 4; ++n)
      for (const auto& mu : partitions_up_to(4, n)) EXPECT_EQ(jack_from_tableaux(mu, n, theta), jack_polynomial(mu, n, theta));
}

TEST(Jack, PsiClosedFormMatchesExtraction) {
  for (const auto& theta : kThetas)
    for (const auto& mu : partitions_up_to(5))
      for (const auto& nu : subpartitions(mu)) EXPECT_EQ(jack_branching_psi(mu, nu, theta), psi_closed_form(mu, nu, theta));
  EXPECT_EQ(jack_branching_psi(Partition({2, 2}), Partition({1, 1}), 1), 0);
  EXPECT_EQ(jack_branching_psi(Partition({2, 2}), Partition{2}, 1), 1);
}

TEST(Jack, CauchyIdentityInTwoPlusTwoVariables) {
  for (const auto& theta : {make_rational(1, 2), Rational(2)}) {
    const int d = 4;
    RationalPolynomial lhs(4);
    for (const auto& mu : partitions_up_to(d, 2)) {
      auto [h, hp] = hook_products(mu, theta);
      SymPoly p = jack_polynomial(mu, 2, theta);
      lhs += embed(p, 4, 0) * embed(p, 4, 2) * (hp / h);
    }
    // prod_{i,j} (1 - x_i y_j)^{-theta}, each factor expanded to degree d
    RationalPolynomial rhs = RationalPolynomial::constant(4, 1);
    for (int i = 0; i < 2; ++i)
      for (int j = 2; j < 4; ++j) {
        RationalPolynomial xy = RationalPolynomial::variable(4, i) * RationalPolynomial::variable(4, j);
        RationalPolynomial factor(4);
        for (int k = 0; k <= d; ++k) factor += xy.pow(k) * (rising(theta, k) / Rational(factorial(k)));
        rhs *= factor;
      }
    RationalPolynomial truncated(4);
    for (const auto& [e, c] : rhs.terms())
      if (e[0] + e[1] <= d) truncated.add_term(e, c);
    EXPECT_EQ(lhs, truncated);
  }
}

TEST(SymFunc, MonomialPowerSumRoundTrip) {
  for (int d = 0; d <= 6; ++d)
    for (const auto& nu : partitions_of(d)) {
      std::map<Partition, Rational> m{{nu, Rational(1)}};
      EXPECT_EQ(power_sums_to_monomials(monomial_to_power_sums(m)), m);
    }
  // p_2 = m_2, p_1^2 = m_2 + 2 m_11
  auto p11 = power_sums_to_monomials(SymFunc::power_sum(Partition({1, 1})));
  EXPECT_EQ(p11.at(Partition{2}), 1);
  EXPECT_EQ(p11.at(Partition({1, 1})), 2);
}

TEST(SymFunc, EpsilonMatchesGeneratingFunction) {
  // sum_k epsilon(g_k) t^k = e^{gamma theta t} prod (1 + beta theta t) / (1 - alpha t)^theta
  const int d = 6;
  for (const auto& theta : kThetas) {
    VKParams vk({make_rational(1, 2), make_rational(1, 3)}, {make_rational(1, 4)}, make_rational(2, 7));
    std::vector<Rational> series(d + 1, Rational(0));
    Rational term = 1;
    for (int k = 0; k <= d; ++k) {
      series[static_cast<std::size_t>(k)] = term;
      term *= vk.gamma * theta / (k + 1);
    }
    auto multiply = [&](const std::vector<Rational>& f) {
      std::vector<Rational> out(d + 1, Rational(0));
      for (int i = 0; i <= d; ++i)
        for (int j = 0; i + j <= d; ++j) out[static_cast<std::size_t>(i + j)] += series[static_cast<std::size_t>(i)] * f[static_cast<std::size_t>(j)];
      series = out;
    };
    for (const auto& b : vk.beta) {
      std::vector<Rational> f(d + 1, Rational(0));
      f[0] = 1;
      f[1] = b * theta;
      multiply(f);
    }
    for (const auto& a : vk.alpha) {
      std::vector<Rational> f;
      for (int k = 0; k <= d; ++k) f.push_back(rising(theta, k) / Rational(factorial(k)) * power(a, k));
      multiply(f);
    }
    auto g = cauchy_kernel_components(theta, d);
    for (int k = 0; k <= d; ++k) EXPECT_EQ(epsilon_specialize(g[static_cast<std::size_t>(k)], vk, theta), series[static_cast<std::size_t>(k)]);
  }
}

TEST(SymFunc, PiTauIsMultiplicative) {
  for (const auto& tau : {Rational(0), make_rational(3, 2), Rational(-2)})
    for (int a = 1; a <= 4; ++a)
      for (int b = 1; a + b <= 4; ++b) {
        SymFunc pa = SymFunc::power_sum(Partition{a}), pb = SymFunc::power_sum(Partition{b});
        EXPECT_EQ(pi_tau(pa * pb, tau), pi_tau(pa, tau) * pi_tau(pb, tau));
      }
}

TEST(SymFunc, PiTauOnFirstPowerSum) {
  SymFunc f = pi_tau(SymFunc::power_sum(Partition{1}), 3);
  EXPECT_EQ(f.coefficient(Partition{2}), 1);
  EXPECT_EQ(f.coefficient(Partition{1}), 3);
}

TEST(SymFunc, VKParamsValidation) {
  EXPECT_THROW(VKParams({Rational(1, 3), Rational(1, 2)}, {}, 0), Error);
  EXPECT_THROW(VKParams({}, {Rational(-1)}, 0), Error);
  EXPECT_THROW(VKParams({}, {}, Rational(-1)), Error);
  EXPECT_EQ(VKParams({Rational(1, 2)}, {Rational(1, 4)}, Rational(1, 8)).delta(), make_rational(7, 8));
}
