#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "bcpoly/asymptotics.hpp"

using namespace bcpoly;

namespace {

const Rational kHalf = make_rational(1, 2);

VKParams vk(std::vector<Rational> a, std::vector<Rational> b, Rational g) { return VKParams(std::move(a), std::move(b), std::move(g)); }

}  // namespace

TEST(VKRealize, SmallExamples) {
  EXPECT_EQ(vk_realize(vk({kHalf}, {}, 0), 4), Partition{2});
  EXPECT_EQ(vk_realize(vk({}, {kHalf}, 0), 4), Partition({1, 1}));
  EXPECT_EQ(vk_realize(vk({kHalf}, {}, kHalf), 8), Partition({4, 2, 2}));
  EXPECT_EQ(vk_realize(vk({}, {}, 0), 5), Partition());
  EXPECT_THROW(vk_realize(vk({}, {Rational(2)}, 0), 4), Error);
  EXPECT_THROW(vk_realize(vk({}, {}, 0), 0), Error);
}

TEST(VKRealize, RowAndColumnRatiosApproachTheParameters) {
  VKParams p = vk({make_rational(3, 4), make_rational(1, 3)}, {kHalf, make_rational(1, 5)}, make_rational(2, 3));
  for (int n : {30, 60, 120, 240}) {
    Partition lambda = vk_realize(p, n);
    Partition conj = conjugate(lambda);
    double tol = 2.0 / std::sqrt(static_cast<double>(n)) + 2.0 / n;
    for (std::size_t i = 0; i < p.alpha.size(); ++i)
      EXPECT_LE(to_double(p.alpha[i]) - lambda.part(static_cast<int>(i)) / double(n), 1.0 / n + 1e-12);
    for (std::size_t i = 0; i < p.alpha.size(); ++i) EXPECT_LE(lambda.part(static_cast<int>(i)) / double(n), to_double(p.alpha[i]) + 1e-12);
    for (std::size_t i = 0; i < p.beta.size(); ++i) EXPECT_NEAR(conj.part(static_cast<int>(i)) / double(n), to_double(p.beta[i]), tol);
    EXPECT_NEAR(lambda.size() / double(n), to_double(p.delta()), 6.0 / n);
  }
}

TEST(LimitPhi, ClosedValues) {
  // alpha = (1/2), theta = 1: 1 / (1 + 5/4) at x = -1
  VKParams a = vk({kHalf}, {}, 0);
  EXPECT_NEAR(limit_phi(a, 0, 0, 1, -1.0), 4.0 / 9.0, 1e-15);
  EXPECT_NEAR(limit_phi_torus(a, 1, {-1.0, 0.0}), 4.0 / 9.0, 1e-15);
  EXPECT_DOUBLE_EQ(limit_phi(vk({kHalf}, {make_rational(1, 3)}, 2), kHalf, 1, 2, 1.0), 1.0);
  EXPECT_DOUBLE_EQ(limit_phi(vk({}, {}, 0), 0, 0, 1, -0.3), 1.0);
  EXPECT_NEAR(limit_phi(vk({}, {}, kHalf), 0, 0, 1, -1.0), std::exp(-1.0), 1e-15);
}

TEST(LimitPhi, ProductAndTorusFormsAgree) {
  std::mt19937 rng(11);
  auto draw = [&] { return make_rational(static_cast<long>(rng() % 9), 8); };
  for (int t = 0; t < 5; ++t) {
    std::vector<Rational> al{draw(), draw()}, be{draw()};
    std::sort(al.begin(), al.end(), std::greater<Rational>());
    VKParams p = vk(al, be, draw());
    Rational theta = make_rational(1 + static_cast<long>(rng() % 5), 2);
    for (int k = 0; k <= 16; ++k) {
      double phi = M_PI * k / 16;
      std::complex<double> z = std::polar(1.0, phi);
      EXPECT_NEAR(limit_phi(p, 0, 0, theta, std::cos(phi)), limit_phi_torus(p, theta, z), 1e-12);
    }
  }
}

TEST(LimitPhi, Errors) {
  EXPECT_THROW(limit_phi(vk({}, {}, 0), 0, 0, 1, 1.5), Error);
  EXPECT_THROW(limit_phi(vk({}, {}, 0), -1, 0, 1, 0.0), Error);
  EXPECT_THROW(limit_phi(vk({}, {}, 0), 0, 0, 0, 0.0), Error);
  EXPECT_THROW(limit_phi_torus(vk({}, {}, 0), 1, {2.0, 0.0}), Error);
}

TEST(LimitPhi, MultiplicativeAndBounded) {
  VKParams p = vk({kHalf}, {make_rational(1, 4)}, make_rational(1, 3));
  std::vector<std::complex<double>> z{std::polar(1.0, 0.3), std::polar(1.0, 2.0), std::polar(1.0, -1.1)};
  double product = 1;
  for (const auto& zj : z) product *= limit_phi_torus(p, 1, zj);
  EXPECT_NEAR(limit_Phi_product(p, 1, z), product, 1e-12);
  EXPECT_LE(std::abs(limit_Phi_product(p, 1, z)), 1.0 + 1e-12);
  EXPECT_DOUBLE_EQ(limit_Phi_product(p, 1, {1.0, 1.0}), 1.0);
  EXPECT_THROW(limit_Phi_product(p, 1, {{0.5, 0.0}}), Error);
}

TEST(Convergence, ErrorDecreasesAlongTheSequence) {
  auto rows = convergence_experiment(vk({kHalf}, {}, 0), ParamTriple(1, kHalf, kHalf), {8, 16, 32}, uniform_grid(21));
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_GT(rows[0].sup_error, rows[1].sup_error);
  EXPECT_GT(rows[1].sup_error, rows[2].sup_error);
  EXPECT_LT(rows[2].sup_error, 0.02);
  EXPECT_EQ(rows[1].lambda, Partition{8});
  EXPECT_DOUBLE_EQ(rows[0].values.back(), 1.0);

  auto beta = convergence_experiment(vk({}, {kHalf}, 0), ParamTriple(kHalf, 0, -kHalf), {8, 16, 32}, uniform_grid(11));
  EXPECT_GT(beta[0].sup_error, beta[1].sup_error);
  EXPECT_GT(beta[1].sup_error, beta[2].sup_error);
}

TEST(Convergence, TrivialParametersGiveTheConstant) {
  auto rows = convergence_experiment(vk({}, {}, 0), ParamTriple(2, 0, 0), {3, 5}, uniform_grid(5));
  for (const auto& r : rows) EXPECT_EQ(r.sup_error, 0.0);
  EXPECT_THROW(convergence_experiment(vk({}, {Rational(2)}, 0), ParamTriple(1, 0, 0), {4}, uniform_grid(3)), Error);
  EXPECT_THROW(uniform_grid(1), Error);
}

TEST(CAsymptotics, RatiosTendToOne) {
  // C(n, (1)) = 4 n^2 at theta = 1, a = 0
  for (const auto& row : c_asymptotics_check(Partition{1}, 1, {0, 0}, {0, 0}, {1, 5, 50})) EXPECT_EQ(row.ratio, 1);
  for (const auto& mu : {Partition{2}, Partition({1, 1}), Partition({2, 1})})
    for (const auto& theta : {kHalf, Rational(2)}) {
      auto rows = c_asymptotics_check(mu, theta, {1, kHalf}, {0, make_rational(1, 3)}, {10, 100, 1000});
      double prev = 1e9;
      for (const auto& r : rows) {
        double err = std::abs(to_double(r.ratio) - 1);
        EXPECT_LT(err, prev);
        prev = err;
      }
      EXPECT_LT(prev, 0.01);
      EXPECT_EQ(rows[1].a_n, 1 + 50);
    }
  EXPECT_THROW(c_asymptotics_check(Partition{1}, 1, {0, -1}, {0, 0}, {3}), Error);
}

TEST(Growth, SecondMomentBoundedBySquareOfFirst) {
  std::vector<std::pair<int, Partition>> seq;
  for (int n : {2, 4, 8, 16}) seq.emplace_back(n, Partition{2 * n});
  auto rows = growth_checks(seq, kHalf, {1, kHalf});
  for (const auto& r : rows) {
    EXPECT_TRUE(r.inequality_holds);
    EXPECT_EQ(r.size_over_n, 2);
    EXPECT_EQ(r.h, 1 + kHalf * r.n);
  }
  try {
    growth_checks(seq, 1, {-1, 1});
    FAIL() << "expected a refusal";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("requires h >= theta n - 1/2"), std::string::npos);
  }
}

TEST(Table2, SeriesParameters) {
  const Rational h = kHalf;
  struct Row {
    int id;
    std::optional<std::string> parity;
    Rational theta, a, b;
    std::string root;
  };
  const std::vector<Row> expected{{4, {}, h, -h, -h, "D_n"},         {5, {}, h, 0, 0, "C_n"},          {6, {}, 1, 0, 0, "C_n"},
                                  {7, "even", 1, -h, -h, "D_n"},     {7, "odd", 1, h, -h, "B_n"},      {8, {}, 1, h, h, "C_n"},
                                  {9, {}, 2, 1, 1, "C_n"},           {10, "even", 2, 0, 0, "C_n"},     {10, "odd", 2, 2, 0, "BC_n"}};
  for (const auto& r : expected) {
    SeriesEntry e = table2_params(r.id, r.parity);
    EXPECT_EQ(e.theta, r.theta) << r.id;
    EXPECT_EQ(e.a, r.a) << r.id;
    EXPECT_EQ(e.b, r.b) << r.id;
    EXPECT_EQ(e.root_system, r.root) << r.id;
    EXPECT_EQ(e.caveat.has_value(), r.root == "D_n") << r.id;
  }
}

TEST(Table2, RejectsBadRequests) {
  EXPECT_THROW(table2_params(2), Error);
  EXPECT_THROW(table2_params(11), Error);
  EXPECT_THROW(table2_params(7), Error);
  EXPECT_THROW(table2_params(5, std::string("even")), Error);
  EXPECT_THROW(table2_params(10, std::string("both")), Error);
}

TEST(LeadingTerm, ScaledInterpolationApproachesSpecialization) {
  const std::vector<VKParams> fixtures{vk({}, {kHalf}, 0), vk({}, {}, kHalf), vk({make_rational(1, 4)}, {make_rational(1, 4)}, 0)};
  for (const auto& p : fixtures)
    for (const auto& mu : {Partition{1}, Partition{2}, Partition({1, 1})}) {
      auto c = leading_term_check(mu, p, ParamTriple(1, 0, 0), 64);
      EXPECT_NEAR(c.scaled_value, c.limit, 0.05) << to_string(mu);
    }
}

TEST(LeadingTerm, OneRowFixtureHasAOneOverNCorrection) {
  // alpha = (1/2), mu = (2): the gap is about 3.7 / n, so it only drops below 0.05 past n = 64
  VKParams p = vk({kHalf}, {}, 0);
  auto err = [&](int n) {
    auto c = leading_term_check(Partition{2}, p, ParamTriple(1, 0, 0), n);
    return std::abs(c.scaled_value - c.limit);
  };
  double e64 = err(64), e128 = err(128);
  EXPECT_NEAR(e128 / e64, 0.5, 0.02);
  EXPECT_LT(e128, 0.05);
}

TEST(LeadingTerm, ErrorShrinksWithN) {
  VKParams p = vk({kHalf}, {make_rational(1, 3)}, 0);
  double prev = 1e9;
  for (int n : {8, 16, 32, 64}) {
    auto c = leading_term_check(Partition{2}, p, ParamTriple(kHalf, kHalf, 0), n);
    double err = std::abs(c.scaled_value - c.limit);
    EXPECT_LT(err, prev) << n;
    prev = err;
  }
}

TEST(KernelImage, SeriesMatchesClosedForm) {
  for (const auto& tau : {Rational(0), make_rational(3, 2), Rational(-1)})
    for (const auto& theta : {kHalf, Rational(2)}) {
      VKParams p = vk({kHalf, make_rational(1, 5)}, {make_rational(1, 3)}, make_rational(3, 4));
      EXPECT_EQ(kernel_image_series(p, tau, theta, 6), kernel_image_closed_form(p, tau, theta, 6));
    }
}
