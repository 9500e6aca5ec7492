#include <gtest/gtest.h>

#include "bcpoly/theta1.hpp"

using namespace bcpoly;

namespace {

const Rational kHalf = make_rational(1, 2);

const std::vector<std::pair<Rational, Rational>> kAB{{0, 0}, {kHalf, kHalf}, {-kHalf, -kHalf}, {kHalf, -kHalf}, {1, 0}};

}  // namespace

TEST(Classical, LegendreAndChebyshev) {
  EXPECT_EQ(classical_jacobi(2, 0, 0), UniPoly({-kHalf, Rational(0), make_rational(3, 2)}));
  EXPECT_EQ(classical_jacobi(0, 3, 1), UniPoly::constant(1));
  // T_3 = 4x^3 - 3x, scaled so that the value at 1 is (1/2)_3 / 3!
  UniPoly t3({Rational(0), Rational(-3), Rational(0), Rational(4)});
  EXPECT_EQ(classical_jacobi(3, -kHalf, -kHalf), t3 * make_rational(5, 16));
  EXPECT_THROW(classical_jacobi(-1, 0, 0), Error);
}

TEST(Classical, ValueAtOneAndLeadingCoefficient) {
  for (const auto& [a, b] : kAB)
    for (int l = 0; l <= 7; ++l) {
      UniPoly p = classical_jacobi(l, a, b);
      EXPECT_EQ(p(1), classical_jacobi_at_one(l, a));
      EXPECT_EQ(p.leading(), classical_jacobi_leading(l, a, b));
      EXPECT_EQ(p(-1), sign_power(l) * classical_jacobi_at_one(l, b));
    }
}

TEST(Recurrence, NormalizedAtOneAndPositive) {
  for (const auto& [a, b] : kAB)
    for (int m = 0; m <= 10; ++m) {
      auto r = recurrence_coefficients(m, a, b);
      EXPECT_EQ(r.a + r.b - r.c, 1);
      EXPECT_GT(r.a, 0);
      if (m >= 1)
        EXPECT_GT(r.c, 0);
      else
        EXPECT_EQ(r.c, 0);
      // check the recurrence at a rational point
      Rational x = make_rational(2, 7);
      Rational lhs = unit_jacobi(m + 1, a, b)(x);
      Rational rhs = (r.a * x + r.b) * unit_jacobi(m, a, b)(x) - (m ? r.c * unit_jacobi(m - 1, a, b)(x) : Rational(0));
      EXPECT_EQ(lhs, rhs);
    }
}

TEST(Recurrence, BranchingConstantsClosedFormAndSign) {
  for (const auto& [a, b] : kAB)
    for (int m = 0; m <= 9; ++m)
      for (int l = 0; l <= m; ++l) {
        EXPECT_EQ(branching_B_closed(m, l, a, b), branching_B_product(m, l, a, b)) << m << "," << l;
        EXPECT_GT(branching_B(m, l, a, b), 0);
      }
  EXPECT_THROW(branching_B_closed(1, 2, 0, 0), Error);
}

TEST(Recurrence, BranchingConstantOfDiagonalIsLeadingRatio) {
  // B(l, l) = a_l = leading(r_{l+1}) / leading(r_l)
  for (const auto& [a, b] : kAB)
    for (int l = 0; l <= 6; ++l)
      EXPECT_EQ(branching_B(l, l, a, b), unit_jacobi(l + 1, a, b).leading() / unit_jacobi(l, a, b).leading());
}

TEST(Recurrence, ASupportedOnInterlacingAndPositive) {
  for (const auto& [a, b] : kAB)
    for (int n = 2; n <= 3; ++n)
      for (const auto& mu : partitions_up_to(3, n - 1))
        for (const auto& nu : partitions_up_to(3, n - 1)) {
          Rational v = branching_A(mu, nu, n, a, b);
          if (interlaces(nu, mu, n - 1))
            EXPECT_GT(v, 0);
          else
            EXPECT_EQ(v, 0);
        }
}

TEST(Recurrence, RTildeIsShiftedClassical) {
  for (const auto& [a, b] : kAB)
    for (int l = 0; l <= 6; ++l) {
      UniPoly rt = r_tilde(l, a, b);
      UniPoly target = classical_jacobi(l, a + 1, b);
      EXPECT_EQ(rt.degree(), l);
      EXPECT_EQ(rt, target * (rt.leading() / target.leading()));
      UniPoly xk = UniPoly::constant(1);
      for (int k = 0; k < l; ++k) {
        EXPECT_EQ(normalized_beta_moment(rt * xk, a + 1, b), 0);
        xk = xk * UniPoly::x();
      }
    }
}

TEST(FactorialSchur, OneBoxOracle) {
  // s_(1)(y | A) = sum y_i - (A_1 + ... + A_n)
  FactorialGrid grid{{Rational(2), make_rational(-1, 3), Rational(5), Rational(7)}};
  std::vector<Rational> y{make_rational(1, 2), Rational(3), make_rational(-4, 5)};
  Rational expected = y[0] + y[1] + y[2] - grid.at(1) - grid.at(2) - grid.at(3);
  EXPECT_EQ(factorial_schur(Partition{1}, y, grid), expected);
  EXPECT_EQ(factorial_schur_tableau(Partition{1}, y, grid), expected);
  EXPECT_THROW(grid.at(5), Error);
}

TEST(FactorialSchur, TableauSumMatchesDeterminant) {
  FactorialGrid grid{{Rational(1), make_rational(3, 2), Rational(-2), make_rational(1, 5), Rational(4), Rational(0), Rational(6)}};
  std::vector<Rational> y{make_rational(1, 2), Rational(3), make_rational(-4, 5)};
  std::vector<Rational> repeated{Rational(2), Rational(2), make_rational(1, 3)};
  for (const auto& mu : partitions_up_to(4, 3)) {
    EXPECT_EQ(factorial_schur_tableau(mu, y, grid), factorial_schur(mu, y, grid)) << to_string(mu);
    RationalPolynomial f = factorial_schur_polynomial(mu, 3, grid);
    EXPECT_EQ(f.evaluate(repeated), factorial_schur(mu, repeated, grid));
  }
}

TEST(FactorialSchur, ReducesToSchurWhenGridVanishes) {
  FactorialGrid zero{std::vector<Rational>(8, Rational(0))};
  for (const auto& mu : partitions_up_to(4, 3))
    EXPECT_EQ(SymPoly::from_polynomial(factorial_schur_polynomial(mu, 3, zero)), jack_polynomial(mu, 3, 1));
}

TEST(Theta1, InterpolationIsFactorialSchur) {
  for (const auto& h : {Rational(3), make_rational(7, 2), make_rational(-5, 3)})
    for (int n = 1; n <= 3; ++n)
      for (const auto& mu : partitions_up_to(4, n)) {
        ShiftedSymPoly f = interp_theta1(mu, n, h);
        EXPECT_EQ(f, interp_combinatorial(mu, n, 1, h));
        std::vector<Rational> pt{make_rational(1, 3), Rational(2), make_rational(-3, 4)};
        pt.resize(static_cast<std::size_t>(n));
        EXPECT_EQ(interp_theta1_tableau_value(mu, pt, h), f.evaluate(pt));
      }
}

TEST(Theta1, DeterminantalFormulaIsTheMonicJacobi) {
  for (const auto& [a, b] : kAB)
    for (int n = 1; n <= 3; ++n)
      for (const auto& lambda : partitions_up_to(3, n)) {
        RationalPolynomial lhs = determinantal_jacobi(lambda, n, a, b).to_polynomial() * determinantal_const(lambda, n, a, b);
        EXPECT_EQ(lhs, jacobi_monic(lambda, n, ParamTriple(1, a, b)).to_x_polynomial()) << to_string(lambda);
        EXPECT_EQ(unit_determinantal(lambda, n, a, b) * unit_to_monic_factor(lambda, n, a, b), lhs);
      }
}

TEST(Theta1, TwoStepBranchingMatchesDirectExpansion) {
  for (const auto& [a, b] : kAB)
    for (int n = 2; n <= 3; ++n)
      for (const auto& lambda : partitions_up_to(3, n)) {
        auto two_step = two_step_branching_monic(lambda, n, a, b);
        std::erase_if(two_step, [](const auto& kv) { return kv.second == 0; });
        EXPECT_EQ(two_step, branching_expand(lambda, n, ParamTriple(1, a, b))) << to_string(lambda);
      }
}

TEST(Theta1, BinomialFormulaMatchesGeneralOne) {
  for (const auto& [a, b] : kAB)
    for (int n = 1; n <= 3; ++n)
      for (const auto& lambda : partitions_up_to(3, n))
        EXPECT_EQ(theta1_binomial_expansion(lambda, n, a, b), normalized_jacobi(lambda, n, ParamTriple(1, a, b)).to_x_polynomial());
}
