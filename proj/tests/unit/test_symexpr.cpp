#include "eph/symexpr/expr.hpp"
#include "eph/symexpr/lsolve.hpp"
#include "eph/symexpr/normal.hpp"

#include "random_expr.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace eph::sym;
using eph::testing::close_rel;
using eph::testing::ExprGen;

namespace {

const Expr x = Expr::symbol("x");
const Expr y = Expr::symbol("y");
const Expr t = Expr::symbol("t");
const Expr a = Expr::symbol("a");
const Expr b = Expr::symbol("b");
const Expr c = Expr::symbol("c");

NumericEnv random_env(std::mt19937_64 &rng) {
  std::uniform_real_distribution<double> d(0.5, 1.5);
  return NumericEnv{{"x", d(rng)}, {"y", d(rng)}, {"t", d(rng)}};
}

} // namespace

TEST(ExprConstruction, RationalsInLowestTerms) {
  Expr q = Expr(6) / Expr(-4);
  ASSERT_TRUE(q.is_constant());
  EXPECT_EQ(q.value(), make_rational(-3, 2));
  EXPECT_EQ(q.value().get_den(), 2);
}

TEST(ExprConstruction, SumsAndProductsAreCanonical) {
  EXPECT_EQ(x + y, y + x);
  EXPECT_EQ(x * y * x, pow(x, 2) * y);
  EXPECT_EQ((x + y) + (Expr(2) * x), Expr(3) * x + y);
  EXPECT_TRUE((x - x).is_zero());
  EXPECT_EQ(Expr(2) * (x + Expr(1)), Expr(2) * x + Expr(2));
  EXPECT_EQ(x / x, Expr(1));
  EXPECT_EQ(sqrt(Expr(4)), Expr(2));
  EXPECT_EQ(pow(sqrt(Expr(2)), 2), Expr(2));
}

TEST(ExprConstruction, ExactValuesAtZero) {
  EXPECT_EQ(sin(Expr(0)), Expr(0));
  EXPECT_EQ(cos(Expr(0)), Expr(1));
  EXPECT_EQ(exp(Expr(0)), Expr(1));
  EXPECT_EQ(cosh(Expr(0)), Expr(1));
  EXPECT_EQ(sinh(Expr(0)), Expr(0));
}

TEST(ExprConstruction, TermOrder) {
  EXPECT_LT(compare(Expr(5), x), 0);
  EXPECT_LT(compare(x, y), 0);
  EXPECT_LT(compare(y, sin(x)), 0);
  EXPECT_LT(compare(sin(x), pow(x, 2)), 0);
  EXPECT_LT(compare(pow(x, 2), x * y), 0);
  EXPECT_LT(compare(x * y, x + y), 0);
}

TEST(ExprPrinting, Infix) {
  EXPECT_EQ((x + y).str(), "x + y");
  EXPECT_EQ((x - Expr(2) * y).str(), "x - 2*y");
  EXPECT_EQ((x * (y + Expr(1))).str(), "x*(y + 1)");
  EXPECT_EQ(pow(x + y, make_rational(3, 2)).str(), "(x + y)^(3/2)");
  EXPECT_EQ((x / y).str(), "x*y^(-1)");
  EXPECT_EQ((Expr(1) / Expr(2) * x).str(), "(1/2)*x");
}

TEST(Diff, ProductRuleBase) {
  EXPECT_EQ(diff(sin(t) * x, t), cos(t) * x);
}

TEST(Diff, RepeatedChainRule) {
  EXPECT_EQ(diff(exp(Expr(2) * t), t, 2), Expr(4) * exp(Expr(2) * t));
}

TEST(Diff, SymbolFreeIsZero) {
  EXPECT_TRUE(diff(sin(x) * y, t).is_zero());
  EXPECT_THROW(diff(x, x + y), std::invalid_argument);
  EXPECT_THROW(diff(x, x, 0), std::invalid_argument);
}

TEST(Diff, HyperbolicAndPowerRules) {
  EXPECT_EQ(diff(cosh(x), x), sinh(x));
  EXPECT_EQ(diff(sinh(x), x), cosh(x));
  EXPECT_EQ(diff(pow(x, 3), x), Expr(3) * pow(x, 2));
  EXPECT_EQ(diff(sqrt(x), x), make_rational(1, 2) * pow(x, make_rational(-1, 2)));
}

TEST(Subs, Basic) {
  EXPECT_EQ(subs(x + y, {{x, Expr(1)}, {y, Expr(2)}}), Expr(3));
  EXPECT_EQ(subs(x * sin(y), Binding{}), x * sin(y));
}

TEST(Subs, Simultaneous) {
  Expr e = t * exp(x);
  Expr swapped = subs(e, {{t, x}, {x, t}});
  EXPECT_EQ(swapped, x * exp(t));
}

TEST(Subs, DoubleBindingRejected) {
  Binding bnd;
  bnd.bind(x, Expr(1));
  EXPECT_THROW(bnd.bind(x, Expr(2)), std::invalid_argument);
}

TEST(Evalf, Values) {
  EXPECT_DOUBLE_EQ(evalf(Expr(1) / Expr(2) + cos(Expr(0))), 1.5);
  EXPECT_THROW(evalf(x), FreeSymbolError);
  EXPECT_NEAR(evalf(exp(Expr(-3))), std::exp(-3.0), 1e-16);
  EXPECT_NEAR(evalf(exp(Expr(-3))), 0.049787068367863944, 1e-15);
}

TEST(Evalf, InfinityPropagates) {
  Expr e = Expr(1) / x;
  EXPECT_TRUE(std::isinf(evalf(e, NumericEnv{{"x", 0.0}})));
}

TEST(Normal, Examples) {
  EXPECT_EQ(normal(x / x), Expr(1));
  EXPECT_EQ(normal((pow(x, 2) - x) / x), x - Expr(1));
  EXPECT_EQ(normal((x * y + x) / (y + Expr(1))), x);
  EXPECT_EQ(normal(pow(x + y, 2) - pow(x, 2) - Expr(2) * x * y), pow(y, 2));
  EXPECT_EQ(normal(exp(t) / exp(-t)), exp(Expr(2) * t));
  EXPECT_EQ(normal(exp(t) * exp(-t)), Expr(1));
}

TEST(Normal, CommonDenominator) {
  Expr e = Expr(1) / (x + Expr(1)) + Expr(1) / (x - Expr(1));
  Expr n = normal(e);
  NumericEnv env{{"x", 0.37}};
  EXPECT_NEAR(evalf(n, env), evalf(e, env), 1e-12);
  EXPECT_EQ(normal(n), n);
}

TEST(Normal, CurvatureStyleExpression) {
  // (ddu dv - du ddv) / (du^2 + dv^2)^(3/2) for a circle of radius r
  Expr r = Expr::symbol("r", true);
  Expr du = -r * sin(t), dv = r * cos(t);
  Expr ddu = diff(du, t), ddv = diff(dv, t);
  Expr k = (ddu * dv - du * ddv) / pow(du * du + dv * dv, make_rational(3, 2));
  Expr nk = normal(k);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> d(0.1, 3.0);
  for (int i = 0; i < 20; ++i) {
    NumericEnv env{{"r", d(rng)}, {"t", d(rng)}};
    EXPECT_TRUE(close_rel(evalf(nk, env), evalf(k, env), 1e-9));
  }
  EXPECT_EQ(normal(nk), nk);
}

TEST(Lsolve, TwoByTwo) {
  Binding s = lsolve({{a + b, Expr(3)}, {a - b, Expr(1)}}, {a, b});
  EXPECT_EQ(s.at("a"), Expr(2));
  EXPECT_EQ(s.at("b"), Expr(1));
}

TEST(Lsolve, ParabolaThroughThreePoints) {
  auto row = [&](long u, long v) {
    Expr U(u);
    return Equation{a * U * U + b * U + c, Expr(v)};
  };
  Binding s = lsolve({row(0, -1), row(1, 0), row(-1, 0)}, {a, b, c});
  EXPECT_EQ(s.at("a"), Expr(1));
  EXPECT_EQ(s.at("b"), Expr(0));
  EXPECT_EQ(s.at("c"), Expr(-1));
  // direct substitution check
  for (auto [u, v] : {std::pair{0, -1}, {1, 0}, {-1, 0}}) {
    Expr lhs = subs(a * Expr(u) * Expr(u) + b * Expr(u) + c, s);
    EXPECT_EQ(lhs, Expr(v));
  }
}

TEST(Lsolve, SymbolicCoefficients) {
  Binding s = lsolve({{x * a + b, Expr(1)}, {a - b, y}}, {a, b});
  NumericEnv env{{"x", 0.3}, {"y", 1.7}};
  double av = evalf(s.at("a"), env), bv = evalf(s.at("b"), env);
  EXPECT_NEAR(0.3 * av + bv, 1.0, 1e-12);
  EXPECT_NEAR(av - bv, 1.7, 1e-12);
}

TEST(Lsolve, Errors) {
  EXPECT_THROW(lsolve({{a, Expr(1)}, {a, Expr(2)}}, {a}), SingularSystem);
  EXPECT_THROW(lsolve({{a + b, Expr(1)}, {Expr(2) * a + Expr(2) * b, Expr(2)}},
                      {a, b}),
               SingularSystem);
  EXPECT_THROW(lsolve({{a * b, Expr(1)}, {a, Expr(2)}}, {a, b}), NonLinear);
}

// ---------------------------------------------------------------------------
// Properties on random trees

class RandomTrees : public ::testing::Test {
protected:
  std::mt19937_64 rng{20240611};
  ExprGen gen{rng, {x, y, t}};
};

TEST_F(RandomTrees, DiffMatchesFiniteDifferences) {
  constexpr double h = 1e-5;
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    Expr e = gen.tree(1 + i % 5);
    Expr de = diff(e, x);
    NumericEnv env = random_env(rng);
    double x0 = *env.find("x");
    NumericEnv lo = env, hi = env;
    lo.set("x", x0 - h);
    hi.set("x", x0 + h);
    double fd = (evalf(e, hi) - evalf(e, lo)) / (2 * h);
    double sv = evalf(de, env);
    if (!std::isfinite(fd) || !std::isfinite(sv) || std::abs(sv) > 1e6)
      continue;
    EXPECT_TRUE(close_rel(sv, fd, 1e-6)) << e << "\n d/dx = " << de;
    ++checked;
  }
  EXPECT_GT(checked, 150);
}

TEST_F(RandomTrees, DiffLinearityAndLeibniz) {
  for (int i = 0; i < 100; ++i) {
    Expr f = gen.tree(3), g = gen.tree(3);
    Expr lin = diff(Expr(3) * f - g, y);
    Expr lin_ref = Expr(3) * diff(f, y) - diff(g, y);
    Expr leib = diff(f * g, y);
    Expr leib_ref = diff(f, y) * g + f * diff(g, y);
    NumericEnv env = random_env(rng);
    EXPECT_TRUE(close_rel(evalf(lin, env), evalf(lin_ref, env), 1e-9));
    EXPECT_TRUE(close_rel(evalf(leib, env), evalf(leib_ref, env), 1e-9));
  }
}

TEST_F(RandomTrees, SubsThenEvalfEqualsEnvEvaluation) {
  for (int i = 0; i < 100; ++i) {
    Expr e = gen.tree(4);
    auto xr = eph::testing::random_rational(rng, 7, 5);
    auto yr = eph::testing::random_rational(rng, 7, 5);
    auto tr = eph::testing::random_rational(rng, 7, 5);
    Expr bound = subs(e, {{x, Expr(xr)}, {y, Expr(yr)}, {t, Expr(tr)}});
    NumericEnv env{{"x", xr.get_d()}, {"y", yr.get_d()}, {"t", tr.get_d()}};
    double direct = evalf(e, env);
    if (!std::isfinite(direct))
      continue;
    EXPECT_TRUE(close_rel(evalf(bound), direct, 1e-9)) << e;
  }
}

TEST_F(RandomTrees, NormalPreservesValueAndIsIdempotent) {
  for (int i = 0; i < 150; ++i) {
    Expr e = gen.tree(1 + i % 4);
    Expr n = normal(e);
    EXPECT_EQ(normal(n), n) << "input: " << e << "\nnormal: " << n;
    for (int k = 0; k < 20; ++k) {
      auto xr = eph::testing::random_rational(rng, 12, 8);
      auto yr = eph::testing::random_rational(rng, 12, 8);
      auto tr = eph::testing::random_rational(rng, 12, 8);
      NumericEnv env{{"x", 0.5 + std::abs(xr.get_d()) / 12},
                     {"y", 0.5 + std::abs(yr.get_d()) / 12},
                     {"t", 0.5 + std::abs(tr.get_d()) / 12}};
      double ev = evalf(e, env), nv = evalf(n, env);
      if (!std::isfinite(ev) || std::abs(ev) > 1e6)
        continue;
      EXPECT_TRUE(close_rel(nv, ev, 1e-9)) << e << "\n normal: " << n;
    }
  }
}

TEST_F(RandomTrees, SymbolicZeroDetection) {
  for (int i = 0; i < 50; ++i) {
    Expr f = gen.tree(2), g = gen.tree(2);
    EXPECT_TRUE(is_identically_zero(pow(f + g, 2) - f * f - Expr(2) * f * g -
                                    g * g));
  }
}
