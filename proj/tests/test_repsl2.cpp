#include <gtest/gtest.h>

#include "cdv/repsl2.hpp"
#include "generators.hpp"

using namespace cdv;
using namespace cdv::repsl2;
using cdv::testing::Gen;

namespace {

using BF = BinaryForm<Rational>;
using P = Poly<Rational>;

BF random_form(Gen& gen, int m) {
  std::vector<Rational> a;
  for (int j = 0; j <= m; ++j) a.push_back(gen.rational(5));
  return BF(m, a);
}

// Oracle: differentiate P(M (z, w)) at t = 0 with M = I + t Y, where P is the
// homogenised form and Y the 2x2 matrix.
BF group_derivative(const BF& u, const std::array<int, 4>& y) {
  const P z = P::variable(3, 0), w = P::variable(3, 1), t = P::variable(3, 2);
  const P one = P::constant(1, 3);
  P nz = z * (one + t.scaled(y[0])) + w * t.scaled(y[1]);
  P nw = z * t.scaled(y[2]) + w * (one + t.scaled(y[3]));
  P acc = P::zero(3);
  const int m = u.degree;
  for (int j = 0; j <= m; ++j) acc = acc + (nz.pow(static_cast<unsigned>(m - j)) * nw.pow(static_cast<unsigned>(j))).scaled(u.a[static_cast<std::size_t>(j)]);
  P d = acc.derivative(2);
  BF out = BF::zero(m);
  for (int j = 0; j <= m; ++j) {
    Monomial mono = Monomial::var(0, static_cast<unsigned>(m - j)) * Monomial::var(1, static_cast<unsigned>(j));
    out.a[static_cast<std::size_t>(j)] = d.coefficient(mono);
  }
  return out;
}

}  // namespace

TEST(Symplectic, Examples) {
  EXPECT_EQ(symplectic_form(BF(1, {1, 0}), BF(1, {0, 1})), 1);
  EXPECT_EQ(symplectic_form(BF::basis(3, 0), BF::basis(3, 3)), 6);
  EXPECT_EQ(symplectic_form(BF::basis(3, 1), BF::basis(3, 2)), -2);
  Gen gen(31);
  for (int it = 0; it < 50; ++it) {
    BF u = random_form(gen, 3), v = random_form(gen, 3);
    Rational expected = 6 * (u.a[0] * v.a[3] - u.a[3] * v.a[0]) - 2 * (u.a[1] * v.a[2] - u.a[2] * v.a[1]);
    EXPECT_EQ(symplectic_form(u, v), expected);
    EXPECT_EQ(symplectic_form(u, u), 0);
  }
  EXPECT_THROW(symplectic_form(BF::basis(2, 0), BF::basis(2, 1)), EvenDegree);
  EXPECT_THROW(symplectic_form(BF::basis(3, 0), BF::basis(1, 1)), DegreeMismatch);
}

TEST(Symplectic, AntisymmetricAndNondegenerate) {
  for (int m : {1, 3, 5, 7}) {
    auto w = symplectic_matrix(m);
    for (std::size_t i = 0; i < w.rows(); ++i)
      for (std::size_t j = 0; j < w.cols(); ++j) EXPECT_EQ(w(i, j), -w(j, i));
    EXPECT_EQ(rank(w), static_cast<std::size_t>(m + 1));
  }
}

TEST(Generators, Examples) {
  for (int m : {1, 3, 5}) {
    EXPECT_EQ(generator_action(Generator::H, BF::basis(m, 0)), BF::basis(m, 0).scaled(m));
    EXPECT_EQ(generator_action(Generator::E, BF::basis(m, m)), BF::basis(m, m - 1).scaled(m));
    EXPECT_TRUE(generator_action(Generator::F, BF::basis(m, m)).is_zero());
  }
}

TEST(Generators, CommutationRelations) {
  for (int m = 0; m <= 7; ++m) EXPECT_TRUE(commutation_check(m)) << m;
}

TEST(Generators, AgreeWithDifferentiatedGroupAction) {
  // E, F, H come from Y = [[0,0],[1,0]], [[0,1],[0,0]], diag(1,-1).
  Gen gen(32);
  for (int m = 1; m <= 5; ++m)
    for (int it = 0; it < 5; ++it) {
      BF u = random_form(gen, m);
      EXPECT_EQ(generator_action(Generator::E, u), group_derivative(u, {0, 0, 1, 0}));
      EXPECT_EQ(generator_action(Generator::F, u), group_derivative(u, {0, 1, 0, 0}));
      EXPECT_EQ(generator_action(Generator::H, u), group_derivative(u, {1, 0, 0, -1}));
    }
}

TEST(Invariance, OddDegrees) {
  for (int m : {1, 3, 5, 7}) {
    Sl2Report r = invariance_check(m);
    EXPECT_TRUE(r.passed()) << r.describe_failures();
    EXPECT_EQ(r.cases, static_cast<std::size_t>(3 * (m + 1) * (m + 1)));
  }
  EXPECT_THROW(invariance_check(2), EvenDegree);
}

TEST(MomentMap, Examples) {
  BF u(1, {1, 1});
  EXPECT_EQ(moment_map(u, u), BinaryForm<Rational>(2, {1, 2, 1}));
  EXPECT_TRUE(moment_map(BF::zero(3), BF::basis(3, 1)).is_zero());
  EXPECT_EQ(moment_map(BF::basis(3, 0), BF::basis(3, 0)).degree, 2);
}

TEST(MomentMap, Bilinear) {
  Gen gen(33);
  for (int m : {1, 3, 5})
    for (int it = 0; it < 20; ++it) {
      BF u = random_form(gen, m), u2 = random_form(gen, m), v = random_form(gen, m);
      Rational c = gen.rational(3);
      EXPECT_EQ(moment_map(u + u2, v), moment_map(u, v) + moment_map(u2, v));
      EXPECT_EQ(moment_map(u.scaled(c), v), moment_map(u, v).scaled(c));
    }
}

TEST(MomentMap, Equivariance) {
  for (int m : {1, 3, 5}) {
    Sl2Report r = equivariance_check(m);
    EXPECT_TRUE(r.passed()) << r.describe_failures();
  }
}

TEST(MomentMap, NilpotentForMEqualsOne) {
  EXPECT_TRUE(nilpotency_determinant_m1().is_zero());
  Gen gen(34);
  for (int it = 0; it < 30; ++it) {
    BF u = random_form(gen, 1);
    EXPECT_EQ(sl2_determinant(moment_map(u, u)), 0);
  }
  // Not every quadratic is nilpotent: z^2 + w^2 maps to [[0,1],[-1,0]].
  EXPECT_EQ(sl2_determinant(BF(2, {1, 0, 1})), 1);
}

TEST(Transvectant, TopOrderIsProportionalToOmega) {
  for (int m : {1, 3, 5, 7}) EXPECT_TRUE(top_transvectant_check(m)) << m;
  EXPECT_EQ(top_transvectant_constant(3), 6);
  Gen gen(35);
  for (int it = 0; it < 20; ++it) {
    BF u = random_form(gen, 5), v = random_form(gen, 5);
    EXPECT_EQ(transvectant(u, v, 5).a[0], Rational(120) * symplectic_form(u, v));
  }
}

TEST(Isotropy, CubicSubspace) {
  IsotropyReport r = isotropy_check_m3();
  EXPECT_EQ(r.dimension, 2u);
  EXPECT_TRUE(r.isotropic);
  EXPECT_EQ(r.omega_e0_e3, 6);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(symplectic_form(BF::basis(3, 2), BF::basis(3, 3)), 0);
}

TEST(DegreeBookkeeping, Examples) {
  EXPECT_EQ(degree_bookkeeping(2, 0), 1);
  EXPECT_EQ(degree_bookkeeping(3, 1), 1);
  EXPECT_EQ(degree_bookkeeping(2, 1), 0);
  EXPECT_THROW(degree_bookkeeping(1, 0), std::invalid_argument);
}
