#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "cdv/matrix.hpp"
#include "generators.hpp"

using namespace cdv;
using cdv::testing::Gen;

namespace {

using P = Poly<Rational>;
using RF = RatFunc<Rational>;

P x1() { return P::variable(1, 0); }
P one(std::size_t arity = 1) { return P::constant(1, arity); }

// Plain Gauss-Jordan over Q, independent of the Bareiss path.
std::size_t rank_by_gauss_jordan(Matrix<Rational> m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      Rational f = m(i, c) / m(r, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

}  // namespace

TEST(PolyArith, RingIdentities) {
  P x = x1();
  EXPECT_EQ((x + one()) * (x - one()), x * x - one());
  P p = x * x + x.scaled(Rational(3, 2));
  EXPECT_EQ(p + P::zero(1), p);
  P diff = (x * x - one()) - (x * x - one());
  EXPECT_TRUE(diff.is_zero());
  EXPECT_TRUE(diff.terms().empty());
}

TEST(PolyArith, ArityMismatchThrows) {
  P a = P::variable(2, 0);
  P b = P::variable(3, 0);
  EXPECT_THROW(a + b, ArityMismatch);
  EXPECT_THROW(a * b, ArityMismatch);
  // Arity-0 constants promote.
  EXPECT_NO_THROW(a + P::constant(5));
}

TEST(PolyArith, ExactDivision) {
  P x = P::variable(2, 0), y = P::variable(2, 1);
  P s = one(2) + x * x + y * y;
  P f = (x - y) * s * s;
  auto q = f.divide_exact(s);
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, (x - y) * s);
  EXPECT_FALSE((x + one(2)).divide_exact(s).has_value());
}

TEST(RatFuncZero, Examples) {
  P x = x1();
  RF a(x * x - one(), x - one());
  EXPECT_TRUE(ratfunc_is_zero(a - RF(x + one())));
  EXPECT_FALSE(ratfunc_is_zero(RF(one(), one() + x * x)));
  RF f(x, one() + x * x);
  RF expected(one() - x * x, (one() + x * x) * (one() + x * x));
  EXPECT_TRUE(ratfunc_is_zero(f.derivative(0) - expected));
  EXPECT_THROW(RF(x, P::zero(1)), std::domain_error);
}

TEST(PartialDerivative, Examples) {
  P x = P::variable(2, 0), y = P::variable(2, 1);
  EXPECT_EQ(RF(x * x * y).derivative(0), RF((x * y).scaled(2)));
  EXPECT_TRUE(RF(P::constant(7, 2)).derivative(0).is_zero());
  RF g(one(2), one(2) + x * x);
  RF expected((x).scaled(-2), (one(2) + x * x) * (one(2) + x * x));
  EXPECT_EQ(g.derivative(0), expected);
}

TEST(Nullspace, IdentityAndZero) {
  auto id = Matrix<Rational>::identity(4);
  EXPECT_TRUE(nullspace(id).empty());
  Matrix<Rational> z(2, 3, Rational(0));
  EXPECT_EQ(nullspace(z).size(), 3u);
  EXPECT_EQ(rank(z), 0u);
}

TEST(Nullspace, OverRationalFunctionField) {
  // Rows (t, 1) and (t^2, t) are dependent over Q(t); kernel spanned by (1, -t).
  P t = x1();
  Matrix<RF> m(2, 2);
  m(0, 0) = RF(t);
  m(0, 1) = RF(one());
  m(1, 0) = RF(t * t);
  m(1, 1) = RF(t);
  auto ns = nullspace(m);
  ASSERT_EQ(ns.size(), 1u);
  // proportional to (1, -t): v0 * (-t) - v1 * 1 == 0
  EXPECT_TRUE((ns[0][0] * (-t) - ns[0][1]).is_zero());
  EXPECT_EQ(rank(m), 1u);
}

TEST(CanonicalText, Examples) {
  std::vector<std::string> names{"q1", "q2"};
  P q1 = P::variable(2, 0), q2 = P::variable(2, 1);
  P p = q1 * q1.scaled(Rational(-3, 2)) + q2 + one(2);
  EXPECT_EQ(p.to_string(names), "-3/2*q1^2 + 1*q2 + 1");
  EXPECT_EQ(P::zero(2).to_string(names), "0");
  EXPECT_EQ(P::parse("-3/2*q1^2 + 1*q2 + 1", 2, names), p);
  Poly<Gaussian> g = Poly<Gaussian>::variable(1, 0).scaled(Gaussian(Rational(1), Rational(-1)));
  EXPECT_EQ(g.to_string(), "(1,-1)*x0");
  EXPECT_THROW(P::parse("2*q3", 2, names), ParseError);
  EXPECT_THROW(P::parse("0*q1", 2, names), ParseError);
  EXPECT_THROW(P::parse("1/0", 2, names), ParseError);
}

// ---- properties -----------------------------------------------------------

TEST(ExactAlgProperties, FieldAxiomsRational) {
  Gen gen(11);
  for (int it = 0; it < 200; ++it) {
    RF a = gen.ratfunc<Rational>(2), b = gen.ratfunc<Rational>(2), c = gen.ratfunc<Rational>(2);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_TRUE((a - a).is_zero());
    if (!a.is_zero()) EXPECT_EQ(a * (RF(1) / a), RF(1));
  }
}

TEST(ExactAlgProperties, FieldAxiomsGaussian) {
  Gen gen(12);
  for (int it = 0; it < 300; ++it) {
    Gaussian a = gen.gaussian(), b = gen.gaussian(), c = gen.gaussian();
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    if (!is_zero(a)) EXPECT_EQ(a * a.inverse(), Gaussian(1));
  }
  EXPECT_EQ(Gaussian::i() * Gaussian::i(), Gaussian(-1));
}

TEST(ExactAlgProperties, DerivativeIsDerivation) {
  Gen gen(13);
  for (int it = 0; it < 100; ++it) {
    RF f = gen.ratfunc<Rational>(3), g = gen.ratfunc<Rational>(3);
    for (std::size_t v = 0; v < 3; ++v) EXPECT_EQ((f * g).derivative(v), f * g.derivative(v) + g * f.derivative(v));
  }
}

TEST(ExactAlgProperties, NullspaceAndRankNullity) {
  Gen gen(14);
  for (int it = 0; it < 150; ++it) {
    std::size_t r = static_cast<std::size_t>(gen.integer(1, 5)), c = static_cast<std::size_t>(gen.integer(1, 6));
    Matrix<Rational> m(r, c);
    // Low-rank structure half of the time.
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = gen.integer(0, 2) == 0 ? Rational(0) : gen.rational(4);
    if (r > 1 && gen.integer(0, 1)) {
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * Rational(3) - m(r - 2, j);
    }
    auto ns = nullspace(m);
    EXPECT_EQ(rank(m) + ns.size(), c);
    EXPECT_EQ(rank(m), rank_by_gauss_jordan(m));
    for (const auto& v : ns)
      for (const auto& e : m.apply(v)) EXPECT_TRUE(is_zero(e));
  }
}

TEST(ExactAlgProperties, PolynomialMatrixNullspace) {
  Gen gen(15);
  for (int it = 0; it < 30; ++it) {
    Matrix<RF> m(3, 4);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 4; ++j) m(i, j) = RF(gen.poly<Rational>(2, 2, 1));
    // Force a dependency on the last row.
    for (std::size_t j = 0; j < 4; ++j) m(2, j) = m(0, j) * RF(P::variable(2, 0)) + m(1, j);
    auto ns = nullspace(m);
    EXPECT_EQ(rank(m) + ns.size(), 4u);
    for (const auto& v : ns)
      for (std::size_t i = 0; i < 3; ++i) {
        RF acc;
        for (std::size_t j = 0; j < 4; ++j) acc += m(i, j) * RF(v[j]);
        EXPECT_TRUE(ratfunc_is_zero(acc));
      }
  }
}

TEST(ExactAlgProperties, CanonicalTextRoundTrip) {
  Gen gen(16);
  for (int it = 0; it < 200; ++it) {
    P p = gen.poly<Rational>(4, 6, 4);
    EXPECT_EQ(P::parse(p.to_string(), 4), p);
    EXPECT_EQ(P::parse(p.to_string(), 4).to_string(), p.to_string());
    Poly<Gaussian> g = gen.poly<Gaussian>(3, 5, 3);
    EXPECT_EQ(Poly<Gaussian>::parse(g.to_string(), 3).to_string(), g.to_string());
  }
}
