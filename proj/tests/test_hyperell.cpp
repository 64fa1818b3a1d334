#include <gtest/gtest.h>

#include "cdv/hyperell.hpp"
#include "generators.hpp"

using namespace cdv;
using namespace cdv::hyperell;

namespace {

/// Multiplicity of c as a root of p (p nonzero).
int root_order(UPoly p, const Rational& c) {
  int k = 0;
  while (sgn(p(c)) == 0) {
    p = p.divmod(UPoly::linear(c)).first;
    ++k;
  }
  return k;
}

UPoly random_poly(cdv::testing::Gen& gen, int max_deg) {
  std::vector<Rational> c;
  int d = static_cast<int>(gen.integer(0, max_deg));
  for (int k = 0; k <= d; ++k) c.push_back(Rational(gen.integer(-4, 4)));
  return UPoly(c);
}

Divisor theta_sum(const HyperCurve& c, std::initializer_list<int> idx) {
  Divisor d;
  for (int i : idx) d.add(c.branch(i), 1);
  return d;
}

Divisor infinities(const HyperCurve& c, int k) { return Divisor::of(c.infinity(1), k) + Divisor::of(c.infinity(-1), k); }

}  // namespace

TEST(UPoly, Arithmetic) {
  cdv::testing::Gen gen(11);
  for (int trial = 0; trial < 50; ++trial) {
    UPoly a = random_poly(gen, 5), b = random_poly(gen, 3);
    if (b.is_zero()) continue;
    auto [q, r] = a.divmod(b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
    Rational c = gen.rational(5), t = gen.rational(5);
    EXPECT_EQ(a.shifted(c)(t), a(c + t));
  }
  UPoly p = UPoly::from_roots({Rational(1, 2), -3, 0, 7}, 4);
  EXPECT_EQ(p.rational_roots(), (std::vector<Rational>{-3, 0, Rational(1, 2), 7}));
  EXPECT_EQ(UPoly::gcd(p, p.derivative()).degree(), 0);
  EXPECT_EQ(UPoly({Rational(1), Rational(0), Rational(1)}).rational_roots().size(), 0u);
  Rational s;
  EXPECT_TRUE(rational_sqrt(Rational(9, 4), s));
  EXPECT_EQ(s, Rational(3, 2));
  EXPECT_FALSE(rational_sqrt(2, s));
  EXPECT_THROW(p.divmod(UPoly()), std::domain_error);
}

TEST(UPoly, RationalRootsProperty) {
  cdv::testing::Gen gen(13);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Rational> roots;
    UPoly p = UPoly::constant(Rational(gen.integer(1, 50), gen.integer(1, 50)));
    int n = static_cast<int>(gen.integer(0, 4));
    for (int k = 0; k < n; ++k) {
      Rational r(gen.integer(-100000, 100000), gen.integer(1, 5000));
      r.canonicalize();
      roots.push_back(r);
      p = p * UPoly::linear(r).pow(static_cast<unsigned>(gen.integer(1, 2)));
    }
    if (gen.integer(0, 1)) p = p * UPoly({Rational(gen.integer(1, 9)), Rational(0), Rational(1)});
    if (gen.integer(0, 1)) p = p * UPoly({Rational(-2), Rational(0), Rational(1)});
    if (p.degree() <= 0) continue;
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    EXPECT_EQ(p.rational_roots(), roots) << p.to_string();
  }
  UPoly close = UPoly::linear(Rational(1, 1000000)) * UPoly::linear(Rational(1, 1000001)) * UPoly::linear(0);
  EXPECT_EQ(close.rational_roots(), (std::vector<Rational>{0, Rational(1, 1000001), Rational(1, 1000000)}));
}

TEST(HyperCurve, Construction) {
  HyperCurve c = HyperCurve::fixture_genus2();
  EXPECT_EQ(c.genus(), 2);
  EXPECT_EQ(c.f(), UPoly::from_roots({0, 1, 2, 3, 4, 5}));
  EXPECT_EQ(c.branch_point(3), 2);
  HyperCurve d = HyperCurve::from_coefficients(2, c.f());
  EXPECT_EQ(d.branch_points(), c.branch_points());
  EXPECT_THROW(HyperCurve::from_roots({0, 1, 1, 2, 3, 4}), CurveError);
  EXPECT_THROW(HyperCurve::from_roots({0, 1, 2, 3, 4}), CurveError);
  EXPECT_THROW(HyperCurve::from_roots({0, 1, 2, 3, 4, 5}, 2), CurveError);
  EXPECT_THROW(HyperCurve::from_coefficients(2, UPoly({Rational(1), Rational(0), Rational(1)})), CurveError);
  EXPECT_THROW(c.split(6, 1), CurveError);
  EXPECT_THROW(c.split(0, 0), CurveError);
  for (const auto& p : c.search_rational_places(6)) {
    EXPECT_TRUE(c.contains(p));
    EXPECT_EQ(p.y * p.y, c.f()(p.x));
  }
}

TEST(Valuation, Generators) {
  for (int g : {2, 3}) {
    std::vector<Rational> roots;
    for (int i = 0; i < 2 * g + 2; ++i) roots.push_back(i);
    HyperCurve c = HyperCurve::from_roots(roots, 4);
    const Function x = Function::polynomial(UPoly::x()), y{UPoly(), UPoly::constant(1)};
    for (int s : {1, -1}) {
      EXPECT_EQ(valuation(c, c.infinity(s), x), -1);
      EXPECT_EQ(valuation(c, c.infinity(s), y), -(g + 1));
    }
    for (int i = 1; i <= 2 * g + 2; ++i) {
      Place p = c.branch(i);
      EXPECT_EQ(valuation(c, p, Function::polynomial(UPoly::linear(p.x))), 2);
      EXPECT_EQ(valuation(c, p, y), 1);
      EXPECT_EQ(valuation(c, p, x), p.x == 0 ? 2 : 0);
      EXPECT_EQ(differential_valuation(c, p), 0);
    }
    EXPECT_EQ(differential_valuation(c, c.infinity(1)), g - 1);
  }
  // Leading coefficient 4 changes y ~ 2x^3 at infinity: y - 2x^3 drops order.
  HyperCurve c = HyperCurve::from_roots({0, 1, 2, 3, 4, 5}, 4);
  Function h{UPoly::x().pow(3).scaled(-2), UPoly::constant(1)};
  EXPECT_GT(valuation(c, c.infinity(1), h), -3);
  EXPECT_EQ(valuation(c, c.infinity(-1), h), -3);
}

// Norm oracle: val_P(h) + val_{sigma P}(h) equals the order of N = a^2 - b^2 f.
TEST(Valuation, NormOracle) {
  HyperCurve c = HyperCurve::from_roots({-2, -1, 0, 1, 2, -27});
  std::vector<Place> split = c.search_rational_places(12);
  ASSERT_FALSE(split.empty());
  cdv::testing::Gen gen(21);
  for (int trial = 0; trial < 60; ++trial) {
    UPoly a = random_poly(gen, 4), b = random_poly(gen, 2);
    if (a.is_zero() && b.is_zero()) continue;
    Function h{a, b};
    UPoly norm = a * a - b * b * c.f();
    ASSERT_FALSE(norm.is_zero());
    EXPECT_EQ(valuation(c, c.infinity(1), h) + valuation(c, c.infinity(-1), h), -norm.degree());
    for (int i = 1; i <= 6; ++i) EXPECT_EQ(valuation(c, c.branch(i), h), root_order(norm, c.branch_point(i)));
    for (const auto& p : split) EXPECT_EQ(valuation(c, p, h) + valuation(c, c.sigma(p), h), root_order(norm, p.x));
    Function u{random_poly(gen, 2), random_poly(gen, 1)};
    if (u.is_zero()) continue;
    Function uv = multiply(c, h, u);
    for (const auto& p : {c.infinity(1), c.branch(2), split.front()})
      EXPECT_EQ(valuation(c, p, uv), valuation(c, p, h) + valuation(c, p, u));
  }
}

TEST(Canonical, DegreeAndSupport) {
  for (int g : {1, 2, 3, 4}) {
    std::vector<Rational> roots;
    for (int i = 0; i < 2 * g + 2; ++i) roots.push_back(Rational(i * i - 3, 2));
    HyperCurve c = HyperCurve::from_roots(roots);
    Divisor k = canonical_divisor(c);
    EXPECT_EQ(k.degree(), 2 * g - 2);
    EXPECT_EQ(k, infinities(c, g - 1));
  }
}

TEST(RiemannRoch, FixtureDimensions) {
  HyperCurve c = HyperCurve::fixture_genus2();
  Divisor k = canonical_divisor(c);
  EXPECT_EQ(rr_space(c, Divisor()).dim(), 1u);
  EXPECT_EQ(rr_space(c, k).dim(), 2u);
  Divisor half = theta_sum(c, {1, 2, 3});
  EXPECT_EQ(rr_space(c, half).dim(), 2u);
  EXPECT_EQ(rr_space(c, half + infinities(c, 1)).dim(), 4u);
  EXPECT_EQ(rr_space(c, Divisor::of(c.branch(1), -1)).dim(), 0u);
  EXPECT_EQ(rr_space(c, Divisor::of(c.branch(1))).dim(), 1u);
  EXPECT_EQ(rr_space(c, Divisor::of(c.branch(1), 2)).dim(), 2u);
  EXPECT_EQ(rr_space(c, Divisor::of(c.infinity(1), 3)).dim(), 2u);
}

TEST(RiemannRoch, RandomDivisors) {
  HyperCurve c = HyperCurve::fixture_genus2();
  std::vector<Place> places{c.infinity(1), c.infinity(-1)};
  for (int i = 1; i <= 6; ++i) places.push_back(c.branch(i));
  for (const auto& p : c.search_rational_places(8)) places.push_back(p);
  cdv::testing::Gen gen(31);
  for (int trial = 0; trial < 40; ++trial) {
    Divisor d;
    int terms = static_cast<int>(gen.integer(1, 4));
    for (int t = 0; t < terms; ++t)
      d.add(places[static_cast<std::size_t>(gen.integer(0, static_cast<long>(places.size()) - 1))], static_cast<int>(gen.integer(-2, 3)));
    RRSpace r;
    ASSERT_NO_THROW(r = rr_space(c, d)) << d.to_string();
    EXPECT_TRUE(r.riemann_roch_ok && r.pole_bounds_ok);
    if (d.degree() < 0) EXPECT_EQ(r.dim(), 0u);
    if (d.degree() >= 2 * c.genus() - 1) EXPECT_EQ(static_cast<int>(r.dim()), d.degree() - c.genus() + 1) << d.to_string();
    EXPECT_GE(static_cast<int>(r.dim()), d.degree() - c.genus() + 1);
  }
}

TEST(RiemannRoch, SigmaSplitting) {
  HyperCurve c = HyperCurve::fixture_genus2();
  const std::vector<Divisor> divisors{infinities(c, 2), theta_sum(c, {1, 2, 3}) + infinities(c, 1),
                                      theta_sum(c, {1, 4}) + infinities(c, 3), Divisor::of(c.branch(5), 5)};
  for (const auto& d : divisors) {
    auto full = rr_basis(c, d), even = rr_basis(c, d, Part::Even), odd = rr_basis(c, d, Part::Odd);
    EXPECT_EQ(full.size(), even.size() + odd.size()) << d.to_string();
    for (const auto& h : even) EXPECT_TRUE(h.b.is_zero());
    for (const auto& h : odd) EXPECT_TRUE(h.a.is_zero());
  }
}

TEST(Theta, Witnesses) {
  HyperCurve c = HyperCurve::fixture_genus2();
  Divisor k = canonical_divisor(c);
  for (const auto& chr : thetachar::enumerate_chars(2)) {
    auto t = chr.members();
    ThetaDivisor td = theta_divisor(c, t);
    EXPECT_EQ(td.divisor.degree(), c.genus() - 1);
    EXPECT_TRUE(td.witness_ok) << chr.to_string();
    std::vector<int> comp;
    for (int i = 1; i <= 6; ++i)
      if (std::find(t.begin(), t.end(), i) == t.end()) comp.push_back(i);
    ThetaDivisor tc = theta_divisor(c, comp);
    EXPECT_TRUE(tc.witness_ok);
    EXPECT_TRUE(is_divisor_of(c, complement_witness(c, t), tc.divisor - td.divisor)) << chr.to_string();
    EXPECT_FALSE(is_divisor_of(c, complement_witness(c, t), td.divisor - tc.divisor + Divisor::of(c.branch(1)) -
                                                               Divisor::of(c.branch(2))));
  }
  EXPECT_TRUE(is_divisor_of(c, Function::polynomial(UPoly::x()), Divisor::of(c.branch(1), 2) - k));
  EXPECT_FALSE(is_divisor_of(c, Function::polynomial(UPoly::x()), Divisor::of(c.branch(2), 2) - k));
  EXPECT_THROW(theta_divisor(c, {1, 2}), std::invalid_argument);
}

TEST(Theta, TableGenus2) {
  ThetaTable t = h0_all_theta(HyperCurve::fixture_genus2());
  EXPECT_EQ(t.rows.size(), 16u);
  EXPECT_EQ(t.odd, 6);
  EXPECT_EQ(t.even, 10);
  for (const auto& row : t.rows) {
    EXPECT_LE(row.h0, 1u);
    EXPECT_EQ(static_cast<int>(row.h0), thetachar::expected_h0(row.chr)) << row.chr.to_string();
    EXPECT_EQ(row.parity(), thetachar::parity(row.chr));
    EXPECT_EQ(row.parity() == thetachar::Parity::Odd, row.chr.size() == 1);
  }
}

TEST(Theta, TableGenus3) {
  HyperCurve c = HyperCurve::from_roots({-3, -2, -1, 0, 1, 2, 3, 5});
  ThetaTable t = h0_all_theta(c);
  EXPECT_EQ(t.odd, 28);
  EXPECT_EQ(t.even, 36);
  for (const auto& row : t.rows) EXPECT_EQ(static_cast<int>(row.h0), thetachar::expected_h0(row.chr)) << row.chr.to_string();
}
