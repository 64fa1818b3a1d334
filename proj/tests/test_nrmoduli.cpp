#include <gtest/gtest.h>

#include "cdv/matrix.hpp"
#include "cdv/nrmoduli.hpp"
#include "generators.hpp"
#include "nr_transcription.hpp"

using namespace cdv;
using namespace cdv::nrmoduli;

namespace {

/// Parses "[-](qapb +- qapb ...)^2".
P parse_text(std::string_view s) {
  int sign = 1;
  if (s.front() == '-') {
    sign = -1;
    s.remove_prefix(1);
  }
  if (s.front() != '(' || s.substr(s.size() - 3) != ")^2") throw std::invalid_argument("bad entry");
  s = s.substr(1, s.size() - 4);
  P l = P::zero(kArity);
  int term_sign = 1;
  for (std::size_t k = 0; k < s.size();) {
    char ch = s[k];
    if (ch == ' ') {
      ++k;
    } else if (ch == '+' || ch == '-') {
      term_sign = ch == '-' ? -1 : 1;
      ++k;
    } else {
      if (s[k] != 'q' || s[k + 2] != 'p') throw std::invalid_argument("bad term");
      P t = q(s[k + 1] - '0') * p(s[k + 3] - '0');
      l += term_sign > 0 ? t : -t;
      term_sign = 1;
      k += 4;
    }
  }
  return (l * l).scaled(Rational(sign));
}

unsigned degree_in(const P& f, std::size_t lo, std::size_t hi, bool& homogeneous) {
  std::optional<unsigned> d;
  homogeneous = true;
  for (const auto& [m, c] : f.terms()) {
    unsigned s = 0;
    for (std::size_t v = lo; v < hi; ++v) s += m.exp[v];
    if (d && *d != s) homogeneous = false;
    d = s;
  }
  return d.value_or(0);
}

BranchConfig standard() { return BranchConfig::from({0, 1, 2, 3, 4, 5}); }

BranchConfig random_config(cdv::testing::Gen& gen) {
  while (true) {
    std::vector<Rational> xs;
    for (int k = 0; k < 6; ++k) xs.push_back(gen.rational(9));
    try {
      return BranchConfig::from(xs);
    } catch (const std::invalid_argument&) {
    }
  }
}

std::vector<Rational> point(const std::array<Rational, 4>& qv, const std::array<Rational, 4>& pv, const Rational& x = 0) {
  return {qv[0], qv[1], qv[2], qv[3], pv[0], pv[1], pv[2], pv[3], x};
}

}  // namespace

TEST(RTable, MatchesSecondTranscription) {
  RijTable t = build_r_table();
  ASSERT_EQ(t.entries().size(), 15u);
  for (const auto& e : testdata::kRijText) EXPECT_EQ(t.at(e.i, e.j).expanded(), parse_text(e.text)) << e.i << e.j;
  EXPECT_NE(t.with_flipped_sign(2, 5).at(2, 5).expanded(), parse_text(testdata::kRijText[7].text));
}

TEST(RTable, Examples) {
  RijTable t = build_r_table();
  P r12 = t.at(1, 2).expanded();
  Monomial lead;
  lead.exp[0] = 2;
  lead.exp[4] = 2;
  EXPECT_EQ(r12.leading_monomial(), lead);
  EXPECT_EQ(r12.leading_coefficient(), 1);
  EXPECT_EQ(t.at(1, 4).sign, -1);
  EXPECT_EQ(t.at(4, 1).sign, -1);
  P l14 = q(1) * p(4) + q(2) * p(3) - q(3) * p(2) - q(4) * p(1);
  EXPECT_EQ(t.at(1, 4).expanded(), -(l14 * l14));
  EXPECT_THROW(t.at(1, 1), std::out_of_range);
}

TEST(RTable, Bidegree) {
  RijTable t = build_r_table();
  for (const auto& e : t.entries()) {
    bool hq = false, hp = false;
    P r = e.expanded();
    EXPECT_EQ(degree_in(r, 0, 4, hq), 2u);
    EXPECT_EQ(degree_in(r, 4, 8, hp), 2u);
    EXPECT_TRUE(hq && hp);
  }
}

TEST(HForm, Consistency) {
  EXPECT_TRUE(h_consistency(standard()));
  cdv::testing::Gen gen(41);
  for (int trial = 0; trial < 3; ++trial) EXPECT_TRUE(h_consistency(random_config(gen)));
  RijTable t = build_r_table();
  EXPECT_FALSE(h_consistency(standard(), t, t.with_flipped_sign(3, 6)));
  EXPECT_FALSE(h_consistency(standard(), t.with_flipped_sign(1, 2), t));
  bool hom = false;
  EXPECT_EQ(degree_in(h_polynomial(standard(), t), 4, 8, hom), 2u);
  EXPECT_TRUE(hom);
  EXPECT_THROW(BranchConfig::from({0, 1, 2, 3, 4, 4}), std::invalid_argument);
  EXPECT_THROW(BranchConfig::from({0, 1, 2}), std::invalid_argument);
}

TEST(EvalAtBranch, MatchesPolynomialForm) {
  BranchConfig b = BranchConfig::from({Rational(-1, 2), 3, 0, 7, Rational(5, 3), -4});
  RijTable t = build_r_table();
  P h = h_polynomial(b, t);
  for (int i = 1; i <= 6; ++i) {
    std::vector<P> images;
    for (std::size_t v = 0; v < 8; ++v) images.push_back(P::variable(kArity, v));
    images.push_back(P::constant(b.x[static_cast<std::size_t>(i - 1)], kArity));
    EXPECT_EQ(h.substitute(images).with_arity(kArity), eval_at_branch(b, i)) << i;
  }
  // Only r_1j survive at x_1.
  EXPECT_EQ(eval_at_branch(b, 1, t.with_flipped_sign(2, 3)), eval_at_branch(b, 1, t));
  EXPECT_NE(eval_at_branch(b, 1, t.with_flipped_sign(1, 5)), eval_at_branch(b, 1, t));
  EXPECT_THROW(eval_at_branch(b, 7), std::out_of_range);
}

TEST(EvalAtBranch, VanishesOnPstarOnly) {
  BranchConfig b = standard();
  P e1 = eval_at_branch(b, 1);
  std::array<P, 4> ps = pstar();
  std::vector<P> images;
  for (int k = 1; k <= 4; ++k) images.push_back(q(k));
  for (const auto& v : ps) images.push_back(v);
  images.push_back(xvar());
  EXPECT_TRUE(e1.substitute(images).is_zero());

  cdv::testing::Gen gen(43);
  int nonzero = 0;
  for (int trial = 0; trial < 20; ++trial) {
    std::array<Rational, 4> qv, pv;
    for (auto& v : qv) v = gen.rational(7);
    if (sgn(qv[3]) == 0) qv[3] = 1;
    for (int k = 0; k < 3; ++k) pv[static_cast<std::size_t>(k)] = gen.rational(7);
    pv[3] = -(qv[0] * pv[0] + qv[1] * pv[1] + qv[2] * pv[2]) / qv[3];
    Rational pairing_value = qv[0] * pv[0] + qv[1] * pv[1] + qv[2] * pv[2] + qv[3] * pv[3];
    ASSERT_EQ(pairing_value, 0);
    auto pt = point(qv, pv);
    nonzero += sgn(e1.evaluate(pt)) != 0;
    std::array<Rational, 4> star{qv[1], -qv[0], qv[3], -qv[2]};
    EXPECT_EQ(e1.evaluate(point(qv, star)), 0);
  }
  EXPECT_GE(nonzero, 18);
}

TEST(KernelVector, Verified) {
  Prop4Report r = verify_prop4();
  EXPECT_TRUE(r.passed());
  ASSERT_EQ(r.residuals.size(), 5u);
  P l13 = q(1) * p(4) - q(2) * p(3) - q(3) * p(2) + q(4) * p(1);
  EXPECT_EQ(build_r_table().at(1, 3).ell.poly(), l13);
  EXPECT_TRUE(r.pairing.is_zero());
  Prop4Report wrong = verify_prop4({q(2), q(1), q(4), q(3)});
  EXPECT_FALSE(wrong.passed());
  bool some_nonzero = false;
  for (const auto& res : wrong.residuals) some_nonzero |= !res.is_zero();
  EXPECT_TRUE(some_nonzero);
}

TEST(Kernel, OneDimensionalAtEveryBranchPoint) {
  auto ks = all_kernels(standard());
  ASSERT_EQ(ks.size(), 6u);
  for (const auto& k : ks) {
    EXPECT_EQ(k.dimension, 1u) << k.branch;
    EXPECT_TRUE(k.pairing_zero) << k.branch;
    RijTable t = build_r_table();
    for (int j = 1; j <= 6; ++j)
      if (j != k.branch) EXPECT_TRUE(t.at(k.branch, j).ell.apply(k.generator).is_zero());
    std::string s;
    for (const auto& e : k.serialized()) s += e + "; ";
    RecordProperty("kernel_" + std::to_string(k.branch), s);
    std::cout << "branch " << k.branch << ": " << s << (k.signed_permutation ? "[signed permutation]" : "") << "\n";
  }
  EXPECT_TRUE(ks[0].proportional_to_pstar);
  EXPECT_EQ(ks[0].serialized(), (std::vector<std::string>{"1*q2", "-1*q1", "1*q4", "-1*q3"}));
  for (std::size_t k = 1; k < 6; ++k) EXPECT_FALSE(ks[k].proportional_to_pstar);
}

TEST(Kernel, NumericSmoke) {
  cdv::testing::Gen gen(47);
  RijTable t = build_r_table();
  for (int trial = 0; trial < 10; ++trial) {
    std::array<Rational, 4> qv;
    for (auto& v : qv) v = gen.rational(9);
    auto pt = point(qv, {0, 0, 0, 0});
    for (int i = 1; i <= 6; ++i) {
      Matrix<Rational> m(5, 4, Rational(0));
      std::size_t row = 0;
      for (int j = 1; j <= 6; ++j) {
        if (j == i) continue;
        for (int c = 0; c < 4; ++c) m(row, static_cast<std::size_t>(c)) = t.at(i, j).ell.p_coefficient(c).evaluate(pt);
        ++row;
      }
      bool zero_q = std::all_of(qv.begin(), qv.end(), [](const Rational& v) { return sgn(v) == 0; });
      if (!zero_q) EXPECT_EQ(nullspace(m).size(), 1u);
    }
  }
}

TEST(K2Section, Evaluation) {
  BranchConfig b = BranchConfig::from({Rational(1, 2), 1, 2, 3, 4, 5});
  for (int i = 1; i <= 6; ++i) {
    const Rational& xi = b.x[static_cast<std::size_t>(i - 1)];
    EXPECT_EQ(k2_section_eval(1, 0, 0, b, i), 1);
    EXPECT_EQ(k2_section_eval(0, 1, 0, b, i), xi);
    EXPECT_EQ(k2_section_eval(xi * xi, -2 * xi, 1, b, i), 0);
  }
  cdv::testing::Gen gen(53);
  for (int trial = 0; trial < 20; ++trial) {
    Rational a[3], c[3], s = gen.rational(5);
    for (int k = 0; k < 3; ++k) {
      a[k] = gen.rational(5);
      c[k] = gen.rational(5);
    }
    EXPECT_EQ(k2_section_eval(a[0] + s * c[0], a[1] + s * c[1], a[2] + s * c[2], b, 3),
              k2_section_eval(a[0], a[1], a[2], b, 3) + s * k2_section_eval(c[0], c[1], c[2], b, 3));
  }
}
