#include <gtest/gtest.h>

#include <vector>

#include "cdv/clifford.hpp"

using namespace cdv;
using namespace cdv::clifford;

namespace {

// Independent product oracle: reduce the concatenated generator word with
// e_i e_i = -1 and e_i e_j = -e_j e_i, one adjacent rewrite at a time.
std::pair<int, Blade> reduce_word(std::vector<int> word) {
  int sign = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < word.size(); ++k) {
      if (word[k] == word[k + 1]) {
        sign = -sign;
        word.erase(word.begin() + static_cast<std::ptrdiff_t>(k), word.begin() + static_cast<std::ptrdiff_t>(k + 2));
        changed = true;
        break;
      }
      if (word[k] > word[k + 1]) {
        std::swap(word[k], word[k + 1]);
        sign = -sign;
        changed = true;
        break;
      }
    }
  }
  Blade b = 0;
  for (int i : word) b |= 1u << (i - 1);
  return {sign, b};
}

std::vector<int> word_of(Blade b) {
  std::vector<int> w;
  for (int i = 1; i <= 4; ++i)
    if (b & (1u << (i - 1))) w.push_back(i);
  return w;
}

MV e(int i) { return MV::e(i); }
MV eb(std::initializer_list<int> idx, int c = 1) { return MV::basis(blade(idx), Rational(c)); }

}  // namespace

TEST(CliffordProduct, MatchesWordReductionOracleOnAllBladePairs) {
  for (Blade a = 0; a < 16; ++a)
    for (Blade b = 0; b < 16; ++b) {
      std::vector<int> w = word_of(a), wb = word_of(b);
      w.insert(w.end(), wb.begin(), wb.end());
      auto [sign, res] = reduce_word(w);
      EXPECT_EQ(res, a ^ b);
      EXPECT_EQ(sign, blade_product_sign(a, b)) << blade_name(a) << " * " << blade_name(b);
    }
}

TEST(CliffordProduct, SpecExamples) {
  EXPECT_EQ(e(1) * e(1), MV::scalar(-1));
  EXPECT_EQ(e(1) * e(2), eb({1, 2}));
  EXPECT_EQ(e(2) * e(1), eb({1, 2}, -1));
  MV w = eb({1, 2}) - eb({3, 4});
  EXPECT_EQ(e(1) * w, eb({2}, -1) - eb({1, 3, 4}));
}

TEST(CliffordProduct, Associative) {
  for (Blade a = 0; a < 16; ++a)
    for (Blade b = 0; b < 16; ++b)
      for (Blade c = 0; c < 16; c += 3) {
        MV x = MV::basis(a), y = MV::basis(b), z = MV::basis(c);
        EXPECT_EQ((x * y) * z, x * (y * z));
      }
}

TEST(GradeProject, Examples) {
  MV v = eb({2}, -1) - eb({1, 3, 4});
  EXPECT_EQ(v.grade_project(1), eb({2}, -1));
  EXPECT_EQ((MV::scalar(1) + eb({1, 2})).grade_project(0), MV::scalar(1));
  EXPECT_TRUE(e(1).grade_project(2).is_zero());
  EXPECT_THROW(e(1).grade_project(5), std::out_of_range);
}

TEST(HodgeStar, Examples) {
  EXPECT_EQ(hodge_star(eb({1, 2})), eb({3, 4}));
  MV w = eb({1, 2}) - eb({3, 4});
  EXPECT_EQ(hodge_star(w), -w);
  EXPECT_EQ(hodge_star(volume_form()), MV::scalar(1));
  EXPECT_THROW(hodge_star(MV::scalar(1) + e(1)), NotHomogeneous);
}

TEST(HodgeStar, SquareIsIdentityOnTwoForms) {
  for (Blade b = 0; b < 16; ++b) {
    if (grade(b) != 2) continue;
    EXPECT_EQ(hodge_star(hodge_star(MV::basis(b))), MV::basis(b));
  }
}

TEST(HodgeStar, ThreeFormSignIsCalibratedByProbe) {
  // The plain permutation rule gives *(e1e3e4) = e2, which breaks the identity
  // on the probe; the calibrated convention flips grade 3.
  EXPECT_EQ(calibrated_star().three_form_sign, -1);
  EXPECT_EQ(hodge_star(eb({1, 3, 4}), StarConvention{1}), eb({2}));
}

TEST(FormBasis, AsdAndSdSpaces) {
  for (const auto& w : asd_basis()) {
    EXPECT_TRUE(is_anti_self_dual(w));
    EXPECT_FALSE(is_self_dual(w));
  }
  for (const auto& w : sd_basis()) EXPECT_TRUE(is_self_dual(w));
  // Orthogonal complements: coefficient dot products vanish.
  for (const auto& a : asd_basis())
    for (const auto& s : sd_basis()) {
      Rational dot = 0;
      for (Blade b = 0; b < 16; ++b) dot += a[b] * s[b];
      EXPECT_EQ(dot, 0);
    }
}

TEST(IdentityDecomposition, Examples) {
  MV w = eb({1, 2}) - eb({3, 4});
  auto d = identity_decomposition(e(1), w);
  EXPECT_EQ(d.grade3, eb({1, 3, 4}, -1));
  EXPECT_EQ(d.grade1, eb({2}, -1));

  // a = e2: e2(e1e2) = e1, e2(e3e4) = e2e3e4, so e2.w = e1 - e234.
  auto d2 = identity_decomposition(e(2), w);
  EXPECT_EQ(d2.grade1, eb({1}));
  EXPECT_EQ(d2.grade3, eb({2, 3, 4}, -1));
  EXPECT_TRUE(decomposition_identity_holds(e(2), w));

  auto z = identity_decomposition(e(3), MV());
  EXPECT_TRUE(z.grade1.is_zero());
  EXPECT_TRUE(z.grade3.is_zero());

  EXPECT_THROW(identity_decomposition(e(1), sd_basis()[0]), NotAntiSelfDual);
  EXPECT_THROW(identity_decomposition(e(1) + MV::scalar(1), w), NotHomogeneous);
}

TEST(IdentityDecomposition, ExhaustiveOverBasis) {
  for (int i = 1; i <= 4; ++i)
    for (const auto& w : asd_basis()) {
      MV prod = e(i) * w;
      EXPECT_EQ(prod.grade_project(3), wedge(e(i), w));
      EXPECT_EQ(prod.grade_project(1), -hodge_star(wedge(e(i), w)));
      EXPECT_EQ(prod.grades_present(), (1u << 1) | (1u << 3));
    }
}

TEST(IdentityDecomposition, FailsOnSelfDualForms) {
  for (int i = 1; i <= 4; ++i)
    for (const auto& w : sd_basis()) EXPECT_FALSE(decomposition_identity_holds(e(i), w));
}

TEST(IdentitySandwich, VanishesOnAsdBasis) {
  for (const auto& w : asd_basis()) EXPECT_TRUE(identity_sandwich(w).is_zero());
  EXPECT_THROW(identity_sandwich(sd_basis()[0]), NotAntiSelfDual);
}

TEST(IdentitySandwich, AlsoVanishesOnEveryTwoForm) {
  // sum_i e_i B e_i = 0 for every bivector B in four dimensions: for e_a e_b
  // the two generators inside the blade contribute +B each, the two outside
  // contribute -B each. The sandwich does not distinguish SD from ASD.
  for (const auto& w : sd_basis()) EXPECT_TRUE(sandwich_sum(w).is_zero());
  for (Blade b = 0; b < 16; ++b)
    if (grade(b) == 2) EXPECT_TRUE(sandwich_sum(MV::basis(b)).is_zero());
  // It does not vanish on grade 1: sum_i e_i e_1 e_i = 2 e_1.
  EXPECT_EQ(sandwich_sum(e(1)), eb({1}, 2));
}

// ---- spinor representation ------------------------------------------------

TEST(GammaRep, CliffordRelations) {
  const auto& rep = GammaRep::standard();
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) {
      Matrix4 ac = mat_mul(rep.gamma(i), rep.gamma(j));
      Matrix4 ca = mat_mul(rep.gamma(j), rep.gamma(i));
      for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b) {
          Gaussian expected = (i == j && a == b) ? Gaussian(-2) : Gaussian(0);
          EXPECT_EQ(ac[a][b] + ca[a][b], expected);
        }
    }
}

TEST(GammaRep, ChiralityOperator) {
  const auto& rep = GammaRep::standard();
  const Matrix4& g5 = rep.chirality();
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) {
      Gaussian expected = a != b ? Gaussian(0) : (a < 2 ? Gaussian(1) : Gaussian(-1));
      EXPECT_EQ(g5[a][b], expected);
    }
  EXPECT_EQ(mat_mul(g5, g5), mat_identity());
  for (Blade b = 0; b < 16; ++b) {
    Matrix4 m = rep.blade_matrix(b);
    Matrix4 l = mat_mul(g5, m), r = mat_mul(m, g5);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        if (grade(b) % 2 == 0)
          EXPECT_EQ(l[i][j], r[i][j]);
        else
          EXPECT_EQ(l[i][j], -r[i][j]);
      }
  }
}

TEST(GammaRep, RepresentsTheProduct) {
  const auto& rep = GammaRep::standard();
  for (Blade a = 0; a < 16; ++a)
    for (Blade b = 0; b < 16; ++b) {
      Matrix4 lhs = mat_mul(rep.blade_matrix(a), rep.blade_matrix(b));
      Matrix4 rhs = rep.matrix_of(MV::basis(a) * MV::basis(b));
      EXPECT_EQ(lhs, rhs);
    }
}

TEST(CliffordAct, BlockStructure) {
  Spinor<Gaussian> plus{Gaussian(1), Gaussian(0), Gaussian(0), Gaussian(0)};
  auto out = clifford_act(e(1), plus);
  EXPECT_TRUE(is_zero(out[0]) && is_zero(out[1]));
  EXPECT_FALSE(is_zero(out[2]) && is_zero(out[3]));

  auto even = clifford_act(asd_basis()[0], plus);
  EXPECT_TRUE(is_zero(even[2]) && is_zero(even[3]));

  Spinor<Gaussian> psi{Gaussian(2), Gaussian(Rational(1), Rational(3)), Gaussian(-1), Gaussian(Rational(1, 2))};
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) {
      auto a = clifford_act(e(i), clifford_act(e(j), psi));
      auto b = clifford_act(e(j), clifford_act(e(i), psi));
      for (std::size_t k = 0; k < 4; ++k) EXPECT_EQ(a[k] + b[k], i == j ? Gaussian(-2) * psi[k] : Gaussian(0));
    }
}

TEST(CliffordAct, AsdFormsActOnExactlyOneChirality) {
  auto rec = asd_chirality_record();
  EXPECT_TRUE(rec.consistent);
  // Recorded outcome under these conventions: ASD forms kill S-.
  EXPECT_EQ(rec.annihilated, Chirality::Minus);
  EXPECT_EQ(rec.acted_on, Chirality::Plus);
  for (const auto& w : sd_basis()) {
    Matrix4 m = GammaRep::standard().matrix_of(w);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 2; ++j) EXPECT_TRUE(is_zero(m[i][j]));
  }
}
