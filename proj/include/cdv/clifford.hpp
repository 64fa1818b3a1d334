#pragma once

// The Clifford algebra Cl(R^4) with e_i e_j + e_j e_i = -2 delta_ij, the
// Hodge star on forms (identified with multivectors as vector spaces), and a
// spinor representation over Q(i).

#include <array>
#include <bit>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cdv/scalar.hpp"

namespace cdv::clifford {

/// Basis blade e_I as a bitmask: bit (i-1) set iff e_i is a factor.
using Blade = unsigned;
inline constexpr Blade kVolume = 0b1111;

inline constexpr Blade blade(std::initializer_list<int> indices) {
  Blade b = 0;
  for (int i : indices) b |= 1u << (i - 1);
  return b;
}

inline int grade(Blade b) { return std::popcount(b); }

/// e_a e_b = sign * e_{a xor b}. The sign counts the transpositions needed to
/// sort the concatenated word, and one -1 per repeated generator.
inline int blade_product_sign(Blade a, Blade b) {
  int swaps = 0;
  for (Blade bb = b; bb != 0; bb &= bb - 1) {
    unsigned low = static_cast<unsigned>(std::countr_zero(bb));
    swaps += std::popcount(a >> (low + 1));
  }
  swaps += std::popcount(a & b);
  return swaps % 2 == 0 ? 1 : -1;
}

std::string blade_name(Blade b);

class NotHomogeneous : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotAntiSelfDual : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Sixteen coefficients indexed by blades. R may be noncommutative (e.g. a
/// matrix ring); coefficients commute with the generators.
template <class R>
class Multivector {
 public:
  Multivector() { coeffs_.fill(R(0)); }

  static Multivector scalar(const R& c) {
    Multivector m;
    m.coeffs_[0] = c;
    return m;
  }
  static Multivector basis(Blade b, const R& c = R(1)) {
    Multivector m;
    m.coeffs_.at(b) = c;
    return m;
  }
  /// e_i for i in 1..4.
  static Multivector e(int i) { return basis(blade({i})); }

  R& operator[](Blade b) { return coeffs_.at(b); }
  const R& operator[](Blade b) const { return coeffs_.at(b); }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!cdv_is_zero(c)) return false;
    return true;
  }

  /// Grades carrying a nonzero coefficient, as a bitmask over 0..4.
  unsigned grades_present() const {
    unsigned g = 0;
    for (Blade b = 0; b < 16; ++b)
      if (!cdv_is_zero(coeffs_[b])) g |= 1u << grade(b);
    return g;
  }

  Multivector grade_project(int k) const {
    if (k < 0 || k > 4) throw std::out_of_range("grade_project: grade out of range");
    Multivector m;
    for (Blade b = 0; b < 16; ++b)
      if (grade(b) == k) m.coeffs_[b] = coeffs_[b];
    return m;
  }

  Multivector operator-() const {
    Multivector m;
    for (Blade b = 0; b < 16; ++b) m.coeffs_[b] = -coeffs_[b];
    return m;
  }
  Multivector& operator+=(const Multivector& o) {
    for (Blade b = 0; b < 16; ++b) coeffs_[b] = coeffs_[b] + o.coeffs_[b];
    return *this;
  }
  Multivector& operator-=(const Multivector& o) {
    for (Blade b = 0; b < 16; ++b) coeffs_[b] = coeffs_[b] - o.coeffs_[b];
    return *this;
  }
  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }

  /// Clifford product.
  friend Multivector operator*(const Multivector& a, const Multivector& b) {
    Multivector r;
    for (Blade x = 0; x < 16; ++x) {
      if (cdv_is_zero(a.coeffs_[x])) continue;
      for (Blade y = 0; y < 16; ++y) {
        if (cdv_is_zero(b.coeffs_[y])) continue;
        R t = a.coeffs_[x] * b.coeffs_[y];
        if (blade_product_sign(x, y) < 0)
          r.coeffs_[x ^ y] = r.coeffs_[x ^ y] - t;
        else
          r.coeffs_[x ^ y] = r.coeffs_[x ^ y] + t;
      }
    }
    return r;
  }

  /// Coefficientwise left multiplication by a ring element.
  Multivector left_scaled(const R& c) const {
    Multivector m;
    for (Blade b = 0; b < 16; ++b) m.coeffs_[b] = c * coeffs_[b];
    return m;
  }

  friend bool operator==(const Multivector& a, const Multivector& b) { return (a - b).is_zero(); }

 private:
  template <class T>
  static bool cdv_is_zero(const T& v) {
    using cdv::is_zero;
    return is_zero(v);
  }

  std::array<R, 16> coeffs_;
};

/// Sign applied to the Hodge star on 3-forms relative to the permutation rule
/// e_I ^ *e_I = vol. Grades 0, 1, 2 and 4 always use the permutation rule.
struct StarConvention {
  int three_form_sign = 1;
};

/// The convention that makes a.w = a^w - *(a^w) hold on the probe
/// (a, w) = (e1, e1e2 - e3e4); fixed once, then verified on all other cases.
const StarConvention& calibrated_star();

/// Hodge star of a homogeneous multivector.
template <class R>
Multivector<R> hodge_star(const Multivector<R>& a, const StarConvention& conv = calibrated_star()) {
  unsigned gp = a.grades_present();
  if (std::popcount(gp) > 1) throw NotHomogeneous("hodge_star: input mixes grades");
  Multivector<R> out;
  for (Blade b = 0; b < 16; ++b) {
    const R& c = a[b];
    using cdv::is_zero;
    if (is_zero(c)) continue;
    Blade comp = kVolume ^ b;
    int sign = blade_product_sign(b, comp);
    if (grade(b) == 3) sign *= conv.three_form_sign;
    out[comp] = sign > 0 ? R(out[comp] + c) : R(out[comp] - c);
  }
  return out;
}

/// Exterior product, via the Clifford product restricted to disjoint blades.
template <class R>
Multivector<R> wedge(const Multivector<R>& a, const Multivector<R>& b) {
  Multivector<R> r;
  for (Blade x = 0; x < 16; ++x)
    for (Blade y = 0; y < 16; ++y) {
      if ((x & y) != 0) continue;
      R t = a[x] * b[y];
      r[x | y] = blade_product_sign(x, y) > 0 ? R(r[x | y] + t) : R(r[x | y] - t);
    }
  return r;
}

using MV = Multivector<Rational>;

/// e1e2 - e3e4, e2e3 - e1e4, e3e1 - e2e4.
std::array<MV, 3> asd_basis();
/// e1e2 + e3e4, e2e3 + e1e4, e3e1 + e2e4.
std::array<MV, 3> sd_basis();
MV volume_form();

bool is_two_form(const MV& w);
bool is_anti_self_dual(const MV& w, const StarConvention& conv = calibrated_star());
bool is_self_dual(const MV& w, const StarConvention& conv = calibrated_star());

struct Decomposition {
  MV grade3;
  MV grade1;
};

/// Grade-3 and grade-1 parts of a.w for a 1-form a and an ASD 2-form w.
/// Throws NotAntiSelfDual / NotHomogeneous on bad input.
Decomposition identity_decomposition(const MV& a, const MV& w, const StarConvention& conv = calibrated_star());

/// a.w has only grades 1 and 3, grade 3 = a^w and grade 1 = -*(a^w).
/// No precondition on w, so it serves as a negative control on SD forms.
bool decomposition_identity_holds(const MV& a, const MV& w, const StarConvention& conv = calibrated_star());

/// Sum over i of e_i . w . e_i for an ASD 2-form w (expected: zero).
MV identity_sandwich(const MV& w);
/// Same sum without the ASD precondition.
MV sandwich_sum(const MV& w);

// ---- spinor representation ------------------------------------------------

using Matrix4 = std::array<std::array<Gaussian, 4>, 4>;

template <class R>
using Spinor = std::array<R, 4>;

enum class Chirality { Plus, Minus };

/// Four 4x4 matrices over Q(i) for e1..e4 in quaternion block form, with
/// chirality operator e1e2e3e4 = diag(1, 1, -1, -1): components 0,1 span S+,
/// components 2,3 span S-.
class GammaRep {
 public:
  static const GammaRep& standard();

  const Matrix4& gamma(int i) const { return gamma_.at(static_cast<std::size_t>(i - 1)); }
  const Matrix4& chirality() const { return chirality_; }
  /// Matrix of a basis blade (product of gammas in increasing index order).
  Matrix4 blade_matrix(Blade b) const;
  /// Matrix of a multivector with rational coefficients.
  Matrix4 matrix_of(const MV& a) const;

  static std::array<std::size_t, 2> block(Chirality c) {
    return c == Chirality::Plus ? std::array<std::size_t, 2>{0, 1} : std::array<std::size_t, 2>{2, 3};
  }

 private:
  GammaRep();
  std::array<Matrix4, 4> gamma_;
  Matrix4 chirality_;
};

Matrix4 mat_mul(const Matrix4& a, const Matrix4& b);
Matrix4 mat_identity();
bool mat_is_zero(const Matrix4& a);

/// Scaling hook used by spinor actions; overload for new coefficient types.
inline Gaussian scale_by(const Gaussian& v, const Gaussian& s) { return v * s; }

/// Matrix action on a spinor with coefficients in R.
template <class R>
Spinor<R> apply(const Matrix4& m, const Spinor<R>& psi) {
  Spinor<R> out;
  for (std::size_t i = 0; i < 4; ++i) {
    R acc = R(0);
    for (std::size_t j = 0; j < 4; ++j) {
      if (cdv::is_zero(m[i][j])) continue;
      using cdv::is_zero;
      if (is_zero(psi[j])) continue;
      acc = acc + scale_by(psi[j], m[i][j]);
    }
    out[i] = acc;
  }
  return out;
}

/// Clifford action of a rational multivector on a spinor.
template <class R>
Spinor<R> clifford_act(const MV& a, const Spinor<R>& psi, const GammaRep& rep = GammaRep::standard()) {
  return clifford::apply(rep.matrix_of(a), psi);
}

/// Which chirality block ASD 2-forms annihilate under these conventions,
/// together with consistency over the whole ASD basis.
struct ChiralityRecord {
  Chirality annihilated;
  Chirality acted_on;
  bool consistent;
};
ChiralityRecord asd_chirality_record(const GammaRep& rep = GammaRep::standard());

}  // namespace cdv::clifford
