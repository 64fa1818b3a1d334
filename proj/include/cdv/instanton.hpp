#pragma once

// The charge-1 instanton on R^4 over Q(i)(x1..x4), flat twistor spinors and
// the coupled Dirac operator in the adjoint (trace-free) representation.

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "cdv/clifford.hpp"
#include "cdv/ratfunc.hpp"

namespace cdv {

inline RatFunc<Gaussian> scale_by(const RatFunc<Gaussian>& v, const Gaussian& s) { return v.scaled(s); }

}  // namespace cdv

namespace cdv::instanton {

inline constexpr std::size_t kDim = 4;

using RF = RatFunc<Gaussian>;
using PolyG = Poly<Gaussian>;

/// 1 + x1^2 + x2^2 + x3^2 + x4^2.
const PolyG& conformal_factor();
RF coordinate(std::size_t i);

/// 2x2 matrix with rational-function entries, row-major.
class Mat2 {
 public:
  Mat2() : Mat2(0) {}
  Mat2(int c) : e_{RF(c), RF(0), RF(0), RF(c)} {}  // NOLINT
  Mat2(RF a, RF b, RF c, RF d) : e_{std::move(a), std::move(b), std::move(c), std::move(d)} {}
  static Mat2 constant(const Gaussian& a, const Gaussian& b, const Gaussian& c, const Gaussian& d) {
    return {RF::constant(a), RF::constant(b), RF::constant(c), RF::constant(d)};
  }

  const RF& operator()(std::size_t i, std::size_t j) const { return e_[2 * i + j]; }
  RF& operator()(std::size_t i, std::size_t j) { return e_[2 * i + j]; }

  bool is_zero() const;
  RF trace() const { return e_[0] + e_[3]; }

  Mat2 operator-() const;
  friend Mat2 operator+(const Mat2& a, const Mat2& b);
  friend Mat2 operator-(const Mat2& a, const Mat2& b);
  friend Mat2 operator*(const Mat2& a, const Mat2& b);
  Mat2& operator+=(const Mat2& o) { return *this = *this + o; }
  friend bool operator==(const Mat2& a, const Mat2& b) { return (a - b).is_zero(); }

  Mat2 scaled(const Gaussian& c) const;
  Mat2 times(const RF& f) const;
  Mat2 derivative(std::size_t var) const;
  /// Removes common powers of the conformal factor from every entry.
  Mat2 reduced() const;
  /// Conjugate transpose for constant matrices.
  Mat2 adjoint_constant() const;
  std::array<Gaussian, 4> evaluate(std::span<const Gaussian> point) const;

 private:
  std::array<RF, 4> e_;
};

inline bool is_zero(const Mat2& m) { return m.is_zero(); }
inline Mat2 scale_by(const Mat2& m, const Gaussian& s) { return m.scaled(s); }
inline Mat2 commutator(const Mat2& a, const Mat2& b) { return a * b - b * a; }

struct Connection {
  std::array<Mat2, kDim> a;  // a[mu] is the dx_{mu+1} component
};

/// Index of the pair (mu, nu), mu < nu, among the six 2-form components.
std::size_t pair_index(std::size_t mu, std::size_t nu);
std::pair<std::size_t, std::size_t> pair_of(std::size_t k);

struct CurvatureForm {
  std::array<Mat2, 6> f;  // f[pair_index(mu, nu)] = F_{mu nu}
  /// F_{mu nu} with antisymmetry.
  Mat2 at(std::size_t mu, std::size_t nu) const;
  bool is_zero() const;
};

/// Orientation bookkeeping for the instanton suite.
struct InstantonConvention {
  bool swapped_e3_e4 = false;
  int three_form_sign = -1;
  clifford::Chirality acted_on = clifford::Chirality::Plus;
  std::string describe() const;
};

/// The quaternionic charge-1 connection Im(conj(x) dx)/(1 + |x|^2); relabels
/// e3, e4 if its curvature comes out self-dual.
const Connection& bpst_connection();
const InstantonConvention& instanton_convention();
/// bpst_connection() with the dx1 component multiplied by `factor`.
Connection scaled_bpst(const Gaussian& factor);

CurvatureForm curvature(const Connection& a);
CurvatureForm hodge_star(const CurvatureForm& f);
bool asd_check(const CurvatureForm& f);
bool sd_check(const CurvatureForm& f);

struct SdAsdSplit {
  CurvatureForm plus;
  CurvatureForm minus;
};
SdAsdSplit sd_asd_split(const CurvatureForm& f);

/// nabla_mu X = d_mu X + [A_mu, X].
Mat2 covariant_derivative(const Connection& a, std::size_t mu, const Mat2& x);
/// Cyclic sums over the four index triples.
std::array<Mat2, 4> bianchi_residual(const Connection& a, const CurvatureForm& f);
/// sum_mu nabla_mu F_{mu nu} for each nu.
std::array<Mat2, kDim> yang_mills_residual(const Connection& a);

// ---- spinor fields --------------------------------------------------------

using ScalarSpinor = clifford::Spinor<RF>;
using CoupledSpinor = clifford::Spinor<Mat2>;

/// x.psi1 (psi1 over a basis of the block ASD forms kill) followed by the
/// constants psi2 over a basis of the block they act on.
std::array<ScalarSpinor, 4> twistor_basis();
/// nabla_i psi + (1/4) e_i.(Dirac psi), flat.
std::array<ScalarSpinor, kDim> twistor_residual(const ScalarSpinor& psi);
ScalarSpinor flat_dirac(const ScalarSpinor& psi);

/// sum_{mu<nu} F_{mu nu} (e_mu e_nu . psi).
CoupledSpinor curvature_action(const CurvatureForm& f, const ScalarSpinor& psi);
CoupledSpinor coupled_dirac(const Connection& a, const CoupledSpinor& psi);
bool is_zero(const CoupledSpinor& psi);

struct Prop1Report {
  bool asd = false;
  bool degenerate = false;
  std::array<bool, 4> residual_zero{};
  std::size_t independent_count = 0;
  InstantonConvention convention;
  bool passed() const;
};

/// Residuals of coupled_dirac(A, F.psi) over twistor_basis(), without any
/// precondition on the curvature.
Prop1Report prop1_residuals(const Connection& a);
/// As prop1_residuals, but throws clifford::NotAntiSelfDual unless F is ASD.
Prop1Report verify_prop1(const Connection& a);

/// Evaluation rank of a family of coupled fields at two fixed rational points.
std::size_t evaluation_rank(const std::vector<CoupledSpinor>& fields);

}  // namespace cdv::instanton
