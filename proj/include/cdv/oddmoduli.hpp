#pragma once

// Genus 2 curve in P^1 x P^1 inside P^3 via sections of K and K^{3/2},
// the hyperelliptic involution as a projective map, and planes through
// triples of curve points.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cdv/hyperell.hpp"
#include "cdv/matrix.hpp"
#include "cdv/poly.hpp"
#include "cdv/thetachar.hpp"

namespace cdv::oddmoduli {

using hyperell::Divisor;
using hyperell::Function;
using hyperell::HyperCurve;
using hyperell::Place;

using Point4 = std::array<Rational, 4>;
using Mat = Matrix<Rational>;
/// Bihomogeneous polynomials in s0, s1 (K) and t0, t1 (K^{3/2}).
using P = Poly<Rational>;

class OddTheta : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class BasePoint : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct EmbeddedCurve {
  HyperCurve curve;
  thetachar::CharClass theta;
  Divisor theta_divisor;  // K^{1/2}
  Divisor k_divisor;      // K
  Divisor k32_divisor;    // K + K^{1/2}
  Divisor k52_divisor;    // 2K + K^{1/2}
  std::vector<Function> k_basis;    // s0, s1
  std::vector<Function> k32_basis;  // t0, t1
  /// z_{2a+b} = s_a t_b; z0 z3 = z1 z2.
  std::array<Function, 4> segre;
  /// F(s0, s1, t0, t1) vanishing on the image: degree 3 in s and 2 in t, so
  /// the curve has class (2, 3), meeting {s = const} twice and {t = const}
  /// three times.
  P implicit;
  /// sigma^* s_a = sum_c ms(a, c) s_c, and likewise for t.
  Mat ms;
  Mat mt;
};

/// Throws OddTheta when h0(theta) != 0 and BasePoint when either linear
/// system has a base point at a branch place or at infinity.
EmbeddedCurve embed(const HyperCurve& c, const thetachar::CharClass& theta);
/// The genus 2 fixture with theta {1,2,3}.
EmbeddedCurve embed_fixture();

/// Number of independent relations of degree a in s and b in t.
std::size_t relation_count(const EmbeddedCurve& e, int a, int b);

/// Image in P^3, scaled so the first nonzero coordinate is 1.
Point4 segre_point(const EmbeddedCurve& e, const Place& p);
bool on_segre_quadric(const Point4& z);
/// F evaluated at the (s, t) factors of a Segre point.
Rational implicit_at(const EmbeddedCurve& e, const Point4& z);

bool proportional(const Point4& a, const Point4& b);

/// Action of sigma on the Segre coordinates: z(sigma P) ~ M z(P).
Mat involution_matrix(const EmbeddedCurve& e);

struct InvolutionChecks {
  bool pointwise = false;        // every sampled place
  std::size_t points_checked = 0;
  bool squares_to_scalar = false;
  bool preserves_quadric = false;
  bool preserves_curve = false;
  bool fixes_weierstrass = false;
  bool passed() const {
    return pointwise && points_checked >= 5 && squares_to_scalar && preserves_quadric && preserves_curve && fixes_weierstrass;
  }
};

InvolutionChecks check_involution(const EmbeddedCurve& e, const Mat& m, const std::vector<Place>& sample);

using Triple = std::array<Place, 3>;

struct PlaneResult {
  std::size_t rank = 0;
  bool collinear = false;
  Point4 plane{};  // valid when !collinear
  bool incidence_ok = false;
};

/// Throws std::invalid_argument when two points coincide.
PlaneResult plane_through(const EmbeddedCurve& e, const Triple& t, bool apply_sigma);

/// Pullback of sum plane_k z_k as a section of K^{5/2}.
Function plane_pullback(const EmbeddedCurve& e, const Point4& plane);
/// Zero divisor of the pullback; throws std::domain_error for the zero pullback.
hyperell::ZeroDivisor plane_curve_divisor(const EmbeddedCurve& e, const Point4& plane);

struct Prop5Report {
  Triple triple;
  bool collinear = false;
  bool sigma_collinear = false;
  std::size_t h0_lk12 = 0;
  /// h0 of L K^{-1/2} (degree 0), computed in the collinear case.
  std::optional<std::size_t> h0_l_minus_theta;
  bool plane_degree_ok = true;
  bool plane_contains_points = true;
  bool sigma_plane_matches = true;
  std::size_t other_triple_planes = 0;
  std::string remark_section;

  bool equivalence_ok() const;
  bool passed() const { return equivalence_ok() && plane_degree_ok && plane_contains_points && sigma_plane_matches; }
  std::string describe() const;
};

/// Throws std::invalid_argument for coincident points.
Prop5Report prop5_hypothesis_report(const EmbeddedCurve& e, const Triple& t);
/// Reports computed concurrently, in input order.
std::vector<Prop5Report> prop5_reports(const EmbeddedCurve& e, const std::vector<Triple>& ts);

struct ThetaObstruction {
  std::size_t h0 = 0;
  std::size_t h1 = 0;  // h0(K - theta)
  bool passed() const { return h0 == 0 && h1 == 0; }
};

ThetaObstruction even_theta_obstruction(const HyperCurve& c, const thetachar::CharClass& theta);

/// Genus of a degree d cover with simple branching; throws std::invalid_argument
/// when the genus would not be a nonnegative integer.
int riemann_hurwitz(int g_base, int degree, int branch_count);
/// dim Prym = genus of the spectral curve minus g.
int prym_dimension(int g);

/// Branch places, infinities and rational affine points up to the bound.
std::vector<Place> point_pool(const HyperCurve& c, int bound);
/// n triples of distinct points drawn from the pool.
std::vector<Triple> sample_triples(const std::vector<Place>& pool, std::size_t n, std::uint64_t seed);
/// The theta subset and its complement (collinear by construction).
std::vector<Triple> engineered_collinear_triples(const EmbeddedCurve& e);
/// Triples cut out by t-ruling lines b t0 - a t1 = 0 with |a|, |b| <= bound
/// whose three points are rational and distinct.
std::vector<Triple> ruling_triples(const EmbeddedCurve& e, int bound);

struct RandomCurve {
  HyperCurve curve;
  Place point;
};

/// y^2 = prod (x - x_i) with x_6 chosen so that a random rational affine
/// point lies on the curve.
RandomCurve random_curve_with_point(std::uint64_t seed);

}  // namespace cdv::oddmoduli
