#pragma once

// Quadratic differential h = tr(Phi^2) on T*P^3 for genus 2 bundles,
// written in the coordinates q (point of P^3) and p (covector).
// Variables: q1..q4 -> 0..3, p1..p4 -> 4..7, x -> 8.

#include <array>
#include <string>
#include <vector>

#include "cdv/poly.hpp"
#include "cdv/ratfunc.hpp"
#include "cdv/scalar.hpp"

namespace cdv::nrmoduli {

using P = Poly<Rational>;
using RF = RatFunc<Rational>;

inline constexpr std::size_t kArity = 9;
inline constexpr std::size_t kX = 8;

/// q_i and p_i, 1-based.
P q(int i);
P p(int i);
P xvar();
/// Names q1..q4, p1..p4, x for serialization.
const std::vector<std::string>& variable_names();

/// Bilinear form sum c[a][b] q_{a+1} p_{b+1}.
struct LinearForm {
  std::array<std::array<int, 4>, 4> c{};

  P poly() const;
  /// Coefficient of p_{b+1}: a linear form in q.
  P p_coefficient(int b) const;
  /// Substitute p = v (polynomials in q).
  P apply(const std::array<P, 4>& v) const;
};

/// r_ij = sign * l_ij^2.
struct RijEntry {
  int i = 0;
  int j = 0;
  int sign = 1;
  LinearForm ell;

  P expanded() const;
};

class RijTable {
 public:
  explicit RijTable(std::vector<RijEntry> entries);
  const std::vector<RijEntry>& entries() const { return entries_; }
  /// Unordered pair lookup; throws std::out_of_range.
  const RijEntry& at(int i, int j) const;
  /// Copy with the sign of r_ij flipped.
  RijTable with_flipped_sign(int i, int j) const;

 private:
  std::vector<RijEntry> entries_;
};

RijTable build_r_table();

struct BranchConfig {
  std::array<Rational, 6> x;

  /// Throws std::invalid_argument unless there are six distinct values.
  static BranchConfig from(const std::vector<Rational>& xs);
  /// prod_k (x - x_k) in the variable x.
  P y_squared() const;
  /// prod_{k != i, j} (x - x_k); indices 1-based.
  P cofactor(int i, int j) const;
};

/// sum_{i<j} r_ij / ((x - x_i)(x - x_j)).
RF h_partial_fractions(const BranchConfig& b, const RijTable& t);
/// sum_{i<j} prod_{k != i,j} (x - x_k) r_ij.
P h_polynomial(const BranchConfig& b, const RijTable& t);

/// h_partial_fractions(b, t1) * y^2 == h_polynomial(b, t2) in Q(q,p)(x).
bool h_consistency(const BranchConfig& b, const RijTable& t1, const RijTable& t2);
bool h_consistency(const BranchConfig& b);

/// sum_{j != i} prod_{k != i,j} (x_i - x_k) r_ij(q, p).
P eval_at_branch(const BranchConfig& b, int i, const RijTable& t);
P eval_at_branch(const BranchConfig& b, int i);

/// (q2, -q1, q4, -q3).
std::array<P, 4> pstar();
/// <v, q> = sum v_i q_i.
P pairing(const std::array<P, 4>& v);

struct Prop4Report {
  std::vector<P> residuals;  // l_1j(v), j = 2..6
  P pairing;                 // <v, q>
  bool passed() const;
};

Prop4Report verify_prop4(const std::array<P, 4>& v = pstar());

struct KernelResult {
  int branch = 0;
  std::size_t dimension = 0;
  /// Nullspace generator over Q[q]; normalised to a signed permutation of q
  /// when it is proportional to one.
  std::array<P, 4> generator;
  bool pairing_zero = false;
  bool proportional_to_pstar = false;
  bool signed_permutation = false;

  std::vector<std::string> serialized() const;
};

class UnexpectedKernel : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Common kernel of the five l_ij (j != i) over Q(q). Throws UnexpectedKernel
/// when the dimension is not 1.
KernelResult kernel_at_branch(const BranchConfig& b, int i);
/// All six branch points, computed concurrently.
std::vector<KernelResult> all_kernels(const BranchConfig& b);

/// Evaluation of the K^2 section (a0 + a1 x + a2 x^2) dx^2/y^2 at x_i, in the
/// trivialisation by dx^2/y^2.
Rational k2_section_eval(const Rational& a0, const Rational& a1, const Rational& a2, const BranchConfig& b, int i);

}  // namespace cdv::nrmoduli
