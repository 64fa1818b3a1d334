#pragma once

// Hyperelliptic curves y^2 = f(x), deg f = 2g+2, with rational branch points
// and two rational places at infinity; divisors supported on rational places
// and Riemann-Roch spaces L(D) = {h : div(h) + D >= 0}.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cdv/thetachar.hpp"
#include "cdv/upoly.hpp"

namespace cdv::hyperell {

class CurveError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Place {
  enum class Kind { Branch, Split, Infinity };
  Kind kind = Kind::Infinity;
  int index = 0;   // branch points are 1-based
  Rational x;      // x-coordinate for finite places
  Rational y;      // y-coordinate for split places
  int sign = 1;    // +1 or -1 at infinity

  bool is_finite() const { return kind != Kind::Infinity; }
  std::string to_string() const;
  friend bool operator==(const Place& a, const Place& b);
  friend bool operator<(const Place& a, const Place& b);
};

class HyperCurve {
 public:
  /// y^2 = lead * prod (x - r_i); lead must be a nonzero square.
  static HyperCurve from_roots(std::vector<Rational> roots, const Rational& lead = 1);
  /// Coefficients of f ascending; f must split over Q into distinct linear
  /// factors with a square leading coefficient.
  static HyperCurve from_coefficients(int genus, const UPoly& f);
  /// y^2 = x(x-1)(x-2)(x-3)(x-4)(x-5).
  static HyperCurve fixture_genus2();

  int genus() const { return genus_; }
  const UPoly& f() const { return f_; }
  const std::vector<Rational>& branch_points() const { return roots_; }
  const Rational& branch_point(int i) const { return roots_.at(static_cast<std::size_t>(i - 1)); }
  /// sqrt of the leading coefficient; y ~ +-lead_sqrt x^(g+1) at infinity.
  const Rational& lead_sqrt() const { return lead_sqrt_; }

  Place branch(int i) const;
  Place infinity(int sign) const;
  /// The place (c, s); requires f(c) = s^2 != 0.
  Place split(const Rational& c, const Rational& s) const;
  /// Places over x = c when they are rational (one branch place, two split
  /// places, or none when f(c) is not a square).
  std::vector<Place> places_over(const Rational& c) const;
  bool contains(const Place& p) const;

  /// Hyperelliptic involution (x, y) -> (x, -y).
  Place sigma(const Place& p) const;

  /// Rational affine points with |numerator|, denominator <= bound, excluding
  /// branch points.
  std::vector<Place> search_rational_places(int bound) const;

 private:
  int genus_ = 0;
  UPoly f_;
  std::vector<Rational> roots_;
  Rational lead_sqrt_;
};

class Divisor {
 public:
  Divisor() = default;
  static Divisor of(const Place& p, int n = 1);

  int operator[](const Place& p) const;
  const std::map<Place, int>& terms() const { return terms_; }
  int degree() const;
  bool is_effective() const;

  Divisor& add(const Place& p, int n);
  friend Divisor operator+(Divisor a, const Divisor& b);
  friend Divisor operator-(Divisor a, const Divisor& b);
  Divisor scaled(int k) const;
  friend bool operator==(const Divisor& a, const Divisor& b) { return a.terms_ == b.terms_; }
  std::string to_string() const;

 private:
  std::map<Place, int> terms_;
};

/// (a(x) + b(x) y) / q(x).
struct Function {
  UPoly a;
  UPoly b;
  UPoly q = UPoly::constant(1);

  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  static Function polynomial(UPoly p) { return {std::move(p), UPoly(), UPoly::constant(1)}; }
  Function sigma() const { return {a, -b, q}; }
  std::string to_string() const;
};

/// Product in the function field, using y^2 = f.
Function multiply(const HyperCurve& c, const Function& u, const Function& v);

/// Order of vanishing at a place; throws std::domain_error for the zero function.
int valuation(const HyperCurve& c, const Place& p, const Function& h);

/// Coefficients of t^from .. t^(from+count-1) in the expansion of h at p, in
/// the local parameter used throughout (y at branch places, x - c at split
/// places, 1/x at infinity).
std::vector<Rational> local_coefficients(const HyperCurve& c, const Place& p, const Function& h, int from, int count);

/// val_P(x - x(P)) for finite P, val_P(1/x) at infinity: 2 at branch places, else 1.
int ramification(const Place& p);

/// val_P(dx/y), computed from the local expansions.
int differential_valuation(const HyperCurve& c, const Place& p);

/// div(dx/y) = (g-1)(inf+ + inf-), with the branch places checked to carry 0.
Divisor canonical_divisor(const HyperCurve& c);

/// Principal divisor test: deg E = 0 and div(h) - E >= 0 at every place where
/// h can have poles or E is supported.
bool is_divisor_of(const HyperCurve& c, const Function& h, const Divisor& e);

/// div(h) + D for h in L(D): the part on rational places, plus the degree
/// carried by places that are not rational.
struct ZeroDivisor {
  Divisor rational;
  int other_degree = 0;
  int degree() const { return rational.degree() + other_degree; }
};

/// Throws std::domain_error if h is zero or not in L(D), std::logic_error if
/// the degree bookkeeping fails.
ZeroDivisor zero_divisor(const HyperCurve& c, const Function& h, const Divisor& d);

struct ThetaDivisor {
  thetachar::CharClass chr;
  Divisor divisor;
  /// div(witness) = 2 * divisor - K.
  Function witness;
  bool witness_ok = false;
};

/// sum_{i in T} x_i + ((g - 1 - |T|)/2)(inf+ + inf-); T as given (1-based).
ThetaDivisor theta_divisor(const HyperCurve& c, const std::vector<int>& t);
/// Function realising theta(T) ~ theta(complement of T): prod_{T^c}(x - x_j)/y.
Function complement_witness(const HyperCurve& c, const std::vector<int>& t);

enum class Part { Full, Even, Odd };

struct RRSpace {
  Divisor divisor;
  std::vector<Function> basis;
  std::size_t dim_dual = 0;  // dim L(K - D)
  bool riemann_roch_ok = false;
  bool pole_bounds_ok = false;
  std::size_t dim() const { return basis.size(); }
};

/// Basis of L(D) via the ansatz h = (A + B y)/Q; verifies Riemann-Roch
/// against an independent computation of L(K - D) and checks every basis
/// element's valuations. Throws std::logic_error if either check fails.
RRSpace rr_space(const HyperCurve& c, const Divisor& d);
/// Basis of the sigma-even (B = 0) or sigma-odd (A = 0) part, no checks.
std::vector<Function> rr_basis(const HyperCurve& c, const Divisor& d, Part part = Part::Full);

/// Basis of {l : sum l_k h_k = 0} in the function field.
std::vector<std::vector<Rational>> linear_relations(const std::vector<Function>& hs);
/// Coefficients l with h = sum l_k basis_k, if h lies in the span.
std::optional<std::vector<Rational>> express_in_basis(const Function& h, const std::vector<Function>& basis);

struct ThetaRow {
  thetachar::CharClass chr;
  std::size_t h0 = 0;
  thetachar::Parity parity() const { return h0 % 2 == 1 ? thetachar::Parity::Odd : thetachar::Parity::Even; }
};

struct ThetaTable {
  std::vector<ThetaRow> rows;
  long odd = 0;
  long even = 0;
};

/// h0 of every theta characteristic via rr_space.
ThetaTable h0_all_theta(const HyperCurve& c);

}  // namespace cdv::hyperell
