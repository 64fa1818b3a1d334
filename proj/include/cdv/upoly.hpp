#pragma once

// Dense univariate polynomials over Q, ascending coefficients.

#include <string>
#include <utility>
#include <vector>

#include "cdv/scalar.hpp"

namespace cdv {

class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> ascending);
  static UPoly constant(const Rational& c) { return UPoly({c}); }
  static UPoly x() { return UPoly({Rational(0), Rational(1)}); }
  /// x - c.
  static UPoly linear(const Rational& c) { return UPoly({-c, Rational(1)}); }
  static UPoly from_roots(const std::vector<Rational>& roots, const Rational& lead = 1);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int k) const { return k >= 0 && k <= degree() ? c_[static_cast<std::size_t>(k)] : Rational(0); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  Rational operator()(const Rational& x) const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  UPoly operator-() const;
  UPoly scaled(const Rational& s) const;
  UPoly pow(unsigned n) const;
  UPoly derivative() const;
  /// Coefficients of p(c + t) in t.
  UPoly shifted(const Rational& c) const;
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  /// Quotient and remainder; throws std::domain_error on division by zero.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const;
  static UPoly gcd(UPoly a, UPoly b);

  /// Distinct rational roots, ascending.
  std::vector<Rational> rational_roots() const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Exact square root in Q, if any.
bool rational_sqrt(const Rational& q, Rational& out);

}  // namespace cdv
