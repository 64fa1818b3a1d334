#pragma once

// Rational functions num/den over K. No GCD is ever taken: zero testing is
// by expansion of the numerator, and denominators only shrink when one
// divides another exactly.

#include <span>
#include <stdexcept>
#include <string>
#include <tuple>

#include "cdv/poly.hpp"

namespace cdv {

template <class K>
class RatFunc {
 public:
  using PolyT = Poly<K>;

  RatFunc() : den_(PolyT::constant(K(1))) {}
  RatFunc(int c) : num_(PolyT::constant(K(c))), den_(PolyT::constant(K(1))) {}  // NOLINT
  RatFunc(PolyT num) : num_(std::move(num)), den_(PolyT::constant(K(1))) {}  // NOLINT
  RatFunc(PolyT num, PolyT den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    normalize();
  }

  static RatFunc constant(const K& c) { return RatFunc(PolyT::constant(c)); }
  static RatFunc variable(std::size_t arity, std::size_t i) { return RatFunc(PolyT::variable(arity, i)); }

  const PolyT& num() const { return num_; }
  const PolyT& den() const { return den_; }
  std::size_t arity() const { return std::max(num_.arity(), den_.arity()); }

  /// Exact: the numerator expands to the zero polynomial.
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator-() const { return RatFunc(-num_, den_, Trusted{}); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) { return combine(a, b, false); }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return combine(a, b, true); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
  }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  /// Identity of functions, decided on the cross-multiplied numerator.
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return a.num_ == b.num_;
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  RatFunc scaled(const K& c) const { return RatFunc(num_.scaled(c), den_, Trusted{}); }

  /// Quotient rule; the denominator squares.
  RatFunc derivative(std::size_t var) const {
    if (den_.is_constant()) return RatFunc(num_.derivative(var), den_, Trusted{});
    PolyT n = num_.derivative(var) * den_ - num_ * den_.derivative(var);
    return RatFunc(std::move(n), den_ * den_);
  }

  /// Divides numerator and denominator by `factor` while both are divisible.
  RatFunc cancel(const PolyT& factor) const {
    PolyT n = num_, d = den_;
    if (n.is_zero()) return RatFunc();
    while (!d.is_constant()) {
      auto qd = d.divide_exact(factor);
      if (!qd) break;
      auto qn = n.divide_exact(factor);
      if (!qn) break;
      n = std::move(*qn);
      d = std::move(*qd);
    }
    return RatFunc(std::move(n), std::move(d));
  }

  K evaluate(std::span<const K> point) const {
    K d = den_.evaluate(point);
    if (cdv::is_zero(d)) throw std::domain_error("RatFunc::evaluate: pole at point");
    return num_.evaluate(point) / d;
  }

  RatFunc substitute(std::span<const RatFunc> images) const {
    return substitute_poly(num_, images) / substitute_poly(den_, images);
  }

  std::string to_string(std::span<const std::string> names = {}) const {
    if (den_.is_constant()) return num_.to_string(names);
    return "(" + num_.to_string(names) + ")/(" + den_.to_string(names) + ")";
  }

 private:
  struct Trusted {};
  RatFunc(PolyT num, PolyT den, Trusted) : num_(std::move(num)), den_(std::move(den)) {}

  void normalize() {
    if (num_.is_zero()) {
      std::size_t a = std::max(num_.arity(), den_.arity());
      num_ = PolyT::zero(a);
      den_ = PolyT::constant(K(1));
      return;
    }
    if (den_.is_constant()) {
      K c = den_.leading_coefficient();
      if (!(c == K(1))) num_ = num_.scaled(K(1) / c);
      den_ = PolyT::constant(K(1));
      return;
    }
    // Make the denominator's leading coefficient 1.
    K lc = den_.leading_coefficient();
    if (!(lc == K(1))) {
      K inv = K(1) / lc;
      num_ = num_.scaled(inv);
      den_ = den_.scaled(inv);
    }
  }

  static RatFunc combine(const RatFunc& a, const RatFunc& b, bool subtract) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return subtract ? -b : b;
    auto sum = [&](const PolyT& x, const PolyT& y) { return subtract ? x - y : x + y; };
    if (a.den_ == b.den_) return RatFunc(sum(a.num_, b.num_), a.den_);
    if (b.den_.total_degree() >= a.den_.total_degree()) {
      if (auto q = b.den_.divide_exact(a.den_)) return RatFunc(sum(a.num_ * *q, b.num_), b.den_);
    } else if (auto q = a.den_.divide_exact(b.den_)) {
      return RatFunc(sum(a.num_, b.num_ * *q), a.den_);
    }
    return RatFunc(sum(a.num_ * b.den_, b.num_ * a.den_), a.den_ * b.den_);
  }

  static RatFunc substitute_poly(const PolyT& p, std::span<const RatFunc> images) {
    RatFunc acc;
    for (const auto& [m, c] : p.terms()) {
      RatFunc t = RatFunc::constant(c);
      for (std::size_t i = 0; i < kMaxVars; ++i)
        for (unsigned e = 0; e < m.exp[i]; ++e) t = t * images[i];
      acc = acc + t;
    }
    return acc;
  }

  PolyT num_;
  PolyT den_;
};

template <class K>
bool is_zero(const RatFunc<K>& r) {
  return r.is_zero();
}

/// For a difference a - b this is the cross-multiplied numerator test.
template <class K>
bool ratfunc_is_zero(const RatFunc<K>& r) {
  return r.is_zero();
}

}  // namespace cdv
