#pragma once

// Exact scalar fields: the rationals and the Gaussian rationals Q(i).

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace cdv {

using Rational = mpq_class;

/// Raised for malformed canonical text.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// Canonical form: "n" or "n/d" with d > 1 and gcd(n, d) = 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text);

/// Element a + b*i of Q(i), i^2 = -1.
class Gaussian {
 public:
  Gaussian() = default;
  Gaussian(int v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  Gaussian(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  Gaussian(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  Gaussian(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static Gaussian i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_real() const { return sgn(im_) == 0; }

  Gaussian conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }
  Gaussian inverse() const {
    Rational n = norm();
    if (sgn(n) == 0) throw std::domain_error("Gaussian: inverse of zero");
    return {re_ / n, -im_ / n};
  }

  Gaussian operator-() const { return {-re_, -im_}; }
  Gaussian& operator+=(const Gaussian& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Gaussian& operator-=(const Gaussian& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Gaussian& operator*=(const Gaussian& o) {
    if (o.is_real()) {
      re_ *= o.re_;
      im_ *= o.re_;
      return *this;
    }
    Rational r = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    return *this;
  }
  Gaussian& operator/=(const Gaussian& o) { return *this *= o.inverse(); }

  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
  friend bool operator==(const Gaussian& a, const Gaussian& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

inline bool is_zero(const Gaussian& z) { return sgn(z.re()) == 0 && sgn(z.im()) == 0; }

/// Real values print as a rational; others as "(re,im)".
std::string to_string(const Gaussian& z);

Gaussian parse_gaussian(std::string_view text);

/// Field dispatch for generic parsing.
template <class K>
K parse_scalar(std::string_view text);

template <>
inline Rational parse_scalar<Rational>(std::string_view text) {
  return parse_rational(text);
}

template <>
inline Gaussian parse_scalar<Gaussian>(std::string_view text) {
  return parse_gaussian(text);
}

}  // namespace cdv
