#pragma once

// SL(2) acting on binary forms p(z) = a0 z^m + a1 z^(m-1) + ... + am, the
// invariant symplectic pairing for odd m, and transvectants.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "cdv/matrix.hpp"

namespace cdv::repsl2 {

class EvenDegree : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DegreeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Coefficient a_j multiplies z^(m-j) w^j in the homogeneous picture.
template <class R>
struct BinaryForm {
  int degree = 0;
  std::vector<R> a;

  BinaryForm() : a(1, R(0)) {}
  BinaryForm(int m, std::vector<R> coeffs) : degree(m), a(std::move(coeffs)) {
    if (m < 0 || a.size() != static_cast<std::size_t>(m) + 1)
      throw std::invalid_argument("BinaryForm: need m+1 coefficients");
  }
  static BinaryForm zero(int m) { return BinaryForm(m, std::vector<R>(static_cast<std::size_t>(m) + 1, R(0))); }
  /// The form whose only nonzero coefficient is a_j = 1.
  static BinaryForm basis(int m, int j) {
    BinaryForm f = zero(m);
    f.a.at(static_cast<std::size_t>(j)) = R(1);
    return f;
  }

  friend BinaryForm operator+(const BinaryForm& u, const BinaryForm& v) {
    check_same(u, v);
    BinaryForm r = u;
    for (std::size_t j = 0; j < r.a.size(); ++j) r.a[j] = r.a[j] + v.a[j];
    return r;
  }
  friend BinaryForm operator-(const BinaryForm& u, const BinaryForm& v) {
    check_same(u, v);
    BinaryForm r = u;
    for (std::size_t j = 0; j < r.a.size(); ++j) r.a[j] = r.a[j] - v.a[j];
    return r;
  }
  BinaryForm scaled(const R& c) const {
    BinaryForm r = *this;
    for (auto& x : r.a) x = x * c;
    return r;
  }
  friend bool operator==(const BinaryForm& u, const BinaryForm& v) { return u.degree == v.degree && u.a == v.a; }

  bool is_zero() const {
    for (const auto& x : a)
      if (!cdv::is_zero(x)) return false;
    return true;
  }

  static void check_same(const BinaryForm& u, const BinaryForm& v) {
    if (u.degree != v.degree) throw DegreeMismatch("BinaryForm: degree mismatch");
  }
};

inline Rational factorial(int n) {
  Rational r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

inline Rational binomial(int n, int k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

/// sum_{l < (m+1)/2} (-1)^l l! (m-l)! (u_l v_{m-l} - u_{m-l} v_l).
template <class R>
R symplectic_form(const BinaryForm<R>& u, const BinaryForm<R>& v) {
  BinaryForm<R>::check_same(u, v);
  const int m = u.degree;
  if (m % 2 == 0) throw EvenDegree("symplectic_form: degree must be odd");
  R acc(0);
  for (int l = 0; l < (m + 1) / 2; ++l) {
    Rational c = factorial(l) * factorial(m - l);
    if (l % 2 == 1) c = -c;
    const auto i = static_cast<std::size_t>(l), j = static_cast<std::size_t>(m - l);
    acc = acc + (u.a[i] * v.a[j] - u.a[j] * v.a[i]) * R(c);
  }
  return acc;
}

/// The (m+1)x(m+1) matrix of symplectic_form on the coefficient basis.
Matrix<Rational> symplectic_matrix(int m);

enum class Generator { E, H, F };
std::string generator_name(Generator x);
inline constexpr Generator kGenerators[3] = {Generator::E, Generator::H, Generator::F};

/// Infinitesimal action. E = z d/dw, F = w d/dz, H = z d/dz - w d/dw, so
/// (Eu)_j = (j+1) u_{j+1}, (Fu)_j = (m-j+1) u_{j-1}, (Hu)_j = (m-2j) u_j.
template <class R>
BinaryForm<R> generator_action(Generator x, const BinaryForm<R>& u) {
  const int m = u.degree;
  BinaryForm<R> r = BinaryForm<R>::zero(m);
  for (int j = 0; j <= m; ++j) {
    const auto sj = static_cast<std::size_t>(j);
    switch (x) {
      case Generator::E:
        if (j < m) r.a[sj] = u.a[sj + 1] * R(Rational(j + 1));
        break;
      case Generator::F:
        if (j > 0) r.a[sj] = u.a[sj - 1] * R(Rational(m - j + 1));
        break;
      case Generator::H:
        r.a[sj] = u.a[sj] * R(Rational(m - 2 * j));
        break;
    }
  }
  return r;
}

namespace detail {

template <class R>
BinaryForm<R> d_dz(const BinaryForm<R>& f) {
  if (f.degree == 0) return BinaryForm<R>::zero(0);
  BinaryForm<R> r = BinaryForm<R>::zero(f.degree - 1);
  for (int j = 0; j < f.degree; ++j)
    r.a[static_cast<std::size_t>(j)] = f.a[static_cast<std::size_t>(j)] * R(Rational(f.degree - j));
  return r;
}

template <class R>
BinaryForm<R> d_dw(const BinaryForm<R>& f) {
  if (f.degree == 0) return BinaryForm<R>::zero(0);
  BinaryForm<R> r = BinaryForm<R>::zero(f.degree - 1);
  for (int j = 1; j <= f.degree; ++j)
    r.a[static_cast<std::size_t>(j - 1)] = f.a[static_cast<std::size_t>(j)] * R(Rational(j));
  return r;
}

template <class R>
BinaryForm<R> d_dz_pow(BinaryForm<R> f, int n) {
  for (int i = 0; i < n; ++i) f = d_dz(f);
  return f;
}

template <class R>
BinaryForm<R> d_dw_pow(BinaryForm<R> f, int n) {
  for (int i = 0; i < n; ++i) f = d_dw(f);
  return f;
}

template <class R>
BinaryForm<R> product(const BinaryForm<R>& f, const BinaryForm<R>& g) {
  BinaryForm<R> r = BinaryForm<R>::zero(f.degree + g.degree);
  for (std::size_t i = 0; i < f.a.size(); ++i)
    for (std::size_t j = 0; j < g.a.size(); ++j) r.a[i + j] = r.a[i + j] + f.a[i] * g.a[j];
  return r;
}

}  // namespace detail

/// Classical r-th transvectant
/// (f, g)_r = sum_k (-1)^k C(r, k) d^r f / dz^(r-k) dw^k * d^r g / dz^k dw^(r-k).
template <class R>
BinaryForm<R> transvectant(const BinaryForm<R>& f, const BinaryForm<R>& g, int r) {
  if (r < 0 || r > f.degree || r > g.degree) throw std::invalid_argument("transvectant: order out of range");
  BinaryForm<R> acc = BinaryForm<R>::zero(f.degree + g.degree - 2 * r);
  for (int k = 0; k <= r; ++k) {
    Rational c = binomial(r, k);
    if (k % 2 == 1) c = -c;
    BinaryForm<R> df = detail::d_dw_pow(detail::d_dz_pow(f, r - k), k);
    BinaryForm<R> dg = detail::d_dw_pow(detail::d_dz_pow(g, k), r - k);
    acc = acc + detail::product(df, dg).scaled(R(c));
  }
  return acc;
}

/// (m-1)-th transvectant; for m = 1 this is u*v, so moment_map(u, u) = u^2.
template <class R>
BinaryForm<R> moment_map(const BinaryForm<R>& u, const BinaryForm<R>& v) {
  BinaryForm<R>::check_same(u, v);
  if (u.degree % 2 == 0) throw EvenDegree("moment_map: degree must be odd");
  return transvectant(u, v, u.degree - 1);
}

/// (u, v)_m = top_transvectant_constant(m) * symplectic_form(u, v).
inline Rational top_transvectant_constant(int m) { return factorial(m); }

/// Image of c0 z^2 + c1 zw + c2 w^2 under z^2 -> [[0,1],[0,0]],
/// zw -> diag(1/2, -1/2), w^2 -> -[[0,0],[1,0]]; returns its determinant.
template <class R>
R sl2_determinant(const BinaryForm<R>& q) {
  if (q.degree != 2) throw DegreeMismatch("sl2_determinant: expects a quadratic form");
  const R half(Rational(1, 2));
  R d = q.a[1] * half;
  return -(d * d) + q.a[0] * q.a[2];
}

struct CheckFailure {
  Generator x;
  int i;
  int j;
};

struct Sl2Report {
  int m = 0;
  std::size_t cases = 0;
  std::vector<CheckFailure> failures;
  bool passed() const { return failures.empty(); }
  std::string describe_failures() const;
};

/// w(Xu, v) + w(u, Xv) = 0 for X in {E,H,F} and all basis pairs.
Sl2Report invariance_check(int m);
/// mu(Xu, v) + mu(u, Xv) = X.mu(u, v) for X in {E,H,F} and all basis pairs.
Sl2Report equivariance_check(int m);
/// [H,E] = 2E, [H,F] = -2F, [E,F] = H on the basis of S^m.
bool commutation_check(int m);
/// (u,v)_m = m! w(u,v) on all basis pairs.
bool top_transvectant_check(int m);

/// For m = 1, det of the sl2 image of moment_map(u, u) with u symbolic.
Poly<Rational> nilpotency_determinant_m1();

struct IsotropyReport {
  std::size_t dimension = 0;
  bool isotropic = false;
  Rational omega_e0_e3;
  bool passed() const { return dimension == 2 && isotropic && omega_e0_e3 != 0; }
};
/// The span of the a2, a3 coordinate vectors in S^3.
IsotropyReport isotropy_check_m3();

/// Degree g - 1 - deg L of L* K^(1/2).
int degree_bookkeeping(int g, int deg_l);

}  // namespace cdv::repsl2
