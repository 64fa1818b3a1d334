#pragma once

// Dense matrices over exact rings, with fraction-free (Bareiss) elimination
// for rank and nullspace.

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cdv/ratfunc.hpp"

namespace cdv {

template <class R>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const R& fill = R()) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n, R(0));
    for (std::size_t i = 0; i < n; ++i) m(i, i) = R(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  R& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const R& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<R> row(std::size_t i) const {
    return std::vector<R>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
    Matrix r(a.rows_, b.cols_, R(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (is_zero(a(i, k))) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
      }
    return r;
  }

  std::vector<R> apply(const std::vector<R>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("Matrix: shape mismatch in apply");
    std::vector<R> out(rows_, R(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<R> data_;
};

namespace detail {

inline Rational exact_quotient(const Rational& a, const Rational& b) { return a / b; }
inline Gaussian exact_quotient(const Gaussian& a, const Gaussian& b) { return a / b; }
template <class K>
Poly<K> exact_quotient(const Poly<K>& a, const Poly<K>& b) {
  auto q = a.divide_exact(b);
  if (!q) throw std::logic_error("Bareiss: inexact polynomial division");
  return std::move(*q);
}

}  // namespace detail

/// Row echelon form produced by fraction-free elimination. Every entry is a
/// minor of the input, so the ring never needs fractions.
template <class R>
struct Echelon {
  Matrix<R> reduced;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank() const { return pivot_cols.size(); }
};

template <class R>
Echelon<R> bareiss_echelon(Matrix<R> m) {
  Echelon<R> out;
  R prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && is_zero(m(piv, c))) ++piv;
    if (piv == m.rows()) continue;
    m.swap_rows(r, piv);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        R t = m(r, c) * m(i, j) - m(i, c) * m(r, j);
        m(i, j) = detail::exact_quotient(t, prev);
      }
      m(i, c) = R(0);
    }
    // Rows above the pivot row keep their entries; columns left of c in
    // rows below are already zero.
    prev = m(r, c);
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

/// Basis of {v : Mv = 0} over the fraction field of R, with entries in R.
/// Each free column f yields one vector with v_f = (last pivot) and the
/// pivot components back-substituted; the divisions are exact by Cramer.
template <class R>
std::vector<std::vector<R>> nullspace_fraction_free(const Matrix<R>& m) {
  Echelon<R> e = bareiss_echelon(m);
  const Matrix<R>& u = e.reduced;
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  R scale = e.rank() == 0 ? R(1) : u(e.rank() - 1, e.pivot_cols.back());
  std::vector<std::vector<R>> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<R> v(n, R(0));
    v[f] = scale;
    for (std::size_t k = e.rank(); k-- > 0;) {
      std::size_t pc = e.pivot_cols[k];
      R s(0);
      for (std::size_t j = pc + 1; j < n; ++j)
        if (!is_zero(v[j]) && !is_zero(u(k, j))) s += u(k, j) * v[j];
      v[pc] = detail::exact_quotient(-s, u(k, pc));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class R>
std::size_t rank(const Matrix<R>& m) {
  return bareiss_echelon(m).rank();
}

/// Clears row denominators so that elimination runs in the polynomial ring.
template <class K>
Matrix<Poly<K>> clear_row_denominators(const Matrix<RatFunc<K>>& m) {
  Matrix<Poly<K>> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Poly<K> common = Poly<K>::constant(K(1));
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto& d = m(i, j).den();
      if (d.is_constant()) continue;
      if (!common.divide_exact(d)) common = common * d;
    }
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = detail::exact_quotient(m(i, j).num() * common, m(i, j).den());
  }
  return out;
}

template <class K>
std::size_t rank(const Matrix<RatFunc<K>>& m) {
  return rank(clear_row_denominators(m));
}

/// Nullspace over the rational-function field; vectors have polynomial entries.
template <class K>
std::vector<std::vector<Poly<K>>> nullspace(const Matrix<RatFunc<K>>& m) {
  return nullspace_fraction_free(clear_row_denominators(m));
}

template <class R>
std::vector<std::vector<R>> nullspace(const Matrix<R>& m) {
  return nullspace_fraction_free(m);
}

}  // namespace cdv
