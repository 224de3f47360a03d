#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lts/error.hpp"
#include "lts/gaussian.hpp"

namespace lts {

template <class K>
using Vec = std::vector<K>;

// Dense row-major matrix over an exact field K.
template <class K>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<K>> rows) {
    r_ = rows.size();
    c_ = r_ ? rows.begin()->size() : 0;
    for (const auto& row : rows) {
      if (row.size() != c_) throw Error(Errc::DimensionMismatch, "ragged matrix literal");
      a_.insert(a_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
  }
  static Matrix from_rows(const std::vector<Vec<K>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw Error(Errc::DimensionMismatch, "row length mismatch");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  K& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const K& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  Vec<K> row(std::size_t i) const { return Vec<K>(a_.begin() + i * c_, a_.begin() + (i + 1) * c_); }
  Vec<K> col(std::size_t j) const {
    Vec<K> v(r_);
    for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  Matrix transpose() const {
    Matrix t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.c_ != b.r_) throw Error(Errc::DimensionMismatch, "matrix product shapes");
    Matrix m(a.r_, b.c_);
    for (std::size_t i = 0; i < a.r_; ++i)
      for (std::size_t k = 0; k < a.c_; ++k) {
        const K& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.c_; ++j) m(i, j) += x * b(k, j);
      }
    return m;
  }
  friend Vec<K> operator*(const Matrix& a, const Vec<K>& v) {
    if (a.c_ != v.size()) throw Error(Errc::DimensionMismatch, "matrix-vector shapes");
    Vec<K> out(a.r_);
    for (std::size_t i = 0; i < a.r_; ++i)
      for (std::size_t k = 0; k < a.c_; ++k)
        if (!v[k].is_zero()) out[i] += a(i, k) * v[k];
    return out;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    for (std::size_t k = 0; k < a.a_.size(); ++k) a.a_[k] += b.a_[k];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    for (std::size_t k = 0; k < a.a_.size(); ++k) a.a_[k] -= b.a_[k];
    return a;
  }
  friend Matrix operator*(const K& s, Matrix a) {
    for (auto& x : a.a_) x *= s;
    return a;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
  }

  K trace() const {
    K s;
    for (std::size_t i = 0; i < std::min(r_, c_); ++i) s += (*this)(i, i);
    return s;
  }

  // In-place reduced row echelon form; returns pivot columns.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < c_ && r < r_; ++c) {
      std::size_t p = r;
      while (p < r_ && (*this)(p, c).is_zero()) ++p;
      if (p == r_) continue;
      if (p != r)
        for (std::size_t j = 0; j < c_; ++j) std::swap((*this)(p, j), (*this)(r, j));
      K inv = (*this)(r, c).inv();
      for (std::size_t j = c; j < c_; ++j) (*this)(r, j) *= inv;
      for (std::size_t i = 0; i < r_; ++i) {
        if (i == r || (*this)(i, c).is_zero()) continue;
        K f = (*this)(i, c);
        for (std::size_t j = c; j < c_; ++j)
          if (!(*this)(r, j).is_zero()) (*this)(i, j) -= f * (*this)(r, j);
      }
      piv.push_back(c);
      ++r;
    }
    return piv;
  }

  std::size_t rank() const {
    Matrix m = *this;
    return m.rref().size();
  }

  // Basis of {x : A x = 0}, one vector per free column.
  std::vector<Vec<K>> nullspace() const {
    Matrix m = *this;
    auto piv = m.rref();
    std::vector<bool> is_piv(c_, false);
    for (auto p : piv) is_piv[p] = true;
    std::vector<Vec<K>> basis;
    for (std::size_t f = 0; f < c_; ++f) {
      if (is_piv[f]) continue;
      Vec<K> v(c_);
      v[f] = K(1);
      for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m(i, f);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  K determinant() const {
    if (r_ != c_) throw Error(Errc::DimensionMismatch, "determinant of non-square matrix");
    Matrix m = *this;
    K det(1);
    for (std::size_t c = 0; c < c_; ++c) {
      std::size_t p = c;
      while (p < r_ && m(p, c).is_zero()) ++p;
      if (p == r_) return K();
      if (p != c) {
        for (std::size_t j = 0; j < c_; ++j) std::swap(m(p, j), m(c, j));
        det = -det;
      }
      det *= m(c, c);
      K inv = m(c, c).inv();
      for (std::size_t i = c + 1; i < r_; ++i) {
        if (m(i, c).is_zero()) continue;
        K f = m(i, c) * inv;
        for (std::size_t j = c; j < c_; ++j) m(i, j) -= f * m(c, j);
      }
    }
    return det;
  }

  Matrix inverse() const {
    if (r_ != c_) throw Error(Errc::DimensionMismatch, "inverse of non-square matrix");
    Matrix aug(r_, 2 * c_);
    for (std::size_t i = 0; i < r_; ++i) {
      for (std::size_t j = 0; j < c_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, c_ + i) = K(1);
    }
    auto piv = aug.rref();
    if (piv.size() < r_ || piv[r_ - 1] >= c_) throw Error(Errc::SingularMatrix, "matrix is not invertible");
    Matrix inv(r_, c_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) inv(i, j) = aug(i, c_ + j);
    return inv;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < r_; ++i) {
      s += i ? ", [" : "[";
      for (std::size_t j = 0; j < c_; ++j) s += (j ? ", " : "") + (*this)(i, j).to_string();
      s += "]";
    }
    return s + "]";
  }

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<K> a_;
};

// Incremental reduced echelon basis. Rows are added one at a time and kept
// fully reduced, so the basis never exceeds the number of columns.
template <class K>
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t cols) : cols_(cols) {}

  // Returns true when the row was independent of the current span.
  bool add(Vec<K> v) {
    reduce(v);
    std::size_t p = 0;
    while (p < cols_ && v[p].is_zero()) ++p;
    if (p == cols_) return false;
    K inv = v[p].inv();
    for (std::size_t j = p; j < cols_; ++j) v[j] *= inv;
    for (auto& [q, row] : rows_) {
      if (row[p].is_zero()) continue;
      K f = row[p];
      for (std::size_t j = p; j < cols_; ++j)
        if (!v[j].is_zero()) row[j] -= f * v[j];
    }
    auto it = rows_.begin();
    while (it != rows_.end() && it->first < p) ++it;
    rows_.insert(it, {p, std::move(v)});
    return true;
  }

  void reduce(Vec<K>& v) const {
    if (v.size() != cols_) throw Error(Errc::DimensionMismatch, "row length mismatch");
    for (const auto& [p, row] : rows_) {
      if (v[p].is_zero()) continue;
      K f = v[p];
      for (std::size_t j = p; j < cols_; ++j)
        if (!row[j].is_zero()) v[j] -= f * row[j];
    }
  }

  bool contains(Vec<K> v) const {
    reduce(v);
    for (const auto& x : v)
      if (!x.is_zero()) return false;
    return true;
  }

  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  bool full() const { return rows_.size() == cols_; }

  std::vector<std::size_t> pivots() const {
    std::vector<std::size_t> p;
    for (const auto& r : rows_) p.push_back(r.first);
    return p;
  }
  std::vector<Vec<K>> basis() const {
    std::vector<Vec<K>> b;
    for (const auto& r : rows_) b.push_back(r.second);
    return b;
  }

  std::vector<Vec<K>> nullspace() const {
    std::vector<bool> is_piv(cols_, false);
    for (const auto& r : rows_) is_piv[r.first] = true;
    std::vector<Vec<K>> out;
    for (std::size_t f = 0; f < cols_; ++f) {
      if (is_piv[f]) continue;
      Vec<K> v(cols_);
      v[f] = K(1);
      for (const auto& [p, row] : rows_) v[p] = -row[f];
      out.push_back(std::move(v));
    }
    return out;
  }

 private:
  std::size_t cols_;
  std::vector<std::pair<std::size_t, Vec<K>>> rows_;
};

using ScalarMatrix = Matrix<Scalar>;

}  // namespace lts
