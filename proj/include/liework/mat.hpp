#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "liework/errors.hpp"
#include "liework/rat.hpp"

namespace liework {

using Vec = std::vector<Rat>;

inline bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

/// v += c * w
inline void add_scaled(Vec& v, const Rat& c, const Vec& w) {
  if (v.size() != w.size()) throw DimensionMismatch("add_scaled: length mismatch");
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * w[i];
}

inline Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n, Rat(0));
  v[i] = Rat(1);
  return v;
}

/// Dense row-major matrix of exact rationals.
class Mat {
public:
  Mat() : rows_(0), cols_(0) {}
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols, Rat(0)) {}
  Mat(std::initializer_list<std::initializer_list<Rat>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    e_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw DimensionMismatch("Mat: ragged initializer");
      e_.insert(e_.end(), row.begin(), row.end());
    }
  }

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Rat(1);
    return m;
  }
  static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }
  static Mat from_rows(std::size_t cols, const std::vector<Vec>& rows) {
    Mat m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw DimensionMismatch("Mat::from_rows: length mismatch");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  Rat& at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_) throw DimensionMismatch("Mat::at: index out of range");
    return (*this)(i, j);
  }
  const Rat& at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw DimensionMismatch("Mat::at: index out of range");
    return (*this)(i, j);
  }

  Vec row(std::size_t i) const {
    Vec v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
    return v;
  }
  void set_row(std::size_t i, const Vec& v) {
    if (v.size() != cols_) throw DimensionMismatch("Mat::set_row: length mismatch");
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
  }
  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

  Mat operator-() const {
    Mat m(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = -e_[i];
    return m;
  }
  friend Mat operator+(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("Mat +: shape mismatch");
    Mat m(a.rows_, a.cols_);
    for (std::size_t i = 0; i < m.e_.size(); ++i) m.e_[i] = a.e_[i] + b.e_[i];
    return m;
  }
  friend Mat operator-(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("Mat -: shape mismatch");
    Mat m(a.rows_, a.cols_);
    for (std::size_t i = 0; i < m.e_.size(); ++i) m.e_[i] = a.e_[i] - b.e_[i];
    return m;
  }
  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("Mat *: shape mismatch");
    Mat m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rat& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += aik * b(k, j);
      }
    return m;
  }
  friend Mat operator*(const Rat& c, const Mat& a) {
    Mat m(a.rows_, a.cols_);
    for (std::size_t i = 0; i < m.e_.size(); ++i) m.e_[i] = c * a.e_[i];
    return m;
  }
  friend Vec operator*(const Mat& a, const Vec& v) {
    if (a.cols_ != v.size()) throw DimensionMismatch("Mat * Vec: length mismatch");
    Vec out(a.rows_, Rat(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j)
        if (!a(i, j).is_zero()) out[i] += a(i, j) * v[j];
    return out;
  }

  Mat transpose() const {
    Mat m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }

  Rat trace() const {
    if (rows_ != cols_) throw DimensionMismatch("Mat::trace: not square");
    Rat t(0);
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : e_)
      if (!x.is_zero()) return false;
    return true;
  }
  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  /// Row-major flattening, for viewing a square matrix as a vector in dim^2 space.
  Vec flatten() const { return e_; }
  static Mat unflatten(const Vec& v, std::size_t rows, std::size_t cols) {
    if (v.size() != rows * cols) throw DimensionMismatch("Mat::unflatten: length mismatch");
    Mat m(rows, cols);
    m.e_ = v;
    return m;
  }

  friend std::ostream& operator<<(std::ostream& os, const Mat& m) {
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << '[';
      for (std::size_t j = 0; j < m.cols_; ++j) {
        if (j) os << ' ';
        os << m(i, j);
      }
      os << "]\n";
    }
    return os;
  }

private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rat> e_;
};

struct RrefResult {
  Mat m;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

/// Canonical reduced row-echelon form by Gauss-Jordan elimination; exact.
inline RrefResult rref(Mat m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) m.swap_rows(p, r);
    const Rat inv = Rat(1) / m(r, c);
    for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Rat f = m(i, c);
      for (std::size_t j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return RrefResult{std::move(m), r, std::move(pivots)};
}

/// Exact determinant via Gaussian elimination with row swaps.
inline Rat determinant(Mat m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant: not square");
  const std::size_t n = m.rows();
  Rat det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return Rat(0);
    if (p != c) {
      m.swap_rows(p, c);
      det = -det;
    }
    det *= m(c, c);
    const Rat inv = Rat(1) / m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      const Rat f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

/// Exact inverse, or nullopt when singular.
inline std::optional<Mat> inverse(const Mat& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("inverse: not square");
  const std::size_t n = a.rows();
  Mat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = Rat(1);
  }
  auto rr = rref(std::move(aug));
  // invertible iff all n pivots land in the left block
  std::size_t left_pivots = 0;
  for (auto c : rr.pivot_cols)
    if (c < n) ++left_pivots;
  if (left_pivots < n) return std::nullopt;
  Mat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = rr.m(i, n + j);
  return inv;
}

}  // namespace liework
