#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "liework/errors.hpp"
#include "liework/mat.hpp"

namespace liework {

/// Linear subspace of Q^n held as a canonical RREF basis, so equal subspaces
/// have bit-identical representations and equality is structural.
class Subspace {
public:
  static Subspace zero(std::size_t ambient) { return Subspace(ambient, Mat(0, ambient)); }
  static Subspace full(std::size_t ambient) { return Subspace(ambient, Mat::identity(ambient)); }

  /// Span of arbitrary rows; canonicalizes and drops dependent rows.
  static Subspace from_span(std::size_t ambient, const Mat& rows) {
    if (rows.cols() != ambient) throw DimensionMismatch("Subspace::from_span: ambient mismatch");
    auto rr = rref(rows);
    Mat basis(rr.rank, ambient);
    for (std::size_t i = 0; i < rr.rank; ++i)
      for (std::size_t j = 0; j < ambient; ++j) basis(i, j) = rr.m(i, j);
    return Subspace(ambient, std::move(basis), rr.pivot_cols);
  }
  static Subspace from_span(std::size_t ambient, const std::vector<Vec>& rows) {
    return from_span(ambient, Mat::from_rows(ambient, rows));
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Mat& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// What is left of v after eliminating along the basis; zero iff v belongs here.
  Vec residual(const Vec& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("Subspace::residual: length mismatch");
    Vec r = v;
    for (std::size_t a = 0; a < dim(); ++a) {
      const Rat c = r[pivots_[a]];
      if (!c.is_zero()) add_scaled(r, -c, basis_.row(a));
    }
    return r;
  }

  bool contains(const Vec& v) const { return is_zero_vec(residual(v)); }

  /// Coordinates of v in the canonical basis, or nullopt when v lies outside.
  std::optional<Vec> coords(const Vec& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("Subspace::coords: length mismatch");
    Vec c(dim());
    Vec r = v;
    for (std::size_t a = 0; a < dim(); ++a) {
      c[a] = r[pivots_[a]];
      if (!c[a].is_zero()) add_scaled(r, -c[a], basis_.row(a));
    }
    if (!is_zero_vec(r)) return std::nullopt;
    return c;
  }

  /// Matrix M with kernel(M) equal to this subspace: M v = v - sum_a v[p_a] b_a.
  Mat residual_matrix() const {
    Mat m = Mat::identity(ambient_);
    for (std::size_t a = 0; a < dim(); ++a)
      for (std::size_t i = 0; i < ambient_; ++i) m(i, pivots_[a]) -= basis_(a, i);
    return m;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

private:
  Subspace(std::size_t ambient, Mat basis) : ambient_(ambient), basis_(std::move(basis)) {
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
      std::size_t j = 0;
      while (j < ambient_ && basis_(i, j).is_zero()) ++j;
      pivots_.push_back(j);
    }
  }
  Subspace(std::size_t ambient, Mat basis, std::vector<std::size_t> pivots)
      : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  std::size_t ambient_;
  Mat basis_;  // RREF, full row rank
  std::vector<std::size_t> pivots_;
};

/// Null space of m, canonical.
inline Subspace kernel(const Mat& m) {
  const std::size_t n = m.cols();
  auto rr = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (auto c : rr.pivot_cols) is_pivot[c] = true;
  std::vector<Vec> rows;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v(n, Rat(0));
    v[f] = Rat(1);
    for (std::size_t a = 0; a < rr.rank; ++a) v[rr.pivot_cols[a]] = -rr.m(a, f);
    rows.push_back(std::move(v));
  }
  return Subspace::from_span(n, rows);
}

inline void require_same_ambient(const Subspace& a, const Subspace& b, const char* op) {
  if (a.ambient_dim() != b.ambient_dim())
    throw DimensionMismatch(std::string(op) + ": ambient dimension mismatch");
}

inline Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b, "subspace_sum");
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < a.dim(); ++i) rows.push_back(a.basis().row(i));
  for (std::size_t i = 0; i < b.dim(); ++i) rows.push_back(b.basis().row(i));
  return Subspace::from_span(a.ambient_dim(), rows);
}

/// Intersection by the double-kernel method: x lies in both iff both residual maps kill it.
inline Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b, "subspace_intersect");
  const std::size_t n = a.ambient_dim();
  const Mat ra = a.residual_matrix();
  const Mat rb = b.residual_matrix();
  Mat stacked(2 * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      stacked(i, j) = ra(i, j);
      stacked(n + i, j) = rb(i, j);
    }
  return kernel(stacked);
}

inline bool subspace_equal(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b, "subspace_equal");
  return a == b;
}

inline bool subspace_contains(const Subspace& outer, const Subspace& inner) {
  require_same_ambient(outer, inner, "subspace_contains");
  for (std::size_t i = 0; i < inner.dim(); ++i)
    if (!outer.contains(inner.basis().row(i))) return false;
  return true;
}

/// { M v : v in s }, as a subspace of the target space.
inline Subspace image_subspace(const Subspace& s, const Mat& m) {
  if (m.cols() != s.ambient_dim()) throw DimensionMismatch("image_subspace: shape mismatch");
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < s.dim(); ++i) rows.push_back(m * s.basis().row(i));
  return Subspace::from_span(m.rows(), rows);
}

}  // namespace liework
