#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "liework/errors.hpp"
#include "liework/lie_algebra.hpp"
#include "liework/mat.hpp"
#include "liework/subspace.hpp"

namespace liework {

/// Positive-definite symmetric rational inner product on the underlying space.
class MetricTensor {
public:
  explicit MetricTensor(Mat q) : q_(std::move(q)) {
    if (q_.rows() != q_.cols()) throw ValidationError("metric: matrix is not square");
    if (!q_.is_symmetric()) throw ValidationError("metric: matrix is not symmetric");
    // positive definiteness via leading principal minors, exact
    for (std::size_t k = 1; k <= q_.rows(); ++k) {
      Mat lead(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) lead(i, j) = q_(i, j);
      if (determinant(lead).sign() <= 0)
        throw ValidationError("metric: not positive definite (leading minor " +
                              std::to_string(k) + " is not positive)");
    }
  }

  static MetricTensor identity(std::size_t n) { return MetricTensor(Mat::identity(n)); }

  std::size_t parent_dim() const { return q_.rows(); }
  const Mat& q() const { return q_; }

  friend bool operator==(const MetricTensor& a, const MetricTensor& b) { return a.q_ == b.q_; }

private:
  Mat q_;
};

/// κ(e_i, e_j) = trace(ad e_i · ad e_j).
inline Mat killing_form(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<Mat> ads;
  ads.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ads.push_back(ad(g, unit_vec(n, i)));
  Mat k(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Rat t(0);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) t += ads[i](r, s) * ads[j](s, r);
      k(i, j) = t;
      k(j, i) = std::move(t);
    }
  return k;
}

inline Subspace derived_subalgebra(const LieAlgebra& g) {
  return bracket_span(g, Subspace::full(g.dim()), Subspace::full(g.dim()));
}

/// Largest solvable ideal, by Cartan's criterion: the κ-orthogonal of [g,g].
/// Valid in characteristic zero; the result is post-verified.
inline AlgSubspace radical(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  const Mat k = killing_form(g);
  const Subspace der = derived_subalgebra(g);
  Mat system(der.dim(), n);
  for (std::size_t r = 0; r < der.dim(); ++r)
    system.set_row(r, k * der.basis().row(r));
  AlgSubspace rad{&g, kernel(system)};
  if (!is_ideal(g, rad)) throw InternalCheckError("radical: result is not an ideal");
  if (!is_solvable(restrict_to_subalgebra(g, rad.space)))
    throw InternalCheckError("radical: result is not solvable");
  return rad;
}

struct NilradicalReport {
  const LieAlgebra* algebra = nullptr;
  AlgSubspace nilradical;
  // certificate
  std::size_t nilpotency_class = 0;  // of the nilradical under the restricted bracket
  std::size_t ideal_checks = 0;      // bracket containments verified in the parent
  std::size_t radical_dim = 0;
  std::size_t hull_dim = 0;          // associative algebra generated by ad of the radical
  std::size_t hull_radical_dim = 0;  // its trace radical
};

/// Largest nilpotent ideal. Computed inside the radical r: close {ad_r(x)} into
/// an associative matrix algebra A, take its trace radical Rad(A) (Dickson,
/// char 0), and pull back {x in r : ad_r(x) in Rad(A)}. Post-verified to be a
/// nilpotent ideal of g.
inline NilradicalReport nilradical(const LieAlgebra& g) {
  NilradicalReport report;
  report.algebra = &g;

  const AlgSubspace rad = radical(g);
  const std::size_t k = rad.space.dim();
  report.radical_dim = k;

  // ad of the radical basis acting on the radical, in radical coordinates
  std::vector<Mat> gens;
  for (std::size_t i = 0; i < k; ++i) {
    Mat gi(k, k);
    for (std::size_t j = 0; j < k; ++j) {
      const Vec v = bracket(g, rad.space.basis().row(i), rad.space.basis().row(j));
      auto c = rad.space.coords(v);
      if (!c) throw InternalCheckError("nilradical: radical is not bracket-closed");
      for (std::size_t t = 0; t < k; ++t) gi(t, j) = (*c)[t];
    }
    gens.push_back(std::move(gi));
  }

  // associative hull: every word in the generators is a generator times a
  // shorter word, so closing under left multiplication suffices
  Subspace hull = Subspace::zero(k * k);
  {
    std::vector<Vec> rows;
    for (const auto& gi : gens) rows.push_back(gi.flatten());
    hull = Subspace::from_span(k * k, rows);
    for (;;) {
      std::vector<Vec> next;
      for (std::size_t r = 0; r < hull.dim(); ++r) next.push_back(hull.basis().row(r));
      for (const auto& gi : gens)
        for (std::size_t r = 0; r < hull.dim(); ++r)
          next.push_back((gi * Mat::unflatten(hull.basis().row(r), k, k)).flatten());
      Subspace grown = Subspace::from_span(k * k, next);
      if (grown.dim() == hull.dim()) break;
      hull = std::move(grown);
    }
  }
  report.hull_dim = hull.dim();

  // trace radical of the hull
  std::vector<Mat> hull_basis;
  for (std::size_t r = 0; r < hull.dim(); ++r)
    hull_basis.push_back(Mat::unflatten(hull.basis().row(r), k, k));
  Mat gram(hull.dim(), hull.dim());
  for (std::size_t a = 0; a < hull.dim(); ++a)
    for (std::size_t b = a; b < hull.dim(); ++b) {
      Rat t = (hull_basis[a] * hull_basis[b]).trace();
      gram(a, b) = t;
      gram(b, a) = std::move(t);
    }
  const Subspace rad_coords = kernel(gram);
  std::vector<Vec> rad_rows;
  for (std::size_t r = 0; r < rad_coords.dim(); ++r) {
    Vec row(k * k, Rat(0));
    for (std::size_t a = 0; a < hull.dim(); ++a)
      add_scaled(row, rad_coords.basis()(r, a), hull.basis().row(a));
    rad_rows.push_back(std::move(row));
  }
  const Subspace hull_radical = Subspace::from_span(k * k, rad_rows);
  report.hull_radical_dim = hull_radical.dim();

  // pull back: x in r with ad_r(x) inside the hull radical
  Mat ad_map(k * k, k);  // column i = flattened ad_r of the i-th radical basis vector
  for (std::size_t i = 0; i < k; ++i) {
    const Vec f = gens[i].flatten();
    for (std::size_t r = 0; r < k * k; ++r) ad_map(r, i) = f[r];
  }
  const Subspace nil_coords = kernel(hull_radical.residual_matrix() * ad_map);
  std::vector<Vec> nil_rows;
  for (std::size_t r = 0; r < nil_coords.dim(); ++r) {
    Vec row(g.dim(), Rat(0));
    for (std::size_t i = 0; i < k; ++i)
      add_scaled(row, nil_coords.basis()(r, i), rad.space.basis().row(i));
    nil_rows.push_back(std::move(row));
  }
  report.nilradical = {&g, Subspace::from_span(g.dim(), nil_rows)};

  // post-verification
  if (!is_ideal(g, report.nilradical))
    throw InternalCheckError("nilradical: result is not an ideal");
  report.ideal_checks = g.dim() * report.nilradical.space.dim();
  const LieAlgebra restricted = restrict_to_subalgebra(g, report.nilradical.space);
  const auto series = lower_central_series(restricted);
  if (series.back().space.dim() != 0)
    throw InternalCheckError("nilradical: result is not nilpotent");
  report.nilpotency_class = series.size() - 1;
  return report;
}

namespace detail {
/// Rows of the linear system D[e_i,e_j] = [De_i,e_j] + [e_i,De_j], unknowns
/// vec(D) row-major.
inline std::vector<Vec> derivation_equations(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  const auto u = [n](std::size_t row, std::size_t col) { return row * n + col; };
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vec cij = g.bracket_basis(i, j);
      for (std::size_t m = 0; m < n; ++m) {
        Vec row(n * n, Rat(0));
        for (std::size_t l = 0; l < n; ++l)
          if (!cij[l].is_zero()) row[u(m, l)] += cij[l];
        for (std::size_t kk = 0; kk < n; ++kk) {
          const Rat ckj = g.bracket_basis(kk, j)[m];
          if (!ckj.is_zero()) row[u(kk, i)] -= ckj;
          const Rat cik = g.bracket_basis(i, kk)[m];
          if (!cik.is_zero()) row[u(kk, j)] -= cik;
        }
        rows.push_back(std::move(row));
      }
    }
  return rows;
}
}  // namespace detail

/// All derivations of g, as the solution space of the Leibniz linear system.
inline LinMapAlg derivations(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  const auto rows = detail::derivation_equations(g);
  const Mat system = Mat::from_rows(n * n, rows);
  return LinMapAlg::from_space(g, kernel(system), /*require_derivations=*/true);
}

/// Derivations D that are additionally skew for q: Dᵀq + qD = 0.
inline LinMapAlg skew_derivations(const LieAlgebra& g, const MetricTensor& q) {
  const std::size_t n = g.dim();
  if (q.parent_dim() != n) throw DimensionMismatch("skew_derivations: metric dimension");
  auto rows = detail::derivation_equations(g);
  const auto u = [n](std::size_t row, std::size_t col) { return row * n + col; };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      Vec row(n * n, Rat(0));
      for (std::size_t kk = 0; kk < n; ++kk) {
        row[u(kk, a)] += q.q()(kk, b);
        row[u(kk, b)] += q.q()(a, kk);
      }
      rows.push_back(std::move(row));
    }
  const Mat system = Mat::from_rows(n * n, rows);
  LinMapAlg result = LinMapAlg::from_space(g, kernel(system), /*require_derivations=*/true);
  for (const auto& d : result.basis_maps())
    if (!(d.transpose() * q.q() + q.q() * d).is_zero())
      throw InternalCheckError("skew_derivations: solution is not skew for q");
  return result;
}

/// Lie algebra of the isometry group of a nilpotent group with left-invariant
/// metric: the semidirect sum of the algebra with its skew derivations.
struct IsometryAlgebra {
  std::shared_ptr<const LieAlgebra> base;
  MetricTensor metric;
  LinMapAlg stab;   // skew derivations of the base
  std::shared_ptr<const LieAlgebra> total;
  AlgSubspace n_embed;  // the base as the leading coordinate subspace of total
};

inline IsometryAlgebra isometry_algebra(const LieAlgebra& n, const MetricTensor& q) {
  if (q.parent_dim() != n.dim()) throw DimensionMismatch("isometry_algebra: metric dimension");
  if (!is_nilpotent(n))
    throw PreconditionError("isometry_algebra: base algebra is not nilpotent");
  auto base = std::make_shared<const LieAlgebra>(n);
  LinMapAlg stab = skew_derivations(*base, q);
  SemidirectSum sd = semidirect(*base, stab);
  auto total = std::make_shared<const LieAlgebra>(std::move(sd.total));

  IsometryAlgebra iso{std::move(base), q, std::move(stab), total, {total.get(), sd.base_part}};
  if (iso.total->dim() != iso.base->dim() + iso.stab.dim())
    throw InternalCheckError("isometry_algebra: dimension bookkeeping failed");
  if (!is_ideal(*iso.total, iso.n_embed))
    throw InternalCheckError("isometry_algebra: embedded base is not an ideal");
  if (restrict_to_subalgebra(*iso.total, iso.n_embed.space).structure() != n.structure())
    throw InternalCheckError("isometry_algebra: embedded base does not restrict to the base");
  return iso;
}

struct NilradicalVerdict {
  bool holds = false;
  AlgSubspace nil_found;
  NilradicalReport report;
};

/// Does the embedded base coincide with the nilradical of the full isometry algebra?
inline NilradicalVerdict check_nilradical_condition(const IsometryAlgebra& iso) {
  NilradicalReport report = nilradical(*iso.total);
  NilradicalVerdict v;
  v.holds = subspace_equal(report.nilradical.space, iso.n_embed.space);
  v.nil_found = report.nilradical;
  v.report = std::move(report);
  return v;
}

}  // namespace liework
