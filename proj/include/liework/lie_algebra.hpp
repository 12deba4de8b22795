#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liework/errors.hpp"
#include "liework/mat.hpp"
#include "liework/subspace.hpp"

namespace liework {

struct SparseTerm {
  std::size_t k;  // basis index
  Rat c;          // coefficient of e_k
  friend bool operator==(const SparseTerm&, const SparseTerm&) = default;
};
using BracketTerms = std::vector<SparseTerm>;

/// Lie algebra given by structure constants on a fixed basis.
/// Only pairs i < j are stored; antisymmetry is structural.
class LieAlgebra {
public:
  LieAlgebra() : dim_(0) {}
  explicit LieAlgebra(std::size_t dim, std::vector<std::string> names = {}) : dim_(dim) {
    if (names.empty()) {
      for (std::size_t i = 0; i < dim; ++i) names.push_back("e" + std::to_string(i + 1));
    }
    if (names.size() != dim) throw DimensionMismatch("LieAlgebra: names/dim mismatch");
    names_ = std::move(names);
  }

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::optional<std::size_t> name_index(const std::string& id) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == id) return i;
    return std::nullopt;
  }

  /// Declares [e_i, e_j] = sum of terms. Accepts either order of i, j and
  /// normalizes by antisymmetry; a pair may be declared only once.
  void add_bracket(std::size_t i, std::size_t j, BracketTerms terms) {
    if (i >= dim_ || j >= dim_) throw DimensionMismatch("add_bracket: index out of range");
    if (i == j) throw PreconditionError("add_bracket: [x,x] is identically zero");
    bool flip = i > j;
    if (flip) std::swap(i, j);
    BracketTerms cleaned;
    for (auto& t : terms) {
      if (t.k >= dim_) throw DimensionMismatch("add_bracket: coefficient index out of range");
      if (t.c.is_zero()) continue;
      cleaned.push_back({t.k, flip ? -t.c : t.c});
    }
    std::sort(cleaned.begin(), cleaned.end(),
              [](const SparseTerm& a, const SparseTerm& b) { return a.k < b.k; });
    for (std::size_t t = 1; t < cleaned.size(); ++t)
      if (cleaned[t].k == cleaned[t - 1].k)
        throw PreconditionError("add_bracket: repeated coefficient index");
    if (cleaned.empty()) return;
    auto [it, fresh] = sc_.emplace(std::make_pair(i, j), std::move(cleaned));
    (void)it;
    if (!fresh) throw PreconditionError("add_bracket: pair declared twice");
  }

  const std::map<std::pair<std::size_t, std::size_t>, BracketTerms>& structure() const {
    return sc_;
  }

  /// [e_i, e_j] as a dense vector, any i, j.
  Vec bracket_basis(std::size_t i, std::size_t j) const {
    Vec v(dim_, Rat(0));
    if (i == j) return v;
    const bool flip = i > j;
    if (flip) std::swap(i, j);
    auto it = sc_.find({i, j});
    if (it == sc_.end()) return v;
    for (const auto& t : it->second) v[t.k] = flip ? -t.c : t.c;
    return v;
  }

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.dim_ == b.dim_ && a.names_ == b.names_ && a.sc_ == b.sc_;
  }

private:
  std::size_t dim_;
  std::vector<std::string> names_;
  std::map<std::pair<std::size_t, std::size_t>, BracketTerms> sc_;
};

/// Bilinear extension of the structure constants.
inline Vec bracket(const LieAlgebra& g, const Vec& x, const Vec& y) {
  if (x.size() != g.dim() || y.size() != g.dim())
    throw DimensionMismatch("bracket: vector length mismatch");
  Vec out(g.dim(), Rat(0));
  for (const auto& [pair, terms] : g.structure()) {
    const auto [i, j] = pair;
    const Rat coeff = x[i] * y[j] - x[j] * y[i];
    if (coeff.is_zero()) continue;
    for (const auto& t : terms) out[t.k] += coeff * t.c;
  }
  return out;
}

/// Matrix of ad(x): ad(x) y = [x, y].
inline Mat ad(const LieAlgebra& g, const Vec& x) {
  if (x.size() != g.dim()) throw DimensionMismatch("ad: vector length mismatch");
  Mat m(g.dim(), g.dim());
  for (const auto& [pair, terms] : g.structure()) {
    const auto [i, j] = pair;
    // [x, e_j] picks up x_i * c_ij ; [x, e_i] picks up -x_j * c_ij
    for (const auto& t : terms) {
      if (!x[i].is_zero()) m(t.k, j) += x[i] * t.c;
      if (!x[j].is_zero()) m(t.k, i) -= x[j] * t.c;
    }
  }
  return m;
}

struct JacobiViolation {
  std::size_t i, j, k;
  Vec residual;
};

/// Checks the Jacobi identity on all basis triples; empty result means valid.
inline std::vector<JacobiViolation> validate(const LieAlgebra& g) {
  std::vector<JacobiViolation> out;
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec r = bracket(g, unit_vec(n, i), g.bracket_basis(j, k));
        add_scaled(r, Rat(1), bracket(g, unit_vec(n, j), g.bracket_basis(k, i)));
        add_scaled(r, Rat(1), bracket(g, unit_vec(n, k), g.bracket_basis(i, j)));
        if (!is_zero_vec(r)) out.push_back({i, j, k, std::move(r)});
      }
  return out;
}

/// Subspace of a specific Lie algebra. Non-owning view: the parent must outlive it.
struct AlgSubspace {
  const LieAlgebra* parent = nullptr;
  Subspace space = Subspace::zero(0);
};

/// span{ [a, b] : a basis of A, b basis of B }.
inline Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != g.dim() || b.ambient_dim() != g.dim())
    throw DimensionMismatch("bracket_span: ambient mismatch");
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t s = 0; s < b.dim(); ++s)
      rows.push_back(bracket(g, a.basis().row(r), b.basis().row(s)));
  return Subspace::from_span(g.dim(), rows);
}

namespace detail {
/// Iterates s -> step(s) from the full space, recording terms. Stops once the
/// series hits zero, or repeats the stabilized term once so callers can tell
/// "reached zero" from "stabilized nonzero" without recomputation.
template <typename Step>
std::vector<AlgSubspace> descending_series(const LieAlgebra& g, Step step) {
  std::vector<AlgSubspace> out;
  Subspace cur = Subspace::full(g.dim());
  out.push_back({&g, cur});
  while (cur.dim() > 0) {
    Subspace next = step(cur);
    out.push_back({&g, next});
    if (subspace_equal(next, cur)) break;
    cur = std::move(next);
  }
  return out;
}
}  // namespace detail

inline std::vector<AlgSubspace> lower_central_series(const LieAlgebra& g) {
  return detail::descending_series(
      g, [&](const Subspace& s) { return bracket_span(g, Subspace::full(g.dim()), s); });
}

inline std::vector<AlgSubspace> derived_series(const LieAlgebra& g) {
  return detail::descending_series(g, [&](const Subspace& s) { return bracket_span(g, s, s); });
}

inline bool is_nilpotent(const LieAlgebra& g) {
  return lower_central_series(g).back().space.dim() == 0;
}

inline bool is_solvable(const LieAlgebra& g) {
  return derived_series(g).back().space.dim() == 0;
}

/// Intersection of the kernels of all ad(e_i).
inline AlgSubspace center(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  Mat stacked(n * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Mat a = ad(g, unit_vec(n, i));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) stacked(i * n + r, c) = a(r, c);
  }
  return {&g, kernel(stacked)};
}

inline bool is_ideal(const LieAlgebra& g, const AlgSubspace& s) {
  if (s.parent != &g || s.space.ambient_dim() != g.dim())
    throw PreconditionError("is_ideal: subspace does not live in this algebra");
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t r = 0; r < s.space.dim(); ++r)
      if (!s.space.contains(bracket(g, unit_vec(g.dim(), i), s.space.basis().row(r))))
        return false;
  return true;
}

/// The bracket restricted to a subalgebra, in the coordinates of its canonical basis.
inline LieAlgebra restrict_to_subalgebra(const LieAlgebra& g, const Subspace& s,
                                         const std::string& name_prefix = "f") {
  if (s.ambient_dim() != g.dim()) throw DimensionMismatch("restrict_to_subalgebra: ambient");
  const std::size_t t = s.dim();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < t; ++i) names.push_back(name_prefix + std::to_string(i + 1));
  LieAlgebra sub(t, std::move(names));
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = i + 1; j < t; ++j) {
      const Vec v = bracket(g, s.basis().row(i), s.basis().row(j));
      auto c = s.coords(v);
      if (!c) throw PreconditionError("restrict_to_subalgebra: subspace is not closed");
      BracketTerms terms;
      for (std::size_t k = 0; k < t; ++k)
        if (!(*c)[k].is_zero()) terms.push_back({k, (*c)[k]});
      if (!terms.empty()) sub.add_bracket(i, j, std::move(terms));
    }
  return sub;
}

/// Structure constants in the basis given by the columns of t.
inline LieAlgebra transform_algebra(const LieAlgebra& g, const Mat& t) {
  if (t.rows() != g.dim() || t.cols() != g.dim())
    throw DimensionMismatch("transform_algebra: shape mismatch");
  auto tinv = inverse(t);
  if (!tinv) throw PreconditionError("transform_algebra: basis change is singular");
  const std::size_t n = g.dim();
  LieAlgebra out(n, g.names());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vec v = *tinv * bracket(g, t * unit_vec(n, i), t * unit_vec(n, j));
      BracketTerms terms;
      for (std::size_t k = 0; k < n; ++k)
        if (!v[k].is_zero()) terms.push_back({k, v[k]});
      if (!terms.empty()) out.add_bracket(i, j, std::move(terms));
    }
  return out;
}

inline bool is_derivation(const LieAlgebra& g, const Mat& d) {
  if (d.rows() != g.dim() || d.cols() != g.dim()) return false;
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec lhs = d * g.bracket_basis(i, j);
      Vec rhs = bracket(g, d * unit_vec(n, i), unit_vec(n, j));
      add_scaled(rhs, Rat(1), bracket(g, unit_vec(n, i), d * unit_vec(n, j)));
      add_scaled(lhs, Rat(-1), rhs);
      if (!is_zero_vec(lhs)) return false;
    }
  return true;
}

/// A Lie algebra of linear maps on the parent's underlying space, held as a
/// canonical subspace of the dim^2-dimensional matrix space.
class LinMapAlg {
public:
  static LinMapAlg from_maps(const LieAlgebra& parent, const std::vector<Mat>& maps,
                             bool require_derivations = false) {
    const std::size_t n = parent.dim();
    std::vector<Vec> rows;
    for (const auto& m : maps) {
      if (m.rows() != n || m.cols() != n)
        throw DimensionMismatch("LinMapAlg: map shape mismatch");
      rows.push_back(m.flatten());
    }
    return from_space(parent, Subspace::from_span(n * n, rows), require_derivations);
  }

  static LinMapAlg from_space(const LieAlgebra& parent, Subspace space,
                              bool require_derivations = false) {
    const std::size_t n = parent.dim();
    if (space.ambient_dim() != n * n) throw DimensionMismatch("LinMapAlg: ambient mismatch");
    LinMapAlg alg;
    alg.parent_ = &parent;
    alg.space_ = std::move(space);
    for (std::size_t i = 0; i < alg.space_.dim(); ++i)
      alg.basis_maps_.push_back(Mat::unflatten(alg.space_.basis().row(i), n, n));
    // commutator closure
    for (std::size_t a = 0; a < alg.basis_maps_.size(); ++a)
      for (std::size_t b = a + 1; b < alg.basis_maps_.size(); ++b) {
        const Mat comm = alg.basis_maps_[a] * alg.basis_maps_[b] -
                         alg.basis_maps_[b] * alg.basis_maps_[a];
        if (!alg.space_.contains(comm.flatten()))
          throw PreconditionError("LinMapAlg: not closed under commutator");
      }
    if (require_derivations) {
      for (const auto& m : alg.basis_maps_)
        if (!is_derivation(parent, m))
          throw PreconditionError("LinMapAlg: element is not a derivation");
      alg.derivations_ = true;
    }
    return alg;
  }

  const LieAlgebra* parent() const { return parent_; }
  std::size_t dim() const { return basis_maps_.size(); }
  std::size_t map_dim() const { return parent_ ? parent_->dim() : 0; }
  const Subspace& space() const { return space_; }
  const std::vector<Mat>& basis_maps() const { return basis_maps_; }
  bool all_derivations() const { return derivations_; }

  bool contains(const Mat& m) const { return space_.contains(m.flatten()); }
  std::optional<Vec> coords(const Mat& m) const { return space_.coords(m.flatten()); }

private:
  LinMapAlg() : space_(Subspace::zero(0)) {}

  const LieAlgebra* parent_ = nullptr;
  Subspace space_;
  std::vector<Mat> basis_maps_;
  bool derivations_ = false;
};

struct SemidirectSum {
  LieAlgebra total;
  Subspace base_part;  // embedded copy of the base, first coordinates
  Subspace act_part;   // embedded copy of the acting algebra, last coordinates
};

/// Semidirect sum n ⊕ h with bracket [(x,D),(y,E)] = ([x,y] + Dy - Ex, DE - ED).
/// Requires every element of h to act as a derivation of n.
inline SemidirectSum semidirect(const LieAlgebra& n, const LinMapAlg& h) {
  const std::size_t k = n.dim();
  const std::size_t m = h.dim();
  if (h.map_dim() != k) throw DimensionMismatch("semidirect: acting maps have wrong shape");
  for (const auto& d : h.basis_maps())
    if (!is_derivation(n, d)) throw PreconditionError("semidirect: non-derivation element");

  std::vector<std::string> names = n.names();
  for (std::size_t a = 0; a < m; ++a) names.push_back("D" + std::to_string(a + 1));
  LieAlgebra total(k + m, std::move(names));

  for (const auto& [pair, terms] : n.structure()) total.add_bracket(pair.first, pair.second, terms);

  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t a = 0; a < m; ++a) {
      // [e_i, (0, D_a)] = (-D_a e_i, 0)
      const Vec v = h.basis_maps()[a] * unit_vec(k, i);
      BracketTerms terms;
      for (std::size_t t = 0; t < k; ++t)
        if (!v[t].is_zero()) terms.push_back({t, -v[t]});
      if (!terms.empty()) total.add_bracket(i, k + a, std::move(terms));
    }

  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      const Mat comm =
          h.basis_maps()[a] * h.basis_maps()[b] - h.basis_maps()[b] * h.basis_maps()[a];
      auto c = h.coords(comm);
      if (!c) throw InternalCheckError("semidirect: commutator escaped the acting algebra");
      BracketTerms terms;
      for (std::size_t t = 0; t < m; ++t)
        if (!(*c)[t].is_zero()) terms.push_back({k + t, (*c)[t]});
      if (!terms.empty()) total.add_bracket(k + a, k + b, std::move(terms));
    }

  if (!validate(total).empty())
    throw InternalCheckError("semidirect: Jacobi identity failed on the product");

  std::vector<Vec> base_rows, act_rows;
  for (std::size_t i = 0; i < k; ++i) base_rows.push_back(unit_vec(k + m, i));
  for (std::size_t a = 0; a < m; ++a) act_rows.push_back(unit_vec(k + m, k + a));
  return SemidirectSum{std::move(total), Subspace::from_span(k + m, base_rows),
                       Subspace::from_span(k + m, act_rows)};
}

}  // namespace liework
