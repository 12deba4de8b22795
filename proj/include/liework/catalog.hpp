#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "liework/finite_group.hpp"
#include "liework/invariants.hpp"
#include "liework/lie_algebra.hpp"

namespace liework {

enum class CatalogKind { lie_algebra, finite_group };

/// Built-in example, either a Lie algebra with a default metric or a finite
/// metric group.
struct CatalogEntry {
  std::string name;
  CatalogKind kind = CatalogKind::lie_algebra;
  std::shared_ptr<const LieAlgebra> lie;
  std::optional<MetricTensor> metric;  // default inner product for lie entries
  std::shared_ptr<const FiniteMetricGroup> fmg;
  std::string provenance;
};

namespace detail {

inline LieAlgebra make_heisenberg3() {
  LieAlgebra g(3);
  g.add_bracket(0, 1, {{2, Rat(1)}});
  return g;
}

inline LieAlgebra make_abelian(std::size_t n) { return LieAlgebra(n); }

inline LieAlgebra make_filiform4() {
  LieAlgebra g(4);
  g.add_bracket(0, 1, {{2, Rat(1)}});
  g.add_bracket(0, 2, {{3, Rat(1)}});
  return g;
}

inline LieAlgebra make_rototranslation() {
  // [e3,e1] = e2, [e3,e2] = -e1: infinitesimal rotation acting on the plane
  LieAlgebra g(3);
  g.add_bracket(2, 0, {{1, Rat(1)}});
  g.add_bracket(2, 1, {{0, Rat(-1)}});
  return g;
}

inline LieAlgebra make_so3() {
  LieAlgebra g(3);
  g.add_bracket(0, 1, {{2, Rat(1)}});
  g.add_bracket(1, 2, {{0, Rat(1)}});
  g.add_bracket(2, 0, {{1, Rat(1)}});
  return g;
}

inline LieAlgebra make_euclid3() {
  const LieAlgebra translations = make_abelian(3);
  auto rot = [](std::size_t a, std::size_t b) {
    Mat m(3, 3);
    m(b, a) = Rat(1);
    m(a, b) = Rat(-1);
    return m;
  };
  const LinMapAlg so3 = LinMapAlg::from_maps(translations, {rot(0, 1), rot(0, 2), rot(1, 2)},
                                             /*require_derivations=*/true);
  return semidirect(translations, so3).total;
}

inline Mat discrete_metric(std::size_t n) {
  Mat d(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) d(i, j) = Rat(1);
  return d;
}

inline FiniteMetricGroup make_fourpoint_discrete() {
  return FiniteMetricGroup({"1", "i", "-1", "-i"}, 0, cyclic_table(4), discrete_metric(4));
}

inline FiniteMetricGroup make_z4_cycle() {
  Mat d(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const std::size_t diff = i > j ? i - j : j - i;
      d(i, j) = Rat(static_cast<long long>(std::min(diff, 4 - diff)));
    }
  return FiniteMetricGroup({"0", "1", "2", "3"}, 0, cyclic_table(4), d);
}

inline FiniteMetricGroup make_klein4_discrete() {
  return FiniteMetricGroup({"e", "a", "b", "ab"}, 0,
                           product_table(cyclic_table(2), cyclic_table(2)),
                           discrete_metric(4));
}

}  // namespace detail

/// The built-in catalog: classical small Lie algebras, each paired with the
/// identity inner product, and a few finite metric groups. Entries validate
/// at construction.
inline const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    auto lie = [&out](std::string name, LieAlgebra g, std::string note) {
      if (!validate(g).empty())
        throw InternalCheckError("catalog: " + name + " fails the Jacobi identity");
      CatalogEntry e;
      e.name = std::move(name);
      e.kind = CatalogKind::lie_algebra;
      e.metric = MetricTensor::identity(g.dim());
      e.lie = std::make_shared<const LieAlgebra>(std::move(g));
      e.provenance = std::move(note);
      out.push_back(std::move(e));
    };
    auto fin = [&out](std::string name, FiniteMetricGroup g, std::string note) {
      if (!validate_group(g).empty())
        throw InternalCheckError("catalog: " + name + " fails the group or metric axioms");
      CatalogEntry e;
      e.name = std::move(name);
      e.kind = CatalogKind::finite_group;
      e.fmg = std::make_shared<const FiniteMetricGroup>(std::move(g));
      e.provenance = std::move(note);
      out.push_back(std::move(e));
    };

    lie("heisenberg3", detail::make_heisenberg3(),
        "three-dimensional Heisenberg algebra, the smallest non-abelian nilpotent algebra");
    for (std::size_t n = 1; n <= 4; ++n)
      lie("abelian" + std::to_string(n), detail::make_abelian(n),
          "abelian algebra of dimension " + std::to_string(n));
    lie("filiform4", detail::make_filiform4(),
        "four-dimensional filiform nilpotent algebra, nilpotency class three");
    lie("rototranslation", detail::make_rototranslation(),
        "algebra of the universal cover of orientation-preserving plane isometries; "
        "solvable, not nilpotent");
    lie("so3", detail::make_so3(), "rotations of three-space; compact simple");
    lie("euclid3", detail::make_euclid3(),
        "full Euclidean algebra: translations of three-space extended by all rotations");

    fin("fourpoint-discrete", detail::make_fourpoint_discrete(),
        "cyclic group {1, i, -1, -i} inside the complex plane with the discrete distance");
    fin("z4-cycle", detail::make_z4_cycle(),
        "cyclic group of order four with the graph distance of the four-cycle");
    fin("klein4-discrete", detail::make_klein4_discrete(),
        "Klein four-group with the discrete distance");
    return out;
  }();
  return entries;
}

inline const CatalogEntry* catalog_find(std::string_view name) {
  for (const auto& e : catalog())
    if (e.name == name) return &e;
  return nullptr;
}

}  // namespace liework
