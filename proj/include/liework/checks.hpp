#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "liework/catalog.hpp"
#include "liework/finite_group.hpp"
#include "liework/formats.hpp"
#include "liework/invariants.hpp"
#include "liework/report.hpp"
#include "liework/sampling.hpp"

namespace liework {

inline CheckResult check_entry_validates(const CatalogEntry& e) {
  CheckResult c;
  c.name = "catalog/" + e.name + "/validates";
  if (e.kind == CatalogKind::lie_algebra) {
    const auto violations = validate(*e.lie);
    c.pass = violations.empty();
    c.summary = "dim " + std::to_string(e.lie->dim()) + ", " +
                std::to_string(violations.size()) + " Jacobi violation(s)";
    c.details = {{"dim", e.lie->dim()}, {"violations", violations.size()}};
  } else {
    const auto violations = validate_group(*e.fmg);
    c.pass = violations.empty();
    c.summary = "order " + std::to_string(e.fmg->order()) + ", " +
                std::to_string(violations.size()) + " axiom violation(s)";
    c.details = {{"order", e.fmg->order()}, {"violations", violations.size()}};
  }
  return c;
}

inline CheckResult check_entry_roundtrip(const CatalogEntry& e) {
  CheckResult c;
  c.name = "catalog/" + e.name + "/roundtrip";
  const std::string text = serialize_entry(e);
  bool ok = false;
  if (e.kind == CatalogKind::lie_algebra) {
    const LieFile back = parse_lie(text);
    ok = back.name == e.name && back.algebra == *e.lie && back.metric == e.metric;
  } else {
    const FmgFile back = parse_fmg(text);
    ok = back.name == e.name && back.group == *e.fmg;
  }
  c.pass = ok;
  c.summary = ok ? "serialize/parse round-trip is exact" : "round-trip changed the object";
  return c;
}

/// Metrics for the independence sweep: the default inner product plus seeded
/// random positive-definite ones.
inline std::vector<MetricTensor> sweep_metrics(const std::string& entry_name, std::size_t dim,
                                               std::size_t random_count) {
  std::vector<MetricTensor> out;
  out.push_back(MetricTensor::identity(dim));
  for (std::size_t i = 1; i <= random_count; ++i) {
    auto rng = seeded_rng("sweep:" + entry_name + ":" + std::to_string(i));
    out.push_back(random_pd_metric(dim, rng));
  }
  return out;
}

/// The embedded algebra must come back as the nilradical of its isometry
/// algebra, for the default metric and for random ones.
inline std::vector<CheckResult> checks_nilrad_condition(const CatalogEntry& e,
                                                        std::size_t random_metrics) {
  std::vector<CheckResult> out;
  const auto metrics = sweep_metrics(e.name, e.lie->dim(), random_metrics);
  for (std::size_t i = 0; i < metrics.size(); ++i) {
    CheckResult c;
    c.name = "lie/" + e.name + "/nilrad-condition/" +
             (i == 0 ? std::string("identity") : "random-q" + std::to_string(i));
    const IsometryAlgebra iso = isometry_algebra(*e.lie, metrics[i]);
    const NilradicalVerdict v = check_nilradical_condition(iso);
    c.pass = v.holds;
    c.summary = "total dim " + std::to_string(iso.total->dim()) + ", skew dim " +
                std::to_string(iso.stab.dim()) + ", nilradical dim " +
                std::to_string(v.nil_found.space.dim()) +
                (v.holds ? ", holds" : ", FAILS");
    c.details = {{"holds", v.holds},
                 {"total_dim", iso.total->dim()},
                 {"skew_dim", iso.stab.dim()},
                 {"metric", json_mat(metrics[i].q())},
                 {"nil_found", json_subspace(v.nil_found.space)}};
    out.push_back(std::move(c));
  }
  return out;
}

inline std::vector<CheckResult> checks_rototranslation() {
  std::vector<CheckResult> out;
  const CatalogEntry& e = *catalog_find("rototranslation");
  const LieAlgebra& g = *e.lie;

  {
    CheckResult c;
    c.name = "lie/rototranslation/skew-derivations-dim-1";
    const LinMapAlg skew = skew_derivations(g, MetricTensor::identity(3));
    c.pass = skew.dim() == 1;
    c.summary = "isometric derivation space has dim " + std::to_string(skew.dim());
    c.details = {{"dim", skew.dim()}, {"space", json_subspace(skew.space())}};
    out.push_back(std::move(c));
  }
  {
    CheckResult c;
    c.name = "lie/rototranslation/nilradical-plane";
    const NilradicalReport r = nilradical(g);
    const Subspace plane = Subspace::from_span(3, {unit_vec(3, 0), unit_vec(3, 1)});
    c.pass = subspace_equal(r.nilradical.space, plane);
    c.summary = "nilradical dim " + std::to_string(r.nilradical.space.dim());
    c.details = {{"nilradical", json_subspace(r.nilradical.space)}};
    out.push_back(std::move(c));
  }
  {
    CheckResult c;
    c.name = "lie/rototranslation/isometry-algebra-rejected";
    bool rejected = false;
    try {
      (void)isometry_algebra(g, MetricTensor::identity(3));
    } catch (const PreconditionError&) {
      rejected = true;
    }
    c.pass = rejected;
    c.summary = rejected ? "non-nilpotent base rejected as required"
                         : "non-nilpotent base was accepted";
    out.push_back(std::move(c));
  }
  return out;
}

inline std::vector<CheckResult> checks_fourpoint() {
  std::vector<CheckResult> out;
  const FiniteMetricGroup& m = *catalog_find("fourpoint-discrete")->fmg;
  const IsometrySet g = isometries(m);

  {
    CheckResult c;
    c.name = "finite/fourpoint-discrete/isometry-count-24";
    c.pass = g.size() == 24;
    c.summary = std::to_string(g.size()) + " isometries (every permutation)";
    out.push_back(std::move(c));
  }
  {
    CheckResult c;
    c.name = "finite/fourpoint-discrete/affine-count-8";
    std::size_t affine = 0;
    for (const auto& f : g.perms)
      if (affine_decompose(f, m)) ++affine;
    c.pass = affine == 8;
    c.summary = std::to_string(affine) + " of " + std::to_string(g.size()) +
                " isometries are affine (4 translations x 2 automorphisms)";
    out.push_back(std::move(c));
  }
  {
    CheckResult c;
    c.name = "finite/fourpoint-discrete/tfae-all-false";
    const TfaeReport r = check_tfae(m);
    c.pass = !r.translations_normal && !r.all_isometries_affine &&
             !r.stabilizer_automorphisms && !r.semidirect_splits && r.equivalent;
    c.summary = "split conditions all fail, and they fail together";
    c.details = {{"translations_normal", r.translations_normal},
                 {"all_isometries_affine", r.all_isometries_affine},
                 {"stabilizer_automorphisms", r.stabilizer_automorphisms},
                 {"semidirect_splits", r.semidirect_splits},
                 {"equivalent", r.equivalent}};
    out.push_back(std::move(c));
  }
  return out;
}

inline CheckResult check_z4_cycle() {
  CheckResult c;
  c.name = "finite/z4-cycle/tfae-all-true";
  const FiniteMetricGroup& m = *catalog_find("z4-cycle")->fmg;
  const TfaeReport r = check_tfae(m);
  c.pass = r.isometry_count == 8 && r.translations_normal && r.all_isometries_affine &&
           r.stabilizer_automorphisms && r.semidirect_splits && r.equivalent;
  c.summary = std::to_string(r.isometry_count) + " isometries, split conditions all hold";
  c.details = {{"isometries", r.isometry_count},
               {"translations", r.translation_count},
               {"stabilizer", r.stabilizer_count}};
  return c;
}

/// The four split conditions must agree on every corpus entry, and the orbit
/// count |G| = |M^L| · |Stab_1| must hold throughout.
inline CheckResult check_corpus_tfae(std::size_t max_order, std::size_t metrics_per_group) {
  CheckResult c;
  c.name = "corpus/tfae-sweep";
  const auto corpus = metric_group_corpus(max_order, metrics_per_group);
  std::size_t all_true = 0, all_false = 0, disagreements = 0, orbit_failures = 0;
  std::string first_bad;
  for (const auto& entry : corpus) {
    const TfaeReport r = check_tfae(entry.group);
    if (!r.equivalent) {
      ++disagreements;
      if (first_bad.empty()) first_bad = entry.name;
    } else if (r.translations_normal) {
      ++all_true;
    } else {
      ++all_false;
    }
    if (r.isometry_count != r.translation_count * r.stabilizer_count) ++orbit_failures;
  }
  c.pass = disagreements == 0 && orbit_failures == 0;
  c.summary = std::to_string(corpus.size()) + " entries: " + std::to_string(all_true) +
              " split, " + std::to_string(all_false) + " non-split, " +
              std::to_string(disagreements) + " disagreement(s)" +
              (first_bad.empty() ? "" : " (first: " + first_bad + ")");
  c.details = {{"entries", corpus.size()},
               {"all_true", all_true},
               {"all_false", all_false},
               {"disagreements", disagreements},
               {"orbit_failures", orbit_failures}};
  return c;
}

/// Every basepoint-fixing isometry between corpus entries that conjugates the
/// left translations onto the left translations must be a group isomorphism.
inline CheckResult check_corpus_affine(std::size_t max_order, std::size_t metrics_per_group) {
  CheckResult c;
  c.name = "corpus/affine-isomorphism-sweep";
  const auto corpus = metric_group_corpus(max_order, metrics_per_group);
  std::size_t pairs = 0, maps_checked = 0, hypothesis_matches = 0, failures = 0;
  for (const auto& e1 : corpus) {
    const IsometrySet ml1 = left_translations(e1.group);
    for (const auto& e2 : corpus) {
      if (e1.group.order() != e2.group.order()) continue;
      ++pairs;
      const IsometrySet ml2 = left_translations(e2.group);
      const auto maps = isometries_between(e1.group, e2.group, /*fix_basepoint=*/true);
      maps_checked += maps.size();
      for (const auto& f : maps) {
        if (conjugate_perms(f, ml1.perms) != ml2.perms) continue;
        ++hypothesis_matches;
        if (!is_isomorphism(e1.group, e2.group, f)) ++failures;
      }
    }
  }
  c.pass = failures == 0 && hypothesis_matches > 0;
  c.summary = std::to_string(pairs) + " pairs, " + std::to_string(maps_checked) +
              " basepoint-fixing isometries, " + std::to_string(hypothesis_matches) +
              " conjugation matches, " + std::to_string(failures) + " failure(s)";
  c.details = {{"pairs", pairs},
               {"maps_checked", maps_checked},
               {"hypothesis_matches", hypothesis_matches},
               {"failures", failures}};
  return c;
}

/// Pushing the nilradical of a transformed algebra back through the basis
/// change must land on the original nilradical.
inline bool nilradical_equivariant(const LieAlgebra& g, const Mat& t) {
  const Subspace original = nilradical(g).nilradical.space;
  const Subspace transformed = nilradical(transform_algebra(g, t)).nilradical.space;
  return subspace_equal(image_subspace(transformed, t), original);
}

inline std::vector<CheckResult> checks_equivariance(std::size_t samples_per_algebra) {
  std::vector<CheckResult> out;
  for (const auto& e : catalog()) {
    if (e.kind != CatalogKind::lie_algebra) continue;
    CheckResult c;
    c.name = "lie/" + e.name + "/nilradical-equivariance";
    std::size_t ok = 0;
    for (std::size_t s = 1; s <= samples_per_algebra; ++s) {
      auto rng = seeded_rng("equivariance:" + e.name + ":" + std::to_string(s));
      if (nilradical_equivariant(*e.lie, random_invertible(e.lie->dim(), rng))) ++ok;
    }
    c.pass = ok == samples_per_algebra;
    c.summary = std::to_string(ok) + "/" + std::to_string(samples_per_algebra) +
                " random basis changes carry the nilradical correctly";
    out.push_back(std::move(c));
  }
  return out;
}

inline std::vector<CheckResult> checks_oracles() {
  std::vector<CheckResult> out;

  {
    CheckResult c;
    c.name = "oracle/killing-so3";
    const Mat k = killing_form(*catalog_find("so3")->lie);
    c.pass = k == Rat(-2) * Mat::identity(3);
    c.summary = "Killing form of so3 is -2 times the identity";
    c.details = {{"killing", json_mat(k)}};
    out.push_back(std::move(c));
  }
  {
    CheckResult c;
    c.name = "oracle/radical-euclid3";
    const LieAlgebra& g = *catalog_find("euclid3")->lie;
    const AlgSubspace r = radical(g);
    const Subspace translations =
        Subspace::from_span(6, {unit_vec(6, 0), unit_vec(6, 1), unit_vec(6, 2)});
    c.pass = subspace_equal(r.space, translations);
    c.summary = "radical of the Euclidean algebra is the translation ideal";
    c.details = {{"radical", json_subspace(r.space)}};
    out.push_back(std::move(c));
  }
  {
    CheckResult c;
    c.name = "oracle/derivations-dims";
    bool ok = derivations(*catalog_find("heisenberg3")->lie).dim() == 6;
    for (std::size_t n = 1; n <= 4; ++n)
      ok = ok &&
           derivations(*catalog_find("abelian" + std::to_string(n))->lie).dim() == n * n;
    // semisimple: every derivation is inner
    const LieAlgebra& so3 = *catalog_find("so3")->lie;
    const LinMapAlg der = derivations(so3);
    std::vector<Vec> inner;
    for (std::size_t i = 0; i < 3; ++i) inner.push_back(ad(so3, unit_vec(3, i)).flatten());
    ok = ok && der.dim() == 3 && subspace_equal(der.space(), Subspace::from_span(9, inner));
    c.pass = ok;
    c.summary = "derivation spaces have the classical dimensions";
    out.push_back(std::move(c));
  }
  {
    CheckResult c;
    c.name = "oracle/radical-containments";
    bool ok = true;
    for (const auto& e : catalog()) {
      if (e.kind != CatalogKind::lie_algebra) continue;
      const LieAlgebra& g = *e.lie;
      const AlgSubspace rad = radical(g);
      const NilradicalReport nil = nilradical(g);
      ok = ok && subspace_contains(rad.space, nil.nilradical.space);
      ok = ok && subspace_contains(nil.nilradical.space,
                                   bracket_span(g, Subspace::full(g.dim()), rad.space));
      ok = ok && (rad.space.dim() == g.dim()) == is_solvable(g);
      ok = ok && (nil.nilradical.space.dim() == g.dim()) == is_nilpotent(g);
    }
    c.pass = ok;
    c.summary = "nil(g) within rad(g), [g, rad(g)] within nil(g), and the "
                "degenerate cases line up with solvable/nilpotent";
    out.push_back(std::move(c));
  }
  {
    CheckResult c;
    c.name = "oracle/skew-subset-derivations";
    bool ok = true;
    for (const auto& e : catalog()) {
      if (e.kind != CatalogKind::lie_algebra) continue;
      const LinMapAlg skew = skew_derivations(*e.lie, MetricTensor::identity(e.lie->dim()));
      ok = ok && subspace_contains(derivations(*e.lie).space(), skew.space());
    }
    c.pass = ok;
    c.summary = "skew derivations sit inside the full derivation algebra";
    out.push_back(std::move(c));
  }
  {
    CheckResult c;
    c.name = "oracle/skew-scaling-invariance";
    bool ok = true;
    for (const char* name : {"heisenberg3", "rototranslation", "abelian3"}) {
      const LieAlgebra& g = *catalog_find(name)->lie;
      const MetricTensor q = MetricTensor::identity(g.dim());
      const MetricTensor scaled(Rat(7, 3) * q.q());
      ok = ok && subspace_equal(skew_derivations(g, q).space(),
                                skew_derivations(g, scaled).space());
    }
    c.pass = ok;
    c.summary = "scaling the metric leaves the skew derivation space unchanged";
    out.push_back(std::move(c));
  }
  {
    CheckResult c;
    c.name = "oracle/orbit-stabilizer";
    bool ok = true;
    for (const auto& e : catalog()) {
      if (e.kind != CatalogKind::finite_group) continue;
      const IsometrySet g = isometries(*e.fmg);
      const IsometrySet ml = left_translations(*e.fmg);
      const IsometrySet st = stabilizer(g);
      ok = ok && g.size() == ml.size() * st.size();
    }
    c.pass = ok;
    c.summary = "isometry count factors as translations times stabilizer";
    out.push_back(std::move(c));
  }
  return out;
}

/// The whole built-in battery at default sizes.
inline std::vector<CheckResult> verify_all_checks() {
  std::vector<CheckResult> out;
  for (const auto& e : catalog()) {
    out.push_back(check_entry_validates(e));
    out.push_back(check_entry_roundtrip(e));
  }
  for (const auto& e : catalog()) {
    if (e.kind != CatalogKind::lie_algebra || !is_nilpotent(*e.lie)) continue;
    auto cs = checks_nilrad_condition(e, 3);
    out.insert(out.end(), cs.begin(), cs.end());
  }
  {
    auto cs = checks_rototranslation();
    out.insert(out.end(), cs.begin(), cs.end());
  }
  {
    auto cs = checks_fourpoint();
    out.insert(out.end(), cs.begin(), cs.end());
  }
  out.push_back(check_z4_cycle());
  out.push_back(check_corpus_tfae(8, 5));
  out.push_back(check_corpus_affine(8, 5));
  {
    auto cs = checks_equivariance(3);
    out.insert(out.end(), cs.begin(), cs.end());
  }
  {
    auto cs = checks_oracles();
    out.insert(out.end(), cs.begin(), cs.end());
  }
  return out;
}

inline std::string catalog_digest() {
  std::string all;
  for (const auto& e : catalog()) all += serialize_entry(e);
  return "fnv1a64:" + fnv1a64_hex(all);
}

inline Report verify_all() {
  Report r;
  const auto t0 = std::chrono::steady_clock::now();
  r.input_digest = catalog_digest();
  r.checks = verify_all_checks();
  r.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
  return r;
}

/// Battery for a user-supplied Lie algebra file.
inline std::vector<CheckResult> report_checks_for_lie(const LieFile& f) {
  std::vector<CheckResult> out;
  const LieAlgebra& g = f.algebra;
  {
    CheckResult c;
    c.name = "lie/" + f.name + "/validates";
    c.pass = true;  // parse_lie already enforced the axioms
    c.summary = "dim " + std::to_string(g.dim()) + ", " +
                std::to_string(g.structure().size()) + " bracket pair(s)";
    out.push_back(std::move(c));
  }
  {
    CheckResult c;
    c.name = "lie/" + f.name + "/series";
    Json lower = Json::array(), derived = Json::array();
    for (const auto& s : lower_central_series(g)) lower.push_back(s.space.dim());
    for (const auto& s : derived_series(g)) derived.push_back(s.space.dim());
    c.pass = true;
    c.summary = std::string("nilpotent: ") + (is_nilpotent(g) ? "yes" : "no") +
                ", solvable: " + (is_solvable(g) ? "yes" : "no");
    c.details = {{"lower_central_dims", lower},
                 {"derived_dims", derived},
                 {"center_dim", center(g).space.dim()}};
    out.push_back(std::move(c));
  }
  {
    CheckResult c;
    c.name = "lie/" + f.name + "/nilradical";
    const NilradicalReport r = nilradical(g);
    c.pass = true;
    c.summary = "dim " + std::to_string(r.nilradical.space.dim()) + ", nilpotency class " +
                std::to_string(r.nilpotency_class);
    c.details = {{"nilradical", json_subspace(r.nilradical.space)},
                 {"radical_dim", r.radical_dim},
                 {"nilpotency_class", r.nilpotency_class},
                 {"hull_dim", r.hull_dim},
                 {"hull_radical_dim", r.hull_radical_dim}};
    out.push_back(std::move(c));
  }
  const MetricTensor q = f.metric ? *f.metric : MetricTensor::identity(g.dim());
  {
    CheckResult c;
    c.name = "lie/" + f.name + "/derivations";
    const LinMapAlg der = derivations(g);
    const LinMapAlg skew = skew_derivations(g, q);
    c.pass = true;
    c.summary = "derivations dim " + std::to_string(der.dim()) + ", skew dim " +
                std::to_string(skew.dim());
    c.details = {{"derivations_dim", der.dim()}, {"skew_dim", skew.dim()}};
    out.push_back(std::move(c));
  }
  if (is_nilpotent(g)) {
    CheckResult c;
    c.name = "lie/" + f.name + "/nilrad-condition";
    const IsometryAlgebra iso = isometry_algebra(g, q);
    const NilradicalVerdict v = check_nilradical_condition(iso);
    c.pass = v.holds;
    c.summary = "total dim " + std::to_string(iso.total->dim()) +
                (v.holds ? ", holds" : ", FAILS");
    c.details = {{"holds", v.holds},
                 {"total_dim", iso.total->dim()},
                 {"skew_dim", iso.stab.dim()},
                 {"nil_found", json_subspace(v.nil_found.space)}};
    out.push_back(std::move(c));
  }
  return out;
}

/// Battery for a user-supplied finite metric group file.
inline std::vector<CheckResult> report_checks_for_fmg(const FmgFile& f) {
  std::vector<CheckResult> out;
  const FiniteMetricGroup& m = f.group;
  {
    CheckResult c;
    c.name = "finite/" + f.name + "/validates";
    c.pass = true;  // parse_fmg already enforced the axioms
    c.summary = "order " + std::to_string(m.order());
    out.push_back(std::move(c));
  }
  const IsometrySet g = isometries(m);
  {
    CheckResult c;
    c.name = "finite/" + f.name + "/structure";
    const IsometrySet ml = left_translations(m);
    const IsometrySet st = stabilizer(g);
    const IsometrySet aut = automorphisms(m);
    std::size_t affine = 0;
    for (const auto& p : g.perms)
      if (affine_decompose(p, m)) ++affine;
    c.pass = g.size() == ml.size() * st.size();
    c.summary = "isometries " + std::to_string(g.size()) + ", translations " +
                std::to_string(ml.size()) + ", stabilizer " + std::to_string(st.size()) +
                ", automorphisms " + std::to_string(aut.size()) + ", affine " +
                std::to_string(affine);
    c.details = {{"isometries", g.size()},
                 {"translations", ml.size()},
                 {"stabilizer", st.size()},
                 {"automorphisms", aut.size()},
                 {"affine", affine}};
    out.push_back(std::move(c));
  }
  {
    CheckResult c;
    c.name = "finite/" + f.name + "/tfae";
    const TfaeReport r = check_tfae(m);
    c.pass = r.equivalent;
    c.summary = std::string("split conditions ") +
                (r.translations_normal ? "hold" : "fail") +
                (r.equivalent ? " together" : " INCONSISTENTLY");
    c.details = {{"translations_normal", r.translations_normal},
                 {"all_isometries_affine", r.all_isometries_affine},
                 {"stabilizer_automorphisms", r.stabilizer_automorphisms},
                 {"semidirect_splits", r.semidirect_splits},
                 {"equivalent", r.equivalent}};
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace liework
