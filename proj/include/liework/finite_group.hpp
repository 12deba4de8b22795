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
#include "liework/sampling.hpp"

namespace liework {

/// Permutation of {0..n-1} in one-line notation.
struct Perm {
  std::vector<std::size_t> map;

  static Perm identity(std::size_t n) {
    Perm p;
    p.map.resize(n);
    for (std::size_t i = 0; i < n; ++i) p.map[i] = i;
    return p;
  }

  std::size_t size() const { return map.size(); }
  std::size_t operator()(std::size_t x) const { return map[x]; }

  Perm inverse() const {
    Perm p;
    p.map.resize(map.size());
    for (std::size_t i = 0; i < map.size(); ++i) p.map[map[i]] = i;
    return p;
  }

  bool is_bijection() const {
    std::vector<bool> seen(map.size(), false);
    for (auto v : map) {
      if (v >= map.size() || seen[v]) return false;
      seen[v] = true;
    }
    return true;
  }

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm& a, const Perm& b) { return a.map <=> b.map; }
};

/// (f ∘ g)(x) = f(g(x))
inline Perm compose(const Perm& f, const Perm& g) {
  if (f.size() != g.size()) throw DimensionMismatch("compose: size mismatch");
  Perm p;
  p.map.resize(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) p.map[x] = f.map[g.map[x]];
  return p;
}

inline std::string one_line(const Perm& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(p.map[i]);
  }
  return s + ")";
}

/// Finite group with a left-invariant distance matrix.
class FiniteMetricGroup {
public:
  FiniteMetricGroup(std::vector<std::string> labels, std::size_t identity,
                    std::vector<std::vector<std::size_t>> table, Mat dist)
      : labels_(std::move(labels)),
        identity_(identity),
        table_(std::move(table)),
        dist_(std::move(dist)) {
    const std::size_t n = labels_.size();
    if (identity_ >= n) throw DimensionMismatch("FiniteMetricGroup: identity out of range");
    if (table_.size() != n) throw DimensionMismatch("FiniteMetricGroup: table row count");
    for (const auto& row : table_) {
      if (row.size() != n) throw DimensionMismatch("FiniteMetricGroup: table column count");
      for (auto v : row)
        if (v >= n) throw DimensionMismatch("FiniteMetricGroup: table entry out of range");
    }
    if (dist_.rows() != n || dist_.cols() != n)
      throw DimensionMismatch("FiniteMetricGroup: distance matrix shape");
  }

  std::size_t order() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  std::size_t identity() const { return identity_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }
  const Mat& dist() const { return dist_; }
  const Rat& distance(std::size_t p, std::size_t q) const { return dist_(p, q); }

  /// Index b with ab = e; order() when none exists (invalid group).
  std::size_t inverse_of(std::size_t a) const {
    for (std::size_t b = 0; b < order(); ++b)
      if (mul(a, b) == identity_ && mul(b, a) == identity_) return b;
    return order();
  }

  friend bool operator==(const FiniteMetricGroup& a, const FiniteMetricGroup& b) {
    return a.labels_ == b.labels_ && a.identity_ == b.identity_ && a.table_ == b.table_ &&
           a.dist_ == b.dist_;
  }

private:
  std::vector<std::string> labels_;
  std::size_t identity_;
  std::vector<std::vector<std::size_t>> table_;
  Mat dist_;
};

struct GroupViolation {
  std::string kind;    // "identity", "associativity", "inverse", "metric", "left-invariance"
  std::string detail;
};

/// Exhaustive check of the group axioms and the metric axioms, O(order³).
inline std::vector<GroupViolation> validate_group(const FiniteMetricGroup& m) {
  std::vector<GroupViolation> out;
  const std::size_t n = m.order();
  const std::size_t e = m.identity();
  for (std::size_t a = 0; a < n; ++a) {
    if (m.mul(e, a) != a || m.mul(a, e) != a) {
      out.push_back({"identity", "identity law fails at " + m.label(a)});
    }
    if (m.inverse_of(a) == n) out.push_back({"inverse", "no inverse for " + m.label(a)});
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (m.mul(m.mul(a, b), c) != m.mul(a, m.mul(b, c)))
          out.push_back({"associativity", "(" + m.label(a) + "·" + m.label(b) + ")·" +
                                              m.label(c) + " differs"});
  for (std::size_t p = 0; p < n; ++p) {
    if (!m.distance(p, p).is_zero())
      out.push_back({"metric", "nonzero diagonal at " + m.label(p)});
    for (std::size_t q = p + 1; q < n; ++q) {
      if (m.distance(p, q) != m.distance(q, p))
        out.push_back({"metric", "asymmetric at (" + m.label(p) + "," + m.label(q) + ")"});
      if (m.distance(p, q).sign() <= 0)
        out.push_back({"metric", "non-positive off-diagonal at (" + m.label(p) + "," +
                                     m.label(q) + ")"});
    }
  }
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t r = 0; r < n; ++r)
        if (m.distance(p, r) > m.distance(p, q) + m.distance(q, r)) {
          out.push_back({"metric", "triangle inequality fails at (" + m.label(p) + "," +
                                       m.label(q) + "," + m.label(r) + ")"});
        }
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q)
        if (m.distance(m.mul(g, p), m.mul(g, q)) != m.distance(p, q)) {
          out.push_back({"left-invariance", "translation by " + m.label(g) +
                                                " moves the distance (" + m.label(p) + "," +
                                                m.label(q) + ")"});
        }
  return out;
}

/// Group of permutations attached to a metric group, canonically sorted.
struct IsometrySet {
  const FiniteMetricGroup* group = nullptr;
  std::vector<Perm> perms;  // sorted

  std::size_t size() const { return perms.size(); }
  bool contains(const Perm& p) const {
    return std::binary_search(perms.begin(), perms.end(), p);
  }
  friend bool operator==(const IsometrySet& a, const IsometrySet& b) {
    return a.perms == b.perms;
  }
};

/// Is the sorted permutation list closed under composition and inverse?
inline bool is_permutation_group(const IsometrySet& s) {
  for (const auto& p : s.perms) {
    if (!s.contains(p.inverse())) return false;
    for (const auto& q : s.perms)
      if (!s.contains(compose(p, q))) return false;
  }
  return true;
}

namespace detail {

/// Distance matrices re-coded over a shared alphabet of values, plus per-point
/// sorted row profiles. Profile equality is a necessary condition for a point
/// to be the image of another under an isometry.
struct CodedDistances {
  std::vector<std::vector<int>> d1, d2;
  std::vector<std::vector<int>> profile1, profile2;
};

inline std::vector<std::vector<int>> code_matrix(const Mat& dist,
                                                 const std::vector<Rat>& alphabet) {
  const std::size_t n = dist.rows();
  std::vector<std::vector<int>> coded(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto it = std::lower_bound(alphabet.begin(), alphabet.end(), dist(i, j));
      coded[i][j] = static_cast<int>(it - alphabet.begin());
    }
  return coded;
}

inline CodedDistances code_distances(const Mat& a, const Mat& b) {
  std::vector<Rat> alphabet;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) alphabet.push_back(a(i, j));
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) alphabet.push_back(b(i, j));
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
  CodedDistances c;
  c.d1 = code_matrix(a, alphabet);
  c.d2 = code_matrix(b, alphabet);
  auto profiles = [](const std::vector<std::vector<int>>& d) {
    std::vector<std::vector<int>> p(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
      p[i] = d[i];
      std::sort(p[i].begin(), p[i].end());
    }
    return p;
  };
  c.profile1 = profiles(c.d1);
  c.profile2 = profiles(c.d2);
  return c;
}

}  // namespace detail

/// All distance-preserving bijections M1 -> M2 by backtracking with
/// distance-profile pruning. Order mismatch yields an empty list.
/// With fix_basepoint, only maps sending identity to identity are produced.
inline std::vector<Perm> isometries_between(const FiniteMetricGroup& m1,
                                            const FiniteMetricGroup& m2,
                                            bool fix_basepoint = false) {
  if (m1.order() != m2.order()) return {};
  const std::size_t n = m1.order();
  const auto coded = detail::code_distances(m1.dist(), m2.dist());

  std::vector<Perm> found;
  std::vector<std::size_t> image(n, n);
  std::vector<bool> used(n, false);
  if (fix_basepoint) {
    image[m1.identity()] = m2.identity();
    used[m2.identity()] = true;
  }

  auto rec = [&](auto&& self, std::size_t i) -> void {
    while (i < n && image[i] != n) ++i;  // skip pre-assigned points
    if (i == n) {
      Perm p;
      p.map = image;
      found.push_back(std::move(p));
      return;
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (used[v] || coded.profile1[i] != coded.profile2[v]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < n && ok; ++j)
        if (image[j] != n && coded.d2[v][image[j]] != coded.d1[i][j]) ok = false;
      if (!ok) continue;
      image[i] = v;
      used[v] = true;
      self(self, i + 1);
      image[i] = n;
      used[v] = false;
    }
  };
  rec(rec, 0);
  std::sort(found.begin(), found.end());
  return found;
}

/// Self-isometries of M, a group under composition.
inline IsometrySet isometries(const FiniteMetricGroup& m) {
  return {&m, isometries_between(m, m)};
}

/// The regular representation p ↦ g·p.
inline IsometrySet left_translations(const FiniteMetricGroup& m) {
  std::vector<Perm> perms;
  for (std::size_t g = 0; g < m.order(); ++g) {
    Perm p;
    p.map.resize(m.order());
    for (std::size_t x = 0; x < m.order(); ++x) p.map[x] = m.mul(g, x);
    perms.push_back(std::move(p));
  }
  std::sort(perms.begin(), perms.end());
  return {&m, std::move(perms)};
}

inline bool is_homomorphism(const FiniteMetricGroup& m, const Perm& f) {
  for (std::size_t a = 0; a < m.order(); ++a)
    for (std::size_t b = 0; b < m.order(); ++b)
      if (f.map[m.mul(a, b)] != m.mul(f.map[a], f.map[b])) return false;
  return true;
}

inline bool is_isomorphism(const FiniteMetricGroup& m1, const FiniteMetricGroup& m2,
                           const Perm& f) {
  if (m1.order() != m2.order() || f.size() != m1.order()) return false;
  for (std::size_t a = 0; a < m1.order(); ++a)
    for (std::size_t b = 0; b < m1.order(); ++b)
      if (f.map[m1.mul(a, b)] != m2.mul(f.map[a], f.map[b])) return false;
  return true;
}

namespace detail {
inline std::size_t element_order(const FiniteMetricGroup& m, std::size_t a) {
  std::size_t x = a, ord = 1;
  while (x != m.identity()) {
    x = m.mul(x, a);
    ++ord;
    if (ord > m.order()) return 0;  // not a group; avoid infinite loop
  }
  return ord;
}
}  // namespace detail

/// Automorphism group by filtering bijections through the homomorphism test,
/// pruned by element order. Intended for small orders.
inline IsometrySet automorphisms(const FiniteMetricGroup& m) {
  const std::size_t n = m.order();
  std::vector<std::size_t> ord(n);
  for (std::size_t a = 0; a < n; ++a) ord[a] = detail::element_order(m, a);

  std::vector<Perm> found;
  std::vector<std::size_t> image(n, n);
  std::vector<bool> used(n, false);
  image[m.identity()] = m.identity();
  used[m.identity()] = true;

  auto rec = [&](auto&& self, std::size_t i) -> void {
    while (i < n && image[i] != n) ++i;
    if (i == n) {
      Perm p;
      p.map = image;
      if (is_homomorphism(m, p)) found.push_back(std::move(p));
      return;
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (used[v] || ord[v] != ord[i]) continue;
      image[i] = v;
      used[v] = true;
      self(self, i + 1);
      image[i] = n;
      used[v] = false;
    }
  };
  rec(rec, 0);
  std::sort(found.begin(), found.end());
  return {&m, std::move(found)};
}

/// Elements of S fixing the group identity.
inline IsometrySet stabilizer(const IsometrySet& s) {
  IsometrySet out{s.group, {}};
  const std::size_t e = s.group->identity();
  for (const auto& p : s.perms)
    if (p.map[e] == e) out.perms.push_back(p);
  return out;
}

/// Witness that a map is a left translation followed by an automorphism.
struct AffineWitness {
  std::size_t translation;  // element m, forced to be F(identity)
  Perm automorphism;
};

/// The unique affine candidate for F is (m, L_m⁻¹ ∘ F) with m = F(identity);
/// returns it when the second factor is an automorphism, nothing otherwise.
inline std::optional<AffineWitness> affine_decompose(const Perm& f,
                                                     const FiniteMetricGroup& m) {
  if (f.size() != m.order()) throw DimensionMismatch("affine_decompose: size mismatch");
  const std::size_t t = f.map[m.identity()];
  const std::size_t tinv = m.inverse_of(t);
  if (tinv == m.order()) return std::nullopt;
  Perm phi;
  phi.map.resize(m.order());
  for (std::size_t x = 0; x < m.order(); ++x) phi.map[x] = m.mul(tinv, f.map[x]);
  if (!is_homomorphism(m, phi)) return std::nullopt;
  return AffineWitness{t, std::move(phi)};
}

/// {f ∘ p ∘ f⁻¹ : p in s}, sorted.
inline std::vector<Perm> conjugate_perms(const Perm& f, const std::vector<Perm>& s) {
  const Perm finv = f.inverse();
  std::vector<Perm> out;
  out.reserve(s.size());
  for (const auto& p : s) out.push_back(compose(f, compose(p, finv)));
  std::sort(out.begin(), out.end());
  return out;
}

inline IsometrySet conjugate_set(const Perm& f, const IsometrySet& s) {
  return {s.group, conjugate_perms(f, s.perms)};
}

struct TfaeReport {
  bool translations_normal = false;       // (a) M^L ⊴ G
  bool all_isometries_affine = false;     // (b) G < Aff(M)
  bool stabilizer_automorphisms = false;  // (c) Stab_1(G) < Aut(M)
  bool semidirect_splits = false;         // (d) G = M^L ⋊ Stab_1(G)
  bool equivalent = false;
  std::size_t isometry_count = 0;
  std::size_t translation_count = 0;
  std::size_t stabilizer_count = 0;
  std::size_t affine_count = 0;
  std::optional<Perm> non_normal_witness;
  std::optional<Perm> non_affine_witness;
  std::optional<Perm> non_automorphism_witness;
};

/// Evaluates the four split conditions independently and exhaustively.
inline TfaeReport check_tfae(const FiniteMetricGroup& m) {
  TfaeReport r;
  const IsometrySet g = isometries(m);
  const IsometrySet ml = left_translations(m);
  const IsometrySet st = stabilizer(g);
  r.isometry_count = g.size();
  r.translation_count = ml.size();
  r.stabilizer_count = st.size();

  r.translations_normal = true;
  for (const auto& f : g.perms) {
    const Perm finv = f.inverse();
    for (const auto& l : ml.perms) {
      if (!ml.contains(compose(f, compose(l, finv)))) {
        r.translations_normal = false;
        if (!r.non_normal_witness) r.non_normal_witness = f;
        break;
      }
    }
    if (!r.translations_normal) break;
  }

  r.all_isometries_affine = true;
  for (const auto& f : g.perms) {
    if (affine_decompose(f, m)) {
      ++r.affine_count;
    } else {
      r.all_isometries_affine = false;
      if (!r.non_affine_witness) r.non_affine_witness = f;
    }
  }

  r.stabilizer_automorphisms = true;
  for (const auto& f : st.perms)
    if (!is_homomorphism(m, f)) {
      r.stabilizer_automorphisms = false;
      if (!r.non_automorphism_witness) r.non_automorphism_witness = f;
      break;
    }

  // (d): normality, product covering, trivial intersection, each checked directly
  bool covers = true;
  for (const auto& f : g.perms) {
    const std::size_t t = f.map[m.identity()];
    const std::size_t tinv = m.inverse_of(t);
    if (tinv == m.order()) {
      covers = false;
      break;
    }
    Perm ltinv;
    ltinv.map.resize(m.order());
    for (std::size_t x = 0; x < m.order(); ++x) ltinv.map[x] = m.mul(tinv, x);
    if (!st.contains(compose(ltinv, f))) {
      covers = false;
      break;
    }
  }
  std::size_t common = 0;
  for (const auto& p : ml.perms)
    if (st.contains(p)) ++common;
  r.semidirect_splits = r.translations_normal && covers && common == 1;

  r.equivalent = r.translations_normal == r.all_isometries_affine &&
                 r.all_isometries_affine == r.stabilizer_automorphisms &&
                 r.stabilizer_automorphisms == r.semidirect_splits;
  return r;
}

// ---------------------------------------------------------------------------
// corpus of small metric groups

namespace detail {

using Table = std::vector<std::vector<std::size_t>>;

inline Table cyclic_table(std::size_t n) {
  Table t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return t;
}

inline Table product_table(const Table& a, const Table& b) {
  const std::size_t na = a.size(), nb = b.size();
  Table t(na * nb, std::vector<std::size_t>(na * nb));
  for (std::size_t i = 0; i < na * nb; ++i)
    for (std::size_t j = 0; j < na * nb; ++j)
      t[i][j] = a[i / nb][j / nb] * nb + b[i % nb][j % nb];
  return t;
}

/// Table from a permutation representation: element i acts as gens-composite.
inline Table table_from_perms(const std::vector<Perm>& elements) {
  const std::size_t n = elements.size();
  Table t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Perm p = compose(elements[i], elements[j]);
      auto it = std::find(elements.begin(), elements.end(), p);
      if (it == elements.end()) throw InternalCheckError("table_from_perms: not closed");
      t[i][j] = static_cast<std::size_t>(it - elements.begin());
    }
  return t;
}

inline Table dihedral4_table() {
  // symmetries of the square acting on its corners; r = rotation, s = flip
  const Perm r{{1, 2, 3, 0}};
  const Perm s{{1, 0, 3, 2}};
  std::vector<Perm> els = {Perm::identity(4), r, compose(r, r), compose(r, compose(r, r)),
                           s, compose(r, s), compose(r, compose(r, s)),
                           compose(r, compose(r, compose(r, s)))};
  return table_from_perms(els);
}

inline Table sym3_table() {
  const Perm r{{1, 2, 0}};
  const Perm s{{1, 0, 2}};
  std::vector<Perm> els = {Perm::identity(3), r,
                           compose(r, r), s,
                           compose(r, s), compose(r, compose(r, s))};
  return table_from_perms(els);
}

inline Table quaternion_table() {
  // 1, -1, i, -i, j, -j, k, -k
  auto enc = [](std::size_t unit, bool neg) { return unit * 2 + (neg ? 1 : 0); };
  // unit multiplication table for {1, i, j, k} with sign
  // (u, v) -> (w, sign)
  static const int sign_tab[4][4] = {{+1, +1, +1, +1},
                                     {+1, -1, +1, -1},
                                     {+1, -1, -1, +1},
                                     {+1, +1, -1, -1}};
  static const std::size_t unit_tab[4][4] = {{0, 1, 2, 3},
                                             {1, 0, 3, 2},
                                             {2, 3, 0, 1},
                                             {3, 2, 1, 0}};
  Table t(8, std::vector<std::size_t>(8));
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = 0; b < 8; ++b) {
      const std::size_t ua = a / 2, ub = b / 2;
      bool neg = ((a % 2) != 0) != ((b % 2) != 0);
      if (sign_tab[ua][ub] < 0) neg = !neg;
      t[a][b] = enc(unit_tab[ua][ub], neg);
    }
  return t;
}

inline std::vector<std::string> generic_labels(std::size_t n) {
  std::vector<std::string> l;
  for (std::size_t i = 0; i < n; ++i) l.push_back("g" + std::to_string(i));
  return l;
}

}  // namespace detail

/// dist(p,q) = ℓ(p⁻¹·q) for a symmetric positive length function ℓ (ℓ(e) = 0).
inline Mat dist_from_length(const detail::Table& table, std::size_t identity,
                            const std::vector<Rat>& length) {
  const std::size_t n = table.size();
  // inverse lookup
  std::vector<std::size_t> inv(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (table[a][b] == identity && table[b][a] == identity) inv[a] = b;
  Mat d(n, n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) d(p, q) = length[table[inv[p]][q]];
  return d;
}

struct CorpusEntry {
  std::string name;
  FiniteMetricGroup group;
};

/// Deterministic corpus: every group of order ≤ max_order with a family of
/// left-invariant metrics per group. Metric 0 is the discrete distance; the
/// rest come from seeded random length functions with values in [1, 2], where
/// the triangle inequality holds automatically.
inline std::vector<CorpusEntry> metric_group_corpus(std::size_t max_order,
                                                    std::size_t metrics_per_group) {
  using detail::Table;
  std::vector<std::pair<std::string, Table>> groups;
  const Table z2 = detail::cyclic_table(2);
  const Table z4 = detail::cyclic_table(4);
  for (std::size_t n = 1; n <= std::min<std::size_t>(max_order, 8); ++n)
    groups.emplace_back("z" + std::to_string(n), detail::cyclic_table(n));
  if (max_order >= 4) groups.emplace_back("z2xz2", detail::product_table(z2, z2));
  if (max_order >= 6) groups.emplace_back("s3", detail::sym3_table());
  if (max_order >= 8) {
    groups.emplace_back("z4xz2", detail::product_table(z4, z2));
    groups.emplace_back("z2xz2xz2", detail::product_table(detail::product_table(z2, z2), z2));
    groups.emplace_back("d4", detail::dihedral4_table());
    groups.emplace_back("q8", detail::quaternion_table());
  }

  static const Rat menu[] = {Rat(1), Rat(5, 4), Rat(3, 2), Rat(7, 4), Rat(2)};
  std::vector<CorpusEntry> out;
  for (const auto& [gname, table] : groups) {
    const std::size_t n = table.size();
    std::vector<std::size_t> inv(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (table[a][b] == 0 && table[b][a] == 0) inv[a] = b;
    for (std::size_t mi = 0; mi < metrics_per_group; ++mi) {
      std::vector<Rat> length(n, Rat(0));
      if (mi == 0) {
        for (std::size_t a = 0; a < n; ++a)
          if (a != 0) length[a] = Rat(1);
      } else {
        auto rng = seeded_rng("corpus:" + gname + ":" + std::to_string(mi));
        for (std::size_t a = 1; a < n; ++a) {
          if (!length[a].is_zero()) continue;  // already set via the inverse
          const Rat v = menu[draw(rng, 5)];
          length[a] = v;
          length[inv[a]] = v;
        }
      }
      const std::string name = gname + "#m" + std::to_string(mi);
      out.push_back(CorpusEntry{
          name, FiniteMetricGroup(detail::generic_labels(n), 0, table,
                                  dist_from_length(table, 0, length))});
    }
  }
  return out;
}

}  // namespace liework
