// Acceptance suite: runs each published guarantee of the workbench end to end
// and prints one PASS/FAIL line per item. Exits nonzero if anything fails.
//
// Usage: liework_acceptance <path-to-liework-cli>

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "liework/checks.hpp"
#include "liework/formats.hpp"

using namespace liework;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& cli, const std::string& args) {
  const std::string cmd = "'" + cli + "' " + args + " 2>/dev/null";
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
  return r;
}

int failures = 0;

void verdict(int index, bool pass, const std::string& what) {
  std::cout << (pass ? "PASS" : "FAIL") << " [" << index << "/9] " << what << "\n";
  if (!pass) ++failures;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: liework_acceptance <path-to-liework-cli>\n";
    return 2;
  }
  const std::string cli = argv[1];

  // 1. Heisenberg fixture: total dim 4, skew dim 1, nilradical = embedded base.
  {
    const LieAlgebra& h3 = *catalog_find("heisenberg3")->lie;
    const IsometryAlgebra iso = isometry_algebra(h3, MetricTensor::identity(3));
    const NilradicalVerdict v = check_nilradical_condition(iso);
    const bool lib_ok = iso.total->dim() == 4 && iso.stab.dim() == 1 && v.holds &&
                        v.nil_found.space.dim() == 3 &&
                        subspace_equal(v.nil_found.space, iso.n_embed.space);
    const CliResult r = run_cli(cli, "nilrad-condition heisenberg3");
    const bool cli_ok = r.exit_code == 0 && r.out.find("total dim 4") != std::string::npos &&
                        r.out.find("skew dim 1") != std::string::npos &&
                        r.out.find("holds: yes") != std::string::npos;
    verdict(1, lib_ok && cli_ok,
            "nilradical condition on heisenberg3: total dim 4, skew dim 1, nilradical = "
            "embedded base (dim 3), exact");
  }

  // 2. Metric sweep: the condition holds for randomized positive-definite
  //    metrics on every nilpotent catalog algebra.
  {
    bool ok = true;
    std::size_t runs = 0;
    for (const char* name : {"heisenberg3", "abelian2", "abelian3", "abelian4", "filiform4"}) {
      const CatalogEntry* e = catalog_find(name);
      for (const auto& c : checks_nilrad_condition(*e, 3)) {
        ok = ok && c.pass;
        ++runs;
      }
    }
    verdict(2, ok && runs == 20,
            "nilradical condition under metric sweep: identity + 3 random metrics on 5 "
            "nilpotent algebras, " +
                std::to_string(runs) + " exact runs");
  }

  // 3. Rototranslation: 1-dimensional isometric derivations, planar
  //    nilradical, and the workbench refuses the non-nilpotent base.
  {
    const LieAlgebra& roto = *catalog_find("rototranslation")->lie;
    const bool skew_ok = skew_derivations(roto, MetricTensor::identity(3)).dim() == 1;
    const bool nil_ok =
        subspace_equal(nilradical(roto).nilradical.space,
                       Subspace::from_span(3, {unit_vec(3, 0), unit_vec(3, 1)}));
    const CliResult r = run_cli(cli, "isometry-algebra rototranslation");
    verdict(3, skew_ok && nil_ok && r.exit_code == 3,
            "rototranslation: skew derivations dim 1, nilradical = plane (dim 2), "
            "isometry-algebra exits with code 3");
  }

  // 4. Four-point counterexample: 24 isometries, exactly 8 affine, the four
  //    split conditions all fail and agree.
  {
    const FiniteMetricGroup& fp = *catalog_find("fourpoint-discrete")->fmg;
    const IsometrySet g = isometries(fp);
    std::size_t affine = 0;
    for (const auto& f : g.perms)
      if (affine_decompose(f, fp)) ++affine;
    const TfaeReport t = check_tfae(fp);
    verdict(4,
            g.size() == 24 && affine == 8 && !t.translations_normal &&
                !t.all_isometries_affine && !t.stabilizer_automorphisms &&
                !t.semidirect_splits && t.equivalent,
            "four-point discrete group: 24 isometries, 8 affine, split conditions all "
            "false yet equivalent");
  }

  // 5. Exhaustive split sweep over every group of order <= 8 with 5
  //    left-invariant metrics each.
  {
    const CheckResult c = check_corpus_tfae(8, 5);
    verdict(5, c.pass, "split-condition sweep: " + c.summary);
  }

  // 6. Conjugation sweep: every basepoint-fixing isometry between corpus
  //    entries carrying translations to translations is an isomorphism.
  {
    const CheckResult c = check_corpus_affine(8, 5);
    verdict(6, c.pass, "conjugation/isomorphism sweep: " + c.summary);
  }

  // 7. Equivariance: 20 random basis changes per catalog algebra carry the
  //    nilradical exactly.
  {
    bool ok = true;
    std::size_t runs = 0;
    for (const auto& e : catalog()) {
      if (e.kind != CatalogKind::lie_algebra) continue;
      for (std::size_t s = 1; s <= 20; ++s) {
        auto rng = seeded_rng("acceptance-equivariance:" + e.name + ":" + std::to_string(s));
        const Mat t = random_invertible(e.lie->dim(), rng);
        ok = ok && nilradical_equivariant(*e.lie, t);
        ++runs;
      }
    }
    verdict(7, ok && runs == 20 * 9,
            "nilradical equivariance under " + std::to_string(runs) +
                " random basis changes, exact");
  }

  // 8. Classical cross-checks.
  {
    bool ok = killing_form(*catalog_find("so3")->lie) == Rat(-2) * Mat::identity(3);
    ok = ok && subspace_equal(radical(*catalog_find("euclid3")->lie).space,
                              Subspace::from_span(6, {unit_vec(6, 0), unit_vec(6, 1),
                                                      unit_vec(6, 2)}));
    ok = ok && derivations(*catalog_find("heisenberg3")->lie).dim() == 6;
    for (std::size_t n = 1; n <= 4; ++n)
      ok = ok &&
           derivations(*catalog_find("abelian" + std::to_string(n))->lie).dim() == n * n;
    for (const auto& e : catalog()) {
      if (e.kind != CatalogKind::lie_algebra) continue;
      const LieAlgebra& g = *e.lie;
      ok = ok && subspace_contains(nilradical(g).nilradical.space,
                                   bracket_span(g, Subspace::full(g.dim()), radical(g).space));
    }
    verdict(8,
            ok,
            "oracle cross-checks: Killing form of so3, radical of euclid3, derivation "
            "dimensions, [g, rad(g)] inside nil(g)");
  }

  // 9. Determinism: two CLI runs emit byte-identical digest-covered sections.
  {
    const CliResult a = run_cli(cli, "verify-all --json");
    const CliResult b = run_cli(cli, "verify-all --json");
    bool ok = a.exit_code == 0 && b.exit_code == 0;
    if (ok) {
      // literal byte comparison with only the wall-time line removed
      auto strip_wall = [](const std::string& text) {
        std::istringstream in(text);
        std::string line, kept;
        while (std::getline(in, line))
          if (line.find("\"wall_ms\"") == std::string::npos) kept += line + '\n';
        return kept;
      };
      ok = strip_wall(a.out) == strip_wall(b.out);
      const Json ja = Json::parse(a.out), jb = Json::parse(b.out);
      ok = ok && ja["digest"] == jb["digest"] && ja["report"].dump() == jb["report"].dump();
    }
    verdict(9, ok, "verify-all --json is deterministic across consecutive runs");
  }

  std::cout << (failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << " ("
            << (9 - failures) << "/9)\n";
  return failures == 0 ? 0 : 1;
}
