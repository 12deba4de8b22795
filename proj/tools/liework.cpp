// liework: exact-arithmetic workbench for Lie algebra invariants, isometry
// algebras of nilpotent metric groups, and brute-force finite metric groups.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "liework/checks.hpp"
#include "liework/formats.hpp"
#include "liework/version.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFalsified = 1;  // a verdict came out opposite to what must hold: implementation bug
constexpr int kParseError = 2;
constexpr int kPreconditionError = 3;

using namespace liework;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(1, 1, "cannot open file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

bool looks_like_file(const std::string& arg) {
  std::error_code ec;
  return std::filesystem::exists(arg, ec) && !std::filesystem::is_directory(arg, ec);
}

/// A file path in either format, or a catalog name.
struct Input {
  std::optional<LieFile> lie;
  std::optional<FmgFile> fmg;
  std::string source_text;  // canonical text, for digests
};

Input resolve_input(const std::string& arg) {
  Input in;
  if (looks_like_file(arg)) {
    const std::string text = read_file(arg);
    const std::string kind = detect_format(text);
    if (kind == "lie_algebra") {
      in.lie = parse_lie(text);
    } else if (kind == "metric_group") {
      in.fmg = parse_fmg(text);
    } else {
      throw ParseError(1, 1, "file '" + arg + "' starts with '" + kind +
                                 "', expected 'lie_algebra' or 'metric_group'");
    }
    in.source_text = text;
    return in;
  }
  const CatalogEntry* e = catalog_find(arg);
  if (!e) throw ParseError(1, 1, "'" + arg + "' is neither a file nor a catalog entry");
  if (e->kind == CatalogKind::lie_algebra) {
    in.lie = LieFile{e->name, *e->lie, e->metric};
  } else {
    in.fmg = FmgFile{e->name, *e->fmg};
  }
  in.source_text = serialize_entry(*e);
  return in;
}

LieFile resolve_lie(const std::string& arg) {
  Input in = resolve_input(arg);
  if (!in.lie) throw PreconditionError("'" + arg + "' is a finite metric group, not a Lie algebra");
  return std::move(*in.lie);
}

FmgFile resolve_fmg(const std::string& arg) {
  Input in = resolve_input(arg);
  if (!in.fmg) throw PreconditionError("'" + arg + "' is a Lie algebra, not a finite metric group");
  return std::move(*in.fmg);
}

void print_subspace_rows(const Subspace& s, const std::string& indent) {
  for (std::size_t i = 0; i < s.dim(); ++i) {
    std::cout << indent << '[';
    for (std::size_t j = 0; j < s.ambient_dim(); ++j) {
      if (j) std::cout << ' ';
      std::cout << s.basis()(i, j);
    }
    std::cout << "]\n";
  }
}

int cmd_check(const std::string& arg) {
  Input in = resolve_input(arg);
  if (in.lie) {
    const LieFile& f = *in.lie;
    std::cout << "lie_algebra " << f.name << ": dim " << f.algebra.dim() << ", "
              << f.algebra.structure().size() << " bracket pair(s), Jacobi identity holds\n";
    std::cout << "metric: " << (f.metric ? "declared, positive definite" : "none (identity default)")
              << "\n";
  } else {
    std::cout << "metric_group " << in.fmg->name << ": order " << in.fmg->group.order()
              << ", group and metric axioms hold\n";
  }
  return kOk;
}

int cmd_series(const std::string& arg) {
  const LieFile f = resolve_lie(arg);
  const LieAlgebra& g = f.algebra;
  std::cout << "lie_algebra " << f.name << " (dim " << g.dim() << ")\n";
  std::cout << "lower central series dims:";
  for (const auto& s : lower_central_series(g)) std::cout << ' ' << s.space.dim();
  std::cout << "\nderived series dims:";
  for (const auto& s : derived_series(g)) std::cout << ' ' << s.space.dim();
  std::cout << "\nnilpotent: " << (is_nilpotent(g) ? "yes" : "no")
            << "\nsolvable: " << (is_solvable(g) ? "yes" : "no")
            << "\ncenter dim: " << center(g).space.dim() << "\n";
  return kOk;
}

int cmd_nilradical(const std::string& arg) {
  const LieFile f = resolve_lie(arg);
  const NilradicalReport r = nilradical(f.algebra);
  std::cout << "lie_algebra " << f.name << " (dim " << f.algebra.dim() << ")\n";
  std::cout << "radical dim: " << r.radical_dim << "\n";
  std::cout << "nilradical dim: " << r.nilradical.space.dim() << ", nilpotency class "
            << r.nilpotency_class << "\n";
  if (r.nilradical.space.dim() > 0) {
    std::cout << "basis rows:\n";
    print_subspace_rows(r.nilradical.space, "  ");
  }
  std::cout << "certificate: " << r.ideal_checks << " ideal bracket check(s), hull dim "
            << r.hull_dim << ", hull trace-radical dim " << r.hull_radical_dim << "\n";
  return kOk;
}

int cmd_derivations(const std::string& arg, bool skew) {
  const LieFile f = resolve_lie(arg);
  const LieAlgebra& g = f.algebra;
  const MetricTensor q = f.metric ? *f.metric : MetricTensor::identity(g.dim());
  const LinMapAlg alg = skew ? skew_derivations(g, q) : derivations(g);
  std::cout << (skew ? "skew derivation" : "derivation") << " algebra of " << f.name << ": dim "
            << alg.dim() << "\n";
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    std::cout << "D" << (i + 1) << ":\n" << alg.basis_maps()[i];
  }
  return kOk;
}

int cmd_isometry_algebra(const std::string& arg, const std::string& metric_path) {
  LieFile f = resolve_lie(arg);
  MetricTensor q = f.metric ? *f.metric : MetricTensor::identity(f.algebra.dim());
  std::string metric_note = f.metric ? "declared" : "identity default";
  if (!metric_path.empty()) {
    q = parse_metric_override(read_file(metric_path), f.algebra.dim());
    metric_note = "from " + metric_path;
  }
  const IsometryAlgebra iso = isometry_algebra(f.algebra, q);
  std::cout << "isometry algebra of " << f.name << " (metric: " << metric_note << ")\n";
  std::cout << "base dim " << iso.base->dim() << ", skew derivations dim " << iso.stab.dim()
            << ", total dim " << iso.total->dim() << "\n";
  std::cout << serialize_lie(LieFile{f.name + "-isometry", *iso.total, std::nullopt});
  return kOk;
}

int cmd_nilrad_condition(const std::string& arg) {
  const LieFile f = resolve_lie(arg);
  const MetricTensor q = f.metric ? *f.metric : MetricTensor::identity(f.algebra.dim());
  const IsometryAlgebra iso = isometry_algebra(f.algebra, q);
  const NilradicalVerdict v = check_nilradical_condition(iso);
  std::cout << "nilradical condition for " << f.name << "\n";
  std::cout << "total dim " << iso.total->dim() << ", skew dim " << iso.stab.dim() << "\n";
  std::cout << "nilradical of the isometry algebra: dim " << v.nil_found.space.dim() << "\n";
  print_subspace_rows(v.nil_found.space, "  ");
  std::cout << "embedded base: dim " << iso.n_embed.space.dim() << "\n";
  std::cout << "holds: "
            << (v.holds ? "yes" : "NO (impossible for a valid nilpotent base; this "
                                  "falsifies the implementation, not the input)")
            << "\n";
  return v.holds ? kOk : kFalsified;
}

int cmd_finite_analyze(const std::string& arg) {
  const FmgFile f = resolve_fmg(arg);
  const FiniteMetricGroup& m = f.group;
  const IsometrySet g = isometries(m);
  const IsometrySet ml = left_translations(m);
  const IsometrySet st = stabilizer(g);
  const IsometrySet aut = automorphisms(m);
  std::size_t affine = 0;
  for (const auto& p : g.perms)
    if (affine_decompose(p, m)) ++affine;
  std::cout << "metric_group " << f.name << ": order " << m.order() << "\n";
  std::cout << "isometries: " << g.size() << "\n";
  std::cout << "left translations: " << ml.size() << "\n";
  std::cout << "stabilizer of identity: " << st.size() << "\n";
  std::cout << "automorphisms: " << aut.size() << "\n";
  std::cout << "affine isometries: " << affine << "\n";
  std::cout << "orbit-stabilizer factorization: " << g.size() << " = " << ml.size() << " x "
            << st.size() << "\n";
  return g.size() == ml.size() * st.size() ? kOk : kFalsified;
}

int cmd_finite_tfae(const std::string& arg) {
  const FmgFile f = resolve_fmg(arg);
  const TfaeReport r = check_tfae(f.group);
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::cout << "split report for " << f.name << "\n";
  std::cout << "(a) left translations normal in the isometry group: "
            << yn(r.translations_normal) << "\n";
  std::cout << "(b) every isometry affine: " << yn(r.all_isometries_affine) << "\n";
  std::cout << "(c) identity stabilizer consists of automorphisms: "
            << yn(r.stabilizer_automorphisms) << "\n";
  std::cout << "(d) isometry group splits as translations x stabilizer: "
            << yn(r.semidirect_splits) << "\n";
  std::cout << "equivalent: " << yn(r.equivalent) << "\n";
  std::cout << "counts: isometries " << r.isometry_count << ", translations "
            << r.translation_count << ", stabilizer " << r.stabilizer_count << ", affine "
            << r.affine_count << "\n";
  if (r.non_affine_witness)
    std::cout << "witness (non-affine isometry): " << one_line(*r.non_affine_witness) << "\n";
  return r.equivalent ? kOk : kFalsified;
}

int cmd_catalog_list() {
  for (const auto& e : catalog()) {
    std::cout << e.name << "\t"
              << (e.kind == CatalogKind::lie_algebra ? "lie-algebra" : "finite-group") << "\t";
    if (e.kind == CatalogKind::lie_algebra)
      std::cout << "dim " << e.lie->dim();
    else
      std::cout << "order " << e.fmg->order();
    std::cout << "\t" << e.provenance << "\n";
  }
  return kOk;
}

int cmd_catalog_show(const std::string& name) {
  const CatalogEntry* e = catalog_find(name);
  if (!e) throw ParseError(1, 1, "no catalog entry named '" + name + "'");
  std::cout << serialize_entry(*e);
  return kOk;
}

int cmd_verify_all(bool as_json) {
  const Report r = verify_all();
  if (as_json) {
    std::cout << report_to_json(r).dump(2) << "\n";
  } else {
    std::cout << report_to_text(r);
  }
  return all_pass(r.checks) ? kOk : kFalsified;
}

int cmd_report(const std::string& arg) {
  Input in = resolve_input(arg);
  Report r;
  const auto t0 = std::chrono::steady_clock::now();
  r.input_digest = "fnv1a64:" + fnv1a64_hex(in.source_text);
  r.checks = in.lie ? report_checks_for_lie(*in.lie) : report_checks_for_fmg(*in.fmg);
  r.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
  std::cout << report_to_json(r).dump(2) << "\n";
  return all_pass(r.checks) ? kOk : kFalsified;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic workbench for isometries of nilpotent metric groups"};
  app.set_version_flag("--version", std::string(liework::kVersion));
  app.require_subcommand(1);

  std::string arg, metric_path;
  bool skew = false, as_json = false;

  auto* check = app.add_subcommand("check", "parse and validate a file or catalog entry");
  check->add_option("input", arg, "file or catalog name")->required();

  auto* series = app.add_subcommand("series", "lower central and derived series");
  series->add_option("input", arg, "file or catalog name")->required();

  auto* nilrad = app.add_subcommand("nilradical", "largest nilpotent ideal with certificate");
  nilrad->add_option("input", arg, "file or catalog name")->required();

  auto* deriv = app.add_subcommand("derivations", "derivation algebra");
  deriv->add_option("input", arg, "file or catalog name")->required();
  deriv->add_flag("--skew", skew, "restrict to derivations skew for the metric");

  auto* isoalg = app.add_subcommand("isometry-algebra",
                                    "semidirect sum with the skew derivations (nilpotent base)");
  isoalg->add_option("input", arg, "file or catalog name")->required();
  isoalg->add_option("--metric", metric_path, "metric override file");

  auto* nilcond = app.add_subcommand("nilrad-condition",
                                     "is the base the nilradical of its isometry algebra?");
  nilcond->add_option("input", arg, "file or catalog name")->required();

  auto* finite = app.add_subcommand("finite", "finite metric group commands");
  finite->require_subcommand(1);
  auto* analyze = finite->add_subcommand("analyze", "isometries, translations, stabilizer");
  analyze->add_option("input", arg, "file or catalog name")->required();
  auto* tfae = finite->add_subcommand("tfae", "the four equivalent split conditions");
  tfae->add_option("input", arg, "file or catalog name")->required();

  auto* cat = app.add_subcommand("catalog", "built-in examples");
  cat->require_subcommand(1);
  cat->add_subcommand("list", "list entries");
  auto* show = cat->add_subcommand("show", "print an entry in file format");
  show->add_option("name", arg, "catalog name")->required();

  auto* verify = app.add_subcommand("verify-all", "run every built-in check");
  verify->add_flag("--json", as_json, "emit the canonical JSON report");

  auto* report = app.add_subcommand("report", "canonical JSON report for one input");
  report->add_option("input", arg, "file or catalog name")->required();
  report->add_flag("--json", as_json, "emit JSON (always on for this command)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
        e.get_name() == "CallForVersion")
      return app.exit(e);
    app.exit(e);
    return kParseError;
  }

  try {
    if (check->parsed()) return cmd_check(arg);
    if (series->parsed()) return cmd_series(arg);
    if (nilrad->parsed()) return cmd_nilradical(arg);
    if (deriv->parsed()) return cmd_derivations(arg, skew);
    if (isoalg->parsed()) return cmd_isometry_algebra(arg, metric_path);
    if (nilcond->parsed()) return cmd_nilrad_condition(arg);
    if (finite->parsed()) {
      if (analyze->parsed()) return cmd_finite_analyze(arg);
      if (tfae->parsed()) return cmd_finite_tfae(arg);
    }
    if (cat->parsed()) {
      if (show->parsed()) return cmd_catalog_show(arg);
      return cmd_catalog_list();
    }
    if (verify->parsed()) return cmd_verify_all(as_json);
    if (report->parsed()) return cmd_report(arg);
  } catch (const liework::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const liework::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kParseError;
  } catch (const liework::PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kPreconditionError;
  } catch (const liework::DimensionMismatch& e) {
    std::cerr << "dimension mismatch: " << e.what() << "\n";
    return kPreconditionError;
  } catch (const liework::InternalCheckError& e) {
    std::cerr << "internal check failed, implementation falsified: " << e.what() << "\n";
    return kFalsified;
  }
  return kParseError;
}
