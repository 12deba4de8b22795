#include <catch2/catch_amalgamated.hpp>

#include "liework/checks.hpp"
#include "liework/report.hpp"

using namespace liework;

TEST_CASE("json rendering of exact values") {
  CHECK(json_rat(Rat(-1, 2)) == "-1/2");
  CHECK(json_vec({Rat(1), Rat(0), Rat(2, 3)}) == Json({"1", "0", "2/3"}));
  const Json s = json_subspace(Subspace::from_span(3, {unit_vec(3, 1)}));
  CHECK(s["dim"] == 1);
  CHECK(s["ambient"] == 3);
  CHECK(s["basis"][0] == Json({"0", "1", "0"}));
}

TEST_CASE("report digest covers everything except wall time") {
  Report a;
  a.input_digest = "fnv1a64:0000000000000000";
  a.checks.push_back({"beta", true, "second", Json::object()});
  a.checks.push_back({"alpha", true, "first", Json::object()});
  a.wall_ms = 1;
  Report b = a;
  b.wall_ms = 99999;

  const Json ja = report_to_json(a), jb = report_to_json(b);
  CHECK(ja["digest"] == jb["digest"]);
  CHECK(ja["report"].dump() == jb["report"].dump());
  CHECK(ja["wall_ms"] != jb["wall_ms"]);

  // checks appear sorted by name regardless of insertion order
  CHECK(ja["report"]["checks"][0]["name"] == "alpha");
  CHECK(ja["report"]["checks"][1]["name"] == "beta");

  Report c = a;
  c.checks[0].summary = "changed";
  CHECK(report_to_json(c)["digest"] != ja["digest"]);
}

TEST_CASE("text rendering marks failures") {
  Report r;
  r.checks.push_back({"good", true, "fine", Json::object()});
  r.checks.push_back({"bad", false, "broken", Json::object()});
  const std::string text = report_to_text(r);
  CHECK(text.find("[PASS] good") != std::string::npos);
  CHECK(text.find("[FAIL] bad") != std::string::npos);
  CHECK(text.find("1/2 checks passed") != std::string::npos);
  CHECK_FALSE(all_pass(r.checks));
}

TEST_CASE("the built-in battery passes and is deterministic") {
  const Report first = verify_all();
  CHECK(all_pass(first.checks));
  CHECK_FALSE(first.checks.empty());

  const Report second = verify_all();
  const Json j1 = report_to_json(first), j2 = report_to_json(second);
  CHECK(j1["digest"] == j2["digest"]);
  CHECK(j1["report"].dump() == j2["report"].dump());
}

TEST_CASE("per-file batteries") {
  const CatalogEntry* h3 = catalog_find("heisenberg3");
  const auto lie_checks = report_checks_for_lie(LieFile{h3->name, *h3->lie, h3->metric});
  CHECK(all_pass(lie_checks));
  bool saw_condition = false;
  for (const auto& c : lie_checks)
    if (c.name.find("nilrad-condition") != std::string::npos) saw_condition = true;
  CHECK(saw_condition);

  const CatalogEntry* roto = catalog_find("rototranslation");
  const auto roto_checks = report_checks_for_lie(LieFile{roto->name, *roto->lie, roto->metric});
  CHECK(all_pass(roto_checks));  // not nilpotent: no condition check, nothing fails
  for (const auto& c : roto_checks) CHECK(c.name.find("nilrad-condition") == std::string::npos);

  const CatalogEntry* fp = catalog_find("fourpoint-discrete");
  const auto fmg_checks = report_checks_for_fmg(FmgFile{fp->name, *fp->fmg});
  CHECK(all_pass(fmg_checks));
}

TEST_CASE("fnv digests are stable") {
  CHECK(fnv1a64_hex("") == "cbf29ce484222325");
  CHECK(fnv1a64_hex("liework") == fnv1a64_hex("liework"));
  CHECK(fnv1a64_hex("a") != fnv1a64_hex("b"));
}
