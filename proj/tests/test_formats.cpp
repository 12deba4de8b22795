#include <catch2/catch_amalgamated.hpp>

#include "liework/catalog.hpp"
#include "liework/formats.hpp"

using namespace liework;

namespace {

const char* kHeisenbergText = R"(# the smallest interesting example
lie_algebra heisenberg3
dim 3
basis e1 e2 e3
bracket [e1,e2] = 1*e3
metric identity
end
)";

std::size_t error_line(const std::string& text, auto parse) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("parsing a lie algebra file") {
  const LieFile f = parse_lie(kHeisenbergText);
  CHECK(f.name == "heisenberg3");
  CHECK(f.algebra.dim() == 3);
  CHECK(f.algebra == *catalog_find("heisenberg3")->lie);
  REQUIRE(f.metric.has_value());
  CHECK(f.metric->q() == Mat::identity(3));
}

TEST_CASE("parsing a solvable algebra with several terms") {
  const LieFile f = parse_lie(
      "lie_algebra book\n"
      "dim 3\n"
      "basis X Y Z\n"
      "bracket [X,Y] = 1*Y\n"
      "bracket [X,Z] = 1*Z\n"
      "end\n");
  CHECK(is_solvable(f.algebra));
  CHECK_FALSE(is_nilpotent(f.algebra));
  CHECK_FALSE(f.metric.has_value());

  const LieFile combo = parse_lie(
      "lie_algebra combo\n"
      "dim 3\n"
      "basis X Y Z\n"
      "bracket [X,Y] = 1/2*Y + -2/3*Z\n"
      "end\n");
  CHECK(combo.algebra.bracket_basis(0, 1) == Vec{Rat(0), Rat(1, 2), Rat(-2, 3)});
}

TEST_CASE("a cyclic bracket pattern with one flipped sign still satisfies jacobi") {
  // this is a real algebra (indefinite rotations), not a typo detector case
  const LieFile f = parse_lie(
      "lie_algebra so21\n"
      "dim 3\n"
      "basis X Y Z\n"
      "bracket [X,Y] = 1*Z\n"
      "bracket [X,Z] = 1*Y\n"
      "bracket [Y,Z] = 1*X\n"
      "end\n");
  CHECK_FALSE(is_solvable(f.algebra));
}

TEST_CASE("jacobi violations are reported with a transcript") {
  const std::string text =
      "lie_algebra broken\n"
      "dim 3\n"
      "basis X Y Z\n"
      "bracket [X,Y] = 1*Z\n"
      "bracket [X,Z] = -1*Y\n"
      "bracket [Y,Z] = 1*Y\n"
      "end\n";
  CHECK_THROWS_AS(parse_lie(text), ValidationError);
  try {
    parse_lie(text);
  } catch (const ValidationError& e) {
    const std::string what = e.what();
    CHECK(what.find("Jacobi") != std::string::npos);
    CHECK(what.find("(X,Y,Z)") != std::string::npos);
  }
}

TEST_CASE("lie parse errors carry line and column") {
  auto lie = [](const std::string& t) { return parse_lie(t); };

  CHECK(error_line("lie_algebra x\ndim 2\nbasis a b\n", lie) == 4);  // missing end
  CHECK(error_line("lie_algebra x\ndim two\n", lie) == 2);
  CHECK(error_line("lie_algebra x\ndim 2\nbasis a\nend\n", lie) == 3);  // count mismatch
  CHECK(error_line("lie_algebra x\ndim 2\nbasis a a\nend\n", lie) == 3);
  CHECK(error_line("lie_algebra x\ndim 2\nbasis a b\nbracket [a,c] = 1*a\nend\n", lie) == 4);
  CHECK(error_line("lie_algebra x\ndim 2\nbasis a b\nbracket [b,a] = 1*a\nend\n", lie) == 4);
  CHECK(error_line(
            "lie_algebra x\ndim 2\nbasis a b\nbracket [a,b] = 1*a\nbracket [a,b] = 1*b\nend\n",
            lie) == 5);
  CHECK(error_line("lie_algebra x\ndim 2\nbasis a b\nbracket [a,b] = 1x*a\nend\n", lie) == 4);
  CHECK(error_line("lie_algebra x\ndim 2\nbasis a b\nbracket [a,b] = 1*a +\nend\n", lie) == 4);
  CHECK(error_line("lie_algebra x\ndim 2\nbasis a b\nend\nleftover\n", lie) == 5);
  CHECK(error_line("lie_algebra x\ndim 2\nbasis a b\nmetric rows\n1 0\n0\nend\n", lie) == 6);
  CHECK(error_line("lie_algebra x\ndim 1\nbasis a\nmetric diagonal\nend\n", lie) == 4);
  CHECK(error_line("", lie) > 0);

  SECTION("wrong-order pairs get a usable hint") {
    try {
      parse_lie("lie_algebra x\ndim 2\nbasis a b\nbracket [b,a] = 1*a\nend\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("opposite sign") != std::string::npos);
    }
  }
}

TEST_CASE("non-positive-definite metrics are rejected") {
  CHECK_THROWS_AS(parse_lie("lie_algebra x\n"
                            "dim 2\n"
                            "basis a b\n"
                            "metric rows\n"
                            "1 2\n"
                            "2 1\n"
                            "end\n"),
                  ValidationError);
  CHECK_THROWS_AS(parse_lie("lie_algebra x\n"
                            "dim 2\n"
                            "basis a b\n"
                            "metric rows\n"
                            "1 2\n"
                            "0 1\n"
                            "end\n"),
                  ValidationError);
}

TEST_CASE("parsing a finite metric group file") {
  const FmgFile f = parse_fmg(
      "metric_group z2\n"
      "order 2\n"
      "elements e a\n"
      "table\n"
      "e a\n"
      "a e\n"
      "metric\n"
      "0 1\n"
      "1 0\n"
      "end\n");
  CHECK(f.name == "z2");
  CHECK(f.group.order() == 2);
  CHECK(f.group.mul(1, 1) == 0);
  CHECK(f.group.distance(0, 1) == Rat(1));
}

TEST_CASE("fmg parse and validation errors") {
  auto fmg = [](const std::string& t) { return parse_fmg(t); };
  CHECK(error_line("metric_group x\norder 0\n", fmg) == 2);
  CHECK(error_line("metric_group x\norder 2\nelements e a\ntable\ne a\n", fmg) == 6);
  CHECK(error_line("metric_group x\norder 2\nelements e a\ntable\ne a b\n", fmg) == 5);
  CHECK(error_line("metric_group x\norder 2\nelements e a\ntable\ne q\na e\n", fmg) == 5);

  // a group table whose metric is not left-invariant fails validation
  CHECK_THROWS_AS(fmg("metric_group x\n"
                      "order 2\n"
                      "elements e a\n"
                      "table\n"
                      "e a\n"
                      "a e\n"
                      "metric\n"
                      "0 1\n"
                      "1 1\n"  // asymmetric diagonal corruption
                      "end\n"),
                  ValidationError);
  try {
    fmg("metric_group x\norder 2\nelements e a\ntable\ne a\na a\nmetric\n0 1\n1 0\nend\n");
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("violation") != std::string::npos);
  }
}

TEST_CASE("metric override files") {
  const MetricTensor id = parse_metric_override("metric identity\n", 3);
  CHECK(id.q() == Mat::identity(3));
  const MetricTensor q = parse_metric_override("metric rows\n2 1\n1 1\nend\n", 2);
  CHECK(q.q()(0, 0) == Rat(2));
  CHECK_THROWS_AS(parse_metric_override("metric rows\n1 0\n0 1\n", 3), ParseError);
  CHECK_THROWS_AS(parse_metric_override("rows\n", 2), ParseError);
}

TEST_CASE("format detection") {
  CHECK(detect_format(kHeisenbergText) == "lie_algebra");
  CHECK(detect_format("# comment\nmetric_group x\n") == "metric_group");
  CHECK(detect_format("   \n# nothing\n").empty());
}

TEST_CASE("serialization round-trips every catalog entry") {
  for (const auto& e : catalog()) {
    const std::string text = serialize_entry(e);
    if (e.kind == CatalogKind::lie_algebra) {
      const LieFile back = parse_lie(text);
      CHECK(back.name == e.name);
      CHECK(back.algebra == *e.lie);
      CHECK(back.metric == e.metric);
      CHECK(serialize_lie(back) == text);  // serialization is a fixed point
    } else {
      const FmgFile back = parse_fmg(text);
      CHECK(back.name == e.name);
      CHECK(back.group == *e.fmg);
      CHECK(serialize_fmg(back) == text);
    }
  }
}

TEST_CASE("serialization of non-identity metrics") {
  LieFile f{"one", LieAlgebra(2), MetricTensor(Mat{{Rat(2), Rat(1)}, {Rat(1), Rat(1)}})};
  const LieFile back = parse_lie(serialize_lie(f));
  CHECK(back.metric == f.metric);
}
