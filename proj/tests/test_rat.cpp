#include <catch2/catch_amalgamated.hpp>

#include "liework/rat.hpp"
#include "liework/sampling.hpp"

using namespace liework;

TEST_CASE("rationals are stored in lowest terms with positive denominator") {
  CHECK(Rat(6, 8) == Rat(3, 4));
  CHECK(Rat(-4, -6) == Rat(2, 3));
  CHECK(Rat(4, -6) == Rat(-2, 3));
  CHECK(Rat(4, -6).den() == 3);
  CHECK(Rat(4, -6).num() == -2);

  const Rat zero(0, 17);
  CHECK(zero.is_zero());
  CHECK(zero.num() == 0);
  CHECK(zero.den() == 1);

  CHECK_THROWS_AS(Rat(1, 0), PreconditionError);
}

TEST_CASE("rational arithmetic and ordering") {
  CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
  CHECK(Rat(1, 2) - Rat(1, 2) == Rat(0));
  CHECK(Rat(2, 3) * Rat(3, 4) == Rat(1, 2));
  CHECK(Rat(1, 2) / Rat(1, 4) == Rat(2));
  CHECK(-Rat(3, 5) == Rat(-3, 5));
  CHECK_THROWS_AS(Rat(1) / Rat(0), PreconditionError);

  CHECK(Rat(1, 2) < Rat(2, 3));
  CHECK(Rat(-1, 2) < Rat(0));
  CHECK(Rat(7, 3) > Rat(2));
  CHECK(Rat(1, 2).abs() == Rat(1, 2));
  CHECK(Rat(-1, 2).abs() == Rat(1, 2));
  CHECK(Rat(-5).sign() == -1);
  CHECK(Rat(0).sign() == 0);
}

TEST_CASE("parsing and rendering round-trip") {
  CHECK(Rat::from_string("3") == Rat(3));
  CHECK(Rat::from_string("-5/10") == Rat(-1, 2));
  CHECK(Rat::from_string("+7/3") == Rat(7, 3));
  for (const char* bad : {"", "1/", "/2", "1/0", "a", "1.5", "+", "--1", "1//2", "2/-3x"})
    CHECK_FALSE(Rat::from_string(bad).has_value());

  CHECK(to_string(Rat(3)) == "3");
  CHECK(to_string(Rat(-1, 2)) == "-1/2");
  CHECK(to_string(Rat(0)) == "0");
  CHECK(to_string(Rat(10, 5)) == "2");
}

TEST_CASE("arithmetic agrees with independent big-integer cross multiplication") {
  auto rng = seeded_rng("rat-cross-mult");
  for (int iter = 0; iter < 300; ++iter) {
    const BigInt a(draw_int(rng, -1000, 1000));
    const BigInt b(draw_int(rng, 1, 1000));
    const BigInt c(draw_int(rng, -1000, 1000));
    const BigInt d(draw_int(rng, 1, 1000));
    const Rat x(a, b), y(c, d);
    // a/b + c/d = (ad + cb) / bd, reduced only by Rat's own constructor
    CHECK(x + y == Rat(a * d + c * b, b * d));
    CHECK(x * y == Rat(a * c, b * d));
    CHECK(x - y == Rat(a * d - c * b, b * d));
    CHECK((x < y) == (a * d < c * b));
  }
}

TEST_CASE("no overflow on large intermediate values") {
  Rat big(BigInt("123456789012345678901234567890"), BigInt(7));
  Rat sum = big;
  for (int i = 0; i < 10; ++i) sum = sum * big;
  CHECK(sum.den() > 0);
  CHECK((sum / big / big / big / big / big / big / big / big / big / big) == big);
}
