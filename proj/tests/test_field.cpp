#include <catch2/catch_amalgamated.hpp>

#include "ffrace/field.hpp"
#include "ffrace/rng.hpp"
#include "test_util.hpp"

using namespace ffrace;

TEST_CASE("field construction rejects bad parameters", "[field]") {
  CHECK_THROWS_MATCHES(make_field(2, 1), error, ErrcMatcher(errc::even_characteristic));
  CHECK_THROWS_MATCHES(make_field(2, 5), error, ErrcMatcher(errc::even_characteristic));
  CHECK_THROWS_MATCHES(make_field(15, 1), error, ErrcMatcher(errc::non_prime));
  CHECK_THROWS_MATCHES(make_field(91, 1), error, ErrcMatcher(errc::non_prime));
  CHECK_THROWS_MATCHES(make_field(3, 40), error, ErrcMatcher(errc::too_large));
}

TEST_CASE("field handles are cached", "[field]") {
  Field a = make_field(7, 1);
  Field b = make_field(7, 1);
  CHECK(a.get() == b.get());
}

TEST_CASE("prime field arithmetic and quadratic character", "[field]") {
  Field F = make_field(7, 1);
  CHECK(F->q() == 7);
  CHECK(F->sub(2, 5) == 4);
  CHECK(F->mul(3, 5) == 1);
  CHECK(F->inv(3) == 5);
  CHECK(F->pow(3, 6) == 1);
  // squares mod 7 are {1, 2, 4}
  CHECK(F->eta(0) == 0);
  CHECK(F->eta(1) == 1);
  CHECK(F->eta(2) == 1);
  CHECK(F->eta(4) == 1);
  CHECK(F->eta(3) == -1);
  CHECK(F->eta(5) == -1);
  CHECK(F->eta(6) == -1);
  CHECK(F->order(F->generator()) == 6);
}

TEST_CASE("extension field structure", "[field]") {
  Field F = make_field(3, 2);
  CHECK(F->q() == 9);
  Fq a = F->generator();
  CHECK(F->order(a) == 8);
  CHECK(F->pow(a, 4) == F->from_int(2));  // a^4 = -1
  CHECK(F->pow(a, 7) == F->from_coords({2, 1}));
  CHECK(F->format(F->pow(a, 7)) == "[2,1]");
  CHECK(F->parse("[2,1]") == F->pow(a, 7));

  // Frobenius is an additive and multiplicative homomorphism
  Rng rng(12345);
  for (int i = 0; i < 50; ++i) {
    Fq x = static_cast<Fq>(rng.below(9));
    Fq y = static_cast<Fq>(rng.below(9));
    CHECK(F->frobenius(F->add(x, y)) == F->add(F->frobenius(x), F->frobenius(y)));
    CHECK(F->frobenius(F->mul(x, y)) == F->mul(F->frobenius(x), F->frobenius(y)));
  }
}

TEST_CASE("field axioms hold on random samples", "[field]") {
  for (auto [p, e] : {std::pair<int, int>{5, 1}, {3, 3}, {7, 2}, {13, 1}}) {
    Field F = make_field(p, e);
    Rng rng(99 + p * e);
    const std::int64_t q = F->q();
    for (int i = 0; i < 200; ++i) {
      Fq x = static_cast<Fq>(rng.below(q));
      Fq y = static_cast<Fq>(rng.below(q));
      Fq z = static_cast<Fq>(rng.below(q));
      CHECK(F->add(x, y) == F->add(y, x));
      CHECK(F->mul(x, y) == F->mul(y, x));
      CHECK(F->add(F->add(x, y), z) == F->add(x, F->add(y, z)));
      CHECK(F->mul(F->mul(x, y), z) == F->mul(x, F->mul(y, z)));
      CHECK(F->mul(x, F->add(y, z)) == F->add(F->mul(x, y), F->mul(x, z)));
      CHECK(F->add(x, F->neg(x)) == 0);
      if (x != 0) CHECK(F->mul(x, F->inv(x)) == 1);
      // eta is multiplicative
      CHECK(F->eta(x) * F->eta(y) == F->eta(F->mul(x, y)));
    }
  }
}

TEST_CASE("large prime field uses non-table paths", "[field]") {
  Field F = make_field(2003, 1);
  Rng rng(7);
  for (int i = 0; i < 100; ++i) {
    Fq x = static_cast<Fq>(1 + rng.below(2002));
    CHECK(F->mul(x, F->inv(x)) == 1);
    // Euler criterion
    int euler = F->pow(x, (2003 - 1) / 2) == 1 ? 1 : -1;
    CHECK(F->eta(x) == euler);
  }
}

TEST_CASE("coordinate and string round trips", "[field]") {
  Field F = make_field(5, 3);
  Rng rng(31);
  for (int i = 0; i < 100; ++i) {
    Fq x = static_cast<Fq>(rng.below(F->q()));
    CHECK(F->from_coords(F->coords(x)) == x);
    CHECK(F->parse(F->format(x)) == x);
  }
}
