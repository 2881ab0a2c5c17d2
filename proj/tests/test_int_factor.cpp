#include <catch2/catch_amalgamated.hpp>
#include <map>

#include "ffrace/int_factor.hpp"
#include "ffrace/rng.hpp"
#include "test_util.hpp"

using namespace ffrace;

namespace {

std::map<std::string, std::int64_t> fmap(const std::vector<ZFactor>& fs) {
  std::map<std::string, std::int64_t> m;
  for (const auto& f : fs) m[zformat(f.poly)] += f.mult;
  return m;
}

}  // namespace

TEST_CASE("known factorizations", "[int_factor]") {
  // x^4 - 1 = (x-1)(x+1)(x^2+1)
  auto f1 = fmap(factor_int(zpoly_i({-1, 0, 0, 0, 1})));
  CHECK(f1.size() == 3);
  CHECK(f1[zformat(zpoly_i({-1, 1}))] == 1);
  CHECK(f1[zformat(zpoly_i({1, 1}))] == 1);
  CHECK(f1[zformat(zpoly_i({1, 0, 1}))] == 1);

  // x^4 + 1 is irreducible over Z though it splits mod every prime
  auto f2 = factor_int(zpoly_i({1, 0, 0, 0, 1}));
  REQUIRE(f2.size() == 1);
  CHECK(f2[0].mult == 1);
  CHECK(is_irreducible_z(zpoly_i({1, 0, 0, 0, 1})));

  // (x^2 - 2)(x^2 - 3)
  auto f3 = fmap(factor_int(zmul(zpoly_i({-2, 0, 1}), zpoly_i({-3, 0, 1}))));
  CHECK(f3.size() == 2);
  CHECK(f3[zformat(zpoly_i({-2, 0, 1}))] == 1);
  CHECK(f3[zformat(zpoly_i({-3, 0, 1}))] == 1);

  // multiplicities through the squarefree split: (x+1)^3 (x^2+2)^2
  PolyZ g = zone();
  for (int i = 0; i < 3; ++i) g = zmul(g, zpoly_i({1, 1}));
  for (int i = 0; i < 2; ++i) g = zmul(g, zpoly_i({2, 0, 1}));
  auto f4 = fmap(factor_int(g));
  CHECK(f4[zformat(zpoly_i({1, 1}))] == 3);
  CHECK(f4[zformat(zpoly_i({2, 0, 1}))] == 2);
}

TEST_CASE("real part of the degree six example is irreducible", "[int_factor]") {
  CHECK(is_irreducible_z(zpoly_i({-75, 0, 1})));
}

TEST_CASE("random products are recovered", "[int_factor]") {
  std::vector<PolyZ> pool = {
      zpoly_i({-1, 1}),    zpoly_i({1, 1}),    zpoly_i({3, 1}),
      zpoly_i({1, 0, 1}),  zpoly_i({-2, 0, 1}), zpoly_i({1, 1, 1}),
      zpoly_i({1, -1, 1}), zpoly_i({2, 0, 0, 1}), zpoly_i({9, 3, 0, 1}),
      zpoly_i({1, 0, 0, 0, 1})};
  Rng rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    std::map<std::string, std::int64_t> want;
    PolyZ f = zone();
    int parts = 1 + static_cast<int>(rng.below(3));
    for (int j = 0; j < parts; ++j) {
      const PolyZ& p = pool[rng.below(pool.size())];
      std::int64_t mult = 1 + rng.below(2);
      want[zformat(p)] += mult;
      for (std::int64_t m = 0; m < mult; ++m) f = zmul(f, p);
    }
    auto got = fmap(factor_int(f));
    CHECK(got == want);
  }
}

TEST_CASE("factorization requires a monic input", "[int_factor]") {
  CHECK_THROWS_AS(factor_int(zpoly_i({1, 2})), error);
}
