#include <catch2/catch_amalgamated.hpp>
#include <algorithm>
#include <map>

#include "ffrace/fq_factor.hpp"
#include "ffrace/rng.hpp"
#include "test_util.hpp"

using namespace ffrace;

TEST_CASE("irreducible counts match the divisor-sum formula", "[fq_factor]") {
  CHECK(count_irreducibles(3, 1) == 3);
  CHECK(count_irreducibles(3, 2) == 3);
  CHECK(count_irreducibles(3, 3) == 8);
  CHECK(count_irreducibles(3, 4) == 18);
  CHECK(count_irreducibles(3, 5) == 48);
  CHECK(count_irreducibles(5, 2) == 10);
  CHECK(count_irreducibles(9, 2) == 36);
  CHECK(count_irreducibles(23, 1) == 23);
  CHECK(count_irreducibles(23, 2) == 253);
}

TEST_CASE("irreducible lists are complete and correct", "[fq_factor]") {
  Field F = make_field(3, 1);
  for (std::int64_t d = 1; d <= 4; ++d) {
    auto irr = irreducibles(F, d);
    CHECK(static_cast<std::int64_t>(irr->size()) ==
          count_irreducibles(3, d).get_si());
    for (std::uint32_t idx : *irr)
      CHECK(is_irreducible(monic_by_index(F, d, idx)));
    // complement check: everything not listed splits
    std::int64_t count = 1;
    for (std::int64_t i = 0; i < d; ++i) count *= 3;
    std::vector<bool> listed(static_cast<std::size_t>(count), false);
    for (std::uint32_t idx : *irr) listed[idx] = true;
    for (std::int64_t idx = 0; idx < count; ++idx)
      if (!listed[idx]) CHECK_FALSE(is_irreducible(monic_by_index(F, d, idx)));
  }
}

TEST_CASE("irreducible lists over an extension field", "[fq_factor]") {
  Field F = make_field(3, 2);
  auto irr = irreducibles(F, 2);
  CHECK(static_cast<std::int64_t>(irr->size()) == 36);
  for (std::uint32_t idx : *irr)
    CHECK(is_irreducible(monic_by_index(F, 2, idx)));
}

TEST_CASE("factorization recovers random factor multisets", "[fq_factor]") {
  for (auto [p, e] : {std::pair<int, int>{3, 1}, {5, 1}, {3, 2}}) {
    Field F = make_field(p, e);
    Rng rng(1000 + p * 10 + e);
    for (int trial = 0; trial < 30; ++trial) {
      auto irr1 = irreducibles(F, 1);
      auto irr2 = irreducibles(F, 2);
      auto irr3 = irreducibles(F, 3);
      std::map<std::string, std::int64_t> want;
      PolyFq f = poly_one(F);
      int parts = 1 + static_cast<int>(rng.below(3));
      for (int j = 0; j < parts; ++j) {
        std::int64_t d = 1 + rng.below(3);
        const auto& list = d == 1 ? *irr1 : (d == 2 ? *irr2 : *irr3);
        PolyFq P = monic_by_index(F, d, list[rng.below(list.size())]);
        std::int64_t mult = 1 + rng.below(3);
        want[format_poly(P)] += mult;
        for (std::int64_t m = 0; m < mult; ++m) f = pmul(f, P);
      }
      std::map<std::string, std::int64_t> got;
      for (const auto& fac : factor_fq(f)) {
        CHECK(is_irreducible(fac.poly));
        got[format_poly(fac.poly)] += fac.mult;
      }
      CHECK(got == want);
    }
  }
}

TEST_CASE("factorization handles p-th powers", "[fq_factor]") {
  Field F = make_field(3, 1);
  // (x^2 + 1)^3 has derivative zero
  PolyFq base = poly_from_coeffs(F, {1, 0, 1});
  PolyFq f = poly_one(F);
  for (int i = 0; i < 3; ++i) f = pmul(f, base);
  auto facs = factor_fq(f);
  REQUIRE(facs.size() == 1);
  CHECK(format_poly(facs[0].poly) == format_poly(base));
  CHECK(facs[0].mult == 3);
}

TEST_CASE("x^q - x splits into all linear factors", "[fq_factor]") {
  Field F = make_field(5, 1);
  PolyFq f = poly_from_coeffs(F, {0, 4, 0, 0, 0, 1});  // x^5 - x
  auto facs = factor_fq(f);
  CHECK(facs.size() == 5);
  for (const auto& fac : facs) {
    CHECK(deg(fac.poly) == 1);
    CHECK(fac.mult == 1);
  }
}

TEST_CASE("squarefree census size is q^n - q^(n-1)", "[fq_factor]") {
  Field F = make_field(3, 1);
  for (std::int64_t n = 2; n <= 5; ++n) {
    std::int64_t expect = 2;  // q^n - q^(n-1) = q^(n-1) (q-1)
    for (std::int64_t i = 0; i < n - 1; ++i) expect *= 3;
    CHECK(count_squarefree(F, n) == expect);
    std::int64_t seen = 0;
    for_each_squarefree(F, n, [&](const PolyFq& f) {
      CHECK(is_squarefree(f));
      ++seen;
    });
    CHECK(seen == expect);
  }
  Field F5 = make_field(5, 1);
  CHECK(count_squarefree(F5, 3) == 100);
  Field F9 = make_field(3, 2);
  CHECK(count_squarefree(F9, 2) == 72);
}

TEST_CASE("degree one squarefree census counts all monics", "[fq_factor]") {
  Field F = make_field(7, 1);
  CHECK(count_squarefree(F, 1) == 7);
}

TEST_CASE("enumeration cap triggers", "[fq_factor]") {
  Field F = make_field(101, 1);
  CHECK_THROWS_MATCHES(irreducibles(F, 5), error, ErrcMatcher(errc::too_large));
}
