#include <catch2/catch_amalgamated.hpp>

#include "ffrace/poly_fq.hpp"
#include "ffrace/rng.hpp"
#include "test_util.hpp"

using namespace ffrace;

namespace {

PolyFq random_poly(const Field& F, std::int64_t degree, Rng& rng) {
  std::vector<Fq> c(degree + 1);
  for (auto& x : c) x = static_cast<Fq>(rng.below(F->q()));
  c[degree] = static_cast<Fq>(1 + rng.below(F->q() - 1));
  return poly_from_coeffs(F, std::move(c));
}

}  // namespace

TEST_CASE("polynomial ring operations", "[poly_fq]") {
  Field F = make_field(5, 1);
  Rng rng(42);
  for (int i = 0; i < 100; ++i) {
    PolyFq a = random_poly(F, 1 + rng.below(5), rng);
    PolyFq b = random_poly(F, 1 + rng.below(5), rng);
    PolyFq c = random_poly(F, 1 + rng.below(5), rng);
    CHECK(format_poly(pmul(a, b)) == format_poly(pmul(b, a)));
    CHECK(format_poly(pmul(pmul(a, b), c)) == format_poly(pmul(a, pmul(b, c))));
    CHECK(format_poly(pmul(a, padd(b, c))) ==
          format_poly(padd(pmul(a, b), pmul(a, c))));
    CHECK(is_zero(psub(a, a)));
  }
}

TEST_CASE("division with remainder", "[poly_fq]") {
  Field F = make_field(7, 1);
  Rng rng(43);
  for (int i = 0; i < 100; ++i) {
    PolyFq a = random_poly(F, 2 + rng.below(6), rng);
    PolyFq b = random_poly(F, 1 + rng.below(4), rng);
    auto [q, r] = pdivrem(a, b);
    CHECK(deg(r) < deg(b));
    CHECK(format_poly(padd(pmul(q, b), r)) == format_poly(a));
  }
}

TEST_CASE("gcd divides both and is monic", "[poly_fq]") {
  Field F = make_field(3, 1);
  Rng rng(44);
  for (int i = 0; i < 60; ++i) {
    PolyFq g = random_poly(F, 1 + rng.below(3), rng);
    PolyFq a = pmul(g, random_poly(F, rng.below(3) + 1, rng));
    PolyFq b = pmul(g, random_poly(F, rng.below(3) + 1, rng));
    PolyFq d = pgcd(a, b);
    CHECK(is_monic(d));
    CHECK(deg(d) >= deg(g));
    CHECK(is_zero(pmod(a, d)));
    CHECK(is_zero(pmod(b, d)));
  }
}

TEST_CASE("evaluation is a ring homomorphism", "[poly_fq]") {
  Field F = make_field(3, 2);  // F_9
  Rng rng(45);
  for (int i = 0; i < 60; ++i) {
    PolyFq a = random_poly(F, rng.below(4) + 1, rng);
    PolyFq b = random_poly(F, rng.below(4) + 1, rng);
    Fq x = static_cast<Fq>(rng.below(F->q()));
    CHECK(peval(pmul(a, b), x) == F->mul(peval(a, x), peval(b, x)));
    CHECK(peval(padd(a, b), x) == F->add(peval(a, x), peval(b, x)));
  }
}

TEST_CASE("modular exponentiation matches repeated multiplication", "[poly_fq]") {
  Field F = make_field(5, 1);
  Rng rng(46);
  PolyFq m = random_poly(F, 4, rng);
  PolyFq base = random_poly(F, 3, rng);
  PolyFq acc = poly_one(F);
  for (int k = 0; k <= 20; ++k) {
    CHECK(format_poly(ppowmod(base, static_cast<std::int64_t>(k), m)) ==
          format_poly(pmod(acc, m)));
    acc = pmul(acc, base);
  }
}

TEST_CASE("monic index round trip", "[poly_fq]") {
  Field F = make_field(3, 1);
  for (std::int64_t d = 1; d <= 3; ++d) {
    std::int64_t count = 1;
    for (std::int64_t i = 0; i < d; ++i) count *= 3;
    for (std::int64_t idx = 0; idx < count; ++idx) {
      PolyFq f = monic_by_index(F, d, idx);
      CHECK(deg(f) == d);
      CHECK(is_monic(f));
      CHECK(monic_index(f) == idx);
    }
  }
}

TEST_CASE("derivative satisfies the product rule", "[poly_fq]") {
  Field F = make_field(3, 1);
  Rng rng(47);
  for (int i = 0; i < 50; ++i) {
    PolyFq a = random_poly(F, rng.below(5) + 1, rng);
    PolyFq b = random_poly(F, rng.below(5) + 1, rng);
    PolyFq lhs = pderiv(pmul(a, b));
    PolyFq rhs = padd(pmul(pderiv(a), b), pmul(a, pderiv(b)));
    CHECK(format_poly(lhs) == format_poly(rhs));
  }
}

TEST_CASE("squarefree detection matches nonzero discriminant", "[poly_fq]") {
  Field F = make_field(5, 1);
  Rng rng(48);
  int both = 0;
  for (int i = 0; i < 1200; ++i) {
    std::int64_t d = 2 + rng.below(5);
    std::vector<Fq> c(d + 1);
    for (auto& x : c) x = static_cast<Fq>(rng.below(5));
    c[d] = 1;
    PolyFq f = poly_from_coeffs(F, std::move(c));
    bool sf = is_squarefree(f);
    bool disc_nonzero = discriminant_fq(f) != 0;
    CHECK(sf == disc_nonzero);
    if (sf) ++both;
  }
  CHECK(both > 0);
}

TEST_CASE("list format round trip", "[poly_fq]") {
  Field F = make_field(3, 2);
  Rng rng(49);
  for (int i = 0; i < 40; ++i) {
    PolyFq f = random_poly(F, rng.below(5) + 1, rng);
    CHECK(format_poly(poly_from_list(F, poly_to_list(f))) == format_poly(f));
  }
  // both separators accepted
  PolyFq g = poly_from_list(make_field(5, 1), "1,2,3");
  CHECK(deg(g) == 2);
  PolyFq h = poly_from_list(make_field(5, 1), "1;2;3");
  CHECK(deg(h) == 2);
}

TEST_CASE("resultant of linear factors", "[poly_fq]") {
  Field F = make_field(7, 1);
  for (Fq a = 0; a < 7; ++a)
    for (Fq b = 0; b < 7; ++b) {
      PolyFq fa = poly_from_coeffs(F, {F->neg(a), 1});
      PolyFq fb = poly_from_coeffs(F, {F->neg(b), 1});
      CHECK(resultant_fq(fa, fb) == F->sub(a, b));
    }
}
