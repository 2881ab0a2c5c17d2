#include <catch2/catch_amalgamated.hpp>

#include "ffrace/int_poly.hpp"
#include "ffrace/rng.hpp"
#include "test_util.hpp"

using namespace ffrace;

TEST_CASE("integer polynomial arithmetic", "[int_poly]") {
  PolyZ a = zpoly_i({1, 2, 3});
  PolyZ b = zpoly_i({-1, 1});
  CHECK(zformat(zmul(a, b)) == "3*T^3 - T^2 - T - 1");
  CHECK(deg(zadd(a, zneg(a))) == -1);
  CHECK(zeval(a, Z(2)) == 17);
  CHECK(zeval_q(a, Q(1, 2)) == Q(11, 4));
}

TEST_CASE("unit division with remainder", "[int_poly]") {
  Rng rng(7);
  for (int i = 0; i < 60; ++i) {
    std::vector<Z> ac(1 + rng.below(6)), bc(1 + rng.below(4));
    for (auto& x : ac) x = static_cast<long>(rng.below(21)) - 10;
    for (auto& x : bc) x = static_cast<long>(rng.below(21)) - 10;
    bc.push_back(1);  // monic divisor
    PolyZ a = zpoly(ac), b = zpoly(bc);
    auto [q, r] = zdivrem_unit(a, b);
    CHECK(deg(r) < deg(b));
    PolyZ recon = zadd(zmul(q, b), r);
    trim(recon);
    trim(a);
    CHECK(zformat(recon) == zformat(a));
  }
}

TEST_CASE("exact division", "[int_poly]") {
  PolyZ a = zpoly_i({2, 4});
  PolyZ b = zpoly_i({1, 2});
  CHECK(zformat(zdiv_exact(zmul(a, b), b)) == zformat(a));
  CHECK_THROWS_AS(zdiv_exact(zpoly_i({1, 1, 1}), zpoly_i({1, 1})), error);
}

TEST_CASE("integer gcd of polynomials", "[int_poly]") {
  PolyZ g = zpoly_i({-1, 1});  // x - 1
  PolyZ a = zmul(g, zpoly_i({1, 0, 1}));
  PolyZ b = zmul(g, zpoly_i({2, 1}));
  CHECK(zformat(zgcd(a, b)) == zformat(g));
  // coprime inputs give a constant
  CHECK(deg(zgcd(zpoly_i({1, 0, 1}), zpoly_i({2, 1}))) == 0);
}

TEST_CASE("resultants and discriminants", "[int_poly]") {
  // convention: res(T - a, T - b) = a - b
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b)
      CHECK(resultant_int(zpoly_i({-a, 1}), zpoly_i({-b, 1})) == a - b);
  // res(x^2 - 2, x^2 - 3) = (2 - 3)^2 = 1
  CHECK(resultant_int(zpoly_i({-2, 0, 1}), zpoly_i({-3, 0, 1})) == 1);
  // disc(x^2 + bx + c) = b^2 - 4c
  for (long b = -4; b <= 4; ++b)
    for (long c = -4; c <= 4; ++c)
      CHECK(discriminant_int(zpoly_i({c, b, 1})) == b * b - 4 * c);
  // disc(x^3 + px + q) = -4p^3 - 27q^2
  for (long p = -3; p <= 3; ++p)
    for (long q = -3; q <= 3; ++q)
      CHECK(discriminant_int(zpoly_i({q, p, 0, 1})) ==
            -4 * p * p * p - 27 * q * q);
}

TEST_CASE("power sums follow the recurrence", "[int_poly]") {
  PolyZ P = zpoly_i({529, 0, -29, 0, 1});
  auto t = newton_power_sums(P, 8);
  CHECK(t[0] == 4);
  CHECK(t[1] == 0);
  CHECK(t[2] == 58);
  CHECK(t[3] == 0);
  CHECK(t[4] == -434);
  // t_k = 29 t_(k-2) - 529 t_(k-4) beyond the degree
  CHECK(t[5] == 0);
  CHECK(t[6] == 29 * t[4] - 529 * t[2]);
  CHECK(t[7] == 0);
  CHECK(t[8] == 29 * t[6] - 529 * t[4]);
}

TEST_CASE("power sums invert back to the polynomial", "[int_poly]") {
  Rng rng(11);
  for (int i = 0; i < 40; ++i) {
    std::int64_t n = 1 + rng.below(6);
    std::vector<Z> c(n + 1);
    for (auto& x : c) x = static_cast<long>(rng.below(11)) - 5;
    c[n] = 1;
    PolyZ P = zpoly(c);
    auto t = newton_power_sums(P, n);
    PolyZ back = poly_from_power_sums(t, n);
    CHECK(zformat(back) == zformat(P));
  }
}

TEST_CASE("power transform maps roots to powers", "[int_poly]") {
  // (T-2)(T-3): squares are 4 and 9
  PolyZ P = zpoly_i({6, -5, 1});
  CHECK(zformat(power_transform(P, 2)) == zformat(zpoly_i({36, -13, 1})));
  CHECK(zformat(power_transform(P, 3)) == zformat(zpoly_i({216, -35, 1})));
  // d = 1 is the identity
  CHECK(zformat(power_transform(P, 1)) == zformat(P));
}

TEST_CASE("sign-flip and reversal substitutions", "[int_poly]") {
  PolyZ P = zpoly_i({1, 2, 3, 4});
  CHECK(zformat(zsubst_neg(P)) == zformat(zpoly_i({1, -2, 3, -4})));
  // T^3 P(w/T) with w = 2: coefficient i lands at 3 - i scaled by 2^i
  PolyZ r = zreciprocal_scaled(P, Z(2));
  CHECK(zformat(r) == zformat(zpoly_i({32, 12, 4, 1})));
}

TEST_CASE("content and primitive part", "[int_poly]") {
  PolyZ a = zpoly_i({6, -9, 12});
  CHECK(zcontent(a) == 3);
  CHECK(zformat(zprimitive(a)) == zformat(zpoly_i({2, -3, 4})));
}

TEST_CASE("canonical ordering is a strict weak order", "[int_poly]") {
  std::vector<PolyZ> v = {zpoly_i({1, 1}), zpoly_i({0, 1}), zpoly_i({2}),
                          zpoly_i({0, 0, 1})};
  std::sort(v.begin(), v.end(), zless);
  CHECK(deg(v.front()) <= deg(v.back()));
  for (std::size_t i = 0; i + 1 < v.size(); ++i) CHECK(!zless(v[i + 1], v[i]));
}
