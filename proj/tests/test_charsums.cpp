#include <catch2/catch_amalgamated.hpp>

#include "ffrace/charsums.hpp"
#include "ffrace/rng.hpp"
#include "test_util.hpp"

using namespace ffrace;

namespace {

PolyFq random_monic(const Field& F, std::int64_t degree, Rng& rng) {
  std::vector<Fq> c(degree + 1);
  for (std::size_t i = 0; i < c.size() - 1; ++i)
    c[i] = static_cast<Fq>(rng.below(F->q()));
  c[degree] = 1;
  return poly_from_coeffs(F, std::move(c));
}

}  // namespace

TEST_CASE("character context validates its modulus", "[charsums]") {
  Field F = make_field(3, 1);
  CHECK_THROWS_MATCHES(CharCtx(F, poly_from_coeffs(F, {0, 0, 1})), error,
                       ErrcMatcher(errc::not_squarefree));
  CHECK_THROWS_MATCHES(CharCtx(F, poly_const(F, 2)), error,
                       ErrcMatcher(errc::bad_degree));
  CHECK_THROWS_MATCHES(CharCtx(F, poly_from_coeffs(F, {1, 2})), error,
                       ErrcMatcher(errc::bad_input));
}

TEST_CASE("character is multiplicative and periodic", "[charsums]") {
  for (auto [p, e] : {std::pair<int, int>{3, 1}, {5, 1}, {3, 2}}) {
    Field F = make_field(p, e);
    Rng rng(500 + p + e);
    PolyFq f = poly_from_coeffs(F, {F->from_int(2), F->from_int(2), 0, 1});
    if (!is_squarefree(f)) f = poly_from_coeffs(F, {F->from_int(1), 1});
    CharCtx chi(F, f);
    for (int i = 0; i < 80; ++i) {
      PolyFq a = random_monic(F, 1 + rng.below(4), rng);
      PolyFq b = random_monic(F, 1 + rng.below(4), rng);
      CHECK(chi.symbol(pmul(a, b)) == chi.symbol(a) * chi.symbol(b));
      CHECK(chi.symbol(a) == chi.symbol(padd(a, pmul(f, b))));
    }
  }
}

TEST_CASE("symbol against a prime modulus counts residues evenly", "[charsums]") {
  Field F = make_field(3, 1);
  PolyFq P = poly_from_coeffs(F, {1, 0, 1});  // x^2 + 1, irreducible
  CharCtx chi(F, P);
  int plus = 0, minus = 0, zero = 0;
  for (std::int64_t c0 = 0; c0 < 3; ++c0)
    for (std::int64_t c1 = 0; c1 < 3; ++c1) {
      PolyFq h = poly_from_coeffs(
          F, {static_cast<Fq>(c0), static_cast<Fq>(c1)});
      int s = chi.symbol(h);
      (s > 0 ? plus : (s < 0 ? minus : zero))++;
    }
  CHECK(plus == 4);
  CHECK(minus == 4);
  CHECK(zero == 1);
}

namespace {

// Independent slow route: Legendre symbol by Euler exponentiation per factor.
int euler_symbol(const CharCtx& chi, const PolyFq& h) {
  const Field& F = chi.field();
  int out = 1;
  for (const PolyFq& P : chi.primes()) {
    mpz_class qd;
    mpz_ui_pow_ui(qd.get_mpz_t(), static_cast<unsigned long>(F->q()),
                  static_cast<unsigned long>(deg(P)));
    PolyFq t = ppowmod(pmod(h, P), (qd - 1) / 2, P);
    if (is_zero(t)) return 0;
    out *= (deg(t) == 0 && t.c[0] == 1) ? 1 : -1;
  }
  return out;
}

}  // namespace

TEST_CASE("resultant and exponent symbol routes agree", "[charsums]") {
  for (auto [p, e] : {std::pair<int, int>{5, 1}, {3, 2}, {7, 1}}) {
    Field F = make_field(p, e);
    Rng rng(321 + p + e);
    for (int trial = 0; trial < 10; ++trial) {
      PolyFq f = random_monic(F, 2 + rng.below(4), rng);
      if (!is_squarefree(f)) continue;
      CharCtx chi(F, f);
      for (int i = 0; i < 25; ++i) {
        PolyFq h = random_monic(F, 1 + rng.below(5), rng);
        CHECK(chi.symbol(h) == euler_symbol(chi, h));
      }
    }
  }
}

TEST_CASE("quadratic reciprocity for irreducible pairs", "[charsums]") {
  for (std::int64_t p : {3, 5, 7}) {
    Field F = make_field(p, 1);
    Rng rng(42 + p);
    for (int trial = 0; trial < 25; ++trial) {
      std::int64_t dg = 1 + rng.below(3);
      std::int64_t dh = 1 + rng.below(3);
      auto lg = irreducibles(F, dg);
      auto lh = irreducibles(F, dh);
      PolyFq g = monic_by_index(F, dg, (*lg)[rng.below(lg->size())]);
      PolyFq h = monic_by_index(F, dh, (*lh)[rng.below(lh->size())]);
      if (format_poly(g) == format_poly(h)) continue;
      int lhs = CharCtx(F, h).symbol(g) * CharCtx(F, g).symbol(h);
      int rhs = ((p - 1) / 2 * dg * dh) % 2 == 0 ? 1 : -1;
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("race counts for the degree six modulus over F_23", "[charsums]") {
  Field F = make_field(23, 1);
  PolyFq f = poly_from_coeffs(F, {5, 0, 0, 2, 0, 0, 1});
  CharCtx chi(F, f);

  auto r1 = prime_race_count(chi, 1);
  CHECK(r1.plus + r1.minus + r1.ramified == 23);
  CHECK(r1.ramified == 0);
  CHECK(r1.plus - r1.minus == -1);  // c_1 = -t_1 - 1 = -1

  auto r3 = prime_race_count(chi, 3);
  CHECK(r3.plus == 2024);
  CHECK(r3.minus == 2024);

  // Pi(2) = 2 (N+ - N-) / q = -82/23
  CHECK(race_pi(chi, 2) ==
        SqrtQNumber::rational(23, mpq_class(-82, 23)));
  CHECK(race_pi(chi, 3).is_zero());
}

TEST_CASE("coefficient sums vanish from the modulus degree onward", "[charsums]") {
  Field F = make_field(3, 1);
  PolyFq f = poly_from_coeffs(F, {1, 2, 0, 1});  // squarefree cubic
  REQUIRE(is_squarefree(f));
  CharCtx chi(F, f);
  auto A = coeff_sums(chi);
  CHECK(A.size() == 3);
  CHECK(A[0] == 1);
  for (std::int64_t d = 3; d <= 6; ++d) CHECK(coeff_sum_at(chi, d) == 0);
}

TEST_CASE("enumeration refuses oversized scans", "[charsums]") {
  Field F = make_field(23, 1);
  PolyFq f = poly_from_coeffs(F, {5, 0, 0, 2, 0, 0, 1});
  CharCtx chi(F, f);
  CHECK_THROWS_MATCHES(prime_race_count(chi, 7), error,
                       ErrcMatcher(errc::too_large));
}
