#include <catch2/catch_amalgamated.hpp>

#include "ffrace/rng.hpp"
#include "ffrace/zeta.hpp"
#include "test_util.hpp"

using namespace ffrace;

namespace {

PolyFq random_squarefree(const Field& F, std::int64_t degree, Rng& rng) {
  for (;;) {
    std::vector<Fq> c(degree + 1);
    for (std::size_t i = 0; i < c.size() - 1; ++i)
      c[i] = static_cast<Fq>(rng.below(F->q()));
    c[degree] = 1;
    PolyFq f = poly_from_coeffs(F, std::move(c));
    if (is_squarefree(f)) return f;
  }
}

}  // namespace

TEST_CASE("degree six modulus over F_23", "[zeta]") {
  Field F = make_field(23, 1);
  CharCtx chi(F, poly_from_coeffs(F, {5, 0, 0, 2, 0, 0, 1}));
  WeilData w = weil_analysis(chi);
  CHECK(zformat(w.Lstar, "u") == "529*u^4 - 29*u^2 + 1");
  CHECK(zformat(w.P) == "T^4 - 29*T^2 + 529");
  CHECK(zformat(w.h, "s") == "s^2 - 75");
  CHECK(w.g == 2);
  CHECK(w.even_deg);
  CHECK(is_q_symplectic(w.P, 23));

  auto t = newton_power_sums(w.P, 4);
  CHECK(t[1] == 0);
  CHECK(t[2] == 58);
  CHECK(t[3] == 0);
  CHECK(t[4] == -434);
}

TEST_CASE("degree four modulus over F_9", "[zeta]") {
  Field F = make_field(3, 2);
  Fq a7 = F->pow(F->generator(), 7);
  CHECK(F->coords(a7) == std::vector<std::int64_t>{2, 1});
  CharCtx chi(F, poly_from_coeffs(F, {a7, F->from_int(2), 0, F->from_int(2),
                                      F->one()}));
  WeilData w = weil_analysis(chi);
  CHECK(zformat(w.P) == "T^2 - 6*T + 9");
  CHECK(zformat(w.h, "s") == "s - 6");
  CHECK(w.g == 1);
  for (std::int64_t k = 1; k <= 3; ++k) {
    auto pc = point_count(chi, w, k);
    CHECK(pc.affine == pc.predicted);
  }
}

TEST_CASE("affine point counts match the Weil polynomial", "[zeta]") {
  Field F = make_field(23, 1);
  CharCtx chi(F, poly_from_coeffs(F, {5, 0, 0, 2, 0, 0, 1}));
  WeilData w = weil_analysis(chi);
  for (std::int64_t k = 1; k <= 3; ++k) {
    auto pc = point_count(chi, w, k);
    CHECK(pc.affine == pc.predicted);
  }
}

TEST_CASE("point counts hold for random moduli of both parities", "[zeta]") {
  for (auto [p, e] : {std::pair<int, int>{3, 1}, {5, 1}, {3, 2}}) {
    Field F = make_field(p, e);
    Rng rng(9000 + p * 7 + e);
    for (int trial = 0; trial < 6; ++trial) {
      std::int64_t degree = 2 + rng.below(4);
      CharCtx chi(F, random_squarefree(F, degree, rng));
      WeilData w = weil_analysis(chi);
      for (std::int64_t k = 1; k <= 2; ++k) {
        auto pc = point_count(chi, w, k);
        CHECK(pc.affine == pc.predicted);
      }
    }
  }
}

TEST_CASE("prime sums equal the trace route", "[zeta]") {
  // c_n computed from prime enumeration must match -t_n - [deg f even]
  Field F23 = make_field(23, 1);
  CharCtx chi23(F23, poly_from_coeffs(F23, {5, 0, 0, 2, 0, 0, 1}));
  WeilData w23 = weil_analysis(chi23);
  auto t23 = newton_power_sums(w23.P, 4);
  for (std::int64_t n = 1; n <= 4; ++n)
    CHECK(von_mangoldt_sum(chi23, n) == -t23[n] - 1);

  Field F3 = make_field(3, 1);
  Rng rng(17);
  for (int trial = 0; trial < 8; ++trial) {
    std::int64_t degree = 2 + rng.below(5);
    CharCtx chi(F3, random_squarefree(F3, degree, rng));
    WeilData w = weil_analysis(chi);
    auto t = newton_power_sums(w.P, 8);
    Z eps = w.even_deg ? 1 : 0;
    for (std::int64_t n = 1; n <= 8; ++n)
      CHECK(von_mangoldt_sum(chi, n) == -t[n] - eps);
  }
}

TEST_CASE("real Weil reconstruction round trip", "[zeta]") {
  Field F = make_field(5, 1);
  Rng rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    std::int64_t degree = 2 + rng.below(4);
    CharCtx chi(F, random_squarefree(F, degree, rng));
    WeilData w = weil_analysis(chi);
    // rebuild P from h: P = sum_k h_k T^(g-k) (T^2 + q)^k
    PolyZ acc = zzero();
    PolyZ tsq = zpoly_i({5, 0, 1});
    for (std::int64_t k = 0; k <= w.g; ++k) {
      if (static_cast<std::size_t>(k) >= w.h.c.size()) break;
      PolyZ term = zconst(w.h.c[k]);
      for (std::int64_t j = 0; j < k; ++j) term = zmul(term, tsq);
      term = zshift(term, w.g - k);
      acc = zadd(acc, term);
    }
    CHECK(zformat(acc) == zformat(w.P));
  }
}

TEST_CASE("symplectic coefficient checks", "[zeta]") {
  CHECK(is_q_symplectic(zpoly_i({529, 0, -29, 0, 1}), 23));
  CHECK(is_q_symplectic(zpoly_i({9, -6, 1}), 9));
  CHECK(is_q_symplectic(zpoly_i({9, -10, 1}), 9));  // fails RH, still symplectic
  CHECK_FALSE(is_q_symplectic(zpoly_i({-23, 0, 1}), 23));  // T^2 - q
  CHECK_FALSE(is_q_symplectic(zpoly_i({529, 0, -29, 0, 2}), 23));  // not monic
  CHECK_FALSE(is_q_symplectic(zpoly_i({1, 1, 1, 1}), 23));  // odd degree
}

TEST_CASE("exact evaluation at sqrt q", "[zeta]") {
  PolyZ P = zpoly_i({529, 0, -29, 0, 1});
  CHECK(eval_sqrtq(P, 23) == SqrtQNumber::rational(23, 391));
  CHECK(eval_neg_sqrtq(P, 23) == SqrtQNumber::rational(23, 391));
  PolyZ cube = zpoly_i({0, 0, 0, 1});
  CHECK(eval_sqrtq(cube, 23) == SqrtQNumber(23, 0, 23));
  CHECK(eval_neg_sqrtq(cube, 23) == SqrtQNumber(23, 0, -23));
}

TEST_CASE("real Weil model rejects non-symplectic input", "[zeta]") {
  CHECK_THROWS_MATCHES(real_weil(zpoly_i({-23, 0, 1}), 23), error,
                       ErrcMatcher(errc::not_symplectic));
}
