#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "ffrace/field.hpp"
#include "ffrace/fq_factor.hpp"
#include "ffrace/int_poly.hpp"
#include "ffrace/poly_fq.hpp"

namespace ffrace {

struct ZFactor {
  PolyZ poly;  // monic irreducible
  std::int64_t mult;
};

namespace detail {

// ---- arithmetic on polynomials with coefficients in Z/m (m a prime power),
// coefficients kept in [0, m) ----

inline void zm_reduce(std::vector<Z>& a, const Z& m) {
  for (auto& x : a) {
    mpz_mod(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::vector<Z> zm_mul(const std::vector<Z>& a, const std::vector<Z>& b,
                             const Z& m) {
  if (a.empty() || b.empty()) return {};
  std::vector<Z> r(a.size() + b.size() - 1, Z(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  zm_reduce(r, m);
  return r;
}

// remainder mod a monic divisor
inline std::vector<Z> zm_rem(std::vector<Z> a, const std::vector<Z>& b,
                             const Z& m) {
  while (a.size() >= b.size()) {
    Z f = a.back();
    std::size_t shift = a.size() - b.size();
    if (f != 0)
      for (std::size_t i = 0; i + 1 < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    zm_reduce(a, m);
  }
  return a;
}

inline PolyZ balanced(const std::vector<Z>& a, const Z& m) {
  PolyZ r{std::vector<Z>(a.begin(), a.end())};
  const Z half = m / 2;
  for (auto& x : r.c)
    if (x > half) x -= m;
  trim(r);
  return r;
}

inline std::vector<Z> from_polyz_mod(const PolyZ& a, const Z& m) {
  std::vector<Z> r(a.c.begin(), a.c.end());
  zm_reduce(r, m);
  return r;
}

// ---- conversions between PolyZ mod p and PolyFq over F_p ----

inline PolyFq to_fp(const PolyZ& a, const Field& F) {
  std::vector<Fq> c(a.c.size());
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    Z r;
    mpz_mod_ui(r.get_mpz_t(), a.c[i].get_mpz_t(),
               static_cast<unsigned long>(F->p()));
    c[i] = static_cast<Fq>(r.get_ui());
  }
  return poly_from_coeffs(F, std::move(c));
}

inline PolyZ from_fp(const PolyFq& a) {
  PolyZ r{std::vector<Z>(a.c.size())};
  for (std::size_t i = 0; i < a.c.size(); ++i)
    r.c[i] = static_cast<long>(a.c[i]);
  trim(r);
  return r;
}

// Linear Hensel lifting: f monic squarefree mod p, f = prod of monic gi mod p
// with the gi pairwise coprime; lift the gi so that f = prod gi mod p^k.
inline std::vector<PolyZ> hensel_lift(const PolyZ& f, const Field& Fp,
                                      std::vector<PolyFq> gi_p, const Z& p,
                                      std::int64_t k) {
  const std::size_t L = gi_p.size();
  // Bezout data over F_p: ui = (prod_{l != i} gl)^{-1} mod gi.
  std::vector<PolyFq> ui(L);
  PolyFq fbar = to_fp(f, Fp);
  for (std::size_t i = 0; i < L; ++i) {
    PolyFq rest = pdiv(fbar, gi_p[i]);
    rest = pmod(rest, gi_p[i]);
    // invert rest mod gi via extended Euclid (gi irreducible-or-coprime)
    PolyFq r0 = gi_p[i], r1 = rest;
    PolyFq s0 = poly_zero(Fp), s1 = poly_one(Fp);
    while (deg(r1) > 0) {
      auto [q2, r2] = pdivrem(r0, r1);
      PolyFq s2 = psub(s0, pmul(q2, s1));
      r0 = std::move(r1);
      r1 = std::move(r2);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    require(!is_zero(r1), errc::internal, "factors not coprime in lift");
    ui[i] = pscale(s1, Fp->inv(lc(r1)));
  }
  std::vector<PolyZ> g(L);
  for (std::size_t i = 0; i < L; ++i) g[i] = from_fp(gi_p[i]);
  Z mod = p;
  for (std::int64_t step = 1; step < k; ++step) {
    const Z next = mod * p;
    // E = (f - prod g) / mod, reduced mod p
    std::vector<Z> prod{Z(1)};
    for (const auto& gi : g) prod = zm_mul(prod, from_polyz_mod(gi, next), next);
    PolyZ diff = zsub(f, balanced(prod, next));
    // diff is divisible by mod up to multiples of next
    PolyZ E{};
    E.c.resize(diff.c.size());
    for (std::size_t ci = 0; ci < diff.c.size(); ++ci) {
      Z t;
      mpz_mod(t.get_mpz_t(), diff.c[ci].get_mpz_t(), next.get_mpz_t());
      mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), mod.get_mpz_t());
      E.c[ci] = t;
    }
    trim(E);
    PolyFq Ebar = to_fp(E, Fp);
    for (std::size_t i = 0; i < L; ++i) {
      PolyFq delta = pmod(pmul(Ebar, ui[i]), gi_p[i]);
      // g_i += mod * delta
      PolyZ dz = zscale(from_fp(delta), mod);
      g[i] = zadd(g[i], dz);
    }
    mod = next;
  }
  return g;
}

inline const std::vector<std::int64_t>& small_primes() {
  static const std::vector<std::int64_t> ps = {
      3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53,
      59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113};
  return ps;
}

// Zassenhaus factorization of a monic squarefree integer polynomial.
inline std::vector<PolyZ> factor_squarefree_monic(const PolyZ& P) {
  const std::int64_t n = deg(P);
  if (n == 1) return {P};
  require(n <= 64, errc::too_large, "factorization degree cap exceeded");

  // Pick a prime keeping P squarefree mod p; among the first few valid primes
  // prefer the one with fewest modular factors.
  Field bestF;
  std::vector<FqFactor> bestfac;
  int tried = 0;
  for (std::int64_t p : small_primes()) {
    Z lcr;
    mpz_mod_ui(lcr.get_mpz_t(), lc(P).get_mpz_t(),
               static_cast<unsigned long>(p));
    if (lcr == 0) continue;
    Field Fp = make_field(p, 1);
    PolyFq Pbar = to_fp(P, Fp);
    if (deg(Pbar) != n) continue;
    PolyFq der = pderiv(Pbar);
    if (is_zero(der) || deg(pgcd(Pbar, der)) != 0) continue;
    auto fac = factor_fq(Pbar);
    if (bestfac.empty() || fac.size() < bestfac.size()) {
      bestF = Fp;
      bestfac = std::move(fac);
    }
    if (++tried >= 4 || bestfac.size() == 1) break;
  }
  require(!bestfac.empty(), errc::internal, "no usable prime for lifting");
  if (bestfac.size() == 1) return {P};
  require(bestfac.size() <= 24, errc::too_large,
          "too many modular factors to recombine");

  // Coefficient bound for monic factors (Landau-Mignotte style):
  // 2^n * sqrt(n+1) * max|coeff|.
  Z H = 0;
  for (const auto& c : P.c) {
    Z a = c < 0 ? Z(-c) : c;
    if (a > H) H = a;
  }
  Z B = H + 1;
  mpz_sqrt(B.get_mpz_t(), Z((H + 1) * (H + 1) * (n + 1)).get_mpz_t());
  B += 1;
  mpz_mul_2exp(B.get_mpz_t(), B.get_mpz_t(), static_cast<mp_bitcnt_t>(n));
  const Z p(static_cast<long>(bestF->p()));
  Z pk = p;
  std::int64_t k = 1;
  while (pk <= 2 * B) {
    pk *= p;
    ++k;
  }

  std::vector<PolyFq> gi;
  gi.reserve(bestfac.size());
  for (auto& f : bestfac) gi.push_back(f.poly);
  std::vector<PolyZ> lifted = hensel_lift(P, bestF, gi, p, k);
  for (auto& g : lifted) {
    std::vector<Z> gm = from_polyz_mod(g, pk);
    g = balanced(gm, pk);
  }

  // Subset recombination.
  std::vector<PolyZ> out;
  std::vector<int> alive(lifted.size(), 1);
  PolyZ rest = P;
  std::size_t alive_count = lifted.size();
  for (std::size_t sz = 1; sz <= lifted.size(); ++sz) {
    if (alive_count == 0) break;
    if (sz > alive_count) break;
    // iterate subsets of the alive indices of size sz
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < lifted.size(); ++i)
      if (alive[i]) idx.push_back(i);
    if (2 * sz > idx.size()) break;  // complement already found earlier
    std::vector<std::size_t> sel(sz);
    for (std::size_t i = 0; i < sz; ++i) sel[i] = i;
    while (true) {
      // candidate = product of chosen lifted factors mod pk, balanced
      std::vector<Z> prod{Z(1)};
      for (std::size_t i : sel)
        prod = zm_mul(prod, from_polyz_mod(lifted[idx[i]], pk), pk);
      PolyZ cand = balanced(prod, pk);
      bool divides = false;
      if (!is_zero(cand) && deg(cand) <= deg(rest)) {
        if (zeval(rest, Z(0)) != 0 || zeval(cand, Z(0)) == 0) {
          // quick filter on constant terms before full division
          bool filter_ok = true;
          if (cand.c[0] != 0 && rest.c[0] != 0)
            filter_ok =
                mpz_divisible_p(rest.c[0].get_mpz_t(), cand.c[0].get_mpz_t());
          if (filter_ok) {
            auto [q2, r2] = zdivrem_unit(rest, cand);
            if (is_zero(r2)) {
              divides = true;
              out.push_back(cand);
              rest = q2;
              for (std::size_t i : sel) {
                alive[idx[i]] = 0;
                --alive_count;
              }
            }
          }
        }
      }
      if (divides) break;  // restart subset iteration at same size
      // next combination
      std::int64_t pos = static_cast<std::int64_t>(sz) - 1;
      while (pos >= 0 && sel[pos] == idx.size() - sz + pos) --pos;
      if (pos < 0) break;
      ++sel[pos];
      for (std::size_t i = pos + 1; i < sz; ++i) sel[i] = sel[i - 1] + 1;
    }
    // if a factor was peeled at this size, retry the same size with the
    // remaining modular factors
    if (!idx.empty() && alive_count < idx.size()) --sz;
  }
  if (deg(rest) > 0) out.push_back(rest);
  return out;
}

}  // namespace detail

// Factor a monic integer polynomial into monic irreducibles over Z.
// Deterministic: factors sorted by degree, then coefficients.
inline std::vector<ZFactor> factor_int(const PolyZ& P) {
  require(is_monic(P), errc::bad_input, "factor_int expects a monic input");
  std::vector<ZFactor> out;
  if (deg(P) == 0) return out;

  // Yun squarefree decomposition (characteristic zero).
  std::vector<std::pair<PolyZ, std::int64_t>> sqf;
  {
    PolyZ f = P;
    PolyZ fp = zderiv(f);
    PolyZ g = zgcd(f, fp);
    if (deg(g) == 0) {
      sqf.push_back({f, 1});
    } else {
      PolyZ c = zdiv_exact(f, g);
      PolyZ d = zsub(zdiv_exact(fp, g), zderiv(c));
      std::int64_t i = 1;
      while (deg(c) > 0) {
        PolyZ h = zgcd(c, d);
        if (deg(h) > 0) sqf.push_back({h, i});
        PolyZ c2 = deg(h) > 0 ? zdiv_exact(c, h) : c;
        d = zsub(zdiv_exact(d, deg(h) > 0 ? h : zone()), zderiv(c2));
        c = std::move(c2);
        ++i;
      }
    }
  }

  for (auto& [f, mult] : sqf) {
    for (auto& irr : detail::factor_squarefree_monic(f))
      out.push_back({std::move(irr), mult});
  }
  std::sort(out.begin(), out.end(), [](const ZFactor& a, const ZFactor& b) {
    return zless(a.poly, b.poly);
  });
  return out;
}

inline bool is_irreducible_z(const PolyZ& P) {
  auto f = factor_int(P);
  return f.size() == 1 && f[0].mult == 1;
}

}  // namespace ffrace
