#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "ffrace/poly_fq.hpp"
#include "ffrace/rng.hpp"

namespace ffrace {

// ---------- enumeration ----------

// Walks all monic polynomials of degree n in ascending index order without
// reallocating; the callback receives a view valid only during the call.
template <typename Fn>
void for_each_monic(const Field& F, std::int64_t n, Fn&& fn) {
  require(n >= 0, errc::bad_degree, "negative degree");
  PolyFq f{F, std::vector<Fq>(n + 1, 0)};
  f.c[n] = 1;
  const Fq qm1 = static_cast<Fq>(F->q() - 1);
  while (true) {
    fn(const_cast<const PolyFq&>(f));
    std::int64_t i = 0;
    while (i < n && f.c[i] == qm1) f.c[i++] = 0;
    if (i == n) break;
    ++f.c[i];
  }
}

inline std::int64_t count_monic(const Field& F, std::int64_t n) {
  std::int64_t c = 1;
  for (std::int64_t i = 0; i < n; ++i) {
    require(c <= (std::int64_t(1) << 40) / F->q(), errc::too_large,
            "monic family too large to enumerate");
    c *= F->q();
  }
  return c;
}

// Number of monic irreducibles of degree d: (1/d) sum_{e|d} mu(e) q^{d/e}.
inline mpz_class count_irreducibles(std::int64_t q, std::int64_t d) {
  auto mu = [](std::int64_t n) {
    int m = 1;
    for (std::int64_t p = 2; p * p <= n; ++p)
      if (n % p == 0) {
        n /= p;
        if (n % p == 0) return 0;
        m = -m;
      }
    if (n > 1) m = -m;
    return m;
  };
  mpz_class total = 0, qz(static_cast<long>(q));
  for (std::int64_t e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    int m = mu(e);
    if (m == 0) continue;
    mpz_class term;
    mpz_pow_ui(term.get_mpz_t(), qz.get_mpz_t(), d / e);
    total += m * term;
  }
  return total / d;
}

// ---------- irreducibility ----------

inline bool is_irreducible(const PolyFq& f) {
  const std::int64_t n = deg(f);
  require(n >= 1, errc::bad_degree, "irreducibility needs degree >= 1");
  if (n == 1) return true;
  const mpz_class q(static_cast<long>(f.F->q()));
  const PolyFq fm = make_monic(f);
  const PolyFq x = poly_x(f.F);
  // r_k = x^(q^k) mod f, advanced one q-power Frobenius step at a time.
  std::vector<PolyFq> steps;
  PolyFq r = x;
  for (std::int64_t k = 1; k <= n; ++k) {
    r = ppowmod(r, q, fm);
    steps.push_back(r);
  }
  if (psub(steps[n - 1], x) != poly_zero(f.F)) return false;
  for (std::int64_t d = 2; d <= n; ++d) {
    if (n % d != 0 || !detail::is_prime_i64(d)) continue;
    if (deg(pgcd(fm, psub(steps[n / d - 1], x))) > 0) return false;
  }
  return true;
}

// ---------- irreducible tables ----------

namespace detail {

// Sieve of products: a composite monic of degree d has an irreducible factor
// of degree <= d/2, so marking P*g for all irreducible P and monic g covers
// exactly the composites.
inline std::shared_ptr<const std::vector<std::uint32_t>> irreducibles_build(
    const Field& F, std::int64_t d);

inline std::shared_ptr<const std::vector<std::uint32_t>> irreducibles_cached(
    const Field& F, std::int64_t d) {
  static std::mutex mu;
  static std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t>,
                  std::shared_ptr<const std::vector<std::uint32_t>>>
      cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({F->p(), F->e(), d});
    if (it != cache.end()) return it->second;
  }
  auto built = irreducibles_build(F, d);
  std::lock_guard<std::mutex> lock(mu);
  cache[{F->p(), F->e(), d}] = built;
  return built;
}

inline std::shared_ptr<const std::vector<std::uint32_t>> irreducibles_build(
    const Field& F, std::int64_t d) {
  const std::int64_t q = F->q();
  std::int64_t total = 1;
  for (std::int64_t i = 0; i < d; ++i) {
    require(total <= (std::int64_t(1) << 28) / q, errc::too_large,
            "irreducible table too large");
    total *= q;
  }
  auto out = std::make_shared<std::vector<std::uint32_t>>();
  if (d == 1) {
    out->resize(q);
    for (std::int64_t a = 0; a < q; ++a) (*out)[a] = static_cast<Fq>(a);
    return out;
  }
  std::vector<bool> composite(total, false);
  const FieldCtx& K = *F;
  std::vector<Fq> prod(d + 1);
  for (std::int64_t d2 = 1; d2 * 2 <= d; ++d2) {
    auto small = irreducibles_cached(F, d2);
    const std::int64_t dg = d - d2;
    std::vector<Fq> pc(d2 + 1), gc(dg + 1, 0);
    gc[dg] = 1;
    for (std::uint32_t pidx : *small) {
      // unpack P
      std::uint64_t t = pidx;
      for (std::int64_t i = 0; i < d2; ++i) {
        pc[i] = static_cast<Fq>(t % q);
        t /= q;
      }
      pc[d2] = 1;
      // walk all monic g of degree dg
      std::fill(gc.begin(), gc.end() - 1, 0);
      const Fq qm1 = static_cast<Fq>(q - 1);
      while (true) {
        std::fill(prod.begin(), prod.end(), 0);
        for (std::int64_t i = 0; i <= d2; ++i) {
          if (pc[i] == 0) continue;
          for (std::int64_t j = 0; j <= dg; ++j)
            if (gc[j] != 0) prod[i + j] = K.add(prod[i + j], K.mul(pc[i], gc[j]));
        }
        std::uint64_t idx = 0;
        for (std::int64_t i = d - 1; i >= 0; --i) idx = idx * q + prod[i];
        composite[idx] = true;
        std::int64_t i = 0;
        while (i < dg && gc[i] == qm1) gc[i++] = 0;
        if (i == dg) break;
        ++gc[i];
      }
    }
  }
  out->reserve(total / std::max<std::int64_t>(d, 1));
  for (std::int64_t idx = 0; idx < total; ++idx)
    if (!composite[idx]) out->push_back(static_cast<std::uint32_t>(idx));
  return out;
}

}  // namespace detail

// Packed indices (see monic_by_index) of all monic irreducibles of degree d,
// ascending; cached per field and degree.
inline std::shared_ptr<const std::vector<std::uint32_t>> irreducibles(
    const Field& F, std::int64_t d) {
  require(d >= 1, errc::bad_degree, "degree must be positive");
  return detail::irreducibles_cached(F, d);
}

// ---------- factorization ----------

struct FqFactor {
  PolyFq poly;
  std::int64_t mult;
};

namespace detail {

inline PolyFq pth_root(const PolyFq& f) {
  const FieldCtx& K = *f.F;
  const std::int64_t p = K.p();
  std::int64_t root_exp = 1;  // p^(e-1): inverse Frobenius exponent
  for (std::int64_t i = 1; i < K.e(); ++i) root_exp *= p;
  std::vector<Fq> c((deg(f) / p) + 1, 0);
  for (std::size_t i = 0; i < f.c.size(); ++i) {
    if (f.c[i] == 0) continue;
    require(i % p == 0, errc::internal, "not a p-th power");
    c[i / p] = K.pow(f.c[i], root_exp);
  }
  return poly_from_coeffs(f.F, std::move(c));
}

// Squarefree decomposition of a monic polynomial (characteristic p aware).
inline void squarefree_decomp(const PolyFq& f, std::int64_t mult_scale,
                              std::vector<FqFactor>& out) {
  if (deg(f) == 0) return;
  const std::int64_t p = f.F->p();
  PolyFq df = pderiv(f);
  if (is_zero(df)) {
    squarefree_decomp(pth_root(f), mult_scale * p, out);
    return;
  }
  PolyFq c = pgcd(f, df);
  PolyFq w = pdiv(f, c);
  std::int64_t i = 1;
  while (deg(w) > 0) {
    PolyFq y = pgcd(w, c);
    PolyFq z = pdiv(w, y);
    if (deg(z) > 0) out.push_back({z, i * mult_scale});
    ++i;
    w = std::move(y);
    c = pdiv(c, w);
  }
  if (deg(c) > 0) squarefree_decomp(pth_root(c), mult_scale * p, out);
}

// Distinct-degree decomposition of a monic squarefree polynomial:
// returns (d, product of all irreducible factors of degree d).
inline std::vector<std::pair<std::int64_t, PolyFq>> distinct_degree(PolyFq f) {
  std::vector<std::pair<std::int64_t, PolyFq>> out;
  const mpz_class q(static_cast<long>(f.F->q()));
  PolyFq x = poly_x(f.F);
  PolyFq r = x;
  std::int64_t d = 0;
  while (deg(f) > 0) {
    ++d;
    if (2 * d > deg(f)) {
      out.push_back({deg(f), f});
      break;
    }
    r = ppowmod(r, q, f);
    PolyFq g = pgcd(psub(r, x), f);
    if (deg(g) > 0) {
      out.push_back({d, g});
      f = pdiv(f, g);
      r = pmod(r, f);
    }
  }
  return out;
}

// Cantor-Zassenhaus equal-degree splitting (odd q).
inline void equal_degree(const PolyFq& g, std::int64_t d, Rng& rng,
                         std::vector<PolyFq>& out) {
  if (deg(g) == d) {
    out.push_back(g);
    return;
  }
  const Field& F = g.F;
  const std::int64_t q = F->q();
  mpz_class qd;
  mpz_ui_pow_ui(qd.get_mpz_t(), static_cast<unsigned long>(q),
                static_cast<unsigned long>(d));
  const mpz_class exp = (qd - 1) / 2;
  while (true) {
    // random nonconstant h of degree < deg g
    std::vector<Fq> hc(deg(g), 0);
    for (auto& cc : hc) cc = static_cast<Fq>(rng.below(q));
    PolyFq h = poly_from_coeffs(F, std::move(hc));
    if (deg(h) < 1) continue;
    PolyFq t = ppowmod(h, exp, g);
    t = psub(t, poly_one(F));
    PolyFq u = pgcd(t, g);
    if (deg(u) > 0 && deg(u) < deg(g)) {
      equal_degree(u, d, rng, out);
      equal_degree(pdiv(g, u), d, rng, out);
      return;
    }
  }
}

}  // namespace detail

// Full factorization over F_q. The result is canonical: monic factors sorted
// by degree then packed index, so the (seeded) randomness inside the
// equal-degree splitting never shows in the output.
inline std::vector<FqFactor> factor_fq(const PolyFq& f) {
  require(deg(f) >= 1, errc::bad_degree, "factorization needs degree >= 1");
  std::vector<FqFactor> sqf;
  detail::squarefree_decomp(make_monic(f), 1, sqf);
  Rng rng(0x9e3779b97f4a7c15ULL ^ monic_index(make_monic(f)) ^
          (static_cast<std::uint64_t>(f.F->q()) << 32) ^
          static_cast<std::uint64_t>(deg(f)));
  std::vector<FqFactor> out;
  for (const auto& part : sqf) {
    for (auto& [d, g] : detail::distinct_degree(part.poly)) {
      std::vector<PolyFq> irr;
      detail::equal_degree(g, d, rng, irr);
      for (auto& P : irr) out.push_back({std::move(P), part.mult});
    }
  }
  std::sort(out.begin(), out.end(), [](const FqFactor& a, const FqFactor& b) {
    if (deg(a.poly) != deg(b.poly)) return deg(a.poly) < deg(b.poly);
    return monic_index(a.poly) < monic_index(b.poly);
  });
  return out;
}

// Monic squarefree polynomials of degree n, by ascending index. Callback form
// keeps memory flat for large scans.
template <typename Fn>
void for_each_squarefree(const Field& F, std::int64_t n, Fn&& fn) {
  for_each_monic(F, n, [&](const PolyFq& f) {
    if (deg(f) >= 1 && is_squarefree(f)) fn(f);
  });
}

inline std::int64_t count_squarefree(const Field& F, std::int64_t n) {
  std::int64_t c = 0;
  for_each_squarefree(F, n, [&](const PolyFq&) { ++c; });
  return c;
}

}  // namespace ffrace
