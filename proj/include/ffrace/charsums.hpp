#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

#include "ffrace/fq_factor.hpp"
#include "ffrace/int_poly.hpp"
#include "ffrace/poly_fq.hpp"
#include "ffrace/sqrtq.hpp"

namespace ffrace {

// Direct enumerations are allowed while q^n stays at desk scale; beyond this
// the operations refuse rather than approximate.
constexpr std::int64_t kEnumCap = 100000000;  // 10^8

inline void check_enum_cap(std::int64_t q, std::int64_t n) {
  std::int64_t total = 1;
  for (std::int64_t i = 0; i < n; ++i) {
    total *= q;
    require(total <= kEnumCap, errc::too_large,
            "enumeration over q^n elements exceeds the direct-sum cap");
  }
}

// Quadratic character attached to a monic squarefree modulus f: the product
// over the irreducible factors P | f of the Legendre symbol in F_q[x]/(P).
//
// Evaluation never touches the factorization: the norm map carries the
// residue character down to the base field, giving chi_f(h) = eta(res(f, h)).
// One in-place euclidean pass per symbol, no allocation on the hot path.
class CharCtx {
 public:
  CharCtx(Field F, PolyFq f) : F_(std::move(F)), f_(std::move(f)) {
    require(deg(f_) >= 1, errc::bad_degree, "modulus must be nonconstant");
    require(is_monic(f_), errc::bad_input, "modulus must be monic");
    require(is_squarefree(f_), errc::not_squarefree,
            "modulus must be squarefree");
    for (auto& fac : factor_fq(f_)) primes_.push_back(fac.poly);
  }

  const Field& field() const { return F_; }
  const PolyFq& modulus() const { return f_; }
  const std::vector<PolyFq>& primes() const { return primes_; }

  std::int64_t prime_factors_of_degree(std::int64_t d) const {
    std::int64_t n = 0;
    for (const auto& P : primes_)
      if (deg(P) == d) ++n;
    return n;
  }

  // chi_f(h) in {-1, 0, +1}.
  int symbol(const PolyFq& h) const {
    thread_local std::vector<Fq> A, B;
    const FieldCtx& K = *F_;
    A.assign(f_.c.begin(), f_.c.end());
    B.assign(h.c.begin(), h.c.end());
    // res(A, B) by the remainder recurrence:
    //   res(A, B) = (-1)^(deg A deg B) lc(B)^(deg A - deg R) res(B, R)
    // The -1 lives in F_q (eta(-1) is +1 when q = 1 mod 4), so the sign is
    // folded into the accumulated field element rather than the output.
    Fq acc = 1;
    bool negate = false;
    while (true) {
      if (B.empty()) return 0;  // common factor with the modulus
      std::int64_t db = static_cast<std::int64_t>(B.size()) - 1;
      if (db == 0) {
        // res(A, const) = const^(deg A)
        std::int64_t da = static_cast<std::int64_t>(A.size()) - 1;
        if (da % 2 != 0) acc = K.mul(acc, B[0]);
        break;
      }
      std::int64_t da = static_cast<std::int64_t>(A.size()) - 1;
      // reduce A modulo B in place
      Fq binv = K.inv(B[db]);
      for (std::int64_t k = da; k >= db; --k) {
        Fq c = A[k];
        if (c == 0) continue;
        Fq s = K.mul(c, binv);
        A[k] = 0;
        for (std::int64_t j = 0; j < db; ++j)
          if (B[j] != 0) A[k - db + j] = K.sub(A[k - db + j], K.mul(s, B[j]));
      }
      while (!A.empty() && A.back() == 0) A.pop_back();
      std::int64_t dr = static_cast<std::int64_t>(A.size()) - 1;
      if ((da % 2) && (db % 2)) negate = !negate;
      std::int64_t exp = da - (dr < 0 ? 0 : dr);
      if (exp % 2 != 0) acc = K.mul(acc, B[db]);  // lc(B)^exp, squares drop out
      A.swap(B);
    }
    if (negate) acc = K.neg(acc);
    return F_->eta(acc);
  }

 private:
  Field F_;
  PolyFq f_;
  std::vector<PolyFq> primes_;
};

struct RaceCount {
  std::int64_t n = 0;
  std::int64_t plus = 0;      // irreducibles of degree n with chi = +1
  std::int64_t minus = 0;     // chi = -1
  std::int64_t ramified = 0;  // chi = 0 (divisors of the modulus)
};

// Exact count of chi values over all monic irreducibles of degree n.
inline RaceCount prime_race_count(const CharCtx& chi, std::int64_t n) {
  require(n >= 1, errc::bad_degree, "race degree must be positive");
  const Field& F = chi.field();
  check_enum_cap(F->q(), n);
  RaceCount rc;
  rc.n = n;
  auto irr = irreducibles(F, n);
  PolyFq P{F, std::vector<Fq>(n + 1, 0)};
  P.c[n] = 1;
  const std::int64_t q = F->q();
  for (std::uint32_t idx : *irr) {
    std::uint64_t t = idx;
    for (std::int64_t i = 0; i < n; ++i) {
      P.c[i] = static_cast<Fq>(t % q);
      t /= q;
    }
    int s = chi.symbol(P);
    if (s > 0)
      ++rc.plus;
    else if (s < 0)
      ++rc.minus;
    else
      ++rc.ramified;
  }
  return rc;
}

// Coefficient sums A_d = sum over monic a of degree d of chi_f(a) for
// d = 0 .. deg f - 1. (A_d = 0 for d >= deg f; see the scan check in tests.)
inline std::vector<Z> coeff_sums(const CharCtx& chi) {
  const Field& F = chi.field();
  const std::int64_t nf = deg(chi.modulus());
  check_enum_cap(F->q(), nf - 1);
  std::vector<Z> A(nf);
  A[0] = 1;
  for (std::int64_t d = 1; d < nf; ++d) {
    std::int64_t s = 0;
    for_each_monic(F, d, [&](const PolyFq& a) { s += chi.symbol(a); });
    A[d] = static_cast<long>(s);
  }
  return A;
}

// Sum over monic a of degree d of chi(a), for any single degree (scan).
inline Z coeff_sum_at(const CharCtx& chi, std::int64_t d) {
  check_enum_cap(chi.field()->q(), d);
  std::int64_t s = 0;
  if (d == 0) return 1;
  for_each_monic(chi.field(), d, [&](const PolyFq& a) { s += chi.symbol(a); });
  return Z(static_cast<long>(s));
}

// c_n = sum_{d | n} d * sum_{deg P = d} chi(P)^(n/d), by direct enumeration.
// Even powers of chi reduce to irreducible counts minus ramified primes, so
// only the odd-power degrees need an actual scan.
inline Z von_mangoldt_sum(const CharCtx& chi, std::int64_t n) {
  require(n >= 1, errc::bad_degree, "degree must be positive");
  const Field& F = chi.field();
  Z total = 0;
  for (std::int64_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    if (((n / d) % 2) == 0) {
      Z cnt = count_irreducibles(F->q(), d);
      total += d * (cnt - chi.prime_factors_of_degree(d));
    } else {
      RaceCount rc = prime_race_count(chi, d);
      total += d * Z(static_cast<long>(rc.plus - rc.minus));
    }
  }
  return total;
}

// Normalized race term: n * (N_plus - N_minus) / q^(n/2), exact in Q(sqrt q).
inline SqrtQNumber race_pi(const CharCtx& chi, std::int64_t n) {
  RaceCount rc = prime_race_count(chi, n);
  const std::int64_t q = chi.field()->q();
  Z qpow;
  mpz_ui_pow_ui(qpow.get_mpz_t(), static_cast<unsigned long>(q),
                static_cast<unsigned long>(n / 2));
  mpq_class scale(Z(n * Z(static_cast<long>(rc.plus - rc.minus))), qpow);
  scale.canonicalize();
  if (n % 2 == 0) return SqrtQNumber(q, scale, 0);
  // odd n: divide once more by sqrt(q): x/sqrt(q) = (x/q) sqrt(q)
  mpq_class b = scale / q;
  b.canonicalize();
  return SqrtQNumber(q, 0, b);
}

}  // namespace ffrace
