#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ffrace/errors.hpp"

namespace ffrace {

using Z = mpz_class;
using Q = mpq_class;

// Dense integer polynomial, coefficients ascending, trimmed.
struct PolyZ {
  std::vector<Z> c;

  bool operator==(const PolyZ& o) const { return c == o.c; }
  bool operator!=(const PolyZ& o) const { return c != o.c; }
};

inline std::int64_t deg(const PolyZ& a) {
  return static_cast<std::int64_t>(a.c.size()) - 1;
}
inline bool is_zero(const PolyZ& a) { return a.c.empty(); }
inline void trim(PolyZ& a) {
  while (!a.c.empty() && a.c.back() == 0) a.c.pop_back();
}

inline PolyZ zpoly(std::vector<Z> c) {
  PolyZ r{std::move(c)};
  trim(r);
  return r;
}
inline PolyZ zpoly_i(const std::vector<std::int64_t>& c) {
  std::vector<Z> v;
  v.reserve(c.size());
  for (auto x : c) v.emplace_back(static_cast<long>(x));
  return zpoly(std::move(v));
}
inline PolyZ zzero() { return {}; }
inline PolyZ zone() { return zpoly_i({1}); }
inline PolyZ zconst(Z v) { return zpoly({std::move(v)}); }
inline PolyZ zx() { return zpoly_i({0, 1}); }

inline const Z& lc(const PolyZ& a) {
  require(!is_zero(a), errc::bad_input, "leading coefficient of zero");
  return a.c.back();
}
inline bool is_monic(const PolyZ& a) { return !is_zero(a) && lc(a) == 1; }

inline PolyZ zadd(const PolyZ& a, const PolyZ& b) {
  PolyZ r = a;
  if (r.c.size() < b.c.size()) r.c.resize(b.c.size(), Z(0));
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
  trim(r);
  return r;
}
inline PolyZ zneg(const PolyZ& a) {
  PolyZ r = a;
  for (auto& x : r.c) x = -x;
  return r;
}
inline PolyZ zsub(const PolyZ& a, const PolyZ& b) { return zadd(a, zneg(b)); }

inline PolyZ zmul(const PolyZ& a, const PolyZ& b) {
  if (is_zero(a) || is_zero(b)) return {};
  PolyZ r{std::vector<Z>(a.c.size() + b.c.size() - 1, Z(0))};
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j)
      if (b.c[j] != 0) r.c[i + j] += a.c[i] * b.c[j];
  }
  trim(r);
  return r;
}

inline PolyZ zscale(const PolyZ& a, const Z& s) {
  if (s == 0) return {};
  PolyZ r = a;
  for (auto& x : r.c) x *= s;
  return r;
}

inline PolyZ zshift(const PolyZ& a, std::int64_t k) {
  // multiply by T^k
  if (is_zero(a)) return {};
  PolyZ r;
  r.c.assign(k, Z(0));
  r.c.insert(r.c.end(), a.c.begin(), a.c.end());
  return r;
}

// Division when the divisor's leading coefficient is a unit; remainder kept.
inline std::pair<PolyZ, PolyZ> zdivrem_unit(const PolyZ& a, const PolyZ& b) {
  require(!is_zero(b) && (lc(b) == 1 || lc(b) == -1), errc::bad_input,
          "divisor must have unit leading coefficient");
  if (deg(a) < deg(b)) return {{}, a};
  PolyZ rem = a;
  PolyZ quo{std::vector<Z>(a.c.size() - b.c.size() + 1, Z(0))};
  const bool neglc = lc(b) == -1;
  for (std::int64_t k = deg(a) - deg(b); k >= 0; --k) {
    std::size_t top = k + b.c.size() - 1;
    if (rem.c[top] == 0) continue;
    Z f = neglc ? Z(-rem.c[top]) : rem.c[top];
    quo.c[k] = f;
    for (std::size_t i = 0; i < b.c.size(); ++i) rem.c[k + i] -= f * b.c[i];
  }
  trim(quo);
  trim(rem);
  return {quo, rem};
}

// Exact division (throws if the division leaves a remainder).
inline PolyZ zdiv_exact(const PolyZ& a, const PolyZ& b) {
  if (lc(b) == 1 || lc(b) == -1) {
    auto [q2, r] = zdivrem_unit(a, b);
    require(is_zero(r), errc::internal, "inexact polynomial division");
    return q2;
  }
  // General case via rational division.
  require(!is_zero(b), errc::bad_input, "division by zero");
  if (deg(a) < deg(b)) {
    require(is_zero(a), errc::internal, "inexact polynomial division");
    return {};
  }
  std::vector<Q> rem(a.c.begin(), a.c.end());
  std::vector<Q> quo(a.c.size() - b.c.size() + 1, Q(0));
  const Q lcb(b.c.back());
  for (std::int64_t k = deg(a) - deg(b); k >= 0; --k) {
    std::size_t top = k + b.c.size() - 1;
    if (rem[top] == 0) continue;
    Q f = rem[top] / lcb;
    quo[k] = f;
    for (std::size_t i = 0; i < b.c.size(); ++i) rem[k + i] -= f * Q(b.c[i]);
  }
  for (const auto& r : rem)
    require(r == 0, errc::internal, "inexact polynomial division");
  PolyZ out{std::vector<Z>(quo.size())};
  for (std::size_t i = 0; i < quo.size(); ++i) {
    require(quo[i].get_den() == 1, errc::internal,
            "inexact polynomial division");
    out.c[i] = quo[i].get_num();
  }
  trim(out);
  return out;
}

inline Z zeval(const PolyZ& a, const Z& x) {
  Z r = 0;
  for (std::size_t i = a.c.size(); i-- > 0;) r = r * x + a.c[i];
  return r;
}

inline Q zeval_q(const PolyZ& a, const Q& x) {
  Q r = 0;
  for (std::size_t i = a.c.size(); i-- > 0;) r = r * x + Q(a.c[i]);
  return r;
}

inline PolyZ zderiv(const PolyZ& a) {
  if (deg(a) < 1) return {};
  PolyZ r{std::vector<Z>(a.c.size() - 1)};
  for (std::size_t i = 1; i < a.c.size(); ++i)
    r.c[i - 1] = a.c[i] * static_cast<long>(i);
  trim(r);
  return r;
}

// P(-T)
inline PolyZ zsubst_neg(const PolyZ& a) {
  PolyZ r = a;
  for (std::size_t i = 1; i < r.c.size(); i += 2) r.c[i] = -r.c[i];
  return r;
}

// T^deg(a) * a(w/T): roots map to w / root. Not normalized.
inline PolyZ zreciprocal_scaled(const PolyZ& a, const Z& w) {
  require(!is_zero(a), errc::bad_input, "reciprocal of zero");
  PolyZ r{std::vector<Z>(a.c.size())};
  Z wp = 1;
  const std::size_t n = a.c.size() - 1;
  for (std::size_t i = 0; i <= n; ++i) {
    r.c[n - i] = a.c[i] * wp;
    wp *= w;
  }
  trim(r);
  return r;
}

inline Z zcontent(const PolyZ& a) {
  Z g = 0;
  for (const auto& x : a.c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

// Primitive part with positive leading coefficient.
inline PolyZ zprimitive(const PolyZ& a) {
  if (is_zero(a)) return {};
  Z g = zcontent(a);
  if (lc(a) < 0) g = -g;
  PolyZ r = a;
  for (auto& x : r.c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return r;
}

// ---------- rational-coefficient helpers (gcd, exact division) ----------

namespace detail {

using QVec = std::vector<Q>;

inline void qtrim(QVec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline QVec qfrom(const PolyZ& a) { return QVec(a.c.begin(), a.c.end()); }

inline QVec qmod(QVec a, const QVec& b) {
  qtrim(a);
  while (a.size() >= b.size()) {
    Q f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    qtrim(a);
  }
  return a;
}

}  // namespace detail

// Monic-normalized gcd over Q, returned as the primitive integer polynomial
// with positive leading coefficient.
inline PolyZ zgcd(const PolyZ& a, const PolyZ& b) {
  detail::QVec x = detail::qfrom(a), y = detail::qfrom(b);
  detail::qtrim(x);
  detail::qtrim(y);
  while (!y.empty()) {
    detail::QVec r = detail::qmod(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  if (x.empty()) return {};
  // clear denominators
  Z den = 1;
  for (const auto& q2 : x) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(),
                                   q2.get_den().get_mpz_t());
  PolyZ out{std::vector<Z>(x.size())};
  for (std::size_t i = 0; i < x.size(); ++i) {
    Q t = x[i] * Q(den);
    out.c[i] = t.get_num();
  }
  return zprimitive(out);
}

// ---------- resultants ----------

// det of the Sylvester matrix via fraction-free (Bareiss) elimination.
// Convention: resultant_int(A, B) = lc(A)^deg(B) * prod_i B(alpha_i)
//           = lc(A)^deg(B) lc(B)^deg(A) prod_{i,j} (alpha_i - beta_j).
inline Z resultant_int(const PolyZ& A, const PolyZ& B) {
  if (is_zero(A) || is_zero(B)) return 0;
  const std::int64_t m = deg(A), n = deg(B);
  if (m == 0) {
    Z r;
    mpz_pow_ui(r.get_mpz_t(), A.c[0].get_mpz_t(), n);
    return r;
  }
  if (n == 0) {
    Z r;
    mpz_pow_ui(r.get_mpz_t(), B.c[0].get_mpz_t(), m);
    return r;
  }
  const std::int64_t k = m + n;
  std::vector<std::vector<Z>> M(k, std::vector<Z>(k, Z(0)));
  for (std::int64_t i = 0; i < n; ++i)
    for (std::int64_t j = 0; j <= m; ++j) M[i][i + j] = A.c[m - j];
  for (std::int64_t i = 0; i < m; ++i)
    for (std::int64_t j = 0; j <= n; ++j) M[n + i][i + j] = B.c[n - j];
  int sign = 1;
  Z prev = 1;
  for (std::int64_t i = 0; i < k - 1; ++i) {
    if (M[i][i] == 0) {
      std::int64_t piv = -1;
      for (std::int64_t r = i + 1; r < k; ++r)
        if (M[r][i] != 0) {
          piv = r;
          break;
        }
      if (piv < 0) return 0;
      std::swap(M[i], M[piv]);
      sign = -sign;
    }
    for (std::int64_t r = i + 1; r < k; ++r) {
      for (std::int64_t c2 = i + 1; c2 < k; ++c2) {
        Z t = M[i][i] * M[r][c2] - M[r][i] * M[i][c2];
        mpz_divexact(M[r][c2].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      M[r][i] = 0;
    }
    prev = M[i][i];
  }
  return sign > 0 ? M[k - 1][k - 1] : Z(-M[k - 1][k - 1]);
}

inline Z discriminant_int(const PolyZ& a) {
  require(deg(a) >= 1, errc::bad_degree, "discriminant needs degree >= 1");
  PolyZ d = zderiv(a);
  if (is_zero(d)) return 0;
  Z res = resultant_int(a, d);
  const std::int64_t n = deg(a);
  if (((n * (n - 1)) / 2) % 2 == 1) res = -res;
  Z out;
  mpz_divexact(out.get_mpz_t(), res.get_mpz_t(), lc(a).get_mpz_t());
  return out;
}

// ---------- power sums ----------

// First nmax power sums t_1..t_nmax of the roots of monic P (t_0 = deg P),
// by Newton's identities extended with the linear recurrence from P.
inline std::vector<Z> newton_power_sums(const PolyZ& P, std::int64_t nmax) {
  require(is_monic(P), errc::bad_input, "power sums need a monic polynomial");
  const std::int64_t n = deg(P);
  std::vector<Z> t(nmax + 1);
  t[0] = n;
  // e_i = (-1)^i P.c[n-i]
  for (std::int64_t k = 1; k <= nmax; ++k) {
    if (k <= n) {
      // t_k = -k a_{n-k} - sum_{i=1}^{k-1} a_{n-k+i} t_i
      // for P = T^n + a_{n-1} T^{n-1} + ... + a_0.
      Z acc = -(P.c[n - k] * static_cast<long>(k));
      for (std::int64_t i = 1; i < k; ++i) acc -= P.c[n - k + i] * t[i];
      t[k] = acc;
    } else {
      // linear recurrence: t_k = -sum_{i=1}^{n} a_{n-i} t_{k-i}
      Z acc = 0;
      for (std::int64_t i = 1; i <= n; ++i) acc -= P.c[n - i] * t[k - i];
      t[k] = acc;
    }
  }
  return t;
}

// Monic polynomial of degree n whose root power sums are s[1..n]
// (inverse Newton). All elementary symmetric functions must be integers.
inline PolyZ poly_from_power_sums(const std::vector<Z>& s, std::int64_t n) {
  std::vector<Z> e(n + 1);
  e[0] = 1;
  for (std::int64_t k = 1; k <= n; ++k) {
    // k e_k = sum_{i=1}^{k} (-1)^{i-1} e_{k-i} s_i
    Z acc = 0;
    for (std::int64_t i = 1; i <= k; ++i) {
      Z term = e[k - i] * s[i];
      if (i % 2 == 0) term = -term;
      acc += term;
    }
    require(mpz_divisible_ui_p(acc.get_mpz_t(), static_cast<unsigned long>(k)),
            errc::internal, "power sums do not define an integer polynomial");
    mpz_divexact_ui(e[k].get_mpz_t(), acc.get_mpz_t(),
                    static_cast<unsigned long>(k));
  }
  PolyZ out{std::vector<Z>(n + 1)};
  for (std::int64_t k = 0; k <= n; ++k) {
    out.c[n - k] = (k % 2 == 0) ? e[k] : Z(-e[k]);
  }
  trim(out);
  return out;
}

// Monic polynomial whose roots are the d-th powers of the roots of P
// (with multiplicity): computed exactly through power sums.
inline PolyZ power_transform(const PolyZ& P, std::int64_t d) {
  require(is_monic(P), errc::bad_input, "power transform needs monic input");
  require(d >= 1, errc::bad_input, "power must be positive");
  const std::int64_t n = deg(P);
  if (n == 0) return zone();
  std::vector<Z> t = newton_power_sums(P, d * n);
  std::vector<Z> s(n + 1);
  for (std::int64_t k = 1; k <= n; ++k) s[k] = t[d * k];
  return poly_from_power_sums(s, n);
}

// ---------- formatting ----------

inline std::string zformat(const PolyZ& a, const std::string& var = "T") {
  if (is_zero(a)) return "0";
  std::string out;
  for (std::size_t i = a.c.size(); i-- > 0;) {
    if (a.c[i] == 0) continue;
    Z c = a.c[i];
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    Z abs = c < 0 ? Z(-c) : c;
    if (abs != 1 || i == 0) out += abs.get_str();
    if (i > 0) {
      if (abs != 1) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

inline std::string zlist(const PolyZ& a, char sep = ';') {
  if (is_zero(a)) return "0";
  std::string out;
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (i) out += sep;
    out += a.c[i].get_str();
  }
  return out;
}

// Canonical ordering used wherever factor lists must be deterministic.
inline bool zless(const PolyZ& a, const PolyZ& b) {
  if (deg(a) != deg(b)) return deg(a) < deg(b);
  for (std::size_t i = a.c.size(); i-- > 0;) {
    if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
  }
  return false;
}

}  // namespace ffrace
