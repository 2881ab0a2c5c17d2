#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ffrace/field.hpp"

namespace ffrace {

// Dense polynomial over F_q, coefficients ascending by degree, always trimmed
// (no trailing zeros). The zero polynomial has an empty coefficient vector.
struct PolyFq {
  Field F;
  std::vector<Fq> c;

  bool operator==(const PolyFq& o) const { return c == o.c; }
  bool operator!=(const PolyFq& o) const { return c != o.c; }
};

inline std::int64_t deg(const PolyFq& a) {
  return static_cast<std::int64_t>(a.c.size()) - 1;
}

inline bool is_zero(const PolyFq& a) { return a.c.empty(); }

inline void trim(PolyFq& a) {
  while (!a.c.empty() && a.c.back() == 0) a.c.pop_back();
}

inline PolyFq poly_from_coeffs(Field F, std::vector<Fq> c) {
  PolyFq r{std::move(F), std::move(c)};
  trim(r);
  return r;
}

inline PolyFq poly_zero(Field F) { return {std::move(F), {}}; }
inline PolyFq poly_const(Field F, Fq a) {
  return poly_from_coeffs(std::move(F), {a});
}
inline PolyFq poly_one(Field F) { return poly_const(std::move(F), 1); }
inline PolyFq poly_x(Field F) { return {std::move(F), {0, 1}}; }

inline Fq lc(const PolyFq& a) {
  require(!is_zero(a), errc::bad_input, "leading coefficient of zero");
  return a.c.back();
}

inline bool is_monic(const PolyFq& a) { return !is_zero(a) && lc(a) == 1; }

inline PolyFq padd(const PolyFq& a, const PolyFq& b) {
  const FieldCtx& K = *a.F;
  PolyFq r = a;
  if (r.c.size() < b.c.size()) r.c.resize(b.c.size(), 0);
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = K.add(r.c[i], b.c[i]);
  trim(r);
  return r;
}

inline PolyFq pneg(const PolyFq& a) {
  PolyFq r = a;
  for (auto& x : r.c) x = a.F->neg(x);
  return r;
}

inline PolyFq psub(const PolyFq& a, const PolyFq& b) {
  return padd(a, pneg(b));
}

inline PolyFq pmul(const PolyFq& a, const PolyFq& b) {
  if (is_zero(a) || is_zero(b)) return poly_zero(a.F);
  const FieldCtx& K = *a.F;
  PolyFq r{a.F, std::vector<Fq>(a.c.size() + b.c.size() - 1, 0)};
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j)
      if (b.c[j] != 0)
        r.c[i + j] = K.add(r.c[i + j], K.mul(a.c[i], b.c[j]));
  }
  trim(r);
  return r;
}

inline PolyFq pscale(const PolyFq& a, Fq s) {
  PolyFq r = a;
  for (auto& x : r.c) x = a.F->mul(x, s);
  trim(r);
  return r;
}

// Quotient and remainder; b nonzero.
inline std::pair<PolyFq, PolyFq> pdivrem(const PolyFq& a, const PolyFq& b) {
  require(!is_zero(b), errc::bad_input, "division by zero polynomial");
  const FieldCtx& K = *a.F;
  if (deg(a) < deg(b)) return {poly_zero(a.F), a};
  PolyFq rem = a;
  PolyFq quo{a.F, std::vector<Fq>(a.c.size() - b.c.size() + 1, 0)};
  const Fq lcinv = K.inv(lc(b));
  for (std::int64_t k = deg(a) - deg(b); k >= 0; --k) {
    std::size_t top = k + b.c.size() - 1;
    if (top >= rem.c.size() || rem.c[top] == 0) continue;
    Fq f = K.mul(rem.c[top], lcinv);
    quo.c[k] = f;
    for (std::size_t i = 0; i < b.c.size(); ++i)
      rem.c[k + i] = K.sub(rem.c[k + i], K.mul(f, b.c[i]));
  }
  trim(quo);
  trim(rem);
  return {quo, rem};
}

inline PolyFq pmod(const PolyFq& a, const PolyFq& b) {
  return pdivrem(a, b).second;
}
inline PolyFq pdiv(const PolyFq& a, const PolyFq& b) {
  return pdivrem(a, b).first;
}

inline PolyFq pmulmod(const PolyFq& a, const PolyFq& b, const PolyFq& m) {
  return pmod(pmul(a, b), m);
}

inline PolyFq make_monic(const PolyFq& a) {
  if (is_zero(a) || lc(a) == 1) return a;
  return pscale(a, a.F->inv(lc(a)));
}

// Monic gcd.
inline PolyFq pgcd(PolyFq a, PolyFq b) {
  while (!is_zero(b)) {
    PolyFq r = pmod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (is_zero(a)) return a;
  return make_monic(a);
}

inline PolyFq pderiv(const PolyFq& a) {
  if (deg(a) < 1) return poly_zero(a.F);
  const FieldCtx& K = *a.F;
  PolyFq r{a.F, std::vector<Fq>(a.c.size() - 1, 0)};
  for (std::size_t i = 1; i < a.c.size(); ++i) {
    Fq k = K.from_int(static_cast<std::int64_t>(i));
    r.c[i - 1] = K.mul(a.c[i], k);
  }
  trim(r);
  return r;
}

inline Fq peval(const PolyFq& a, Fq x) {
  const FieldCtx& K = *a.F;
  Fq r = 0;
  for (std::size_t i = a.c.size(); i-- > 0;) r = K.add(K.mul(r, x), a.c[i]);
  return r;
}

// base^n mod m with an arbitrary-size exponent (|F_q^d| - 1 overflows i64
// already at moderate parameters).
inline PolyFq ppowmod(PolyFq base, const mpz_class& n, const PolyFq& m) {
  require(n >= 0, errc::bad_input, "negative exponent");
  PolyFq r = poly_one(base.F);
  base = pmod(base, m);
  const mp_bitcnt_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  if (n == 0) return r;
  for (mp_bitcnt_t i = bits; i-- > 0;) {
    r = pmulmod(r, r, m);
    if (mpz_tstbit(n.get_mpz_t(), i)) r = pmulmod(r, base, m);
  }
  return r;
}

inline PolyFq ppowmod(PolyFq base, std::int64_t n, const PolyFq& m) {
  return ppowmod(std::move(base), mpz_class(static_cast<long>(n)), m);
}

// x^n + lower coefficients given by the base-q digits of idx (monic family
// enumeration: idx runs over [0, q^n)).
inline PolyFq monic_by_index(const Field& F, std::int64_t n, std::uint64_t idx) {
  std::vector<Fq> c(n + 1, 0);
  const std::uint64_t q = static_cast<std::uint64_t>(F->q());
  for (std::int64_t i = 0; i < n; ++i) {
    c[i] = static_cast<Fq>(idx % q);
    idx /= q;
  }
  c[n] = 1;
  return {F, std::move(c)};
}

inline std::uint64_t monic_index(const PolyFq& a) {
  const std::uint64_t q = static_cast<std::uint64_t>(a.F->q());
  std::uint64_t idx = 0;
  for (std::size_t i = a.c.size() - 1; i-- > 0;) idx = idx * q + a.c[i];
  return idx;
}

inline bool is_squarefree(const PolyFq& f) {
  require(deg(f) >= 1, errc::bad_degree, "squarefree test needs degree >= 1");
  PolyFq d = pderiv(f);
  if (is_zero(d)) return false;  // p-th power
  return deg(pgcd(f, d)) == 0;
}

// Resultant over F_q via the Euclidean PRS with the standard sign/leading
// coefficient bookkeeping; convention matches prod (alpha_i - beta_j).
inline Fq resultant_fq(PolyFq a, PolyFq b) {
  const FieldCtx& K = *a.F;
  if (is_zero(a) || is_zero(b)) return 0;
  Fq res = 1;
  while (deg(b) > 0) {
    PolyFq r = pmod(a, b);
    std::int64_t da = deg(a), db = deg(b), dr = deg(r);
    // res(a,b) = (-1)^{da db} lc(b)^{da - dr} res(b, r)
    Fq factor = K.pow(lc(b), da - (is_zero(r) ? 0 : dr));
    if ((da & 1) && (db & 1)) factor = K.neg(factor);
    if (is_zero(r)) {
      // res(b, 0) = 0 unless b is constant (handled by loop exit)
      return 0;
    }
    res = K.mul(res, factor);
    a = std::move(b);
    b = std::move(r);
  }
  // deg(b) == 0: res(a, const) = const^{deg a}
  return K.mul(res, K.pow(b.c[0], deg(a)));
}

inline Fq discriminant_fq(const PolyFq& f) {
  require(deg(f) >= 1, errc::bad_degree, "discriminant needs degree >= 1");
  const FieldCtx& K = *f.F;
  PolyFq d = pderiv(f);
  if (is_zero(d)) return 0;
  Fq r = resultant_fq(f, d);
  std::int64_t n = deg(f);
  if (((n * (n - 1)) / 2) % 2 == 1) r = K.neg(r);
  return K.mul(r, K.inv(lc(f)));
}

inline std::string format_poly(const PolyFq& a, const std::string& var = "x") {
  if (is_zero(a)) return "0";
  const FieldCtx& K = *a.F;
  std::string out;
  for (std::size_t i = a.c.size(); i-- > 0;) {
    if (a.c[i] == 0) continue;
    if (!out.empty()) out += " + ";
    const bool unit = (a.c[i] == 1);
    if (i == 0 || !unit || K.e() > 1) out += K.format(a.c[i]);
    if (i > 0) {
      if (!unit || K.e() > 1) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

// Coefficient-list form: ascending, separated by the given character, with
// extension elements rendered as bracketed coordinate lists.
inline std::string poly_to_list(const PolyFq& a, char sep = ';') {
  if (is_zero(a)) return "0";
  std::string out;
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (i) out += sep;
    out += a.F->format(a.c[i]);
  }
  return out;
}

// Accepts ascending coefficient lists separated by ',' or ';' at bracket
// depth zero (extension coordinates keep their inner commas).
inline PolyFq poly_from_list(const Field& F, const std::string& s) {
  std::vector<Fq> c;
  std::string tok;
  int depth = 0;
  auto flush = [&]() {
    std::string t;
    for (char ch : tok)
      if (!isspace(static_cast<unsigned char>(ch))) t += ch;
    require(!t.empty(), errc::bad_input, "empty coefficient in list: " + s);
    c.push_back(F->parse(t));
    tok.clear();
  };
  for (char ch : s) {
    if (ch == '[') ++depth;
    if (ch == ']') --depth;
    if ((ch == ',' || ch == ';') && depth == 0) {
      flush();
    } else {
      tok += ch;
    }
  }
  flush();
  return poly_from_coeffs(F, std::move(c));
}

}  // namespace ffrace
