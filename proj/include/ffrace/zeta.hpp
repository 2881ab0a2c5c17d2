#pragma once

#include <cstdint>
#include <vector>

#include "ffrace/charsums.hpp"
#include "ffrace/fq_factor.hpp"
#include "ffrace/int_poly.hpp"
#include "ffrace/sqrtq.hpp"

namespace ffrace {

// Dirichlet L-polynomial of the quadratic character: coefficient d is the
// sum of chi over all monic polynomials of degree d. Degree is deg(f) - 1.
inline PolyZ l_function(const CharCtx& chi) {
  PolyZ L{coeff_sums(chi)};
  trim(L);
  require(deg(L) == deg(chi.modulus()) - 1, errc::internal,
          "L-polynomial degree mismatch");
  return L;
}

// For even-degree moduli the L-polynomial carries a forced zero at u = 1;
// dividing it out leaves the part whose inverse roots all have |.| = sqrt q.
inline PolyZ remove_trivial_zero(const PolyZ& L, std::int64_t deg_f) {
  if (deg_f % 2 != 0) return L;
  PolyZ one_minus_u = zpoly_i({1, -1});
  auto [quo, rem] = zdivrem_unit(L, one_minus_u);
  require(is_zero(rem), errc::internal,
          "expected zero of L-polynomial at u = 1");
  return quo;
}

// Coefficient functional equation a_i = q^(g-i) * a_(2g-i) for monic P of
// even degree 2g.
inline bool is_q_symplectic(const PolyZ& P, std::int64_t q) {
  std::int64_t d = deg(P);
  if (d < 0 || d % 2 != 0) return false;
  if (P.c[d] != 1) return false;
  std::int64_t g = d / 2;
  Z qp = 1;
  for (std::int64_t i = g - 1; i >= 0; --i) {
    qp *= q;  // q^(g-i)
    if (P.c[i] != qp * P.c[d - i]) return false;
  }
  return true;
}

// P(T) = T^2g * Lstar(1/T): monic, roots are the inverse roots of Lstar.
inline PolyZ weil_from_l(const PolyZ& Lstar, std::int64_t q) {
  std::int64_t d = deg(Lstar);
  require(d >= 0 && Lstar.c[0] == 1, errc::bad_input,
          "completed L-polynomial must have constant term 1");
  PolyZ P;
  P.c.assign(Lstar.c.rbegin(), Lstar.c.rend());
  require(is_q_symplectic(P, q), errc::not_symplectic,
          "Weil polynomial fails the q-symplectic relation");
  return P;
}

// Inverse of the substitution P(T) = T^g * h(T + q/T): peel the top
// coefficient of the remainder at each step. Exact for q-symplectic P.
inline PolyZ real_weil(const PolyZ& P, std::int64_t q) {
  require(is_q_symplectic(P, q), errc::not_symplectic,
          "input is not q-symplectic");
  std::int64_t g = deg(P) / 2;
  PolyZ R = P;  // kept at full length 2g + 1 so indexing stays direct
  PolyZ h;
  h.c.assign(g + 1, 0);
  // T^(g-k) * (T^2 + q)^k has top term T^(g+k)
  for (std::int64_t k = g; k >= 0; --k) {
    Z b = R.c[g + k];
    h.c[k] = b;
    if (b == 0) continue;
    // subtract b * T^(g-k) * (T^2 + q)^k
    std::vector<Z> binom(k + 1);
    binom[0] = 1;
    for (std::int64_t j = 1; j <= k; ++j)
      binom[j] = binom[j - 1] * (k - j + 1) / j;
    Z qp = 1;
    for (std::int64_t j = 0; j <= k; ++j) {
      // term b * C(k,j) q^j T^(g-k) T^(2(k-j)) = ... T^(g+k-2j)
      R.c[g + k - 2 * j] -= b * binom[j] * qp;
      qp *= q;
    }
  }
  trim(R);
  require(is_zero(R), errc::not_symplectic,
          "no real-coefficient model exists for this polynomial");
  trim(h);
  return h;
}

// Everything derived from one character in a single pass.
struct WeilData {
  PolyZ L;      // raw L-polynomial, degree deg(f) - 1
  PolyZ Lstar;  // trivial zero at u = 1 removed when deg(f) is even
  PolyZ P;      // monic q-symplectic Weil polynomial, degree 2g
  PolyZ h;      // real model: P(T) = T^g h(T + q/T)
  std::int64_t g = 0;
  std::int64_t q = 0;
  std::int64_t deg_f = 0;
  bool even_deg = false;
};

inline WeilData weil_analysis(const CharCtx& chi) {
  WeilData w;
  w.q = chi.field()->q();
  w.deg_f = deg(chi.modulus());
  w.even_deg = (w.deg_f % 2 == 0);
  w.L = l_function(chi);
  w.Lstar = remove_trivial_zero(w.L, w.deg_f);
  w.P = weil_from_l(w.Lstar, w.q);
  w.g = deg(w.P) / 2;
  require(w.g == (w.deg_f - 1) / 2, errc::internal, "genus mismatch");
  w.h = real_weil(w.P, w.q);
  return w;
}

// Evaluate an integer polynomial at sqrt(q), exactly.
inline SqrtQNumber eval_sqrtq(const PolyZ& P, std::int64_t q) {
  Z even = 0, odd = 0, qp = 1;
  for (std::size_t i = 0; i < P.c.size(); i += 2) {
    even += P.c[i] * qp;
    if (i + 1 < P.c.size()) odd += P.c[i + 1] * qp;
    qp *= q;
  }
  return SqrtQNumber(q, mpq_class(even), mpq_class(odd));
}

inline SqrtQNumber eval_neg_sqrtq(const PolyZ& P, std::int64_t q) {
  SqrtQNumber v = eval_sqrtq(P, q);
  return SqrtQNumber(q, v.a, -v.b);
}

namespace detail {

// Embed the coefficient field F_q into F_(q^k) by sending the class of t to
// a root of the ground modulus; the root picked is the one in the first
// factor of the canonical (sorted) factorization, so the map is stable.
inline std::vector<Fq> embedding_powers(const Field& F, const Field& K) {
  require(K->e() % F->e() == 0 && K->p() == F->p(), errc::bad_input,
          "no embedding between these fields");
  std::int64_t e = F->e();
  if (e == 1) return {};  // prime field: from_int is canonical
  PolyFq m{K, {}};
  m.c.resize(e + 1);
  for (std::int64_t i = 0; i <= e; ++i)
    m.c[i] = K->from_int(F->modulus()[i]);
  trim(m);
  auto facs = factor_fq(m);
  require(deg(facs.front().poly) == 1, errc::internal,
          "ground modulus failed to split in the extension");
  Fq root = K->neg(facs.front().poly.c[0]);
  std::vector<Fq> pw(e);
  pw[0] = K->one();
  for (std::int64_t i = 1; i < e; ++i) pw[i] = K->mul(pw[i - 1], root);
  return pw;
}

inline Fq embed_elem(const Field& F, const Field& K,
                     const std::vector<Fq>& powers, Fq a) {
  if (F->e() == 1) return K->from_int(static_cast<std::int64_t>(a));
  auto coords = F->coords(a);
  Fq out = K->zero();
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] != 0)
      out = K->add(out, K->mul(K->from_int(coords[i]), powers[i]));
  return out;
}

}  // namespace detail

struct PointCount {
  std::int64_t k = 0;
  Z affine;     // #{(x, y) in F_(q^k)^2 : y^2 = f(x)}, by enumeration
  Z predicted;  // q^k + s^k * (-t_k - [deg f even]), s the reciprocity sign
};

// Count affine points of y^2 = f(x) over F_(q^k) and compare with the number
// forced by the power sums t of the Weil polynomial.
inline PointCount point_count(const CharCtx& chi, const WeilData& w,
                              std::int64_t k) {
  require(k >= 1, errc::bad_degree, "extension degree must be positive");
  const Field& F = chi.field();
  require(F->e() * k <= 20, errc::too_large, "extension field too large");
  check_enum_cap(F->q(), k);
  Field K = make_field(F->p(), F->e() * k);

  auto powers = detail::embedding_powers(F, K);
  const PolyFq& f = chi.modulus();
  std::vector<Fq> fc(f.c.size());
  for (std::size_t i = 0; i < f.c.size(); ++i)
    fc[i] = detail::embed_elem(F, K, powers, f.c[i]);

  PointCount pc;
  pc.k = k;
  std::int64_t count = 0;
  const std::int64_t qk = K->q();
  for (std::int64_t x = 0; x < qk; ++x) {
    Fq v = 0;
    for (std::size_t i = fc.size(); i-- > 0;)
      v = K->add(K->mul(v, static_cast<Fq>(x)), fc[i]);
    if (v == 0)
      count += 1;  // y = 0 only
    else
      count += 1 + K->eta(v);  // 2 square roots or none
  }
  pc.affine = static_cast<long>(count);

  auto t = newton_power_sums(w.P, k);
  Z qpk;
  mpz_ui_pow_ui(qpk.get_mpz_t(), static_cast<unsigned long>(F->q()),
                static_cast<unsigned long>(k));
  // chi(linear P) vs the Legendre symbol of f at the corresponding point
  // differ by (-1)^(((q-1)/2) deg f), and the k-th level inherits its k-th
  // power.
  int sign = (F->q() % 4 == 3 && w.deg_f % 2 == 1) ? -1 : 1;
  int sk = (k % 2 == 0) ? 1 : sign;
  Z c_k = -t[k] - (w.even_deg ? 1 : 0);
  pc.predicted = qpk + sk * c_k;
  return pc;
}

}  // namespace ffrace
