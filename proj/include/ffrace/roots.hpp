#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "ffrace/int_poly.hpp"
#include "ffrace/sqrtq.hpp"

namespace ffrace {

// Exact sign of F at a rational point.
inline int sign_at(const PolyZ& F, const Q& x) {
  Q v = zeval_q(F, x);
  return sgn(v);
}

// Exact sign of F at c + d*sqrt(q).
inline int sign_at_sqrt(const PolyZ& F, std::int64_t q, const Q& c,
                        const Q& d) {
  SqrtQNumber x(q, c, d);
  SqrtQNumber acc(q, 0, 0);
  for (std::size_t i = F.c.size(); i-- > 0;)
    acc = acc * x + SqrtQNumber::rational(q, Q(F.c[i]));
  return acc.sign();
}

// Sturm chain with primitive positive rescaling at each step (positive
// scalars do not disturb sign variation counts).
struct SturmChain {
  std::vector<PolyZ> seq;
};

namespace detail {

// Divide by the (positive) content, keeping every sign intact. This is NOT
// zprimitive, which normalizes the leading coefficient to be positive and
// would corrupt variation counts.
inline PolyZ scale_primitive(PolyZ a) {
  trim(a);
  if (is_zero(a)) return a;
  Z cont = zcontent(a);
  for (auto& x : a.c)
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), cont.get_mpz_t());
  return a;
}

inline PolyZ qvec_to_primitive(const QVec& v) {
  Z denom_lcm = 1;
  for (const auto& x : v)
    mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(),
            x.get_den().get_mpz_t());
  PolyZ r;
  r.c.reserve(v.size());
  for (const auto& x : v) {
    Q s = x * Q(denom_lcm);
    s.canonicalize();
    r.c.push_back(s.get_num());
  }
  trim(r);
  if (is_zero(r)) return r;
  Z cont = zcontent(r);
  for (auto& x : r.c) x /= cont;
  return r;
}

}  // namespace detail

inline SturmChain sturm_chain(const PolyZ& F) {
  require(deg(F) >= 1, errc::bad_input, "constant polynomial has no chain");
  SturmChain ch;
  ch.seq.push_back(detail::scale_primitive(F));
  ch.seq.push_back(detail::scale_primitive(zderiv(F)));
  while (deg(ch.seq.back()) > 0) {
    const PolyZ& a = ch.seq[ch.seq.size() - 2];
    const PolyZ& b = ch.seq.back();
    detail::QVec r = detail::qmod(detail::qfrom(a), detail::qfrom(b));
    PolyZ rz = detail::qvec_to_primitive(r);
    if (is_zero(rz)) break;
    ch.seq.push_back(zneg(rz));
  }
  require(deg(ch.seq.back()) <= 0, errc::bad_input,
          "input polynomial must be squarefree");
  return ch;
}

namespace detail {

template <class SignFn>
int variations(const SturmChain& ch, SignFn&& sig) {
  int last = 0, var = 0;
  for (const PolyZ& S : ch.seq) {
    int s = sig(S);
    if (s == 0) continue;
    if (last != 0 && s != last) ++var;
    last = s;
  }
  return var;
}

}  // namespace detail

inline int variations_at(const SturmChain& ch, const Q& x) {
  return detail::variations(ch, [&](const PolyZ& S) { return sign_at(S, x); });
}

inline int variations_at_sqrt(const SturmChain& ch, std::int64_t q, const Q& c,
                              const Q& d) {
  return detail::variations(
      ch, [&](const PolyZ& S) { return sign_at_sqrt(S, q, c, d); });
}

// Number of distinct real roots in (a, b]; endpoints must not be roots of F.
inline int count_roots(const SturmChain& ch, const Q& a, const Q& b) {
  return variations_at(ch, a) - variations_at(ch, b);
}

// Number of distinct real roots strictly between -w*sqrt(q) and +w*sqrt(q),
// assuming neither endpoint is a root.
inline int count_roots_sym_sqrt(const SturmChain& ch, std::int64_t q,
                                const Q& w) {
  return variations_at_sqrt(ch, q, 0, -w) - variations_at_sqrt(ch, q, 0, w);
}

// Enclosure of a single real root: either exact (lo == hi) or an open
// interval with a sign change of F at the endpoints.
struct RootBox {
  Q lo, hi;
  bool exact = false;
};

// Isolating boxes for all real roots of a squarefree F with no rational
// roots in degree >= 2 (linear F is returned as its exact root). Boxes come
// back sorted increasingly and pairwise disjoint.
inline std::vector<RootBox> isolate_real_roots(const PolyZ& F) {
  require(deg(F) >= 1, errc::bad_input, "no roots to isolate");
  if (deg(F) == 1) {
    Q r(-F.c[0], F.c[1]);
    r.canonicalize();
    return {RootBox{r, r, true}};
  }
  SturmChain ch = sturm_chain(F);
  // Cauchy bound: all roots have |x| < 1 + max |c_i| / |lc|
  Q bound(1);
  for (std::size_t i = 0; i + 1 < F.c.size(); ++i) {
    Q cand(abs(F.c[i]), abs(F.c.back()));
    cand.canonicalize();
    if (cand > bound) bound = cand;
  }
  bound += 1;
  std::vector<RootBox> out;
  struct Seg {
    Q a, b;
    int va, vb;
  };
  std::vector<Seg> stack;
  {
    Q a = -bound, b = bound;
    stack.push_back({a, b, variations_at(ch, a), variations_at(ch, b)});
  }
  while (!stack.empty()) {
    Seg s = stack.back();
    stack.pop_back();
    int count = s.va - s.vb;
    if (count == 0) continue;
    if (count == 1) {
      out.push_back(RootBox{s.a, s.b, false});
      continue;
    }
    Q mid = (s.a + s.b) / 2;
    require(sign_at(F, mid) != 0, errc::internal,
            "rational root encountered during isolation");
    int vm = variations_at(ch, mid);
    stack.push_back({mid, s.b, vm, s.vb});
    stack.push_back({s.a, mid, s.va, vm});
  }
  std::sort(out.begin(), out.end(),
            [](const RootBox& x, const RootBox& y) { return x.lo < y.lo; });
  // (a, b] segments from a split never overlap; make endpoint signs strict
  for (auto& box : out) {
    // ensure a sign change for bisection refinement
    require(sign_at(F, box.lo) * sign_at(F, box.hi) < 0, errc::internal,
            "isolation interval lost its sign change");
  }
  return out;
}

// Shrink an isolating box below the requested width by sign bisection.
inline void refine_root(const PolyZ& F, RootBox& box, int bits) {
  if (box.exact) return;
  Q width(1);
  for (int i = 0; i < bits; ++i) width /= 2;
  int slo = sign_at(F, box.lo);
  while (box.hi - box.lo > width) {
    Q mid = (box.lo + box.hi) / 2;
    int sm = sign_at(F, mid);
    require(sm != 0, errc::internal, "unexpected rational root in refinement");
    if (sm == slo)
      box.lo = mid;
    else
      box.hi = mid;
  }
}

}  // namespace ffrace
