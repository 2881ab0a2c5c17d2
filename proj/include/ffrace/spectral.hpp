#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "ffrace/int_factor.hpp"
#include "ffrace/int_poly.hpp"
#include "ffrace/interval.hpp"
#include "ffrace/roots.hpp"
#include "ffrace/zeta.hpp"

namespace ffrace {

// ---------- small number-theoretic helpers ----------

inline std::int64_t euler_phi(std::int64_t n) {
  require(n >= 1, errc::bad_input, "phi needs n >= 1");
  std::int64_t r = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    r -= r / p;
    while (n % p == 0) n /= p;
  }
  if (n > 1) r -= r / n;
  return r;
}

// All d >= 1 with phi(d) <= bound, ascending. The scan range is generous:
// phi(d) >= sqrt(d/2) for every d, so nothing qualifies past 2*bound^2.
inline std::vector<std::int64_t> phi_bounded(std::int64_t bound) {
  std::vector<std::int64_t> out;
  if (bound < 1) return out;
  for (std::int64_t d = 1; d <= 6 * bound * bound; ++d)
    if (euler_phi(d) <= bound) out.push_back(d);
  return out;
}

inline PolyZ zpow(const PolyZ& a, std::int64_t n) {
  PolyZ r = zone();
  for (std::int64_t i = 0; i < n; ++i) r = zmul(r, a);
  return r;
}

// m-th cyclotomic polynomial via prod_{d | m} (x^d - 1)^{mu(m/d)}.
inline PolyZ cyclotomic(std::int64_t m) {
  require(m >= 1, errc::bad_input, "cyclotomic index must be positive");
  auto xk_minus_1 = [](std::int64_t k) {
    PolyZ p;
    p.c.assign(k + 1, 0);
    p.c[0] = -1;
    p.c[k] = 1;
    return p;
  };
  auto moebius = [](std::int64_t n) -> int {
    int m2 = 1;
    for (std::int64_t p = 2; p * p <= n; ++p) {
      if (n % p) continue;
      n /= p;
      if (n % p == 0) return 0;
      m2 = -m2;
    }
    if (n > 1) m2 = -m2;
    return m2;
  };
  PolyZ num = zone(), den = zone();
  for (std::int64_t d = 1; d <= m; ++d) {
    if (m % d) continue;
    int mu = moebius(m / d);
    if (mu == 1) num = zmul(num, xk_minus_1(d));
    if (mu == -1) den = zmul(den, xk_minus_1(d));
  }
  return zdiv_exact(num, den);
}

// Lift a real model h back to its symplectic polynomial
// sum_k h_k T^(deg h - k) (T^2 + q)^k of degree 2 deg h.
inline PolyZ symplectic_lift(const PolyZ& h, std::int64_t q) {
  std::int64_t g = deg(h);
  require(g >= 0, errc::bad_input, "cannot lift the zero polynomial");
  PolyZ acc = zzero();
  PolyZ tsq_q = zpoly_i({0, 0, 1});
  tsq_q.c[0] = q;
  for (std::int64_t k = 0; k <= g; ++k) {
    if (h.c[k] == 0) continue;
    PolyZ term = zshift(zpow(tsq_q, k), g - k);
    acc = zadd(acc, zscale(term, h.c[k]));
  }
  return acc;
}

// C(x) = prod over roots beta of Lj, gamma of Li of (x - gamma/beta), up to a
// constant: the monic-normalized polynomial whose roots are all ratios
// root(Li)/root(Lj). Computed as Res_y(Lj(y), Li(x y)) by interpolation.
inline PolyZ ratio_poly(const PolyZ& Li, const PolyZ& Lj) {
  require(is_monic(Li) && is_monic(Lj), errc::bad_input,
          "ratio_poly expects monic inputs");
  require(zeval(Li, 0) != 0 && zeval(Lj, 0) != 0, errc::bad_input,
          "ratio_poly expects nonzero roots");
  const std::int64_t n = deg(Li) * deg(Lj);
  std::vector<Q> xs, ys;
  xs.reserve(n + 1);
  ys.reserve(n + 1);
  for (std::int64_t v = 1; v <= n + 1; ++v) {
    PolyZ scaled = Li;
    Z vp = 1;
    for (auto& c : scaled.c) {
      c *= vp;
      vp *= v;
    }
    xs.emplace_back(v);
    ys.emplace_back(resultant_int(Lj, scaled));
  }
  // Newton divided differences, exact over Q
  std::vector<Q> dd = ys;
  for (std::size_t lvl = 1; lvl < dd.size(); ++lvl)
    for (std::size_t t = dd.size() - 1; t >= lvl; --t)
      dd[t] = (dd[t] - dd[t - 1]) / (xs[t] - xs[t - lvl]);
  std::vector<Q> acc{dd.back()};
  for (std::size_t t = dd.size() - 1; t-- > 0;) {
    // acc = acc*(x - xs[t]) + dd[t]
    acc.insert(acc.begin(), Q(0));
    for (std::size_t k = 0; k + 1 < acc.size(); ++k) acc[k] -= xs[t] * acc[k + 1];
    acc[0] += dd[t];
  }
  PolyZ out;
  out.c.reserve(acc.size());
  for (auto& c : acc) {
    c.canonicalize();
    require(c.get_den() == 1, errc::internal,
            "ratio polynomial interpolation left a denominator");
    out.c.push_back(c.get_num());
  }
  trim(out);
  // only the root set matters downstream; drop the resultant's scalar
  return zprimitive(out);
}

inline Z zpow_i64(std::int64_t base, std::int64_t e) {
  Z r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base),
                static_cast<unsigned long>(e));
  return r;
}

// ---------- report data ----------

// One inverse-root class: a conjugate pair sqrt(q) e^{+-i theta} of the
// symplectic polynomial, represented by s = 2 sqrt(q) cos(theta).
struct AngleClass {
  PolyZ minpoly;                   // irreducible factor of h_red with root s
  std::size_t factor_index = 0;    // classes of one factor share this
  std::int64_t mult = 0;           // multiplicity in h_red
  RootBox box;                     // certified enclosure of s
  std::int64_t rational_order = 0; // minimal d with d*theta in pi*Z; 0: none
  std::int64_t rational_numer = 0; // theta = numer*pi/order when order > 0
};

// A proved minimal collision d*(theta_i -+ theta_j) = 2*pi*k between two
// distinct classes.
struct PairRelation {
  std::size_t i = 0, j = 0;
  bool sum = false;            // false: theta_i - theta_j, true: theta_i + theta_j
  std::int64_t order = 0;      // minimal such d
  std::int64_t two_pi_mult = 0;  // the integer k
};

struct SpectralReport {
  std::int64_t q = 0;
  std::int64_t g = 0;
  std::int64_t m0 = 0, mpi = 0;  // multiplicities of theta = 0 and theta = pi
  PolyZ P;                       // the symplectic input
  PolyZ P_red;                   // trivial classes stripped
  PolyZ h_red;                   // real model of P_red
  std::vector<AngleClass> classes;  // theta strictly ascending in (0, pi)
  std::vector<PairRelation> pair_relations;
  // True when the reduced polynomial has a repeated inverse root or when some
  // power map gamma -> gamma^d collides two of its roots; degenerate_witness
  // is the smallest such d (0 when nondegenerate).
  bool degenerate = false;
  std::int64_t degenerate_witness = 0;
  // lcm of the orders of all root-of-unity ratios among the nontrivial
  // inverse roots, folded with 2 (the sign period); 1 when there are none.
  std::int64_t torsion_modulus = 1;

  std::size_t num_classes() const { return classes.size(); }
  // Torsion among the angle classes themselves (a rational angle or a proved
  // pair collision). Repeated factors alone do not count.
  bool angle_torsion() const {
    if (!pair_relations.empty()) return true;
    for (const AngleClass& cls : classes)
      if (cls.rational_order > 0) return true;
    return false;
  }
};

// Certified enclosure of theta = acos(s / (2 sqrt q)); refines the stored box
// as a side effect so later calls start from the sharper enclosure.
inline Interval class_theta(AngleClass& cls, std::int64_t q, mpfr_prec_t prec) {
  refine_root(cls.minpoly, cls.box, static_cast<int>(prec) + 8);
  Interval s = cls.box.exact ? Interval::from_q(cls.box.lo, prec)
                             : Interval::from_q_pair(cls.box.lo, cls.box.hi, prec);
  Interval den = Interval::from_long(2, prec) * Interval::sqrt_long(q, prec);
  return acos_clamped(div_nonzero(s, den));
}

inline Interval class_theta(SpectralReport& rep, std::size_t idx,
                            mpfr_prec_t prec) {
  return class_theta(rep.classes.at(idx), rep.q, prec);
}

// Certified enclosures of every class angle, theta ascending, each of width
// at most 2^{-precision_bits/2}, paired with the class multiplicity.
inline std::vector<std::pair<Interval, std::int64_t>> numeric_angles(
    SpectralReport& rep, int precision_bits = 64) {
  require(precision_bits >= 2, errc::bad_input, "need at least 2 bits");
  Q tol{Z(1), zpow_i64(2, precision_bits / 2)};
  tol.canonicalize();
  std::vector<std::pair<Interval, std::int64_t>> out;
  out.reserve(rep.classes.size());
  for (AngleClass& cls : rep.classes) {
    bool done = false;
    for (mpfr_prec_t prec = std::max<mpfr_prec_t>(Interval::kDefaultPrec,
                                                  2 * precision_bits);
         prec <= Interval::kMaxPrec && !done; prec *= 2) {
      Interval th = class_theta(cls, rep.q, prec);
      if (th.hi_q() - th.lo_q() < tol) {
        out.emplace_back(th, cls.mult);
        done = true;
      }
    }
    require(done, errc::precision_exhausted,
            "could not certify an angle to the requested width");
  }
  return out;
}

namespace detail {

// Integer candidates inside an interval, via exact rational endpoints.
struct IntegerScan {
  bool empty = false;   // certified: no integer inside
  bool unique = false;  // exactly one candidate
  Z k;
};

inline IntegerScan scan_integer(const Interval& x) {
  Q lo = x.lo_q(), hi = x.hi_q();
  Z klo, khi;
  mpz_cdiv_q(klo.get_mpz_t(), lo.get_num().get_mpz_t(),
             lo.get_den().get_mpz_t());
  mpz_fdiv_q(khi.get_mpz_t(), hi.get_num().get_mpz_t(),
             hi.get_den().get_mpz_t());
  IntegerScan r;
  if (klo > khi) {
    r.empty = true;
  } else if (klo == khi) {
    r.unique = true;
    r.k = klo;
  }
  return r;
}

// Exact rational lower bound for the minimal root separation of a squarefree
// integer polynomial C (Mahler): sep > sqrt(3 |disc|) n^{-(n+2)/2} l2^{-(n-1)}.
inline Q separation_lower_bound(const PolyZ& C) {
  const std::int64_t n = deg(C);
  require(n >= 2, errc::internal, "separation bound needs degree >= 2");
  Z disc = discriminant_int(C);
  require(disc != 0, errc::internal, "separation bound needs squarefree input");
  Z three_disc = 3 * abs(disc);
  Z num;
  mpz_sqrt(num.get_mpz_t(), three_disc.get_mpz_t());  // floor: lower bound
  Z l2sq = 0;
  for (const auto& c : C.c) l2sq += c * c;
  Z l2;
  mpz_sqrt(l2.get_mpz_t(), l2sq.get_mpz_t());
  l2 += 1;  // upper bound for the 2-norm
  Z npow;   // upper bound for n^{(n+2)/2}
  if (n % 2 == 0) {
    mpz_ui_pow_ui(npow.get_mpz_t(), static_cast<unsigned long>(n),
                  static_cast<unsigned long>((n + 2) / 2));
  } else {
    mpz_ui_pow_ui(npow.get_mpz_t(), static_cast<unsigned long>(n),
                  static_cast<unsigned long>((n + 1) / 2));
    Z rt;
    mpz_sqrt(rt.get_mpz_t(), Z(n).get_mpz_t());
    npow *= (rt + 1);
  }
  Z den = npow;
  for (std::int64_t i = 0; i + 1 < n; ++i) den *= l2;
  Q out(num, den);
  out.canonicalize();
  return out;
}

// Upper bound for q^{m/2} as an exact rational.
inline Z sqrt_pow_upper(std::int64_t q, std::int64_t m) {
  Z qm = zpow_i64(q, m);
  Z r;
  mpz_sqrt(r.get_mpz_t(), qm.get_mpz_t());
  return r + 1;
}

}  // namespace detail

// ---------- the analysis ----------

namespace detail {

struct FactorInfo {
  PolyZ F;            // irreducible factor of h_red
  std::int64_t mult;
  PolyZ L;            // symplectic lift
  std::int64_t rational_order = 0;
};

// minimal d with d*theta in pi*Z for (all conjugate) roots of the lift L,
// 0 when proven irrational. Exact: tests whether every inverse root gamma
// satisfies gamma^{2d} = q^d.
inline std::int64_t rational_angle_order(const PolyZ& L, std::int64_t q) {
  const std::int64_t degree_bound = deg(L);
  for (std::int64_t m : phi_bounded(degree_bound)) {
    PolyZ pw = power_transform(L, 2 * m);
    PolyZ lin = zpoly_i({0, 1});
    lin.c[0] = -zpow_i64(q, m);
    PolyZ target = zpow(lin, deg(L));
    if (is_zero(zsub(pw, target))) return m;
  }
  return 0;
}

}  // namespace detail

// Multiplicities of the inverse roots +sqrt(q) and -sqrt(q) (for non-square q
// the quadratic T^2 - q carries one of each), plus the stripped polynomial.
// Accepts any polynomial, not just symplectic ones.
struct TrivialZeros {
  std::int64_t m0 = 0, mpi = 0;
  PolyZ reduced;
};

inline TrivialZeros trivial_zero_multiplicities(const PolyZ& P,
                                                std::int64_t q) {
  require(q >= 2, errc::bad_input, "q must be at least 2");
  TrivialZeros tz;
  PolyZ red = P;
  trim(red);
  require(deg(red) >= 0, errc::bad_input, "zero polynomial has no root data");
  std::int64_t s0 = detail::isqrt_i64(q);
  if (s0 * s0 == q) {
    for (const auto& [sign, target] :
         {std::pair<int, std::int64_t*>{+1, &tz.m0},
          std::pair<int, std::int64_t*>{-1, &tz.mpi}}) {
      PolyZ lin = zpoly_i({-sign * s0, 1});
      for (;;) {
        auto [quo, rem] = zdivrem_unit(red, lin);
        if (!is_zero(rem)) break;
        red = quo;
        ++*target;
      }
    }
  } else {
    PolyZ quad = zpoly_i({0, 0, 1});
    quad.c[0] = -q;
    for (;;) {
      auto [quo, rem] = zdivrem_unit(red, quad);
      if (!is_zero(rem)) break;
      red = quo;
      ++tz.m0;
      ++tz.mpi;
    }
  }
  tz.reduced = red;
  return tz;
}

inline SpectralReport spectral_analysis(const PolyZ& P_in, std::int64_t q) {
  PolyZ P = P_in;
  trim(P);
  require(q >= 2, errc::bad_input, "q must be at least 2");
  require(deg(P) >= 0 && deg(P) % 2 == 0, errc::not_symplectic,
          "polynomial degree must be even");
  require(deg(P) == 0 ? P.c[0] == 1 : is_q_symplectic(P, q),
          errc::not_symplectic, "input is not q-symplectic");

  SpectralReport rep;
  rep.q = q;
  rep.g = deg(P) / 2;
  rep.P = P;

  // strip the theta = 0 and theta = pi classes
  TrivialZeros tz = trivial_zero_multiplicities(P, q);
  rep.m0 = tz.m0;
  rep.mpi = tz.mpi;
  PolyZ red = tz.reduced;
  require(rep.m0 % 2 == 0 && rep.mpi % 2 == 0, errc::internal,
          "trivial multiplicities of a symplectic polynomial must be even");
  rep.P_red = red;
  require(deg(red) == 0 ? red.c[0] == 1 : is_q_symplectic(red, q),
          errc::internal, "reduced polynomial lost symplecticity");
  rep.h_red = deg(red) == 0 ? zone() : real_weil(red, q);

  if (deg(rep.h_red) < 1) return rep;

  // factor the real model; validate every root is real inside the critical
  // window (the function-field Riemann hypothesis for this polynomial)
  std::vector<detail::FactorInfo> fac;
  for (const ZFactor& zf : factor_int(rep.h_red)) {
    detail::FactorInfo fi;
    fi.F = zf.poly;
    fi.mult = zf.mult;
    require(sign_at_sqrt(fi.F, q, 0, 2) != 0 &&
                sign_at_sqrt(fi.F, q, 0, -2) != 0,
            errc::not_symplectic,
            "inverse root at the boundary of the critical window");
    SturmChain ch = sturm_chain(fi.F);
    require(count_roots_sym_sqrt(ch, q, 2) == deg(fi.F), errc::not_symplectic,
            "inverse roots found off the critical circle");
    fi.L = symplectic_lift(fi.F, q);
    fi.rational_order = detail::rational_angle_order(fi.L, q);
    fac.push_back(std::move(fi));
  }

  // isolate the roots; one class per root, multiplicities inherited
  for (std::size_t fidx = 0; fidx < fac.size(); ++fidx) {
    for (RootBox& box : isolate_real_roots(fac[fidx].F)) {
      AngleClass cls;
      cls.minpoly = fac[fidx].F;
      cls.factor_index = fidx;
      cls.mult = fac[fidx].mult;
      cls.box = box;
      cls.rational_order = fac[fidx].rational_order;
      refine_root(cls.minpoly, cls.box, 64);
      rep.classes.push_back(std::move(cls));
    }
  }

  // separate enclosures across factors, then order by descending s
  // (ascending theta)
  for (int bits = 64; bits <= 1 << 14; bits *= 2) {
    bool overlap = false;
    for (std::size_t i = 0; i < rep.classes.size(); ++i)
      for (std::size_t j = i + 1; j < rep.classes.size(); ++j) {
        AngleClass &a = rep.classes[i], &b = rep.classes[j];
        if (a.box.hi < b.box.lo || b.box.hi < a.box.lo) continue;
        overlap = true;
        refine_root(a.minpoly, a.box, bits * 2);
        refine_root(b.minpoly, b.box, bits * 2);
      }
    if (!overlap) break;
    require(bits * 2 <= 1 << 14, errc::precision_exhausted,
            "could not separate distinct inverse-root classes");
  }
  std::sort(rep.classes.begin(), rep.classes.end(),
            [](const AngleClass& a, const AngleClass& b) {
              return a.box.lo > b.box.lo;
            });

  // pin the numerator of every rational angle: theta = a*pi/order
  for (AngleClass& cls : rep.classes) {
    if (cls.rational_order == 0) continue;
    const std::int64_t r = cls.rational_order;
    bool pinned = false;
    for (mpfr_prec_t prec = Interval::kDefaultPrec;
         prec <= Interval::kMaxPrec && !pinned; prec *= 2) {
      Interval th = class_theta(cls, q, prec);
      Interval ratio = div_nonzero(scale_z(th, Z(r)), Interval::pi(prec));
      detail::IntegerScan scan = detail::scan_integer(ratio);
      if (scan.unique) {
        cls.rational_numer = scan.k.get_si();
        pinned = true;
      }
      require(!scan.empty, errc::internal,
              "rational angle lost its integer numerator");
    }
    require(pinned, errc::precision_exhausted,
            "could not pin a rational angle numerator");
    require(cls.rational_numer > 0 && cls.rational_numer < r &&
                std::gcd(cls.rational_numer, r) == 1,
            errc::internal, "rational angle numerator out of range");
  }

  // ---- pair relations ----

  // cache of candidate collision orders per factor pair
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::int64_t>>
      order_cache;
  auto candidate_orders = [&](std::size_t fi,
                              std::size_t fj) -> const std::vector<std::int64_t>& {
    auto key = std::minmax(fi, fj);
    auto it = order_cache.find(key);
    if (it != order_cache.end()) return it->second;
    const PolyZ& Li = fac[key.first].L;
    const PolyZ& Lj = fac[key.second].L;
    PolyZ C = ratio_poly(Li, Lj);
    if (key.first == key.second) {
      PolyZ unit = zpow(zpoly_i({-1, 1}), deg(Li));
      C = zdiv_exact(C, unit);
    }
    std::vector<std::int64_t> orders;
    if (deg(C) >= 1) {
      for (std::int64_t m : phi_bounded(deg(C))) {
        if (m == 1) continue;  // distinct classes never have ratio 1
        PolyZ phi_m = cyclotomic(m);
        if (deg(phi_m) > deg(C)) continue;
        if (deg(zgcd(C, phi_m)) >= 1) orders.push_back(m);
      }
    }
    return order_cache.emplace(key, std::move(orders)).first->second;
  };

  // certified decision: does m*(theta_i -+ theta_j) land in 2*pi*Z?
  // Returns {collides, k}.
  auto pin_pair = [&](std::size_t i, std::size_t j, bool sum_type,
                      std::int64_t m) -> std::pair<bool, std::int64_t> {
    AngleClass &ci = rep.classes[i], &cj = rep.classes[j];
    // cache the collision polynomial data per (factor pair, m)
    for (mpfr_prec_t prec = Interval::kDefaultPrec;
         prec <= Interval::kMaxPrec; prec *= 2) {
      Interval thi = class_theta(ci, q, prec);
      Interval thj = class_theta(cj, q, prec);
      Interval delta = scale_z(sum_type ? thi + thj : thi - thj, Z(m));
      Interval two_pi = scale_z(Interval::pi(prec), Z(2));
      detail::IntegerScan scan = detail::scan_integer(div_nonzero(delta, two_pi));
      if (scan.empty) return {false, 0};
      if (!scan.unique) continue;  // too wide, escalate
      // candidate k: prove or refute |gamma_i^m - (gamma_j or conj)^m| = 0
      Interval resid = delta - scale_z(two_pi, scan.k);
      Q w = std::max(abs(resid.lo_q()), abs(resid.hi_q()));
      Q lhs = Q(detail::sqrt_pow_upper(q, m)) * w;
      PolyZ Am = power_transform(fac[ci.factor_index].L, m);
      PolyZ Cm = ci.factor_index == cj.factor_index
                     ? Am
                     : zmul(Am, power_transform(fac[cj.factor_index].L, m));
      PolyZ Csf = zdiv_exact(Cm, zgcd(Cm, zderiv(Cm)));
      if (deg(Csf) <= 1) return {true, scan.k.get_si()};
      Q sep = detail::separation_lower_bound(Csf);
      if (lhs < sep) return {true, scan.k.get_si()};
      // not yet separated: escalate precision
    }
    fail(errc::precision_exhausted, "pair collision undecided at max precision");
  };

  for (std::size_t i = 0; i < rep.classes.size(); ++i) {
    for (std::size_t j = i + 1; j < rep.classes.size(); ++j) {
      const AngleClass &ci = rep.classes[i], &cj = rep.classes[j];
      const bool ri = ci.rational_order > 0, rj = cj.rational_order > 0;
      if (ri != rj) continue;  // one rational, one irrational: impossible
      if (ri && rj) {
        // exact arithmetic on theta = a*pi/r
        const std::int64_t ai = ci.rational_numer, ra = ci.rational_order;
        const std::int64_t aj = cj.rational_numer, rb = cj.rational_order;
        const std::int64_t R = ra * rb;
        for (bool sum_type : {false, true}) {
          std::int64_t x = sum_type ? ai * rb + aj * ra : ai * rb - aj * ra;
          require(x != 0, errc::internal, "coincident rational angles");
          std::int64_t gg = std::gcd(std::abs(x), 2 * R);
          std::int64_t d = 2 * R / gg;
          std::int64_t k = x / gg;
          rep.pair_relations.push_back(PairRelation{i, j, sum_type, d, k});
        }
        continue;
      }
      // both irrational
      for (std::int64_t m : candidate_orders(ci.factor_index, cj.factor_index)) {
        bool found = false;
        for (bool sum_type : {false, true}) {
          auto [hit, k] = pin_pair(i, j, sum_type, m);
          if (hit) {
            rep.pair_relations.push_back(PairRelation{i, j, sum_type, m, k});
            found = true;
            break;
          }
        }
        if (found) break;  // minimal order found for this pair
      }
    }
  }

  // degeneracy, its smallest witness order, and the torsion modulus
  Z M = 1;
  bool torsion = false;
  auto note_witness = [&rep](std::int64_t d) {
    if (rep.degenerate_witness == 0 || d < rep.degenerate_witness)
      rep.degenerate_witness = d;
  };
  for (const AngleClass& cls : rep.classes) {
    if (cls.mult >= 2) note_witness(1);  // gamma^1 already collides a copy
    if (cls.rational_order > 0) {
      torsion = true;
      note_witness(cls.rational_order);  // gamma^r meets its conjugate
      // e^{i theta} with theta = a pi / r has order 2r / gcd(a, 2)
      std::int64_t ord =
          2 * cls.rational_order / std::gcd(cls.rational_numer, std::int64_t{2});
      mpz_lcm_ui(M.get_mpz_t(), M.get_mpz_t(), static_cast<unsigned long>(ord));
    }
  }
  for (const PairRelation& pr : rep.pair_relations) {
    torsion = true;
    note_witness(pr.order);
    mpz_lcm_ui(M.get_mpz_t(), M.get_mpz_t(),
               static_cast<unsigned long>(pr.order));
  }
  if (torsion) mpz_lcm_ui(M.get_mpz_t(), M.get_mpz_t(), 2ul);
  rep.degenerate = rep.degenerate_witness != 0;
  require(M.fits_slong_p(), errc::too_large, "torsion modulus overflow");
  rep.torsion_modulus = M.get_si();
  return rep;
}

inline SpectralReport spectral_analysis(const WeilData& w) {
  return spectral_analysis(w.P, w.q);
}

// Independent degeneracy probe: scans d in the given set and reports whether
// any power map collides two inverse-root classes, via a discriminant test on
// the product of distinct lifted factors. Used as a cross-check.
inline bool degenerate_by_disc_scan(const SpectralReport& rep,
                                    const std::vector<std::int64_t>& ds) {
  std::vector<PolyZ> lifts;
  std::vector<std::size_t> seen;
  for (const AngleClass& cls : rep.classes) {
    if (std::find(seen.begin(), seen.end(), cls.factor_index) != seen.end())
      continue;
    seen.push_back(cls.factor_index);
    lifts.push_back(symplectic_lift(cls.minpoly, rep.q));
  }
  if (lifts.empty()) return false;
  PolyZ rad = zone();
  for (const PolyZ& L : lifts) rad = zmul(rad, L);
  if (deg(rad) < 2) return false;
  for (std::int64_t d : ds) {
    PolyZ pw = power_transform(rad, d);
    if (discriminant_int(pw) == 0) return true;
  }
  return false;
}

}  // namespace ffrace
