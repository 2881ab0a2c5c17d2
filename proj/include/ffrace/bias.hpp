#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ffrace/li.hpp"
#include "ffrace/sqrtq.hpp"

namespace ffrace {

// ---------- rigorous trig enclosures ----------

// Enclosure of cos over the interval: endpoint values rounded outward, plus
// the extrema at any multiple of pi that may lie inside.
inline Interval cos_interval(const Interval& x) {
  const mpfr_prec_t prec = x.prec();
  Interval r(prec);
  mpfr_t t;
  mpfr_init2(t, prec);
  mpfr_cos(r.lo_mut(), x.lo(), MPFR_RNDD);
  mpfr_cos(t, x.hi(), MPFR_RNDD);
  if (mpfr_cmp(t, r.lo()) < 0) mpfr_set(r.lo_mut(), t, MPFR_RNDD);
  mpfr_cos(r.hi_mut(), x.lo(), MPFR_RNDU);
  mpfr_cos(t, x.hi(), MPFR_RNDU);
  if (mpfr_cmp(t, r.hi()) > 0) mpfr_set(r.hi_mut(), t, MPFR_RNDU);
  mpfr_clear(t);

  Interval piI = Interval::pi(prec);
  Interval band = div_nonzero(x, piI);
  Z klo, khi;
  {
    Q blo = band.lo_q(), bhi = band.hi_q();
    mpz_fdiv_q(klo.get_mpz_t(), blo.get_num().get_mpz_t(),
               blo.get_den().get_mpz_t());
    mpz_cdiv_q(khi.get_mpz_t(), bhi.get_num().get_mpz_t(),
               bhi.get_den().get_mpz_t());
  }
  if (khi - klo > 16) {
    // hopelessly wide input: fall back to the full range
    Interval full(prec);
    mpfr_set_si(full.lo_mut(), -1, MPFR_RNDD);
    mpfr_set_si(full.hi_mut(), 1, MPFR_RNDU);
    return full;
  }
  for (Z k = klo; k <= khi; ++k) {
    Interval kpi = scale_z(piI, k);
    if (mpfr_cmp(kpi.lo(), x.hi()) > 0) continue;  // certainly right of x
    if (mpfr_cmp(kpi.hi(), x.lo()) < 0) continue;  // certainly left of x
    if (mpz_even_p(k.get_mpz_t()))
      mpfr_set_si(r.hi_mut(), 1, MPFR_RNDU);
    else
      mpfr_set_si(r.lo_mut(), -1, MPFR_RNDD);
  }
  return r;
}

inline Interval sin_interval(const Interval& x) {
  Interval piI = Interval::pi(x.prec());
  Interval half(x.prec());
  mpfr_div_2ui(half.lo_mut(), piI.lo(), 1, MPFR_RNDD);
  mpfr_div_2ui(half.hi_mut(), piI.hi(), 1, MPFR_RNDU);
  return cos_interval(half - x);
}

// ---------- exact power sums and delta values ----------

namespace detail {

// Remainder of a by the monic p; stays in Z[T] because p is monic.
inline PolyZ zmod_monic(PolyZ a, const PolyZ& p) {
  require(is_monic(p), errc::internal, "monic modulus required");
  const std::int64_t dp = deg(p);
  while (deg(a) >= dp) {
    const std::int64_t sh = deg(a) - dp;
    Z c = a.c.back();
    for (std::int64_t i = 0; i <= dp; ++i) a.c[sh + i] -= c * p.c[i];
    trim(a);
  }
  return a;
}

inline PolyZ zmulmod_monic(const PolyZ& a, const PolyZ& b, const PolyZ& p) {
  return zmod_monic(zmul(a, b), p);
}

// T^n mod p by binary powering.
inline PolyZ tpow_mod_monic(std::int64_t n, const PolyZ& p) {
  PolyZ base = zmod_monic(zpoly_i({0, 1}), p);
  PolyZ acc = zmod_monic(zone(), p);
  std::int64_t e = n;
  while (e > 0) {
    if (e & 1) acc = zmulmod_monic(acc, base, p);
    base = zmulmod_monic(base, base, p);
    e >>= 1;
  }
  return acc;
}

}  // namespace detail

// Incremental exact power sums t_n of a monic even-degree P together with
// the derived exact values and zero tests of
//   Delta(n) = (1 + (-1)^n)/2 + t_n / q^{n/2}.
class DeltaEvaluator {
 public:
  DeltaEvaluator(PolyZ P, std::int64_t q) : P_(std::move(P)), q_(q) {
    require(is_monic(P_), errc::bad_input, "monic polynomial required");
    require(deg(P_) % 2 == 0, errc::bad_degree, "even degree required");
    n_ = deg(P_);
    t_ = newton_power_sums(P_, n_);  // seeds t_0..t_{2g}
  }

  std::int64_t degree() const { return n_; }
  std::int64_t q() const { return q_; }
  const PolyZ& poly() const { return P_; }

  const Z& t(std::int64_t n) {
    require(n >= 0, errc::bad_input, "negative index");
    extend(n);
    return t_[static_cast<std::size_t>(n)];
  }

  // t_n without growing the cache to n: binary powering of T^n modulo P,
  // then t_n = sum_i b_i t_i over the seed power sums.
  Z t_isolated(std::int64_t n) {
    if (n <= 2 * n_ + 2) return t(n);
    PolyZ b = detail::tpow_mod_monic(n, P_);
    Z acc = 0;
    for (std::size_t i = 0; i < b.c.size(); ++i) acc += b.c[i] * t_[i];
    return acc;
  }

  SqrtQNumber value(std::int64_t n) { return value_from_t(n, t(n)); }
  SqrtQNumber value_isolated(std::int64_t n) {
    return value_from_t(n, t_isolated(n));
  }

  bool is_zero(std::int64_t n) { return zero_from_t(n, t(n)); }
  bool is_zero_isolated(std::int64_t n) {
    return zero_from_t(n, t_isolated(n));
  }

 private:
  SqrtQNumber value_from_t(std::int64_t n, const Z& tn) const {
    if (n % 2 == 0) {
      Q a(tn, zpow_i64(q_, n / 2));
      a.canonicalize();
      return SqrtQNumber::rational(q_, a + 1);
    }
    Q b(tn, zpow_i64(q_, (n + 1) / 2));
    b.canonicalize();
    return SqrtQNumber(q_, Q(0), b);
  }
  bool zero_from_t(std::int64_t n, const Z& tn) const {
    if (n % 2 != 0) return tn == 0;
    return tn == -zpow_i64(q_, n / 2);
  }

  void extend(std::int64_t n) {
    // recurrence from the coefficients: t_k = -sum_{i=1}^{2g} a_{2g-i} t_{k-i}
    while (static_cast<std::int64_t>(t_.size()) <= n) {
      const std::int64_t k = static_cast<std::int64_t>(t_.size());
      Z acc = 0;
      for (std::int64_t i = 1; i <= n_; ++i)
        acc -= P_.c[static_cast<std::size_t>(n_ - i)] *
               t_[static_cast<std::size_t>(k - i)];
      t_.push_back(acc);
    }
  }

  PolyZ P_;
  std::int64_t q_ = 0;
  std::int64_t n_ = 0;  // degree = 2g
  std::vector<Z> t_;
};

// Exact power sums t_1..t_N of the roots of a monic P.
inline std::vector<Z> power_sums(const PolyZ& P, std::int64_t N) {
  require(N >= 1, errc::bad_input, "need N >= 1");
  std::vector<Z> t = newton_power_sums(P, N);
  return std::vector<Z>(t.begin() + 1, t.end());
}

inline SqrtQNumber delta_exact(const PolyZ& P, std::int64_t q, std::int64_t n) {
  DeltaEvaluator ev(P, q);
  return ev.value(n);
}

// ---------- exact zero density ----------

struct ZeroDensity {
  Q density{0};
  std::vector<std::int64_t> classes;  // residues r mod modulus with the
                                      // whole subsequence identically zero
  std::int64_t modulus = 2;
};

// Identically-zero residue classes of Delta. Each decimated subsequence is
// an exponential sum in at most 2g+2 distinct nonzero ratios (the angle
// spectrum plus the two sign carriers), so vanishing of 2g+2 consecutive
// terms is equivalent to vanishing of the whole class; zeros off these
// classes form a finite set of density zero. The modulus folds the sign
// period 2 into the angle torsion, so parity-driven vanishing is caught
// even when the angle spectrum itself is torsion-free.
inline ZeroDensity zero_density(SpectralReport& rep) {
  ZeroDensity out;
  const std::int64_t M = std::lcm<std::int64_t>(2, rep.torsion_modulus);
  out.modulus = M;
  const std::int64_t terms = 2 * rep.g + 2;
  DeltaEvaluator ev(rep.P, rep.q);
  for (std::int64_t r = 0; r < M; ++r) {
    bool all = true;
    for (std::int64_t j = 0; j < terms && all; ++j)
      all = ev.is_zero(r + M * j);
    if (all) out.classes.push_back(r);
  }
  out.density = Q(static_cast<long>(out.classes.size()), static_cast<long>(M));
  out.density.canonicalize();
  return out;
}

inline ZeroDensity zero_density(const PolyZ& P, std::int64_t q) {
  SpectralReport rep = spectral_analysis(P, q);
  return zero_density(rep);
}

// ---------- density reports ----------

enum class DensityMode { Auto, ExactPeriodic, Empirical, MonteCarlo };

inline const char* density_mode_name(DensityMode m) {
  switch (m) {
    case DensityMode::Auto: return "auto";
    case DensityMode::ExactPeriodic: return "exact-periodic";
    case DensityMode::Empirical: return "empirical";
    default: return "monte-carlo";
  }
}

struct DensityReport {
  DensityMode mode = DensityMode::ExactPeriodic;
  Q pos{0}, neg{0}, zero{0};  // exact in periodic mode, count/N otherwise
  double half_width = 0.0;    // 0 exact, 3/sqrt(N) for estimates
  std::int64_t modulus = 0;   // period used (periodic and empirical modes)
  std::int64_t samples = 0;
  std::uint64_t seed = 0;  // Monte Carlo only
  std::vector<std::int64_t> sporadic_zeros;  // empirical zeros off the known
                                             // residue classes

  double dens_pos() const { return pos.get_d(); }
  double dens_neg() const { return neg.get_d(); }
  double dens_zero() const { return zero.get_d(); }
};

namespace detail {

// Streaming evaluator of Delta(n) with 128-bit fixed-point phase
// accumulators: each step adds theta/(2 pi) rounded to 2^-128 turns, so the
// accumulated phase error stays below N * 2^-129 turns plus the rounding of
// the cosine itself. Values within `margin` of zero must be recertified
// exactly by the caller.
class DeltaScan {
 public:
  explicit DeltaScan(SpectralReport& rep, double margin = 1e-9)
      : margin_(margin) {
    base_ = static_cast<double>(rep.m0) + 0.5;
    amp_pi_ = static_cast<double>(rep.mpi) + 0.5;
    auto angles = numeric_angles(rep, 260);
    for (auto& [th, mult] : angles) {
      Interval two_pi = scale_z(Interval::pi(th.prec()), Z(2));
      Interval u = div_nonzero(th, two_pi);
      Q mid = (u.lo_q() + u.hi_q()) / 2;
      Z scaled = round_q(mid * Q(zpow_i64(2, 128)));
      require(scaled >= 0 && mpz_sizeinbase(scaled.get_mpz_t(), 2) <= 128,
              errc::internal, "phase outside the unit interval");
      Z hi = scaled >> 64;
      Z lo = scaled - (hi << 64);
      Osc o;
      o.step = (static_cast<unsigned __int128>(hi.get_ui()) << 64) |
               static_cast<unsigned __int128>(lo.get_ui());
      o.acc = 0;
      o.amp = 2.0 * static_cast<double>(mult);
      osc_.push_back(o);
    }
  }

  // value at the next n (call with n = 1, 2, ...); near_zero flags values
  // the float pass cannot separate from zero
  double advance(std::int64_t n, bool& near_zero) {
    double val = base_ + (n % 2 == 0 ? amp_pi_ : -amp_pi_);
    for (Osc& o : osc_) {
      o.acc += o.step;
      double frac =
          static_cast<double>(static_cast<std::uint64_t>(o.acc >> 75)) *
          0x1p-53;
      val += o.amp * std::cos(6.283185307179586476925286766559 * frac);
    }
    near_zero = std::fabs(val) < margin_;
    return val;
  }

  double margin() const { return margin_; }

 private:
  struct Osc {
    unsigned __int128 step = 0;
    unsigned __int128 acc = 0;
    double amp = 0;
  };
  double base_ = 0, amp_pi_ = 0, margin_ = 1e-9;
  std::vector<Osc> osc_;
};

}  // namespace detail

// Relation rows for the Monte Carlo subtorus: the proved generators,
// saturated with any further lattice-reduction candidates that pass exact
// verification.
inline ZMat sampling_relation_rows(SpectralReport& rep) {
  ZMat rows = verified_relation_rows(rep);
  ZMat H = hnf_rows(rows);
  for (const RelationVector& cand : find_candidate_relations(rep)) {
    ZRow row(cand.k.size() + 1);
    for (std::size_t j = 0; j < cand.k.size(); ++j) row[j] = cand.k[j];
    row[cand.k.size()] = cand.k0;
    if (in_row_span(H, row)) continue;
    if (verify_relation(rep, cand) != VerifyStatus::ExactVerified) continue;
    rows.push_back(row);
    H = hnf_rows(rows);
  }
  return rows;
}

inline DensityReport sign_densities(SpectralReport& rep, std::int64_t N,
                                    DensityMode mode = DensityMode::Auto,
                                    std::uint64_t seed = 0) {
  bool all_rational = true;
  for (const AngleClass& cls : rep.classes)
    if (cls.rational_order == 0) all_rational = false;

  if (mode == DensityMode::Auto)
    mode = all_rational ? DensityMode::ExactPeriodic : DensityMode::Empirical;

  DensityReport out;
  out.mode = mode;

  if (mode == DensityMode::ExactPeriodic) {
    require(all_rational, errc::bad_input,
            "exact periodic densities need a fully rational angle spectrum");
    const std::int64_t M = std::lcm<std::int64_t>(2, rep.torsion_modulus);
    DeltaEvaluator ev(rep.P, rep.q);
    long cpos = 0, cneg = 0, czero = 0;
    for (std::int64_t n = 1; n <= M; ++n) {
      const int s = ev.value(n).sign();
      if (s > 0)
        ++cpos;
      else if (s < 0)
        ++cneg;
      else
        ++czero;
    }
    out.pos = Q(cpos, static_cast<long>(M));
    out.neg = Q(cneg, static_cast<long>(M));
    out.zero = Q(czero, static_cast<long>(M));
    out.pos.canonicalize();
    out.neg.canonicalize();
    out.zero.canonicalize();
    out.modulus = M;
    out.samples = M;
    return out;
  }

  require(N >= 1000, errc::bad_input,
          "density estimates need at least 1000 samples");
  out.samples = N;
  out.half_width = 3.0 / std::sqrt(static_cast<double>(N));

  if (mode == DensityMode::Empirical) {
    ZeroDensity zd = zero_density(rep);
    std::vector<char> zero_res(static_cast<std::size_t>(zd.modulus), 0);
    for (std::int64_t r : zd.classes) zero_res[static_cast<std::size_t>(r)] = 1;
    detail::DeltaScan scan(rep);
    DeltaEvaluator ev(rep.P, rep.q);
    long cpos = 0, cneg = 0, czero = 0;
    for (std::int64_t n = 1; n <= N; ++n) {
      bool near = false;
      double val = scan.advance(n, near);
      if (zero_res[static_cast<std::size_t>(n % zd.modulus)]) {
        ++czero;  // proved identically-zero class
        continue;
      }
      if (!near) {
        if (val > 0)
          ++cpos;
        else
          ++cneg;
        continue;
      }
      // certify the borderline value exactly
      const int s = ev.value_isolated(n).sign();
      if (s == 0) {
        ++czero;
        out.sporadic_zeros.push_back(n);
      } else if (s > 0) {
        ++cpos;
      } else {
        ++cneg;
      }
    }
    out.pos = Q(cpos, static_cast<long>(N));
    out.neg = Q(cneg, static_cast<long>(N));
    out.zero = Q(czero, static_cast<long>(N));
    out.pos.canonicalize();
    out.neg.canonicalize();
    out.zero.canonicalize();
    out.modulus = zd.modulus;
    return out;
  }

  // Monte Carlo over the closure subtorus of (theta_1..theta_r, pi) cut out
  // by the verified relation lattice. The 2 pi row forces the pi coordinate
  // into {0, pi}, so the sign carrier stays exact in every sample.
  const std::size_t r = rep.classes.size();
  const std::size_t dim = r + 1;
  SmithForm sf = smith_normal_form(sampling_relation_rows(rep));
  require(sf.V.size() == dim, errc::internal, "subtorus dimension mismatch");
  // coordinate i is torsion (y_i a rational number of turns) when the Smith
  // diagonal pins it, free (uniform on the circle) otherwise
  std::vector<std::int64_t> order(dim, 0);
  for (std::size_t i = 0; i < sf.diag.size(); ++i) {
    require(sf.diag[i].fits_slong_p(), errc::too_large,
            "subtorus torsion too large");
    order[i] = sf.diag[i].get_si();
  }
  for (std::size_t i = 0; i < dim; ++i)
    if (order[i] == 0)
      require(sf.V[r][i] == 0, errc::internal,
              "free coordinate leaks into the sign carrier");

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double two_pi = 6.283185307179586476925286766559;
  const double base = static_cast<double>(rep.m0) + 0.5;
  const double amp_pi = static_cast<double>(rep.mpi) + 0.5;

  long cpos = 0, cneg = 0, czero = 0;
  std::vector<Q> ydisc(dim);
  std::vector<double> yfree(dim);
  for (std::int64_t it = 0; it < N; ++it) {
    for (std::size_t i = 0; i < dim; ++i) {
      if (order[i] > 0) {
        std::uniform_int_distribution<std::int64_t> pick(0, order[i] - 1);
        ydisc[i] = Q(pick(rng), order[i]);  // turns
        ydisc[i].canonicalize();
        yfree[i] = 0.0;
      } else {
        ydisc[i] = 0;
        yfree[i] = unit(rng);  // turns
      }
    }
    // x_k = 2 pi sum_i V[k][i] y_i, split into the exact rational part from
    // the torsion coordinates and the float part from the free ones
    double val = base;
    {
      Q xr(0);
      for (std::size_t i = 0; i < dim; ++i)
        if (order[i] > 0) xr += Q(sf.V[r][i]) * ydisc[i];
      Q twice = xr * 2;
      twice.canonicalize();
      require(twice.get_den() == 1, errc::internal,
              "sign carrier escaped the half-integer lattice");
      val += mpz_even_p(twice.get_num().get_mpz_t()) ? amp_pi : -amp_pi;
    }
    for (std::size_t kcoord = 0; kcoord < r; ++kcoord) {
      Q turns(0);
      double fturns = 0;
      for (std::size_t i = 0; i < dim; ++i) {
        if (order[i] > 0)
          turns += Q(sf.V[kcoord][i]) * ydisc[i];
        else
          fturns += sf.V[kcoord][i].get_d() * yfree[i];
      }
      // reduce the rational part mod 1 before going to floats
      Z rem;
      mpz_fdiv_r(rem.get_mpz_t(), turns.get_num().get_mpz_t(),
                 turns.get_den().get_mpz_t());
      Q fracQ(rem, turns.get_den());
      fracQ.canonicalize();
      double x = two_pi * (fracQ.get_d() + fturns);
      val += 2.0 * static_cast<double>(rep.classes[kcoord].mult) * std::cos(x);
    }
    if (std::fabs(val) < 1e-9)
      ++czero;
    else if (val > 0)
      ++cpos;
    else
      ++cneg;
  }
  out.pos = Q(cpos, static_cast<long>(N));
  out.neg = Q(cneg, static_cast<long>(N));
  out.zero = Q(czero, static_cast<long>(N));
  out.pos.canonicalize();
  out.neg.canonicalize();
  out.zero.canonicalize();
  out.seed = seed;
  return out;
}

inline DensityReport sign_densities(const PolyZ& P, std::int64_t q,
                                    std::int64_t N,
                                    DensityMode mode = DensityMode::Auto,
                                    std::uint64_t seed = 0) {
  SpectralReport rep = spectral_analysis(P, q);
  return sign_densities(rep, N, mode, seed);
}

// ---------- distribution moments ----------

struct Moments {
  Q mean{0}, variance{0};
  Q support_lo{0}, support_hi{0};
  double emp_mean = 0, emp_variance = 0;
  std::int64_t samples = 0;
};

// Limiting-distribution moments: mean m0 + 1/2; variance (m_pi + 1/2)^2 +
// 2 sum m_j^2 (each oscillator 2m cos contributes (2m)^2/2, the sign
// carrier its full square); support endpoints from the extreme values of
// every term. Empirical counterparts over n <= N when N > 0.
inline Moments moments(SpectralReport& rep, std::int64_t N = 0) {
  Moments out;
  Z msum = 0, msq = 0;
  for (const AngleClass& cls : rep.classes) {
    msum += cls.mult;
    msq += Z(cls.mult) * cls.mult;
  }
  out.mean = Q(rep.m0) + Q(1, 2);
  out.variance = (Q(rep.mpi) + Q(1, 2)) * (Q(rep.mpi) + Q(1, 2)) + 2 * Q(msq);
  out.variance.canonicalize();
  out.support_lo = Q(rep.m0 - rep.mpi) - 2 * Q(msum);
  out.support_hi = Q(rep.m0 + rep.mpi + 1) + 2 * Q(msum);
  if (N > 0) {
    detail::DeltaScan scan(rep);
    double s1 = 0, s2 = 0;
    for (std::int64_t n = 1; n <= N; ++n) {
      bool near = false;
      double v = scan.advance(n, near);
      s1 += v;
      s2 += v * v;
    }
    out.emp_mean = s1 / static_cast<double>(N);
    out.emp_variance =
        s2 / static_cast<double>(N) - out.emp_mean * out.emp_mean;
    out.samples = N;
  }
  return out;
}

inline Moments moments(const PolyZ& P, std::int64_t q, std::int64_t N = 0) {
  SpectralReport rep = spectral_analysis(P, q);
  return moments(rep, N);
}

// ---------- symmetry of the limiting distribution ----------

enum class SymmetryKind { Symmetric, Asymmetric, Unknown };

struct SymmetryResult {
  SymmetryKind kind = SymmetryKind::Unknown;
  std::optional<RelationVector> relation;  // odd-parity witness
  std::string note;
};

inline const char* symmetry_kind_name(SymmetryKind k) {
  switch (k) {
    case SymmetryKind::Symmetric: return "symmetric";
    case SymmetryKind::Asymmetric: return "asymmetric";
    default: return "unknown";
  }
}

// The limiting distribution is symmetric about its mean iff no integer
// relation k0 pi + sum k_j theta_j == 0 (mod 2 pi) has odd k0 + sum k_j.
// With a fully rational spectrum the whole relation lattice is computable
// and the answer is exact; otherwise an odd verified relation proves
// asymmetry and anything else stays Unknown. Parity is linear mod 2, so
// checking a lattice basis decides it for the whole lattice.
inline SymmetryResult symmetry_test(SpectralReport& rep) {
  SymmetryResult out;
  const std::size_t r = rep.classes.size();
  bool all_rational = true;
  for (const AngleClass& cls : rep.classes)
    if (cls.rational_order == 0) all_rational = false;

  if (all_rational) {
    // relation lattice = kernel of (k0, k, m) -> R k0 + sum A_j k_j - 2 R m
    // where theta_j = pi a_j / r_j, R = lcm r_j, A_j = a_j R / r_j
    std::int64_t R = 1;
    for (const AngleClass& cls : rep.classes)
      R = std::lcm(R, cls.rational_order);
    ZRow w(r + 2);
    w[0] = R;
    for (std::size_t j = 0; j < r; ++j)
      w[1 + j] = Z(rep.classes[j].rational_numer) *
                 (R / rep.classes[j].rational_order);
    w[r + 1] = -2 * R;
    SmithForm sf = smith_normal_form(ZMat{w});
    // the map has rank 1, so columns 1..r+1 of V form a kernel basis
    for (std::size_t col = 1; col < r + 2; ++col) {
      Z parity = 0;
      for (std::size_t row = 0; row + 1 < r + 2; ++row)
        parity += sf.V[row][col];
      if (mpz_odd_p(parity.get_mpz_t())) {
        RelationVector v;
        require(sf.V[0][col].fits_slong_p(), errc::too_large,
                "relation coefficient overflow");
        v.k0 = sf.V[0][col].get_si();
        v.k.resize(r);
        for (std::size_t j = 0; j < r; ++j) {
          require(sf.V[1 + j][col].fits_slong_p(), errc::too_large,
                  "relation coefficient overflow");
          v.k[j] = sf.V[1 + j][col].get_si();
        }
        out.kind = SymmetryKind::Asymmetric;
        out.relation = v;
        return out;
      }
    }
    out.kind = SymmetryKind::Symmetric;
    return out;
  }

  // irrational angles present: hunt for a verified odd relation
  for (std::size_t j = 0; j < r; ++j) {
    const AngleClass& cls = rep.classes[j];
    if (cls.rational_order > 0 &&
        (cls.rational_order + cls.rational_numer) % 2 != 0) {
      out.kind = SymmetryKind::Asymmetric;
      out.relation = detail::rational_class_relation(rep, j);
      return out;
    }
  }
  for (const RelationVector& cand : find_candidate_relations(rep)) {
    if (cand.parity() == 0) continue;
    if (verify_relation(rep, cand) == VerifyStatus::ExactVerified) {
      out.kind = SymmetryKind::Asymmetric;
      out.relation = cand;
      return out;
    }
  }
  out.kind = SymmetryKind::Unknown;
  out.note =
      "symmetric unless an undetected odd relation exists among the "
      "irrational angles";
  return out;
}

inline SymmetryResult symmetry_test(const PolyZ& P, std::int64_t q) {
  SpectralReport rep = spectral_analysis(P, q);
  return symmetry_test(rep);
}

// ---------- degree-at-most-n variant ----------

// Weighted main term of the race counted over degrees <= n: each inverse
// zero sqrt(q) e^{i theta} enters with weight z/(z-1) at z = sqrt(q)
// e^{i theta}, the real classes with the analogous real weights. Differs
// from Delta(n) by at most (2g+1)/(sqrt(q)-1).
inline double delta_leq(SpectralReport& rep, std::int64_t n) {
  const mpfr_prec_t prec = Interval::kDefaultPrec;
  Interval sq = Interval::sqrt_long(rep.q, prec);
  Interval one = Interval::from_long(1, prec);
  Interval qI = Interval::from_long(rep.q, prec);
  Interval acc =
      Interval::from_q(Q(rep.m0) + Q(1, 2), prec) * div_nonzero(sq, sq - one);
  Interval odd_w =
      Interval::from_q(Q(rep.mpi) + Q(1, 2), prec) * div_nonzero(sq, sq + one);
  acc = (n % 2 == 0) ? acc + odd_w : acc - odd_w;
  for (std::size_t j = 0; j < rep.classes.size(); ++j) {
    Interval th = class_theta(rep, j, prec);
    Interval cn = cos_interval(scale_z(th, Z(n)));
    Interval cn1 = cos_interval(scale_z(th, Z(n + 1)));
    Interval c1 = cos_interval(th);
    Interval denom = qI + one - scale_z(sq * c1, Z(2));
    Interval re = div_nonzero(qI * cn - sq * cn1, denom);
    acc = acc + scale_z(re, Z(2 * rep.classes[j].mult));
  }
  return acc.mid();
}

inline double delta_leq(const PolyZ& P, std::int64_t q, std::int64_t n) {
  SpectralReport rep = spectral_analysis(P, q);
  return delta_leq(rep, n);
}

}  // namespace ffrace
