#pragma once

#include <algorithm>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ffrace/bias.hpp"
#include "ffrace/field.hpp"
#include "ffrace/int_factor.hpp"
#include "ffrace/poly_fq.hpp"

namespace ffrace {

// Classification of the three exceptional sign biases of the race term
// Delta(n) = (m0 + 1/2) + (mpi + 1/2)(-1)^n + sum_j 2 m_j cos(n theta_j):
//   Complete   : Delta > 0 on a set of density 1,
//   LowerOrder : Delta = 0 on a set of positive density,
//   Reversed   : Delta < 0 on a set of density > 1/2.
// Each verdict is Yes / No / Unknown and carries a certificate that can be
// rechecked independently of the code path that produced it.

enum class BiasType { Complete, LowerOrder, Reversed };
enum class VerdictStatus { Yes, No, Unknown };

inline const char* bias_type_name(BiasType t) {
  switch (t) {
    case BiasType::Complete: return "Complete";
    case BiasType::LowerOrder: return "LowerOrder";
    case BiasType::Reversed: return "Reversed";
  }
  return "?";
}

inline const char* verdict_status_name(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Yes: return "Yes";
    case VerdictStatus::No: return "No";
    case VerdictStatus::Unknown: return "Unknown";
  }
  return "?";
}

// Exact factorization P = (T - s)^m0 (T + s)^mpi L1 L2 over a square field
// size q = s^2, where L2 is the maximal even divisor of the residual part
// (L2(-T) = L2(T)) and L1 collects what is left.
struct SufficientCompleteData {
  std::int64_t m0 = 0, mpi = 0;
  PolyZ L1 = zone(), L2 = zone();
  std::int64_t d1 = 0, d2 = 0;
};

// Factorization shapes of P modulo small primes. For a separable P whose
// roots are closed under alpha -> q/alpha, the Galois group embeds into the
// group of signed permutations of the g root pairs; inside that group every
// transposition swaps a pair (i, -i) and every 4-cycle has the signed shape
// (i j -i -j). Observing the degree multiset (2, 1, ..., 1) or (4, 1, ..., 1)
// modulo a prime not dividing disc(P) * q therefore certifies that such an
// element exists.
struct CycleEvidence {
  std::vector<std::int64_t> primes;  // scanned primes coprime to disc(P) * q
  std::vector<std::vector<std::int64_t>> cycle_types;  // ascending, per prime
  bool has_pair_transposition = false;  // some type (2, 1, ..., 1)
  bool has_signed_four_cycle = false;   // some type (4, 1, ..., 1)
  std::int64_t transposition_prime = 0;
  std::int64_t four_cycle_prime = 0;
  bool transitive_on_pairs = false;  // real model irreducible over Z
};

struct ClassifyOptions {
  std::int64_t empirical_samples = 100000;  // N for empirical densities
  std::int64_t prime_bound = 500;           // cycle-evidence scan bound
  std::uint64_t seed = 0;                   // reserved for sampling modes
};

struct BiasVerdict {
  BiasType bias_type = BiasType::Complete;
  VerdictStatus status = VerdictStatus::Unknown;
  std::string certificate;  // which condition fired, with its data
  std::optional<SufficientCompleteData> split;
  std::optional<RelationVector> relation;
  std::optional<ZeroDensity> zero_classes;
  std::optional<DensityReport> densities;
  std::optional<CycleEvidence> cycles;
};

// Exact form of the Bhatia-Davis inequality: a random variable supported in
// [a, b] with mean mu has variance at most (b - mu)(mu - a).
inline bool bhatia_davis_bound(const Q& a, const Q& b, const Q& mu,
                               const Q& sigma2) {
  require(a <= mu && mu <= b, errc::bad_input,
          "mean must lie inside the support interval");
  return sigma2 <= (b - mu) * (mu - a);
}

// Lower bound for sum_i cos(l gamma_i) over N angles admitting an integer
// relation sum k_i gamma_i = 0 (mod 2 pi) with odd coefficient sum, where
// kappa = sum |k_i|: at least one l gamma_i stays pi/kappa away from pi
// (mod 2 pi), so the sum never drops to -N.
inline double asymmetry_gap_bound(std::int64_t kappa, std::int64_t n_angles) {
  require(kappa >= 1, errc::bad_input, "coefficient sum must be positive");
  require(n_angles >= 1, errc::bad_input, "need at least one angle");
  return -static_cast<double>(n_angles) + 1.0 +
         std::cos(std::numbers::pi * (1.0 - 1.0 / static_cast<double>(kappa)));
}

namespace detail {

inline std::int64_t square_root_if_square(std::int64_t q) {
  if (q < 0) return -1;
  std::int64_t s = static_cast<std::int64_t>(std::llround(std::sqrt(
      static_cast<double>(q))));
  while (s > 0 && s * s > q) --s;
  while ((s + 1) * (s + 1) <= q) ++s;
  return s * s == q ? s : -1;
}

inline PolyZ zpow_poly(const PolyZ& a, std::int64_t e) {
  PolyZ r = zone();
  for (std::int64_t i = 0; i < e; ++i) r = zmul(r, a);
  return r;
}

// Monic image of G(-T); for even-degree monic G this is plain substitution.
inline PolyZ monic_reflect(const PolyZ& g) {
  PolyZ r = zsubst_neg(g);
  if (!is_zero(r) && lc(r) < 0) r = zneg(r);
  return r;
}

struct ResidualSplit {
  SufficientCompleteData data;
  std::vector<PolyZ> l1_factors;  // irreducible Z-factors dividing L1
};

// Split the nontrivial part of P into L1 * L2 with L2 the maximal even
// divisor: an even factor must carry G and its reflection G* with equal
// exponents, so L2 takes min(e_G, e_G*) from every reflection pair (all of
// e_G when G* = G) and L1 keeps the rest.
inline ResidualSplit split_residual(const SpectralReport& rep,
                                    std::int64_t s) {
  ResidualSplit out;
  out.data.m0 = rep.m0;
  out.data.mpi = rep.mpi;
  const PolyZ& R = rep.P_red;
  if (deg(R) > 0) {
    std::vector<ZFactor> fac = factor_int(R);
    for (const ZFactor& zf : fac) {
      PolyZ refl = monic_reflect(zf.poly);
      std::int64_t paired = 0;
      if (refl == zf.poly) {
        paired = zf.mult;
      } else {
        for (const ZFactor& other : fac)
          if (other.poly == refl) {
            paired = std::min(zf.mult, other.mult);
            break;
          }
      }
      std::int64_t left = zf.mult - paired;
      if (left > 0) {
        out.data.L1 = zmul(out.data.L1, zpow_poly(zf.poly, left));
        out.l1_factors.push_back(zf.poly);
      }
      if (paired > 0) out.data.L2 = zmul(out.data.L2, zpow_poly(zf.poly, paired));
    }
  }
  out.data.d1 = deg(out.data.L1);
  out.data.d2 = deg(out.data.L2);
  PolyZ recon = zmul(out.data.L1, out.data.L2);
  recon = zmul(recon, zpow_poly(zpoly_i({-s, 1}), rep.m0));
  recon = zmul(recon, zpow_poly(zpoly_i({s, 1}), rep.mpi));
  require(recon == rep.P, errc::internal, "residual split fails to rebuild P");
  require(monic_reflect(out.data.L2) == out.data.L2, errc::internal,
          "even part of the residual split is not even");
  return out;
}

// Degree multiset (ascending) of the irreducible factors of P modulo an odd
// prime r with r coprime to disc(P), via distinct-degree factorization.
inline std::vector<std::int64_t> factor_degrees_mod(const PolyZ& P,
                                                    std::int64_t r) {
  Field F = make_field(r, 1);
  std::vector<Fq> c(P.c.size());
  for (std::size_t i = 0; i < P.c.size(); ++i)
    c[i] = static_cast<Fq>(mpz_fdiv_ui(P.c[i].get_mpz_t(),
                                       static_cast<unsigned long>(r)));
  PolyFq f = poly_from_coeffs(F, std::move(c));
  require(deg(f) == deg(P), errc::internal, "leading coefficient vanished");
  std::vector<std::int64_t> degs;
  PolyFq h = poly_x(F);
  for (std::int64_t d = 1; 2 * d <= deg(f); ++d) {
    h = ppowmod(h, r, f);  // h = x^(r^d) mod f
    PolyFq gd = pgcd(psub(h, poly_x(F)), f);
    if (deg(gd) > 0) {
      for (std::int64_t i = 0; i < deg(gd) / d; ++i) degs.push_back(d);
      f = pdiv(f, gd);
      if (deg(f) == 0) break;
      h = pmod(h, f);
    }
  }
  if (deg(f) > 0) degs.push_back(deg(f));
  std::sort(degs.begin(), degs.end());
  return degs;
}

// Does the ascending degree multiset consist of a single entry c and ones?
inline bool is_almost_trivial_type(const std::vector<std::int64_t>& degs,
                                   std::int64_t c) {
  if (degs.empty() || degs.back() != c) return false;
  for (std::size_t i = 0; i + 1 < degs.size(); ++i)
    if (degs[i] != 1) return false;
  return true;
}

inline std::string join_list(const std::vector<std::int64_t>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  return os.str();
}

}  // namespace detail

// Factor P modulo every odd prime r <= prime_bound with r coprime to
// disc(P) * q and record the degree multisets. Requires P separable.
inline CycleEvidence galois_cycle_evidence(const PolyZ& P, std::int64_t q,
                                           std::int64_t prime_bound = 500) {
  require(deg(P) >= 1, errc::bad_degree, "cycle evidence needs degree >= 1");
  require(deg(zgcd(P, zderiv(P))) == 0, errc::not_squarefree,
          "inseparable polynomial: factorization shapes are not cycle types");
  CycleEvidence ev;
  Z bad = abs(discriminant_int(P) * q);
  require(bad != 0, errc::internal, "separable polynomial with zero discriminant");
  for (std::int64_t r = 3; r <= prime_bound; r += 2) {
    if (!detail::is_prime_i64(r)) continue;
    if (mpz_divisible_ui_p(bad.get_mpz_t(), static_cast<unsigned long>(r)))
      continue;
    std::vector<std::int64_t> degs = detail::factor_degrees_mod(P, r);
    if (!ev.has_pair_transposition && detail::is_almost_trivial_type(degs, 2)) {
      ev.has_pair_transposition = true;
      ev.transposition_prime = r;
    }
    if (!ev.has_signed_four_cycle && detail::is_almost_trivial_type(degs, 4)) {
      ev.has_signed_four_cycle = true;
      ev.four_cycle_prime = r;
    }
    ev.primes.push_back(r);
    ev.cycle_types.push_back(std::move(degs));
  }
  PolyZ h = real_weil(P, q);
  ev.transitive_on_pairs = deg(h) >= 1 && is_irreducible_z(h);
  return ev;
}

namespace detail {

inline bool all_angles_rational(const SpectralReport& rep) {
  for (const AngleClass& cls : rep.classes)
    if (cls.rational_order == 0) return false;
  return true;
}

inline std::int64_t class_mult_sum(const SpectralReport& rep) {
  std::int64_t m = 0;
  for (const AngleClass& cls : rep.classes) m += cls.mult;
  return m;
}

// Search the full relation lattice of the rational angles indexed by `sel`
// for a vector with odd coefficient sum: solutions of
// sum_i k_i a_i / r_i = 2 m are the kernel of the row (A_1 ... A_s  -2R)
// with R = lcm(r_i), A_i = a_i R / r_i, and the mod-2 coefficient sum is
// linear, so it is odd somewhere iff it is odd on a kernel basis vector.
inline std::optional<std::vector<std::int64_t>> odd_rational_relation(
    const SpectralReport& rep, const std::vector<std::size_t>& sel) {
  const std::size_t s = sel.size();
  if (s == 0) return std::nullopt;
  std::int64_t R = 1;
  for (std::size_t j : sel)
    R = std::lcm(R, rep.classes[j].rational_order);
  ZRow w(s + 1);
  for (std::size_t i = 0; i < s; ++i) {
    const AngleClass& cls = rep.classes[sel[i]];
    w[i] = Z(cls.rational_numer) * (R / cls.rational_order);
  }
  w[s] = Z(-2) * R;
  SmithForm sf = smith_normal_form(ZMat{w});
  // rank one, so columns 1..s of V span the kernel
  for (std::size_t col = 1; col <= s; ++col) {
    Z parity = 0;
    for (std::size_t row = 0; row < s; ++row) parity += sf.V[row][col];
    if (mpz_odd_p(parity.get_mpz_t())) {
      std::vector<std::int64_t> k(s);
      Z check = 0;
      for (std::size_t row = 0; row < s; ++row) {
        require(sf.V[row][col].fits_slong_p(), errc::too_large,
                "relation coefficient overflow");
        k[row] = sf.V[row][col].get_si();
        check += sf.V[row][col] * w[row];
      }
      require(check % (2 * R) == 0, errc::internal,
              "kernel vector fails its own congruence");
      return k;
    }
  }
  return std::nullopt;
}

}  // namespace detail

// Decide whether Delta is positive on a set of density 1.
inline BiasVerdict classify_complete(SpectralReport& rep,
                                     const ClassifyOptions& opts = {}) {
  BiasVerdict v;
  v.bias_type = BiasType::Complete;
  std::ostringstream cert;

  const std::int64_t s = detail::square_root_if_square(rep.q);
  if (s < 0) {
    v.status = VerdictStatus::No;
    cert << "q = " << rep.q
         << " is not a perfect square, so the main term (m0 + 1/2) cannot "
            "dominate every other contribution";
    v.certificate = cert.str();
    return v;
  }
  if (rep.m0 == 0) {
    v.status = VerdictStatus::No;
    cert << "sqrt(q) = " << s
         << " is not an inverse zero (m0 = 0); without central vanishing the "
            "even-degree terms average to a bounded sign-changing quantity";
    v.certificate = cert.str();
    return v;
  }

  detail::ResidualSplit parts = detail::split_residual(rep, s);
  const SufficientCompleteData& D = parts.data;
  v.split = D;
  const bool strict_margin =
      D.m0 > D.mpi + D.d1 && D.m0 + D.mpi + 1 > D.d1 + D.d2;
  const bool weak_margin =
      D.m0 >= D.mpi + D.d1 && D.m0 + D.mpi + 1 >= D.d1 + D.d2;
  if (strict_margin) {
    v.status = VerdictStatus::Yes;
    cert << "margin certificate: m0 = " << D.m0 << " > " << D.mpi + D.d1
         << " = mpi + d1 and m0 + mpi + 1 = " << D.m0 + D.mpi + 1 << " > "
         << D.d1 + D.d2 << " = d1 + d2, so Delta(n) > 0 for every n";
    v.certificate = cert.str();
    return v;
  }
  if (weak_margin && D.d1 > 0) {
    // mark the angle classes contributed by L1 via their real models
    std::vector<char> in_l1(rep.num_classes(), 0);
    for (const PolyZ& G : parts.l1_factors) {
      PolyZ hG = real_weil(G, rep.q);
      for (std::size_t j = 0; j < rep.num_classes(); ++j)
        if (rep.classes[j].minpoly == hG) in_l1[j] = 1;
    }
    std::vector<std::size_t> sel;
    for (std::size_t j = 0; j < rep.num_classes(); ++j)
      if (in_l1[j]) sel.push_back(j);
    require(!sel.empty(), errc::internal, "nonconstant L1 without angles");
    for (std::size_t j : sel) {
      if (rep.classes[j].rational_order == 0) {
        v.status = VerdictStatus::Yes;
        cert << "equality margins hold (m0 = " << D.m0 << ", mpi + d1 = "
             << D.mpi + D.d1 << ", m0 + mpi + 1 = " << D.m0 + D.mpi + 1
             << ", d1 + d2 = " << D.d1 + D.d2
             << ") and L1 has a root with irrational angle (class " << j
             << "), which equidistributes the slack";
        v.certificate = cert.str();
        return v;
      }
    }
    if (auto k = detail::odd_rational_relation(rep, sel)) {
      RelationVector rel;
      rel.k0 = 0;
      rel.k.assign(rep.num_classes(), 0);
      for (std::size_t i = 0; i < sel.size(); ++i) rel.k[sel[i]] = (*k)[i];
      v.relation = rel;
      v.status = VerdictStatus::Yes;
      cert << "equality margins hold and the L1 angles satisfy an integer "
           << "relation with odd coefficient sum: k = ("
           << detail::join_list(*k)
           << ") over classes " << detail::join_list(std::vector<std::int64_t>(
                  sel.begin(), sel.end()))
         << ", keeping the cosine sum above its worst case";
      v.certificate = cert.str();
      return v;
    }
  }

  // necessary condition: split on symmetry of the value distribution
  const std::int64_t msum = detail::class_mult_sum(rep);
  const std::size_t r = rep.num_classes();
  SymmetryResult sym = symmetry_test(rep);
  if (sym.kind == SymmetryKind::Symmetric) {
    const bool needed = r >= 1 ? rep.m0 >= rep.mpi + 2 * msum
                               : rep.m0 > rep.g;
    if (!needed) {
      v.status = VerdictStatus::No;
      cert << "the value distribution is symmetric about its mean, which "
              "forces m0 >= mpi + 2*sum(m_j)"
           << (r == 0 ? " strictly" : "") << "; here m0 = " << rep.m0
           << ", mpi = " << rep.mpi << ", sum(m_j) = " << msum;
      v.certificate = cert.str();
      return v;
    }
  } else if (sym.kind == SymmetryKind::Asymmetric) {
    v.relation = sym.relation;
    if (rep.m0 <= rep.mpi) {
      v.status = VerdictStatus::No;
      cert << "the value distribution is asymmetric (verified odd relation), "
              "which forces m0 > mpi; here m0 = "
           << rep.m0 << " <= " << rep.mpi << " = mpi";
      v.certificate = cert.str();
      return v;
    }
  } else {
    if (rep.m0 <= rep.mpi) {
      v.status = VerdictStatus::No;
      cert << "m0 = " << rep.m0 << " <= " << rep.mpi
           << " = mpi rules out both branches of the necessary condition "
              "(the symmetric branch needs m0 >= mpi + 2*sum(m_j), the "
              "asymmetric one m0 > mpi)";
      v.certificate = cert.str();
      return v;
    }
  }

  // a positive-density vanishing set caps the positivity density below 1
  ZeroDensity zd = zero_density(rep);
  if (zd.density > 0) {
    v.zero_classes = zd;
    v.status = VerdictStatus::No;
    cert << "Delta vanishes identically on the residue classes {"
         << detail::join_list(zd.classes) << "} mod " << zd.modulus
         << " (density " << zd.density.get_str() << ")";
    v.certificate = cert.str();
    return v;
  }

  if (detail::all_angles_rational(rep)) {
    DensityReport d = sign_densities(rep, 0, DensityMode::ExactPeriodic);
    v.densities = d;
    if (d.pos == 1) {
      v.status = VerdictStatus::Yes;
      cert << "Delta is periodic with modulus " << d.modulus
           << " and every residue value is positive (exact check)";
    } else {
      v.status = VerdictStatus::No;
      cert << "Delta is periodic with modulus " << d.modulus
           << " and has nonpositive values: exact dens_pos = "
           << d.pos.get_str();
    }
    v.certificate = cert.str();
    return v;
  }

  v.status = VerdictStatus::Unknown;
  v.densities = sign_densities(rep, opts.empirical_samples, DensityMode::Auto,
                               opts.seed);
  cert << "no exact criterion applies (sufficient margins fail, necessary "
          "conditions hold, no vanishing classes, irrational angles present); "
          "empirical densities over " << v.densities->samples
       << " values attached";
  v.certificate = cert.str();
  return v;
}

// Decide whether Delta vanishes on a set of positive density. Always exact:
// the zero set of Delta is a finite set plus full residue classes modulo the
// torsion modulus, and the classes are checked exhaustively.
inline BiasVerdict classify_lower_order(SpectralReport& rep,
                                        const ClassifyOptions& = {}) {
  BiasVerdict v;
  v.bias_type = BiasType::LowerOrder;
  std::ostringstream cert;
  ZeroDensity zd = zero_density(rep);
  v.zero_classes = zd;
  if (zd.density > 0) {
    // A vanishing class needs either torsion among the nontrivial zeros or
    // the exact cancellation (m0 + 1/2) = (mpi + 1/2) on odd n with no
    // surviving oscillatory term (this covers genus 0, where the whole
    // spectrum is empty and Delta(odd) is identically zero).
    require(rep.degenerate || (rep.m0 == rep.mpi && rep.classes.empty()),
            errc::internal, "vanishing residue class without a mechanism");
    v.status = VerdictStatus::Yes;
    cert << "Delta vanishes identically on the residue classes {"
         << detail::join_list(zd.classes) << "} mod " << zd.modulus
         << ", a set of density " << zd.density.get_str();
  } else {
    v.status = VerdictStatus::No;
    if (!rep.degenerate) {
      cert << "no ratio of nontrivial inverse zeros is a root of unity, so "
              "Delta has only finitely many zeros";
    } else {
      cert << "degenerate spectrum, but no residue class mod " << zd.modulus
           << " vanishes identically, so the zero set is finite";
    }
  }
  v.certificate = cert.str();
  return v;
}

// Decide whether Delta is negative on a set of density > 1/2.
inline BiasVerdict classify_reversed(SpectralReport& rep,
                                     const ClassifyOptions& opts = {}) {
  BiasVerdict v;
  v.bias_type = BiasType::Reversed;
  std::ostringstream cert;

  if (detail::all_angles_rational(rep)) {
    DensityReport d = sign_densities(rep, 0, DensityMode::ExactPeriodic);
    v.densities = d;
    if (d.neg > Q(1, 2)) {
      v.status = VerdictStatus::Yes;
      cert << "Delta is periodic with modulus " << d.modulus
           << " and exact dens_neg = " << d.neg.get_str() << " > 1/2";
    } else {
      v.status = VerdictStatus::No;
      cert << "Delta is periodic with modulus " << d.modulus
           << " and exact dens_neg = " << d.neg.get_str() << " <= 1/2";
    }
    v.certificate = cert.str();
    return v;
  }

  // Negative certificate: a reversed bias needs either m0 < mpi or an odd
  // integer relation among the theta's alone. The latter is impossible when
  // P is separable, the spectrum is nondegenerate, the real model is
  // irreducible (the Galois group moves every root pair to every other), and
  // some factorization shape mod r exhibits a signed transposition or signed
  // 4-cycle. With both refuted, the even and odd subsequences of Delta are
  // symmetric about the nonnegative means m0 + mpi + 1 and m0 - mpi, so
  // negative values cannot exceed density 1/2.
  std::vector<std::string> broken;
  if (rep.m0 < rep.mpi) broken.push_back("m0 < mpi");
  const bool separable = deg(zgcd(rep.P, zderiv(rep.P))) == 0;
  if (!separable) broken.push_back("P is not separable");
  if (rep.degenerate) broken.push_back("spectrum is degenerate");
  if (separable) {
    CycleEvidence ev =
        galois_cycle_evidence(rep.P, rep.q, opts.prime_bound);
    v.cycles = ev;
    if (!ev.transitive_on_pairs)
      broken.push_back("real model is reducible over Z");
    if (!ev.has_pair_transposition && !ev.has_signed_four_cycle)
      broken.push_back("no pair transposition or signed 4-cycle observed");
  }
  if (broken.empty()) {
    const CycleEvidence& ev = *v.cycles;
    v.status = VerdictStatus::No;
    cert << "m0 = " << rep.m0 << " >= " << rep.mpi << " = mpi; P separable "
         << "with nondegenerate spectrum and irreducible real model, and ";
    if (ev.has_pair_transposition)
      cert << "P mod " << ev.transposition_prime
           << " factors with shape (2,1,...,1)";
    else
      cert << "P mod " << ev.four_cycle_prime
           << " factors with shape (4,1,...,1)";
    cert << ": no odd relation among the angles exists, so both parity "
            "subsequences are symmetric about nonnegative means";
    v.certificate = cert.str();
    return v;
  }

  v.status = VerdictStatus::Unknown;
  v.densities = sign_densities(rep, opts.empirical_samples, DensityMode::Auto,
                               opts.seed);
  cert << "cannot certify either way: ";
  for (std::size_t i = 0; i < broken.size(); ++i) {
    if (i) cert << "; ";
    cert << broken[i];
  }
  cert << "; empirical densities over " << v.densities->samples
       << " values attached";
  v.certificate = cert.str();
  return v;
}

inline BiasVerdict classify_complete(const PolyZ& P, std::int64_t q,
                                     const ClassifyOptions& opts = {}) {
  SpectralReport rep = spectral_analysis(P, q);
  return classify_complete(rep, opts);
}

inline BiasVerdict classify_lower_order(const PolyZ& P, std::int64_t q,
                                        const ClassifyOptions& opts = {}) {
  SpectralReport rep = spectral_analysis(P, q);
  return classify_lower_order(rep, opts);
}

inline BiasVerdict classify_reversed(const PolyZ& P, std::int64_t q,
                                     const ClassifyOptions& opts = {}) {
  SpectralReport rep = spectral_analysis(P, q);
  return classify_reversed(rep, opts);
}

}  // namespace ffrace
