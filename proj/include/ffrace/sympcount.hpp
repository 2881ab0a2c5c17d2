#pragma once

// Brute-force verification of counting identities for symplectic polynomials
// over a small prime field F_l. A monic P of degree 2g is qbar-symplectic
// when P(T) = qbar^{-g} T^{2g} P(qbar/T); equivalently its coefficients
// satisfy a_i = qbar^{g-i} a_{2g-i}, so a_g .. a_{2g-1} are free and the
// space has exactly l^g members.
//
// The census enumerates that space and tabulates, exactly:
//   - the number of members vanishing at each square root s of qbar
//     (always l^{g-1}: vanishing at s is one linear condition whose a_g
//     coefficient is s^g != 0)
//   - factorization-type counts
//   - the cells omega_{k}(n): squarefree members with one irreducible
//     symplectic factor of degree 2k and, for each i, n_i reciprocal pairs
//     of distinct odd-degree-(2i+1) irreducible factors
//   - injectivity of the real-model map P -> h_P onto monic degree-g
//     polynomials
//   - the irreducible fraction

#include <cstdint>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "ffrace/errors.hpp"
#include "ffrace/field.hpp"
#include "ffrace/fq_factor.hpp"
#include "ffrace/int_poly.hpp"
#include "ffrace/poly_fq.hpp"

namespace ffrace {

struct SymplecticSpace {
  Field F;             // F_l
  std::int64_t l = 0;  // odd prime
  std::int64_t g = 0;
  Fq qbar = 0;         // nonzero residue of q
  std::uint64_t size = 0;  // l^g
};

inline SymplecticSpace symplectic_space(std::int64_t l, std::int64_t g,
                                        std::int64_t qbar) {
  SymplecticSpace sp;
  sp.F = make_field(l, 1);  // rejects 2 and non-primes
  sp.l = l;
  sp.g = g;
  require(g >= 1, errc::bad_input, "genus must be positive");
  require(l <= 31 && g <= 3, errc::too_large,
          "symplectic census limited to l <= 31, g <= 3");
  std::int64_t r = qbar % l;
  if (r < 0) r += l;
  require(r != 0, errc::bad_input, "qbar must be nonzero mod l");
  sp.qbar = static_cast<Fq>(r);
  sp.size = 1;
  for (std::int64_t i = 0; i < g; ++i) sp.size *= static_cast<std::uint64_t>(l);
  return sp;
}

// The idx-th member: base-l digits of idx give the free coefficients
// a_g .. a_{2g-1}; the rest follow from a_i = qbar^{g-i} a_{2g-i}.
inline PolyFq symplectic_by_index(const SymplecticSpace& sp,
                                  std::uint64_t idx) {
  require(idx < sp.size, errc::bad_input, "index out of range");
  const FieldCtx& K = *sp.F;
  std::vector<Fq> c(2 * sp.g + 1, 0);
  c[2 * sp.g] = 1;
  std::uint64_t t = idx;
  for (std::int64_t j = sp.g; j < 2 * sp.g; ++j) {
    c[j] = static_cast<Fq>(t % static_cast<std::uint64_t>(sp.l));
    t /= static_cast<std::uint64_t>(sp.l);
  }
  for (std::int64_t i = 0; i < sp.g; ++i)
    c[i] = K.mul(K.pow(sp.qbar, sp.g - i), c[2 * sp.g - i]);
  return poly_from_coeffs(sp.F, std::move(c));
}

inline std::vector<PolyFq> enumerate_symplectic(std::int64_t l, std::int64_t g,
                                                std::int64_t qbar) {
  SymplecticSpace sp = symplectic_space(l, g, qbar);
  std::vector<PolyFq> out;
  out.reserve(sp.size);
  for (std::uint64_t idx = 0; idx < sp.size; ++idx)
    out.push_back(symplectic_by_index(sp, idx));
  return out;
}

// Signed functional-equation test: a_i == qbar^{k-i} a_{2k-i} for monic P of
// even degree 2k. Distinguishes T^2 - qbar (anti-symplectic) from genuine
// members.
inline bool is_symplectic_mod(const PolyFq& P, Fq qbar) {
  const FieldCtx& K = *P.F;
  std::int64_t d = deg(P);
  if (d < 0 || d % 2 != 0 || !is_monic(P)) return false;
  std::int64_t k = d / 2;
  for (std::int64_t i = 0; i < k; ++i)
    if (P.c[i] != K.mul(K.pow(qbar, k - i), P.c[d - i])) return false;
  return true;
}

// Monic reciprocal T^m R(qbar/T) / R(0); requires R(0) != 0.
inline PolyFq q_reciprocal_mod(const PolyFq& R, Fq qbar) {
  const FieldCtx& K = *R.F;
  std::int64_t m = deg(R);
  require(m >= 0 && R.c[0] != 0, errc::bad_input,
          "reciprocal needs a nonzero constant term");
  Fq inv0 = K.inv(R.c[0]);
  std::vector<Fq> c(m + 1, 0);
  for (std::int64_t j = 0; j <= m; ++j)
    c[m - j] = K.mul(inv0, K.mul(R.c[j], K.pow(qbar, j)));
  return poly_from_coeffs(R.F, std::move(c));
}

// Real model mod l: the unique monic h of degree g with
// T^g h(T + qbar/T) = P(T). Works by peeling the triangular basis
// T^{g-k} (T^2 + qbar)^k, k = g .. 0: the basis element is monic of degree
// g + k, so h_k is the degree-(g+k) coefficient of what remains.
inline PolyFq real_weil_mod(const PolyFq& P, Fq qbar) {
  const Field& F = P.F;
  std::int64_t d = deg(P);
  require(d >= 0 && d % 2 == 0 && is_monic(P), errc::bad_input,
          "real model needs a monic even-degree polynomial");
  std::int64_t g = d / 2;
  PolyFq rem = P;
  PolyFq base = poly_from_coeffs(F, {qbar, 0, 1});  // T^2 + qbar
  std::vector<Fq> h(g + 1, 0);
  for (std::int64_t k = g; k >= 0; --k) {
    Fq hk = (deg(rem) >= g + k) ? rem.c[g + k] : 0;
    h[k] = hk;
    if (hk != 0) {
      PolyFq term = poly_from_coeffs(F, {hk});
      for (std::int64_t i = 0; i < k; ++i) term = pmul(term, base);
      std::vector<Fq> shift(g - k + 1, 0);
      shift[g - k] = 1;
      term = pmul(term, poly_from_coeffs(F, std::move(shift)));
      rem = psub(rem, term);
    }
  }
  require(is_zero(rem), errc::not_symplectic,
          "polynomial does not satisfy the functional equation");
  return poly_from_coeffs(F, std::move(h));
}

struct VanishCount {
  Fq s = 0;                 // square root of qbar in F_l
  std::int64_t count = 0;   // members with P(s) = 0
  std::int64_t expected = 0;  // l^{g-1}
};

struct OmegaCell {
  std::int64_t k = 0;
  std::vector<std::int64_t> n;  // n[i] pairs of degree-(2i+1) factors
  std::int64_t count = 0;
  Q normalized{0};  // count * (2k or 1) * prod 2^{n_i}(2i+1)^{n_i}n_i! / l^g
  bool within_tolerance = false;  // (normalized - 1)^2 <= 25 / l
};

struct SymplecticCensus {
  std::int64_t l = 0, g = 0;
  Fq qbar = 0;
  std::uint64_t space = 0;
  std::vector<VanishCount> vanish;
  // key: factor degrees ascending, one entry per (degree, multiplicity)
  // written as d^m for m > 1: "1;1;2" or "1^2;2"
  std::map<std::string, std::int64_t> type_counts;
  std::vector<OmegaCell> omega;
  bool h_map_bijective = false;
  std::int64_t irreducible_count = 0;
  Q irreducible_fraction{0};
};

namespace detail {

// All (k, n) with g = k + sum (2i+1) n_i, n_i >= 0, in a fixed order:
// descending k, then lexicographic n.
inline void omega_shapes_rec(std::int64_t rest, std::int64_t i,
                             std::int64_t max_i, std::vector<std::int64_t>& n,
                             std::vector<std::vector<std::int64_t>>& out) {
  if (i > max_i) {
    if (rest == 0) out.push_back(n);
    return;
  }
  std::int64_t part = 2 * i + 1;
  for (std::int64_t cnt = 0; cnt * part <= rest; ++cnt) {
    n.push_back(cnt);
    omega_shapes_rec(rest - cnt * part, i + 1, max_i, n, out);
    n.pop_back();
  }
}

inline std::vector<OmegaCell> omega_shapes(std::int64_t g) {
  std::vector<OmegaCell> cells;
  for (std::int64_t k = g; k >= 0; --k) {
    std::int64_t rest = g - k;
    std::int64_t max_i = rest >= 1 ? (rest - 1) / 2 : -1;
    std::vector<std::vector<std::int64_t>> shapes;
    std::vector<std::int64_t> n;
    omega_shapes_rec(rest, 0, max_i, n, shapes);
    for (auto& shape : shapes) {
      while (!shape.empty() && shape.back() == 0) shape.pop_back();
      OmegaCell cell;
      cell.k = k;
      cell.n = std::move(shape);
      cells.push_back(std::move(cell));
    }
  }
  return cells;
}

inline std::string type_key(const std::vector<FqFactor>& factors) {
  std::vector<std::pair<std::int64_t, std::int64_t>> parts;
  for (const FqFactor& f : factors) parts.push_back({deg(f.poly), f.mult});
  std::sort(parts.begin(), parts.end());
  std::string key;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) key += ';';
    key += std::to_string(parts[i].first);
    if (parts[i].second > 1) key += "^" + std::to_string(parts[i].second);
  }
  return key;
}

}  // namespace detail

inline SymplecticCensus symplectic_census(std::int64_t l, std::int64_t g,
                                          std::int64_t qbar) {
  SymplecticSpace sp = symplectic_space(l, g, qbar);
  const FieldCtx& K = *sp.F;

  SymplecticCensus table;
  table.l = l;
  table.g = g;
  table.qbar = sp.qbar;
  table.space = sp.size;

  for (std::int64_t s = 0; s < l; ++s)
    if (K.mul(static_cast<Fq>(s), static_cast<Fq>(s)) == sp.qbar) {
      VanishCount vc;
      vc.s = static_cast<Fq>(s);
      std::int64_t e = 1;
      for (std::int64_t i = 0; i + 1 < g; ++i) e *= l;
      vc.expected = e;
      table.vanish.push_back(vc);
    }

  table.omega = detail::omega_shapes(g);
  std::set<std::vector<Fq>> h_images;

  for (std::uint64_t idx = 0; idx < sp.size; ++idx) {
    PolyFq P = symplectic_by_index(sp, idx);

    for (VanishCount& vc : table.vanish)
      if (peval(P, vc.s) == 0) ++vc.count;

    PolyFq h = real_weil_mod(P, sp.qbar);  // also checks the signed
                                           // functional equation
    h_images.insert(h.c);

    std::vector<FqFactor> factors = factor_fq(P);
    ++table.type_counts[detail::type_key(factors)];
    if (factors.size() == 1 && factors[0].mult == 1)
      ++table.irreducible_count;

    // omega cell classification: squarefree, at most one even-degree factor
    // (itself symplectic), odd factors in reciprocal pairs without fixed
    // points. Each member lands in at most one cell.
    bool squarefree = true;
    for (const FqFactor& f : factors)
      if (f.mult != 1) squarefree = false;
    if (!squarefree) continue;

    std::int64_t k = 0;
    int even_factors = 0;
    bool even_ok = true;
    std::vector<PolyFq> odd;
    for (const FqFactor& f : factors) {
      if (deg(f.poly) % 2 == 0) {
        ++even_factors;
        k = deg(f.poly) / 2;
        if (!is_symplectic_mod(f.poly, sp.qbar)) even_ok = false;
      } else {
        odd.push_back(f.poly);
      }
    }
    if (even_factors > 1 || !even_ok) continue;
    if (even_factors == 0) k = 0;

    bool paired = true;
    std::vector<std::int64_t> n;
    std::set<std::vector<Fq>> odd_set;
    for (const PolyFq& R : odd) odd_set.insert(R.c);
    for (const PolyFq& R : odd) {
      PolyFq Rt = q_reciprocal_mod(R, sp.qbar);
      if (Rt == R || !odd_set.count(Rt.c)) {
        paired = false;
        break;
      }
      std::int64_t i = (deg(R) - 1) / 2;
      if (static_cast<std::int64_t>(n.size()) <= i) n.resize(i + 1, 0);
      ++n[i];
    }
    if (!paired) continue;
    for (std::int64_t& c : n) {
      // every factor was counted once; pairs mean the count is even
      if (c % 2 != 0) { paired = false; break; }
      c /= 2;
    }
    if (!paired) continue;
    while (!n.empty() && n.back() == 0) n.pop_back();

    for (OmegaCell& cell : table.omega)
      if (cell.k == k && cell.n == n) {
        ++cell.count;
        break;
      }
  }

  table.h_map_bijective = h_images.size() == sp.size;
  table.irreducible_fraction = Q(table.irreducible_count, Z(sp.size));
  table.irreducible_fraction.canonicalize();

  for (OmegaCell& cell : table.omega) {
    Z mult = cell.k > 0 ? Z(2 * cell.k) : Z(1);
    for (std::size_t i = 0; i < cell.n.size(); ++i) {
      Z per = 1;
      for (std::int64_t t = 0; t < cell.n[i]; ++t)
        per *= Z(2) * Z(2 * static_cast<std::int64_t>(i) + 1) * Z(t + 1);
      mult *= per;  // 2^{n_i} (2i+1)^{n_i} n_i!
    }
    cell.normalized = Q(Z(cell.count) * mult, Z(sp.size));
    cell.normalized.canonicalize();
    Q diff = cell.normalized - 1;
    cell.within_tolerance = diff * diff * l <= 25;
  }
  return table;
}

// CSV report: section,key,count,normalized,within
inline void write_sympcount_csv(std::ostream& os,
                                const SymplecticCensus& t) {
  os << "section,key,count,normalized,within\n";
  os << "meta,l," << t.l << ",,\n";
  os << "meta,g," << t.g << ",,\n";
  os << "meta,qbar," << t.qbar << ",,\n";
  os << "meta,space," << t.space << ",,\n";
  os << "meta,h_bijective," << (t.h_map_bijective ? 1 : 0) << ",,\n";
  os << "meta,irreducible," << t.irreducible_count << ","
     << t.irreducible_fraction.get_str() << ",\n";
  for (const VanishCount& vc : t.vanish)
    os << "vanish," << vc.s << "," << vc.count << "," << vc.expected
       << ",\n";
  for (const auto& [key, count] : t.type_counts)
    os << "type," << key << "," << count << ",,\n";
  for (const OmegaCell& cell : t.omega) {
    os << "omega," << cell.k;
    for (std::int64_t ni : cell.n) os << ";" << ni;
    os << "," << cell.count << "," << cell.normalized.get_str() << ","
       << (cell.within_tolerance ? 1 : 0) << "\n";
  }
  require(static_cast<bool>(os), errc::io_error, "write failed");
}

}  // namespace ffrace
