#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ffrace/errors.hpp"
#include "ffrace/int_poly.hpp"

namespace ffrace {

using ZRow = std::vector<Z>;
using ZMat = std::vector<ZRow>;

namespace detail {

inline Z round_q(const Q& x) {
  // nearest integer, ties rounded up
  Z num = x.get_num() * 2 + x.get_den();
  Z den = x.get_den() * 2;
  Z r;
  mpz_fdiv_q(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return r;
}

}  // namespace detail

// Exact Lovasz-reduction (delta = 3/4) of the given row basis, in the
// all-integer formulation: d[j+1] are the leading Gram determinants and
// lambda[i][j] = mu_ij * d[j+1], so no rationals ever appear. Rows must be
// linearly independent.
inline void lll_reduce(ZMat& B) {
  const std::size_t m = B.size();
  if (m <= 1) return;
  const std::size_t n = B[0].size();
  for (const ZRow& row : B)
    require(row.size() == n, errc::bad_input, "ragged lattice basis");

  auto dot = [n](const ZRow& a, const ZRow& b) {
    Z s = 0;
    for (std::size_t t = 0; t < n; ++t) s += a[t] * b[t];
    return s;
  };

  std::vector<Z> d(m + 1);
  d[0] = 1;
  std::vector<std::vector<Z>> lam(m, std::vector<Z>(m, Z(0)));
  auto init_row = [&](std::size_t i) {
    for (std::size_t j = 0; j <= i; ++j) {
      Z u = dot(B[i], B[j]);
      for (std::size_t t = 0; t < j; ++t) {
        u = u * d[t + 1] - lam[i][t] * lam[j][t];
        mpz_divexact(u.get_mpz_t(), u.get_mpz_t(), d[t].get_mpz_t());
      }
      if (j < i)
        lam[i][j] = u;
      else
        d[i + 1] = u;
    }
    require(d[i + 1] > 0, errc::bad_input, "dependent rows in lattice basis");
  };
  for (std::size_t i = 0; i < m; ++i) init_row(i);

  auto red = [&](std::size_t k, std::size_t l) {
    Z two_lam = 2 * lam[k][l];
    if (two_lam > d[l + 1] || -two_lam > d[l + 1]) {
      // nearest integer to lambda / d
      Z qq;
      Z num = two_lam + d[l + 1];
      Z den = 2 * d[l + 1];
      mpz_fdiv_q(qq.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      for (std::size_t t = 0; t < n; ++t) B[k][t] -= qq * B[l][t];
      lam[k][l] -= qq * d[l + 1];
      for (std::size_t t = 0; t < l; ++t) lam[k][t] -= qq * lam[l][t];
    }
  };
  auto swap_step = [&](std::size_t k) {
    std::swap(B[k], B[k - 1]);
    for (std::size_t j = 0; j + 1 < k; ++j) std::swap(lam[k][j], lam[k - 1][j]);
    Z l0 = lam[k][k - 1];
    Z Bv = d[k - 1] * d[k + 1] + l0 * l0;
    mpz_divexact(Bv.get_mpz_t(), Bv.get_mpz_t(), d[k].get_mpz_t());
    for (std::size_t i = k + 1; i < m; ++i) {
      Z t = lam[i][k];
      lam[i][k] = d[k + 1] * lam[i][k - 1] - l0 * t;
      mpz_divexact(lam[i][k].get_mpz_t(), lam[i][k].get_mpz_t(),
                   d[k].get_mpz_t());
      lam[i][k - 1] = Bv * t + l0 * lam[i][k];
      mpz_divexact(lam[i][k - 1].get_mpz_t(), lam[i][k - 1].get_mpz_t(),
                   d[k + 1].get_mpz_t());
    }
    d[k] = Bv;
  };

  std::size_t k = 1;
  while (k < m) {
    red(k, k - 1);
    Z lhs = 4 * d[k + 1] * d[k - 1];
    Z rhs = 3 * d[k] * d[k] - 4 * lam[k][k - 1] * lam[k][k - 1];
    if (lhs < rhs) {
      swap_step(k);
      k = k > 1 ? k - 1 : 1;
    } else {
      for (std::size_t l = k - 1; l-- > 0;) red(k, l);
      ++k;
    }
  }
}

// Row-style Hermite form: echelon basis of the integer row span, pivots
// positive, entries above each pivot reduced into [0, pivot). Zero rows are
// dropped.
inline ZMat hnf_rows(ZMat A) {
  const std::size_t rows = A.size();
  if (rows == 0) return A;
  const std::size_t cols = A[0].size();
  for (const ZRow& row : A)
    require(row.size() == cols, errc::bad_input, "ragged matrix");

  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && A[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(A[r], A[piv]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      while (A[i][c] != 0) {
        Z qq;
        mpz_tdiv_q(qq.get_mpz_t(), A[r][c].get_mpz_t(), A[i][c].get_mpz_t());
        if (qq != 0)
          for (std::size_t t = 0; t < cols; ++t) A[r][t] -= qq * A[i][t];
        std::swap(A[r], A[i]);
      }
    }
    if (A[r][c] < 0)
      for (std::size_t t = 0; t < cols; ++t) A[r][t] = -A[r][t];
    for (std::size_t i = 0; i < r; ++i) {
      Z qq;
      mpz_fdiv_q(qq.get_mpz_t(), A[i][c].get_mpz_t(), A[r][c].get_mpz_t());
      if (qq != 0)
        for (std::size_t t = 0; t < cols; ++t) A[i][t] -= qq * A[r][t];
    }
    ++r;
  }
  A.resize(r);
  return A;
}

// Does v lie in the integer row span of the echelon basis H (as produced by
// hnf_rows)?
inline bool in_row_span(const ZMat& H, ZRow v) {
  for (const ZRow& row : H) {
    std::size_t pc = 0;
    while (pc < row.size() && row[pc] == 0) ++pc;
    if (pc == row.size()) continue;
    require(pc < v.size(), errc::bad_input, "dimension mismatch");
    if (v[pc] == 0) continue;
    Z qq, rem;
    mpz_tdiv_qr(qq.get_mpz_t(), rem.get_mpz_t(), v[pc].get_mpz_t(),
                row[pc].get_mpz_t());
    if (rem != 0) return false;
    for (std::size_t t = 0; t < v.size(); ++t) v[t] -= qq * row[t];
  }
  for (const Z& x : v)
    if (x != 0) return false;
  return true;
}

// Smith form data of an integer matrix M: unimodular column tracking V and
// the diagonal entries d_1 | d_2 | ... of U M V. The substitution x = V y
// turns the simultaneous congruences "M x == 0 (mod L)" in x into the
// independent ones "d_i y_i == 0 (mod L)".
struct SmithForm {
  std::vector<Z> diag;  // nonzero diagonal entries, divisibility chain
  ZMat V;               // square, unimodular; columns tracked through the ops
};

inline SmithForm smith_normal_form(ZMat A) {
  const std::size_t m = A.size();
  const std::size_t n = m ? A[0].size() : 0;
  for (const ZRow& row : A)
    require(row.size() == n, errc::bad_input, "ragged matrix");
  ZMat V(n, ZRow(n, Z(0)));
  for (std::size_t i = 0; i < n; ++i) V[i][i] = 1;

  auto col_sub = [&](std::size_t dst, std::size_t src, const Z& qq) {
    for (std::size_t rr = 0; rr < m; ++rr) A[rr][dst] -= qq * A[rr][src];
    for (std::size_t rr = 0; rr < n; ++rr) V[rr][dst] -= qq * V[rr][src];
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    for (std::size_t rr = 0; rr < m; ++rr) std::swap(A[rr][a], A[rr][b]);
    for (std::size_t rr = 0; rr < n; ++rr) std::swap(V[rr][a], V[rr][b]);
  };
  auto col_neg = [&](std::size_t a) {
    for (std::size_t rr = 0; rr < m; ++rr) A[rr][a] = -A[rr][a];
    for (std::size_t rr = 0; rr < n; ++rr) V[rr][a] = -V[rr][a];
  };

  const std::size_t bound = std::min(m, n);
  auto diagonalize = [&] {
    for (std::size_t t = 0; t < bound; ++t) {
      // locate a nonzero entry in the trailing block
      std::size_t pr = t, pc = t;
      bool found = false;
      for (std::size_t i = t; i < m && !found; ++i)
        for (std::size_t j = t; j < n && !found; ++j)
          if (A[i][j] != 0) {
            pr = i;
            pc = j;
            found = true;
          }
      if (!found) return;
      std::swap(A[t], A[pr]);
      if (pc != t) col_swap(t, pc);
      for (;;) {
        bool touched = false;
        for (std::size_t i = t + 1; i < m; ++i) {
          while (A[i][t] != 0) {
            Z qq;
            mpz_tdiv_q(qq.get_mpz_t(), A[t][t].get_mpz_t(),
                       A[i][t].get_mpz_t());
            if (qq != 0)
              for (std::size_t c = 0; c < n; ++c) A[t][c] -= qq * A[i][c];
            std::swap(A[t], A[i]);
            touched = true;
          }
        }
        for (std::size_t j = t + 1; j < n; ++j) {
          while (A[t][j] != 0) {
            Z qq;
            mpz_tdiv_q(qq.get_mpz_t(), A[t][t].get_mpz_t(),
                       A[t][j].get_mpz_t());
            if (qq != 0) col_sub(t, j, qq);
            col_swap(t, j);
            touched = true;
          }
        }
        if (!touched) break;
      }
      if (A[t][t] < 0) col_neg(t);
    }
  };

  for (;;) {
    diagonalize();
    // enforce the divisibility chain
    bool dirty = false;
    for (std::size_t i = 0; i + 1 < bound && !dirty; ++i) {
      if (A[i][i] == 0) break;
      for (std::size_t j = i + 1; j < bound && !dirty; ++j) {
        if (A[j][j] == 0) break;
        if (A[j][j] % A[i][i] != 0) {
          col_sub(i, j, Z(-1));  // re-entangle the pair, then re-diagonalize
          dirty = true;
        }
      }
    }
    if (!dirty) break;
  }

  SmithForm out;
  out.V = std::move(V);
  for (std::size_t t = 0; t < bound; ++t) {
    if (A[t][t] == 0) break;
    out.diag.push_back(A[t][t]);
  }
  return out;
}

}  // namespace ffrace
