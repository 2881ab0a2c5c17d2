#pragma once

// Census engine: run the whole analysis chain (character -> L-polynomial ->
// spectral data -> LI verdict -> bias verdicts -> sign densities) over a set
// of squarefree monic moduli and aggregate the outcomes.
//
// Three ways to pick the moduli:
//   Full    every squarefree monic f of degree n (capped at q^n <= 10^7)
//   Sample  a seeded random subset of that space, reported in index order
//   Family  f_t = g(x) * (x - t) for a fixed even-degree squarefree monic g,
//           t running over the field points where g(t) != 0
//
// Records are produced in enumeration order regardless of the worker count,
// and every record is a pure function of (f, settings), so identical inputs
// give identical results.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "ffrace/bias.hpp"
#include "ffrace/charsums.hpp"
#include "ffrace/classify.hpp"
#include "ffrace/errors.hpp"
#include "ffrace/field.hpp"
#include "ffrace/li.hpp"
#include "ffrace/poly_fq.hpp"
#include "ffrace/rng.hpp"
#include "ffrace/spectral.hpp"
#include "ffrace/zeta.hpp"

namespace ffrace {

enum class CensusMode { Full, Sample, Family };

inline const char* census_mode_name(CensusMode m) {
  switch (m) {
    case CensusMode::Full: return "full";
    case CensusMode::Sample: return "sample";
    case CensusMode::Family: return "family";
  }
  return "?";
}

// Knobs shared by every record of one run. Frozen into output headers so a
// result file pins the settings that produced it.
struct CensusOptions {
  std::int64_t height_bound = 20;        // LI relation search height
  int li_bits = 200;                     // working precision for LI checks
  std::int64_t prime_bound = 500;        // cycle-evidence prime scan bound
  std::int64_t empirical_samples = 100000;  // N for empirical densities
  std::uint64_t seed = 0;                // sampling + any randomized density
};

struct CensusSpec {
  Field F;
  std::int64_t n = 0;  // modulus degree; inferred in Family mode when 0
  CensusMode mode = CensusMode::Full;
  std::int64_t sample_count = 0;  // Sample mode
  PolyFq family_g;                // Family mode
  CensusOptions options;
};

// One analyzed modulus. Timing is informational only and never serialized,
// so output files stay byte-identical across runs.
struct CensusRecord {
  PolyFq f;
  PolyZ P;
  std::int64_t g = 0;
  std::int64_t m0 = 0, mpi = 0;
  bool degenerate = false;
  std::int64_t torsion_modulus = 1;
  LIVerdict li;
  BiasVerdict complete, lower, reversed;
  DensityReport densities;
  std::int64_t micros = 0;
};

struct CensusSummary {
  std::int64_t q = 0, n = 0;
  CensusMode mode = CensusMode::Full;
  std::int64_t records = 0;
  std::int64_t complete_yes = 0, complete_no = 0, complete_unknown = 0;
  std::int64_t lower_yes = 0, lower_no = 0, lower_unknown = 0;
  std::int64_t reversed_yes = 0, reversed_no = 0, reversed_unknown = 0;
  std::int64_t li_fails = 0, li_unknown = 0;
  std::int64_t degenerate_count = 0;

  Q fraction(std::int64_t count) const {
    if (records == 0) return Q(0);
    Q r(count, records);
    r.canonicalize();
    return r;
  }
  Q li_fail_fraction() const { return fraction(li_fails); }
  Q complete_fraction() const { return fraction(complete_yes); }
  Q lower_fraction() const { return fraction(lower_yes); }
  Q reversed_fraction() const { return fraction(reversed_yes); }
};

struct CensusResult {
  CensusSpec spec;  // spec as executed (n filled in for Family mode)
  std::vector<CensusRecord> records;
  CensusSummary summary;
};

// Full analysis of a single modulus. Pure given (F, f, opt).
inline CensusRecord analyze_modulus(const Field& F, const PolyFq& f,
                                    const CensusOptions& opt = {}) {
  auto t0 = std::chrono::steady_clock::now();
  CensusRecord rec;
  rec.f = f;

  CharCtx chi(F, f);
  WeilData w = weil_analysis(chi);
  rec.P = w.P;
  rec.g = w.g;

  SpectralReport rep = spectral_analysis(w.P, w.q);
  rec.m0 = rep.m0;
  rec.mpi = rep.mpi;
  rec.degenerate = rep.degenerate;
  rec.torsion_modulus = rep.torsion_modulus;

  rec.li = li_verdict(rep, opt.height_bound, opt.li_bits);

  ClassifyOptions copt;
  copt.empirical_samples = opt.empirical_samples;
  copt.prime_bound = opt.prime_bound;
  copt.seed = opt.seed;
  rec.complete = classify_complete(rep, copt);
  rec.lower = classify_lower_order(rep, copt);
  rec.reversed = classify_reversed(rep, copt);

  rec.densities =
      sign_densities(rep, opt.empirical_samples, DensityMode::Auto, opt.seed);

  rec.micros = std::chrono::duration_cast<std::chrono::microseconds>(
                   std::chrono::steady_clock::now() - t0)
                   .count();
  return rec;
}

namespace detail {

inline std::uint64_t checked_pow_u64(std::int64_t q, std::int64_t n,
                                     std::uint64_t cap) {
  std::uint64_t total = 1;
  for (std::int64_t i = 0; i < n; ++i) {
    require(total <= cap / static_cast<std::uint64_t>(q), errc::too_large,
            "enumeration space exceeds supported size");
    total *= static_cast<std::uint64_t>(q);
  }
  return total;
}

inline void tally(CensusSummary& s, const CensusRecord& rec) {
  ++s.records;
  auto bump = [](const BiasVerdict& v, std::int64_t& yes, std::int64_t& no,
                 std::int64_t& unknown) {
    switch (v.status) {
      case VerdictStatus::Yes: ++yes; break;
      case VerdictStatus::No: ++no; break;
      case VerdictStatus::Unknown: ++unknown; break;
    }
  };
  bump(rec.complete, s.complete_yes, s.complete_no, s.complete_unknown);
  bump(rec.lower, s.lower_yes, s.lower_no, s.lower_unknown);
  bump(rec.reversed, s.reversed_yes, s.reversed_no, s.reversed_unknown);
  if (rec.li.status == LIStatus::Fails)
    ++s.li_fails;
  else
    ++s.li_unknown;
  if (rec.degenerate) ++s.degenerate_count;
}

// Moduli for one run, in the order their records are reported.
inline std::vector<PolyFq> census_moduli(const CensusSpec& spec,
                                         std::int64_t& n_out) {
  const Field& F = spec.F;
  const std::int64_t q = F->q();
  std::vector<PolyFq> out;

  switch (spec.mode) {
    case CensusMode::Full: {
      require(spec.n >= 1, errc::bad_degree, "census degree must be positive");
      n_out = spec.n;
      const std::uint64_t total = checked_pow_u64(q, spec.n, 10000000ULL);
      out.reserve(total);
      for (std::uint64_t idx = 0; idx < total; ++idx) {
        PolyFq f = monic_by_index(F, spec.n, idx);
        if (is_squarefree(f)) out.push_back(std::move(f));
      }
      break;
    }
    case CensusMode::Sample: {
      require(spec.n >= 1, errc::bad_degree, "census degree must be positive");
      n_out = spec.n;
      const std::uint64_t total =
          checked_pow_u64(q, spec.n, 1ULL << 62);  // index space only
      std::uint64_t population =
          spec.n >= 2 ? total - total / static_cast<std::uint64_t>(q)
                      : static_cast<std::uint64_t>(q);
      require(spec.sample_count >= 1, errc::bad_input,
              "sample count must be positive");
      require(static_cast<std::uint64_t>(spec.sample_count) <= population,
              errc::bad_input, "sample count exceeds the number of "
                               "squarefree monic polynomials");
      Rng rng(spec.options.seed);
      std::set<std::uint64_t> chosen;
      while (chosen.size() < static_cast<std::size_t>(spec.sample_count)) {
        std::uint64_t idx = rng.below(total);
        if (chosen.count(idx)) continue;
        if (!is_squarefree(monic_by_index(F, spec.n, idx))) continue;
        chosen.insert(idx);
      }
      out.reserve(chosen.size());
      for (std::uint64_t idx : chosen)  // std::set iterates ascending
        out.push_back(monic_by_index(F, spec.n, idx));
      break;
    }
    case CensusMode::Family: {
      const PolyFq& g = spec.family_g;
      require(!g.c.empty(), errc::bad_family, "family polynomial is empty");
      require(is_monic(g), errc::bad_family,
              "family polynomial must be monic");
      require(deg(g) % 2 == 0, errc::bad_family,
              "family polynomial must have even degree");
      require(deg(g) == 0 || is_squarefree(g), errc::bad_family,
              "family polynomial must be squarefree");
      n_out = deg(g) + 1;
      require(spec.n == 0 || spec.n == n_out, errc::bad_input,
              "census degree disagrees with the family degree");
      for (std::int64_t t = 0; t < q; ++t) {
        Fq tv = static_cast<Fq>(t);
        if (peval(g, tv) == 0) continue;
        PolyFq lin = poly_from_coeffs(F, {F->neg(tv), 1});
        out.push_back(pmul(g, lin));
      }
      break;
    }
  }
  return out;
}

}  // namespace detail

// Run the census. `jobs` only partitions the work; records always come back
// in enumeration order with identical content.
inline CensusResult census_scan(const CensusSpec& spec, int jobs = 1) {
  CensusResult res;
  res.spec = spec;

  std::int64_t n = spec.n;
  std::vector<PolyFq> moduli = detail::census_moduli(spec, n);
  res.spec.n = n;

  res.records.resize(moduli.size());
  const CensusOptions& opt = spec.options;

  if (jobs <= 1 || moduli.size() <= 1) {
    for (std::size_t i = 0; i < moduli.size(); ++i)
      res.records[i] = analyze_modulus(spec.F, moduli[i], opt);
  } else {
    const std::size_t workers =
        std::min<std::size_t>(static_cast<std::size_t>(jobs), moduli.size());
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w]() {
        for (std::size_t i = w; i < moduli.size(); i += workers)
          res.records[i] = analyze_modulus(spec.F, moduli[i], opt);
      });
    }
    for (auto& th : pool) th.join();
  }

  res.summary.q = spec.F->q();
  res.summary.n = n;
  res.summary.mode = spec.mode;
  for (const CensusRecord& rec : res.records)
    detail::tally(res.summary, rec);
  return res;
}

}  // namespace ffrace
