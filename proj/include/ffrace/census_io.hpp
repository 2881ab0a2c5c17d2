#pragma once

// Census persistence. CSV and JSON carry the same per-record fields; JSON
// adds a header object with the tool version and the settings that produced
// the run. Both formats round-trip losslessly:
//   - field-element coefficients are written as their canonical integer
//     encoding in [0, q) (base-p digit packing, ascending powers of the
//     generator), semicolon-joined in ascending degree order
//   - densities are written as exact rationals ("2/3", not decimals)
//
// Readers reject unknown column headers (CSV) and version mismatches (JSON)
// instead of guessing, and name the row and field on any parse failure.

#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ffrace/census.hpp"
#include "ffrace/errors.hpp"
#include "ffrace/version.hpp"

namespace ffrace {

inline constexpr const char* kCensusCsvHeader =
    "p,e,n,f_coeffs,P_coeffs,g,m0,mpi,degenerate,M,li_status,complete,lower,"
    "reversed,dens_pos,dens_neg,dens_zero,density_mode,seed";

// Flat serialization image of one census record: exactly the persisted
// fields, nothing derived.
struct CensusRow {
  std::int64_t p = 0, e = 0, n = 0;
  std::string f_coeffs, P_coeffs;
  std::int64_t g = 0, m0 = 0, mpi = 0;
  bool degenerate = false;
  std::int64_t M = 1;
  std::string li_status, complete, lower, reversed;
  Q dens_pos{0}, dens_neg{0}, dens_zero{0};
  std::string density_mode;
  std::uint64_t seed = 0;

  bool operator==(const CensusRow& o) const {
    return p == o.p && e == o.e && n == o.n && f_coeffs == o.f_coeffs &&
           P_coeffs == o.P_coeffs && g == o.g && m0 == o.m0 && mpi == o.mpi &&
           degenerate == o.degenerate && M == o.M &&
           li_status == o.li_status && complete == o.complete &&
           lower == o.lower && reversed == o.reversed &&
           dens_pos == o.dens_pos && dens_neg == o.dens_neg &&
           dens_zero == o.dens_zero && density_mode == o.density_mode &&
           seed == o.seed;
  }
  bool operator!=(const CensusRow& o) const { return !(*this == o); }
};

namespace detail {

inline std::string fq_int_list(const PolyFq& a, char sep = ';') {
  std::string out;
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(a.c[i]);
  }
  return out;
}

inline std::string zpoly_list(const PolyZ& a, char sep = ';') {
  if (a.c.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (i) out += sep;
    out += a.c[i].get_str();
  }
  return out;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string tok;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(tok);
      tok.clear();
    } else {
      tok += ch;
    }
  }
  out.push_back(tok);
  return out;
}

[[noreturn]] inline void parse_fail(std::size_t row, const std::string& field,
                                    const std::string& what) {
  fail(errc::io_error,
       "row " + std::to_string(row) + ", field " + field + ": " + what);
}

inline std::int64_t parse_i64(const std::string& s, std::size_t row,
                              const std::string& field) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    parse_fail(row, field, "expected an integer, got '" + s + "'");
  }
}

inline std::uint64_t parse_u64(const std::string& s, std::size_t row,
                               const std::string& field) {
  try {
    std::size_t pos = 0;
    unsigned long long v = std::stoull(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    parse_fail(row, field, "expected an unsigned integer, got '" + s + "'");
  }
}

inline bool parse_bool01(const std::string& s, std::size_t row,
                         const std::string& field) {
  if (s == "0") return false;
  if (s == "1") return true;
  parse_fail(row, field, "expected 0 or 1, got '" + s + "'");
}

inline Q parse_rational(const std::string& s, std::size_t row,
                        const std::string& field) {
  Q v;
  if (s.empty() || v.set_str(s, 10) != 0)
    parse_fail(row, field, "expected a rational, got '" + s + "'");
  v.canonicalize();
  return v;
}

inline void check_int_list(const std::string& s, std::size_t row,
                           const std::string& field) {
  for (const std::string& tok : split(s, ';')) {
    std::size_t start = (!tok.empty() && tok[0] == '-') ? 1 : 0;
    if (tok.size() == start)
      parse_fail(row, field, "empty coefficient in '" + s + "'");
    for (std::size_t i = start; i < tok.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(tok[i])))
        parse_fail(row, field, "malformed coefficient '" + tok + "'");
  }
}

}  // namespace detail

inline CensusRow census_row(const CensusRecord& rec, std::uint64_t seed) {
  CensusRow row;
  const FieldCtx& F = *rec.f.F;
  row.p = F.p();
  row.e = F.e();
  row.n = deg(rec.f);
  row.f_coeffs = detail::fq_int_list(rec.f);
  row.P_coeffs = detail::zpoly_list(rec.P);
  row.g = rec.g;
  row.m0 = rec.m0;
  row.mpi = rec.mpi;
  row.degenerate = rec.degenerate;
  row.M = rec.torsion_modulus;
  row.li_status = li_status_name(rec.li.status);
  row.complete = verdict_status_name(rec.complete.status);
  row.lower = verdict_status_name(rec.lower.status);
  row.reversed = verdict_status_name(rec.reversed.status);
  row.dens_pos = rec.densities.pos;
  row.dens_neg = rec.densities.neg;
  row.dens_zero = rec.densities.zero;
  row.density_mode = density_mode_name(rec.densities.mode);
  row.seed = seed;
  return row;
}

inline std::vector<CensusRow> census_rows(const CensusResult& res) {
  std::vector<CensusRow> rows;
  rows.reserve(res.records.size());
  for (const CensusRecord& rec : res.records)
    rows.push_back(census_row(rec, res.spec.options.seed));
  return rows;
}

inline std::string census_csv_line(const CensusRow& r) {
  std::string out;
  out += std::to_string(r.p) + ',' + std::to_string(r.e) + ',' +
         std::to_string(r.n) + ',';
  out += r.f_coeffs + ',' + r.P_coeffs + ',';
  out += std::to_string(r.g) + ',' + std::to_string(r.m0) + ',' +
         std::to_string(r.mpi) + ',';
  out += (r.degenerate ? "1," : "0,");
  out += std::to_string(r.M) + ',';
  out += r.li_status + ',' + r.complete + ',' + r.lower + ',' + r.reversed +
         ',';
  out += r.dens_pos.get_str() + ',' + r.dens_neg.get_str() + ',' +
         r.dens_zero.get_str() + ',';
  out += r.density_mode + ',' + std::to_string(r.seed);
  return out;
}

inline void write_census_csv(std::ostream& os,
                             const std::vector<CensusRow>& rows) {
  os << kCensusCsvHeader << '\n';
  for (const CensusRow& r : rows) os << census_csv_line(r) << '\n';
  require(static_cast<bool>(os), errc::io_error, "write failed");
}

inline void write_census_csv(std::ostream& os, const CensusResult& res) {
  write_census_csv(os, census_rows(res));
}

inline std::vector<CensusRow> read_census_csv(std::istream& is) {
  std::string line;
  require(static_cast<bool>(std::getline(is, line)), errc::io_error,
          "empty input: missing column header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  require(line == kCensusCsvHeader, errc::io_error,
          "column header mismatch: got '" + line + "'");

  static const char* const names[] = {
      "p",           "e",        "n",        "f_coeffs", "P_coeffs",
      "g",           "m0",       "mpi",      "degenerate", "M",
      "li_status",   "complete", "lower",    "reversed", "dens_pos",
      "dens_neg",    "dens_zero", "density_mode", "seed"};

  std::vector<CensusRow> rows;
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> f = detail::split(line, ',');
    require(f.size() == 19, errc::io_error,
            "row " + std::to_string(lineno) + ": expected 19 fields, got " +
                std::to_string(f.size()));
    CensusRow r;
    r.p = detail::parse_i64(f[0], lineno, names[0]);
    r.e = detail::parse_i64(f[1], lineno, names[1]);
    r.n = detail::parse_i64(f[2], lineno, names[2]);
    detail::check_int_list(f[3], lineno, names[3]);
    r.f_coeffs = f[3];
    detail::check_int_list(f[4], lineno, names[4]);
    r.P_coeffs = f[4];
    r.g = detail::parse_i64(f[5], lineno, names[5]);
    r.m0 = detail::parse_i64(f[6], lineno, names[6]);
    r.mpi = detail::parse_i64(f[7], lineno, names[7]);
    r.degenerate = detail::parse_bool01(f[8], lineno, names[8]);
    r.M = detail::parse_i64(f[9], lineno, names[9]);
    r.li_status = f[10];
    r.complete = f[11];
    r.lower = f[12];
    r.reversed = f[13];
    r.dens_pos = detail::parse_rational(f[14], lineno, names[14]);
    r.dens_neg = detail::parse_rational(f[15], lineno, names[15]);
    r.dens_zero = detail::parse_rational(f[16], lineno, names[16]);
    r.density_mode = f[17];
    r.seed = detail::parse_u64(f[18], lineno, names[18]);
    rows.push_back(std::move(r));
  }
  return rows;
}

namespace detail {

inline nlohmann::ordered_json settings_json(const CensusSpec& spec) {
  nlohmann::ordered_json s;
  s["mode"] = census_mode_name(spec.mode);
  s["p"] = spec.F->p();
  s["e"] = spec.F->e();
  s["n"] = spec.n;
  if (spec.mode == CensusMode::Sample) s["sample_count"] = spec.sample_count;
  if (spec.mode == CensusMode::Family)
    s["family_g"] = fq_int_list(spec.family_g);
  s["height_bound"] = spec.options.height_bound;
  s["li_bits"] = spec.options.li_bits;
  s["prime_bound"] = spec.options.prime_bound;
  s["empirical_samples"] = spec.options.empirical_samples;
  s["seed"] = spec.options.seed;
  return s;
}

inline nlohmann::ordered_json row_json(const CensusRow& r) {
  nlohmann::ordered_json j;
  j["p"] = r.p;
  j["e"] = r.e;
  j["n"] = r.n;
  j["f_coeffs"] = r.f_coeffs;
  j["P_coeffs"] = r.P_coeffs;
  j["g"] = r.g;
  j["m0"] = r.m0;
  j["mpi"] = r.mpi;
  j["degenerate"] = r.degenerate;
  j["M"] = r.M;
  j["li_status"] = r.li_status;
  j["complete"] = r.complete;
  j["lower"] = r.lower;
  j["reversed"] = r.reversed;
  j["dens_pos"] = r.dens_pos.get_str();
  j["dens_neg"] = r.dens_neg.get_str();
  j["dens_zero"] = r.dens_zero.get_str();
  j["density_mode"] = r.density_mode;
  j["seed"] = r.seed;
  return j;
}

}  // namespace detail

inline void write_census_json(std::ostream& os, const CensusResult& res) {
  nlohmann::ordered_json doc;
  doc["header"]["tool_version"] = kToolVersion;
  doc["header"]["settings"] = detail::settings_json(res.spec);
  nlohmann::ordered_json recs = nlohmann::ordered_json::array();
  for (const CensusRecord& rec : res.records)
    recs.push_back(detail::row_json(census_row(rec, res.spec.options.seed)));
  doc["records"] = std::move(recs);
  os << doc.dump(2) << '\n';
  require(static_cast<bool>(os), errc::io_error, "write failed");
}

inline std::vector<CensusRow> read_census_json(std::istream& is) {
  nlohmann::json doc;
  try {
    is >> doc;
  } catch (const nlohmann::json::exception& ex) {
    fail(errc::io_error, std::string("malformed json: ") + ex.what());
  }
  require(doc.contains("header") && doc["header"].contains("tool_version"),
          errc::io_error, "missing tool_version header");
  std::string ver = doc["header"]["tool_version"].get<std::string>();
  require(ver == kToolVersion, errc::io_error,
          "tool version mismatch: file written by " + ver + ", reader is " +
              kToolVersion);
  require(doc.contains("records") && doc["records"].is_array(),
          errc::io_error, "missing records array");

  std::vector<CensusRow> rows;
  std::size_t idx = 0;
  for (const auto& j : doc["records"]) {
    ++idx;
    try {
      CensusRow r;
      r.p = j.at("p").get<std::int64_t>();
      r.e = j.at("e").get<std::int64_t>();
      r.n = j.at("n").get<std::int64_t>();
      r.f_coeffs = j.at("f_coeffs").get<std::string>();
      r.P_coeffs = j.at("P_coeffs").get<std::string>();
      r.g = j.at("g").get<std::int64_t>();
      r.m0 = j.at("m0").get<std::int64_t>();
      r.mpi = j.at("mpi").get<std::int64_t>();
      r.degenerate = j.at("degenerate").get<bool>();
      r.M = j.at("M").get<std::int64_t>();
      r.li_status = j.at("li_status").get<std::string>();
      r.complete = j.at("complete").get<std::string>();
      r.lower = j.at("lower").get<std::string>();
      r.reversed = j.at("reversed").get<std::string>();
      r.dens_pos = detail::parse_rational(
          j.at("dens_pos").get<std::string>(), idx, "dens_pos");
      r.dens_neg = detail::parse_rational(
          j.at("dens_neg").get<std::string>(), idx, "dens_neg");
      r.dens_zero = detail::parse_rational(
          j.at("dens_zero").get<std::string>(), idx, "dens_zero");
      r.density_mode = j.at("density_mode").get<std::string>();
      r.seed = j.at("seed").get<std::uint64_t>();
      rows.push_back(std::move(r));
    } catch (const nlohmann::json::exception& ex) {
      fail(errc::io_error,
           "record " + std::to_string(idx) + ": " + ex.what());
    }
  }
  return rows;
}

// Rebuild the modulus of a parsed row; the round trip back through
// census_row is the identity on the serialized fields.
inline PolyFq row_modulus(const CensusRow& row) {
  Field F = make_field(row.p, row.e);
  std::vector<Fq> c;
  std::size_t idx = 0;
  for (const std::string& tok : detail::split(row.f_coeffs, ';')) {
    std::int64_t v = detail::parse_i64(tok, ++idx, "f_coeffs");
    require(v >= 0 && v < F->q(), errc::io_error,
            "coefficient " + tok + " outside [0, q)");
    c.push_back(static_cast<Fq>(v));
  }
  return poly_from_coeffs(F, std::move(c));
}

}  // namespace ffrace
