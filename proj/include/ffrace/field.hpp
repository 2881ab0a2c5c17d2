#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

#include "ffrace/errors.hpp"

namespace ffrace {

// An element of F_q is stored as its index in [0, q): the base-p digits of the
// index are the coordinates with respect to the power basis 1, a, a^2, ...,
// a^{e-1}, where a is the class of x modulo the defining polynomial.
using Fq = std::uint32_t;

namespace detail {

// Minimal polynomial arithmetic over F_p on ascending coefficient vectors,
// used only while constructing a FieldCtx (before field tables exist).
using PVec = std::vector<std::int64_t>;

inline void ptrim(PVec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline PVec pmul(const PVec& a, const PVec& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  PVec r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  ptrim(r);
  return r;
}

inline PVec pmod(PVec a, const PVec& m, std::int64_t p) {
  // m monic.
  ptrim(a);
  while (a.size() >= m.size()) {
    std::int64_t c = a.back();
    std::size_t shift = a.size() - m.size();
    if (c != 0)
      for (std::size_t i = 0; i < m.size(); ++i) {
        std::int64_t& t = a[i + shift];
        t = (t - c * m[i]) % p;
        if (t < 0) t += p;
      }
    a.pop_back();
    ptrim(a);
  }
  return a;
}

inline PVec ppowmod(PVec base, std::int64_t n, const PVec& m, std::int64_t p) {
  PVec r{1};
  base = pmod(std::move(base), m, p);
  while (n > 0) {
    if (n & 1) r = pmod(pmul(r, base, p), m, p);
    base = pmod(pmul(base, base, p), m, p);
    n >>= 1;
  }
  return r;
}

inline PVec pgcd(PVec a, PVec b, std::int64_t p) {
  ptrim(a);
  ptrim(b);
  while (!b.empty()) {
    // Make b monic before reducing so pmod applies.
    std::int64_t lc = b.back();
    std::int64_t inv = 1;
    for (std::int64_t t = 1; t < p; ++t)
      if ((lc * t) % p == 1) {
        inv = t;
        break;
      }
    PVec bm = b;
    for (auto& c : bm) c = (c * inv) % p;
    PVec r = pmod(a, bm, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

inline bool fp_poly_irreducible(const PVec& m, std::int64_t p) {
  const std::int64_t e = static_cast<std::int64_t>(m.size()) - 1;
  if (e < 1) return false;
  if (e == 1) return true;
  PVec x{0, 1};
  // r = x^(p^k) mod m, advanced one Frobenius step at a time.
  PVec r = x;
  std::vector<PVec> frob_steps(e + 1);
  for (std::int64_t k = 1; k <= e; ++k) {
    r = ppowmod(std::move(r), p, m, p);
    frob_steps[k] = r;
  }
  PVec diff = frob_steps[e];
  diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
  diff[1] = (diff[1] - 1 + p) % p;
  ptrim(diff);
  if (!diff.empty()) return false;  // x^(p^e) != x
  for (std::int64_t d : prime_factors(e)) {
    PVec g = frob_steps[e / d];
    g.resize(std::max<std::size_t>(g.size(), 2), 0);
    g[1] = (g[1] - 1 + p) % p;
    ptrim(g);
    if (pgcd(m, g, p).size() != 1) return false;
  }
  return true;
}

struct ConwayEntry {
  std::int64_t p;
  std::int64_t e;
  std::vector<std::int64_t> coeffs;  // ascending
};

// Defining polynomials for the small extension fields used throughout; each
// entry is checked for irreducibility and primitivity when the field is built.
inline const std::vector<ConwayEntry>& conway_table() {
  static const std::vector<ConwayEntry> table = {
      {3, 2, {2, 2, 1}},
      {3, 3, {1, 2, 0, 1}},
      {3, 4, {2, 0, 0, 2, 1}},
      {3, 5, {1, 0, 0, 0, 2, 1}},
      {3, 6, {2, 2, 1, 0, 2, 0, 1}},
      {5, 2, {2, 4, 1}},
      {5, 3, {3, 3, 0, 1}},
      {5, 4, {2, 4, 4, 0, 1}},
      {7, 2, {3, 6, 1}},
      {7, 3, {4, 0, 6, 1}},
      {11, 2, {2, 7, 1}},
      {13, 2, {2, 12, 1}},
  };
  return table;
}

}  // namespace detail

class FieldCtx {
 public:
  static constexpr std::int64_t kMaxQ = 1 << 20;
  static constexpr std::int64_t kTableCap = 1024;

  std::int64_t p() const { return p_; }
  std::int64_t e() const { return e_; }
  std::int64_t q() const { return q_; }
  const std::vector<std::int64_t>& modulus() const { return modulus_; }

  Fq zero() const { return 0; }
  Fq one() const { return 1; }
  // Class of x for e >= 2 (primitive by construction); for e = 1 the smallest
  // primitive root mod p.
  Fq generator() const { return gen_; }

  Fq add(Fq a, Fq b) const {
    if (tables_) return add_[idx(a, b)];
    return add_slow(a, b);
  }
  Fq sub(Fq a, Fq b) const { return add(a, neg(b)); }
  Fq neg(Fq a) const {
    if (tables_) return neg_[a];
    return neg_slow(a);
  }
  Fq mul(Fq a, Fq b) const {
    if (tables_) return mul_[idx(a, b)];
    return mul_slow(a, b);
  }
  Fq inv(Fq a) const {
    require(a != 0, errc::bad_input, "inverse of zero in F_q");
    if (tables_) return inv_[a];
    return pow(a, q_ - 2);
  }
  Fq pow(Fq a, std::int64_t n) const {
    if (n < 0) {
      a = inv(a);
      n = -n;
    }
    Fq r = 1;
    while (n > 0) {
      if (n & 1) r = mul(r, a);
      a = mul(a, a);
      n >>= 1;
    }
    return r;
  }
  Fq frobenius(Fq a) const { return pow(a, p_); }

  // Quadratic character of F_q: +1 on nonzero squares, -1 on nonsquares, 0 at 0.
  int eta(Fq a) const { return eta_[a]; }

  // Multiplicative order (q <= kMaxQ keeps this a desk computation).
  std::int64_t order(Fq a) const {
    require(a != 0, errc::bad_input, "order of zero");
    std::int64_t n = q_ - 1;
    for (std::int64_t r : detail::prime_factors(q_ - 1))
      while (n % r == 0 && pow(a, n / r) == 1) n /= r;
    return n;
  }

  // Embed an integer as the constant (prime-subfield) element n mod p.
  Fq from_int(std::int64_t n) const {
    n %= p_;
    if (n < 0) n += p_;
    return static_cast<Fq>(n);
  }

  std::vector<std::int64_t> coords(Fq a) const {
    std::vector<std::int64_t> c(e_);
    for (std::int64_t i = 0; i < e_; ++i) {
      c[i] = a % p_;
      a = static_cast<Fq>(a / p_);
    }
    return c;
  }
  Fq from_coords(const std::vector<std::int64_t>& c) const {
    require(static_cast<std::int64_t>(c.size()) <= e_, errc::bad_input,
            "coordinate vector longer than extension degree");
    std::int64_t a = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
      std::int64_t d = c[i] % p_;
      if (d < 0) d += p_;
      a = a * p_ + d;
    }
    return static_cast<Fq>(a);
  }

  // Display form: plain residue for prime fields, bracketed ascending
  // coordinate list such as [2,1] for extensions.
  std::string format(Fq a) const {
    if (e_ == 1) return std::to_string(a);
    std::ostringstream os;
    os << '[';
    auto c = coords(a);
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) os << ',';
      os << c[i];
    }
    os << ']';
    return os.str();
  }

  Fq parse(const std::string& s) const {
    if (s.empty()) fail(errc::bad_input, "empty field element");
    if (s.front() != '[') {
      std::size_t pos = 0;
      long long v = std::stoll(s, &pos);
      require(pos == s.size(), errc::bad_input, "bad field element: " + s);
      return from_int(v);
    }
    require(s.back() == ']', errc::bad_input, "unterminated element: " + s);
    std::vector<std::int64_t> c;
    std::string body = s.substr(1, s.size() - 2);
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, ',')) c.push_back(std::stoll(tok));
    require(static_cast<std::int64_t>(c.size()) == e_, errc::bad_input,
            "element has wrong coordinate count: " + s);
    return from_coords(c);
  }

  // Construction goes through make_field below.
  FieldCtx(std::int64_t p, std::int64_t e, std::vector<std::int64_t> modulus)
      : p_(p), e_(e), modulus_(std::move(modulus)) {
    q_ = 1;
    for (std::int64_t i = 0; i < e_; ++i) {
      q_ *= p_;
      require(q_ <= kMaxQ, errc::too_large, "q exceeds supported bound");
    }
    if (e_ >= 2)
      require(detail::fp_poly_irreducible(modulus_, p_), errc::internal,
              "defining polynomial is not irreducible");
    if (q_ <= kTableCap) {
      build_tables();
      tables_ = true;
    }
    gen_ = find_generator();
    build_eta();
  }

 private:
  std::size_t idx(Fq a, Fq b) const {
    return static_cast<std::size_t>(a) * q_ + b;
  }

  Fq add_slow(Fq a, Fq b) const {
    if (e_ == 1) return static_cast<Fq>((a + b) % p_);
    // Digit-wise addition mod p (no carries between coordinates).
    std::int64_t r = 0, mult = 1;
    for (std::int64_t i = 0; i < e_; ++i) {
      std::int64_t d = (a % p_ + b % p_) % p_;
      r += d * mult;
      a /= p_;
      b /= p_;
      mult *= p_;
    }
    return static_cast<Fq>(r);
  }

  Fq neg_slow(Fq a) const {
    if (e_ == 1) return static_cast<Fq>((p_ - a) % p_);
    std::int64_t r = 0, mult = 1;
    for (std::int64_t i = 0; i < e_; ++i) {
      std::int64_t d = (p_ - a % p_) % p_;
      r += d * mult;
      a /= p_;
      mult *= p_;
    }
    return static_cast<Fq>(r);
  }

  Fq mul_slow(Fq a, Fq b) const {
    if (e_ == 1)
      return static_cast<Fq>((static_cast<std::int64_t>(a) * b) % p_);
    std::vector<std::int64_t> prod(2 * e_ - 1, 0);
    auto ca = coords(a), cb = coords(b);
    for (std::int64_t i = 0; i < e_; ++i) {
      if (ca[i] == 0) continue;
      for (std::int64_t j = 0; j < e_; ++j)
        prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
    }
    for (std::int64_t k = 2 * e_ - 2; k >= e_; --k) {
      std::int64_t c = prod[k];
      if (c == 0) continue;
      for (std::int64_t i = 0; i < e_; ++i) {
        std::int64_t& t = prod[k - e_ + i];
        t = (t - c * modulus_[i]) % p_;
        if (t < 0) t += p_;
      }
      prod[k] = 0;
    }
    prod.resize(e_);
    std::int64_t r = 0;
    for (std::int64_t i = e_ - 1; i >= 0; --i) r = r * p_ + prod[i];
    return static_cast<Fq>(r);
  }

  void build_tables() {
    add_.resize(static_cast<std::size_t>(q_) * q_);
    mul_.resize(static_cast<std::size_t>(q_) * q_);
    neg_.resize(q_);
    inv_.resize(q_);
    for (std::int64_t a = 0; a < q_; ++a) {
      neg_[a] = neg_slow(static_cast<Fq>(a));
      for (std::int64_t b = 0; b < q_; ++b) {
        add_[idx(a, b)] = add_slow(static_cast<Fq>(a), static_cast<Fq>(b));
        mul_[idx(a, b)] = mul_slow(static_cast<Fq>(a), static_cast<Fq>(b));
      }
    }
    inv_[0] = 0;
    for (std::int64_t a = 1; a < q_; ++a)
      for (std::int64_t b = 1; b < q_; ++b)
        if (mul_[idx(a, b)] == 1) {
          inv_[a] = static_cast<Fq>(b);
          break;
        }
  }

  Fq find_generator() const {
    if (e_ >= 2) return static_cast<Fq>(p_);  // class of x
    for (std::int64_t g = 2; g < p_; ++g)
      if (order(static_cast<Fq>(g)) == p_ - 1) return static_cast<Fq>(g);
    return 1;  // p == 2 never happens (odd characteristic enforced upstream)
  }

  void build_eta() {
    eta_.assign(q_, 0);
    // eta(gen^k) = (-1)^k; walking powers of a generator marks every nonzero
    // element exactly once.
    Fq z = 1;
    int sign = 1;
    for (std::int64_t k = 0; k < q_ - 1; ++k) {
      eta_[z] = static_cast<std::int8_t>(sign);
      z = mul(z, gen_);
      sign = -sign;
    }
  }

  std::int64_t p_, e_, q_;
  std::vector<std::int64_t> modulus_;
  bool tables_ = false;
  std::vector<Fq> add_, mul_, neg_, inv_;
  std::vector<std::int8_t> eta_;
  Fq gen_ = 0;
};

using Field = std::shared_ptr<const FieldCtx>;

namespace detail {

inline bool is_prime_i64(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::int64_t> find_field_modulus(std::int64_t p,
                                                    std::int64_t e) {
  if (e == 1) return {0, 1};  // modulus x; residues are the constants
  for (const auto& entry : conway_table())
    if (entry.p == p && entry.e == e) return entry.coeffs;
  // Fallback: first monic primitive polynomial, ordering candidates by the
  // ascending-degree coefficient tuple read as a base-p integer.
  std::int64_t count = 1;
  for (std::int64_t i = 0; i < e; ++i) count *= p;
  for (std::int64_t idx2 = 0; idx2 < count; ++idx2) {
    std::vector<std::int64_t> m(e + 1, 0);
    m[e] = 1;
    std::int64_t t = idx2;
    for (std::int64_t i = 0; i < e; ++i) {
      m[i] = t % p;
      t /= p;
    }
    if (m[0] == 0) continue;  // x | m, not irreducible
    if (!fp_poly_irreducible(m, p)) continue;
    bool primitive = true;
    for (std::int64_t r : prime_factors(count - 1)) {
      PVec pw = ppowmod({0, 1}, (count - 1) / r, m, p);
      if (pw.size() == 1 && pw[0] == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) return m;
  }
  fail(errc::internal, "no primitive polynomial found");
}

}  // namespace detail

// Build (and cache) the field with q = p^e elements. Odd characteristic only.
inline Field make_field(std::int64_t p, std::int64_t e) {
  require(p != 2, errc::even_characteristic, "characteristic 2 not supported");
  require(detail::is_prime_i64(p), errc::non_prime,
          "p = " + std::to_string(p) + " is not prime");
  require(e >= 1, errc::bad_input, "extension degree must be positive");
  std::int64_t q = 1;
  for (std::int64_t i = 0; i < e; ++i) {
    q *= p;
    require(q <= FieldCtx::kMaxQ, errc::too_large, "q exceeds supported bound");
  }
  static std::mutex mu;
  static std::map<std::pair<std::int64_t, std::int64_t>, Field> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, e);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto field =
      std::make_shared<const FieldCtx>(p, e, detail::find_field_modulus(p, e));
  if (e >= 2)
    require(field->order(static_cast<Fq>(p)) == field->q() - 1, errc::internal,
            "defining polynomial root is not primitive");
  cache.emplace(key, field);
  return field;
}

}  // namespace ffrace
