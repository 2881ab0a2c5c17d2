#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <string>

#include "ffrace/errors.hpp"

namespace ffrace {

namespace detail {
inline std::int64_t isqrt_i64(std::int64_t n) {
  std::int64_t r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}
}  // namespace detail

// Exact element a + b*sqrt(q) of Q(sqrt(q)). When q is a perfect square the
// representation is canonicalized to b = 0, so equality and sign tests never
// see a hidden rational disguised as a surd.
struct SqrtQNumber {
  std::int64_t q = 0;
  mpq_class a, b;

  SqrtQNumber() = default;
  SqrtQNumber(std::int64_t q_, mpq_class a_, mpq_class b_)
      : q(q_), a(std::move(a_)), b(std::move(b_)) {
    canonicalize();
  }

  static SqrtQNumber rational(std::int64_t q_, mpq_class a_) {
    return SqrtQNumber(q_, std::move(a_), 0);
  }

  bool square_base() const { return sqrt_exact() >= 0; }
  // sqrt(q) if q is a perfect square, else -1.
  std::int64_t sqrt_exact() const {
    std::int64_t s = detail::isqrt_i64(q);
    return s * s == q ? s : -1;
  }

  void canonicalize() {
    std::int64_t s = sqrt_exact();
    if (s >= 0 && b != 0) {
      a += b * s;
      b = 0;
    }
    a.canonicalize();
    b.canonicalize();
  }

  bool is_zero() const { return a == 0 && b == 0; }

  // Exact sign: -1, 0, +1.
  int sign() const {
    const int sa = sgn(a), sb = sgn(b);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: compare a^2 with b^2 q (sqrt(q) irrational here)
    mpq_class lhs = a * a, rhs = b * b * q;
    if (lhs == rhs)
      fail(errc::internal, "sqrt(q) behaved rationally in sign test");
    const bool abs_a_wins = lhs > rhs;
    return abs_a_wins ? sa : sb;
  }

  double to_double() const {
    return a.get_d() + b.get_d() * std::sqrt(static_cast<double>(q));
  }

  std::string str() const {
    if (b == 0) return a.get_str();
    std::string out = a == 0 ? "" : a.get_str();
    if (b > 0 && !out.empty()) out += "+";
    out += b.get_str() + "*sqrt(" + std::to_string(q) + ")";
    return out;
  }

 private:
  static int sgn(const mpq_class& x) { return mpq_sgn(x.get_mpq_t()); }
};

inline SqrtQNumber operator+(const SqrtQNumber& x, const SqrtQNumber& y) {
  require(x.q == y.q, errc::bad_input, "mixed sqrt(q) bases");
  return SqrtQNumber(x.q, x.a + y.a, x.b + y.b);
}
inline SqrtQNumber operator-(const SqrtQNumber& x, const SqrtQNumber& y) {
  require(x.q == y.q, errc::bad_input, "mixed sqrt(q) bases");
  return SqrtQNumber(x.q, x.a - y.a, x.b - y.b);
}
inline SqrtQNumber operator-(const SqrtQNumber& x) {
  return SqrtQNumber(x.q, -x.a, -x.b);
}
inline SqrtQNumber operator*(const SqrtQNumber& x, const SqrtQNumber& y) {
  require(x.q == y.q, errc::bad_input, "mixed sqrt(q) bases");
  return SqrtQNumber(x.q, x.a * y.a + x.b * y.b * x.q,
                     x.a * y.b + x.b * y.a);
}
inline bool operator==(const SqrtQNumber& x, const SqrtQNumber& y) {
  return x.q == y.q && x.a == y.a && x.b == y.b;
}

}  // namespace ffrace
