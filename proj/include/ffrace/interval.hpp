#pragma once

#include <mpfr.h>

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>

#include "ffrace/int_poly.hpp"

namespace ffrace {

// Closed interval [lo, hi] with endpoints rounded outward at every step, so
// the true value of any computed expression is always inside. Precision is
// fixed per value; callers escalate precision themselves when an enclosure
// is too wide to decide a predicate.
class Interval {
 public:
  static constexpr mpfr_prec_t kDefaultPrec = 128;
  static constexpr mpfr_prec_t kMaxPrec = 4096;

  explicit Interval(mpfr_prec_t prec = kDefaultPrec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
  }
  Interval(const Interval& o) {
    mpfr_init2(lo_, mpfr_get_prec(o.lo_));
    mpfr_init2(hi_, mpfr_get_prec(o.hi_));
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  Interval(Interval&& o) noexcept {
    mpfr_init2(lo_, 2);
    mpfr_init2(hi_, 2);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
  }
  Interval& operator=(Interval o) noexcept {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    return *this;
  }
  ~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
  }

  mpfr_prec_t prec() const { return mpfr_get_prec(lo_); }
  const mpfr_t& lo() const { return lo_; }
  const mpfr_t& hi() const { return hi_; }
  mpfr_t& lo_mut() { return lo_; }
  mpfr_t& hi_mut() { return hi_; }

  static Interval from_long(long v, mpfr_prec_t prec = kDefaultPrec) {
    Interval r(prec);
    mpfr_set_si(r.lo_, v, MPFR_RNDD);
    mpfr_set_si(r.hi_, v, MPFR_RNDU);
    return r;
  }
  static Interval from_z(const Z& v, mpfr_prec_t prec = kDefaultPrec) {
    Interval r(prec);
    mpfr_set_z(r.lo_, v.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi_, v.get_mpz_t(), MPFR_RNDU);
    return r;
  }
  static Interval from_q(const Q& v, mpfr_prec_t prec = kDefaultPrec) {
    Interval r(prec);
    mpfr_set_q(r.lo_, v.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, v.get_mpq_t(), MPFR_RNDU);
    return r;
  }
  static Interval from_q_pair(const Q& a, const Q& b,
                              mpfr_prec_t prec = kDefaultPrec) {
    Interval r(prec);
    mpfr_set_q(r.lo_, a.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, b.get_mpq_t(), MPFR_RNDU);
    return r;
  }
  static Interval pi(mpfr_prec_t prec = kDefaultPrec) {
    Interval r(prec);
    mpfr_const_pi(r.lo_, MPFR_RNDD);
    mpfr_const_pi(r.hi_, MPFR_RNDU);
    return r;
  }
  static Interval sqrt_long(long v, mpfr_prec_t prec = kDefaultPrec) {
    Interval r(prec);
    mpfr_sqrt_ui(r.lo_, static_cast<unsigned long>(v), MPFR_RNDD);
    mpfr_sqrt_ui(r.hi_, static_cast<unsigned long>(v), MPFR_RNDU);
    return r;
  }

  // -1 / +1 when the whole interval is on one side of zero, 0 otherwise.
  int sign() const {
    if (mpfr_sgn(lo_) > 0) return 1;
    if (mpfr_sgn(hi_) < 0) return -1;
    return 0;
  }
  bool contains_zero() const { return sign() == 0; }

  double mid() const {
    return (mpfr_get_d(lo_, MPFR_RNDN) + mpfr_get_d(hi_, MPFR_RNDN)) / 2;
  }
  double wid() const {
    mpfr_t w;
    mpfr_init2(w, 64);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    double out = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return out;
  }

  // Exact rational endpoints (binary floats are rationals).
  Q lo_q() const { return to_q(lo_); }
  Q hi_q() const { return to_q(hi_); }

 private:
  static Q to_q(const mpfr_t& x) {
    if (mpfr_zero_p(x)) return Q(0);
    Z m;
    mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), x);
    Q r(m);
    Q two(2);
    if (e >= 0) {
      Z p;
      mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e));
      r *= Q(p);
    } else {
      Z p;
      mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(-e));
      r /= Q(p);
    }
    return r;
  }

  mpfr_t lo_, hi_;
};

inline Interval operator+(const Interval& a, const Interval& b) {
  Interval r(std::max(a.prec(), b.prec()));
  mpfr_add(r.lo_mut(), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_add(r.hi_mut(), a.hi(), b.hi(), MPFR_RNDU);
  return r;
}

inline Interval operator-(const Interval& a) {
  Interval r(a.prec());
  mpfr_neg(r.lo_mut(), a.hi(), MPFR_RNDD);
  mpfr_neg(r.hi_mut(), a.lo(), MPFR_RNDU);
  return r;
}

inline Interval operator-(const Interval& a, const Interval& b) {
  Interval r(std::max(a.prec(), b.prec()));
  mpfr_sub(r.lo_mut(), a.lo(), b.hi(), MPFR_RNDD);
  mpfr_sub(r.hi_mut(), a.hi(), b.lo(), MPFR_RNDU);
  return r;
}

inline Interval operator*(const Interval& a, const Interval& b) {
  mpfr_prec_t prec = std::max(a.prec(), b.prec());
  Interval r(prec);
  mpfr_t t;
  mpfr_init2(t, prec);
  const mpfr_t* as[2] = {&a.lo(), &a.hi()};
  const mpfr_t* bs[2] = {&b.lo(), &b.hi()};
  bool first = true;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      mpfr_mul(t, *as[i], *bs[j], MPFR_RNDD);
      if (first || mpfr_cmp(t, r.lo()) < 0) mpfr_set(r.lo_mut(), t, MPFR_RNDD);
      mpfr_mul(t, *as[i], *bs[j], MPFR_RNDU);
      if (first || mpfr_cmp(t, r.hi()) > 0) mpfr_set(r.hi_mut(), t, MPFR_RNDU);
      first = false;
    }
  mpfr_clear(t);
  return r;
}

// a / b for sign-definite b (does not contain zero).
inline Interval div_nonzero(const Interval& a, const Interval& b) {
  require(!b.contains_zero(), errc::internal,
          "interval division by an interval containing zero");
  mpfr_prec_t prec = std::max(a.prec(), b.prec());
  Interval r(prec);
  mpfr_t t;
  mpfr_init2(t, prec);
  const mpfr_t* as[2] = {&a.lo(), &a.hi()};
  const mpfr_t* bs[2] = {&b.lo(), &b.hi()};
  bool first = true;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      mpfr_div(t, *as[i], *bs[j], MPFR_RNDD);
      if (first || mpfr_cmp(t, r.lo()) < 0) mpfr_set(r.lo_mut(), t, MPFR_RNDD);
      mpfr_div(t, *as[i], *bs[j], MPFR_RNDU);
      if (first || mpfr_cmp(t, r.hi()) > 0) mpfr_set(r.hi_mut(), t, MPFR_RNDU);
      first = false;
    }
  mpfr_clear(t);
  return r;
}

inline Interval scale_z(const Interval& a, const Z& k) {
  Interval r(a.prec());
  if (sgn(k) >= 0) {
    mpfr_mul_z(r.lo_mut(), a.lo(), k.get_mpz_t(), MPFR_RNDD);
    mpfr_mul_z(r.hi_mut(), a.hi(), k.get_mpz_t(), MPFR_RNDU);
  } else {
    mpfr_mul_z(r.lo_mut(), a.hi(), k.get_mpz_t(), MPFR_RNDD);
    mpfr_mul_z(r.hi_mut(), a.lo(), k.get_mpz_t(), MPFR_RNDU);
  }
  return r;
}

// acos over [-1, 1]; inputs are clamped, so a slightly spilled enclosure of a
// genuine cosine still yields a valid enclosure of its angle.
inline Interval acos_clamped(const Interval& a) {
  Interval r(a.prec());
  mpfr_t t;
  mpfr_init2(t, a.prec());
  auto clamp_set = [&](const mpfr_t& src) {
    if (mpfr_cmp_si(src, 1) > 0)
      mpfr_set_si(t, 1, MPFR_RNDN);
    else if (mpfr_cmp_si(src, -1) < 0)
      mpfr_set_si(t, -1, MPFR_RNDN);
    else
      mpfr_set(t, src, MPFR_RNDN);
  };
  // acos decreases: the result's lower endpoint comes from the upper input
  clamp_set(a.hi());
  mpfr_acos(r.lo_mut(), t, MPFR_RNDD);
  clamp_set(a.lo());
  mpfr_acos(r.hi_mut(), t, MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

// Upper bound on |a| as a coarse double (infinity if out of range).
inline double abs_upper(const Interval& a) {
  double l = std::abs(mpfr_get_d(a.lo(), MPFR_RNDU));
  double h = std::abs(mpfr_get_d(a.hi(), MPFR_RNDU));
  return std::max(l, h);
}

// a < b certainly?
inline bool certainly_less(const Interval& a, const Interval& b) {
  return mpfr_cmp(a.hi(), b.lo()) < 0;
}

inline Interval eval_interval(const PolyZ& P, const Interval& x,
                              mpfr_prec_t prec) {
  Interval acc(prec);
  for (std::size_t i = P.c.size(); i-- > 0;) {
    acc = acc * x;
    acc = acc + Interval::from_z(P.c[i], prec);
  }
  return acc;
}

}  // namespace ffrace
