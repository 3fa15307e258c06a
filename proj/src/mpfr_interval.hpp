#pragma once

#include <mpfr.h>

#include <cassert>

#include "macsum/arith.hpp"
#include "macsum/realbinom.hpp"

namespace macsum::detail {

// Minimal directed-rounding interval layer over MPFR. Only the operations
// the theta module needs; multiplication and division assume nonnegative
// operands.
class MpfrInterval {
 public:
  explicit MpfrInterval(mpfr_prec_t prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
  }
  MpfrInterval(const MpfrInterval& o) : MpfrInterval(mpfr_get_prec(o.lo_)) {
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  MpfrInterval& operator=(const MpfrInterval& o) {
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
    return *this;
  }
  ~MpfrInterval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
  }

  mpfr_prec_t prec() const { return mpfr_get_prec(lo_); }

  static MpfrInterval from_ulong(unsigned long v, mpfr_prec_t prec) {
    MpfrInterval r(prec);
    mpfr_set_ui(r.lo_, v, MPFR_RNDD);
    mpfr_set_ui(r.hi_, v, MPFR_RNDU);
    return r;
  }
  static MpfrInterval from_int(const Int& v, mpfr_prec_t prec) {
    MpfrInterval r(prec);
    mpfr_set_z(r.lo_, v.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi_, v.get_mpz_t(), MPFR_RNDU);
    return r;
  }
  static MpfrInterval from_rat(const Rat& v, mpfr_prec_t prec) {
    MpfrInterval r(prec);
    mpfr_set_q(r.lo_, v.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, v.get_mpq_t(), MPFR_RNDU);
    return r;
  }
  static MpfrInterval pi(mpfr_prec_t prec) {
    MpfrInterval r(prec);
    mpfr_const_pi(r.lo_, MPFR_RNDD);
    mpfr_const_pi(r.hi_, MPFR_RNDU);
    return r;
  }
  static MpfrInterval e(mpfr_prec_t prec) {
    MpfrInterval r(prec);
    mpfr_set_ui(r.lo_, 1, MPFR_RNDD);
    mpfr_exp(r.lo_, r.lo_, MPFR_RNDD);
    mpfr_set_ui(r.hi_, 1, MPFR_RNDU);
    mpfr_exp(r.hi_, r.hi_, MPFR_RNDU);
    return r;
  }
  // lngamma at an exact integer point >= 1.
  static MpfrInterval lngamma_int(const Int& v, mpfr_prec_t prec) {
    assert(sgn(v) > 0);
    MpfrInterval x = from_int(v, prec + 32);
    MpfrInterval r(prec);
    mpfr_lngamma(r.lo_, x.lo_, MPFR_RNDD);
    mpfr_lngamma(r.hi_, x.hi_, MPFR_RNDU);
    return r;
  }

  MpfrInterval add(const MpfrInterval& o) const {
    MpfrInterval r(prec());
    mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
  }
  MpfrInterval sub(const MpfrInterval& o) const {
    MpfrInterval r(prec());
    mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
    return r;
  }
  MpfrInterval neg() const {
    MpfrInterval r(prec());
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
  }
  // Both operands nonnegative.
  MpfrInterval mul_pos(const MpfrInterval& o) const {
    assert(mpfr_sgn(lo_) >= 0 && mpfr_sgn(o.lo_) >= 0);
    MpfrInterval r(prec());
    mpfr_mul(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_mul(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
  }
  // this nonnegative, divisor strictly positive.
  MpfrInterval div_pos(const MpfrInterval& o) const {
    assert(mpfr_sgn(lo_) >= 0 && mpfr_sgn(o.lo_) > 0);
    MpfrInterval r(prec());
    mpfr_div(r.lo_, lo_, o.hi_, MPFR_RNDD);
    mpfr_div(r.hi_, hi_, o.lo_, MPFR_RNDU);
    return r;
  }
  MpfrInterval div_ui(unsigned long v) const {
    // sign-safe: dividing both endpoints by a positive scalar.
    MpfrInterval r(prec());
    mpfr_div_ui(r.lo_, lo_, v, MPFR_RNDD);
    mpfr_div_ui(r.hi_, hi_, v, MPFR_RNDU);
    return r;
  }
  MpfrInterval log() const {
    assert(mpfr_sgn(lo_) > 0);
    MpfrInterval r(prec());
    mpfr_log(r.lo_, lo_, MPFR_RNDD);
    mpfr_log(r.hi_, hi_, MPFR_RNDU);
    return r;
  }
  MpfrInterval exp() const {
    MpfrInterval r(prec());
    mpfr_exp(r.lo_, lo_, MPFR_RNDD);
    mpfr_exp(r.hi_, hi_, MPFR_RNDU);
    return r;
  }

  bool strictly_positive() const { return mpfr_sgn(lo_) > 0; }
  bool strictly_negative() const { return mpfr_sgn(hi_) < 0; }

  Enclosure to_enclosure() const {
    Rat lo, hi;
    mpfr_get_q(lo.get_mpq_t(), lo_);
    mpfr_get_q(hi.get_mpq_t(), hi_);
    return {lo, hi};
  }

 private:
  mpfr_t lo_;
  mpfr_t hi_;
};

}  // namespace macsum::detail
