#include "macsum/theta.hpp"

#include <cmath>
#include <stdexcept>

#include "mpfr_interval.hpp"

namespace macsum {

using detail::MpfrInterval;

Rat theta_pow(const Rat& x, unsigned long h) {
  if (h == 0) throw std::invalid_argument("theta_pow: h must be >= 1");
  if (x < Rat(static_cast<long>(h)))
    throw std::invalid_argument("theta_pow: requires x >= h");
  return pow_rat(Rat(static_cast<long>(h)) / x, h) * binom_rat(x, h);
}

Ordering theta_cmp(const Rat& x, unsigned long h, const Rat& c) {
  if (x.get_den() == 1) return theta_cmp_int(x.get_num(), h, c);
  return ordering_of(cmp(theta_pow(x, h), pow_rat(c, h)));
}

Ordering theta_cmp_int(const Int& x, unsigned long h, const Rat& c) {
  if (h == 0) throw std::invalid_argument("theta_cmp_int: h must be >= 1");
  if (x < static_cast<long>(h))
    throw std::invalid_argument("theta_cmp_int: requires x >= h");
  // theta^h >= c^h  <=>  C(x,h) h^h c_den^h >= c_num^h x^h
  Int hh, cd, cn, xh;
  mpz_ui_pow_ui(hh.get_mpz_t(), h, h);
  mpz_pow_ui(cd.get_mpz_t(), c.get_den().get_mpz_t(), h);
  mpz_pow_ui(cn.get_mpz_t(), c.get_num().get_mpz_t(), h);
  mpz_pow_ui(xh.get_mpz_t(), x.get_mpz_t(), h);
  return ordering_of(cmp(binom_int(x, h) * hh * cd, cn * xh));
}

Enclosure theta_decimal(const Rat& x, unsigned long h, unsigned digits) {
  return root_decimal(theta_pow(x, h), h, digits);
}

namespace {

mpfr_prec_t prec_for(unsigned digits) {
  return static_cast<mpfr_prec_t>(digits * 4 + 64);
}

// (2 pi h)^{1/(2h)} as an interval.
MpfrInterval two_pi_h_root(unsigned long h, mpfr_prec_t prec) {
  MpfrInterval t = MpfrInterval::pi(prec)
                       .mul_pos(MpfrInterval::from_ulong(2 * h, prec));
  return t.log().div_ui(2 * h).exp();
}

}  // namespace

Enclosure theta_limit(unsigned long h, unsigned digits) {
  if (h == 0) throw std::invalid_argument("theta_limit: h must be >= 1");
  mpfr_prec_t prec = prec_for(digits);
  MpfrInterval e = MpfrInterval::e(prec);
  return e.div_pos(two_pi_h_root(h, prec)).to_enclosure();
}

Enclosure theta_approx(const Rat& x, unsigned long h, unsigned digits) {
  if (h == 0) throw std::invalid_argument("theta_approx: h must be >= 1");
  if (x < Rat(static_cast<long>(h)))
    throw std::invalid_argument("theta_approx: requires x >= h");
  mpfr_prec_t prec = prec_for(digits);
  Rat num_rat = 2 * x - Rat(static_cast<long>(h));
  MpfrInterval num = MpfrInterval::from_rat(num_rat, prec)
                         .mul_pos(MpfrInterval::e(prec));
  MpfrInterval den = MpfrInterval::from_rat(2 * x, prec)
                         .mul_pos(two_pi_h_root(h, prec));
  return num.div_pos(den).to_enclosure();
}

std::optional<Int> min_x_threshold(unsigned long h, const Rat& c,
                                   const Int& x_max, bool linear) {
  if (h == 0) throw std::invalid_argument("min_x_threshold: h must be >= 1");
  Int first(static_cast<long>(h));
  if (x_max < first) return std::nullopt;
  auto ge = [&](const Int& x) { return theta_cmp_int(x, h, c) != Ordering::Less; };
  if (linear) {
    for (Int x = first; x <= x_max; ++x)
      if (ge(x)) return x;
    return std::nullopt;
  }
  if (!ge(x_max)) return std::nullopt;
  Int lo = first, hi = x_max;
  while (lo < hi) {
    Int mid = (lo + hi) / 2;
    if (ge(mid))
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

std::pair<unsigned long, ThetaValue> argmax_h(unsigned long x, unsigned digits) {
  if (x == 0) throw std::invalid_argument("argmax_h: x must be >= 1");
  Rat xr(static_cast<long>(x));
  unsigned long best_h = 1;
  Rat best_pow = theta_pow(xr, 1);
  for (unsigned long h = 2; h <= x; ++h) {
    Rat t = theta_pow(xr, h);
    if (cmp_pow(t, h, best_pow, best_h) == Ordering::Greater) {
      best_h = h;
      best_pow = t;
    }
  }
  ThetaValue tv;
  tv.x = {xr, xr};
  tv.h = best_h;
  tv.exact = true;
  tv.theta_pow_h = best_pow;
  tv.theta_pow_enc = {best_pow, best_pow};
  tv.decimal = root_decimal(best_pow, best_h, digits);
  return {best_h, tv};
}

std::vector<std::pair<unsigned long, Enclosure>> theta_curve(unsigned long x,
                                                             unsigned digits) {
  if (x == 0) throw std::invalid_argument("theta_curve: x must be >= 1");
  std::vector<std::pair<unsigned long, Enclosure>> rows;
  rows.reserve(x);
  Rat xr(static_cast<long>(x));
  for (unsigned long h = 1; h <= x; ++h)
    rows.emplace_back(h, theta_decimal(xr, h, digits));
  return rows;
}

namespace {

// ln theta(x,h) - ln c as an interval, for exact integer x.
MpfrInterval ln_theta_gap(const Int& x, unsigned long h, const Rat& c,
                          mpfr_prec_t prec) {
  MpfrInterval lnb = MpfrInterval::lngamma_int(x + 1, prec)
                         .sub(MpfrInterval::lngamma_int(Int(static_cast<long>(h) + 1), prec))
                         .sub(MpfrInterval::lngamma_int(x - static_cast<long>(h) + 1, prec));
  MpfrInterval lnh = MpfrInterval::from_ulong(h, prec).log();
  MpfrInterval lnx = MpfrInterval::from_int(x, prec).log();
  MpfrInterval lnc = MpfrInterval::from_rat(c, prec).log();
  return lnh.sub(lnx).add(lnb.div_ui(h)).sub(lnc);
}

// theta(x,h) >= c, screened by certified interval arithmetic, resolved
// exactly when the screen is inconclusive.
bool theta_ge_screened(const Int& x, unsigned long h, const Rat& c) {
  for (mpfr_prec_t prec : {mpfr_prec_t(128), mpfr_prec_t(256)}) {
    MpfrInterval gap = ln_theta_gap(x, h, c, prec);
    if (gap.strictly_positive()) return true;
    if (gap.strictly_negative()) return false;
  }
  return theta_cmp_int(x, h, c) != Ordering::Less;
}

}  // namespace

RegionResult region_check(const Int& x, unsigned long h_lo, unsigned long h_hi,
                          const Rat& c) {
  if (h_lo > h_hi || x < static_cast<long>(h_hi))
    throw std::invalid_argument("region_check: need h_lo <= h_hi <= x");
  // Exact evaluation cost per h grows with h log x; small instances go
  // straight to exact arithmetic.
  bool small = x <= 5000;
  for (unsigned long h = h_lo; h <= h_hi; ++h) {
    bool ok = small ? theta_cmp_int(x, h, c) != Ordering::Less
                    : theta_ge_screened(x, h, c);
    if (!ok) return {false, h};
  }
  return {true, 0};
}

Rat hstar_estimate(const Rat& x) {
  double xd = x.get_d();
  if (xd < 2) throw std::invalid_argument("hstar_estimate: x must be >= 2");
  // root of 2h^2 - (2x-h)(ln(2 pi h)-1) in h, bisected over [1, x].
  auto f = [xd](double h) {
    return 2 * h * h - (2 * xd - h) * (std::log(2 * M_PI * h) - 1);
  };
  double lo = 1.0, hi = xd;
  if (f(lo) > 0) return Rat(1);
  for (int i = 0; i < 200; ++i) {
    double mid = (lo + hi) / 2;
    (f(mid) <= 0 ? lo : hi) = mid;
  }
  return Rat((lo + hi) / 2);
}

Rat xstar_estimate(unsigned long h) {
  if (h < 2) throw std::invalid_argument("xstar_estimate: h must be >= 2");
  double hd = static_cast<double>(h);
  double x1 = 0.5 * (2 * hd * hd / (std::log(2 * M_PI * hd) - 1) + hd);
  return Rat(x1);
}

}  // namespace macsum
