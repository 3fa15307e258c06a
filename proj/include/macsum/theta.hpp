#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "macsum/arith.hpp"
#include "macsum/realbinom.hpp"

namespace macsum {

// theta(x,h) = (h/x) C(x,h)^{1/h}, carried around as the exact rational
// theta(x,h)^h plus a certified decimal bracket of theta itself.
struct ThetaValue {
  Enclosure x;
  unsigned long h = 1;
  bool exact = false;        // x known exactly, so theta^h is rational
  Rat theta_pow_h;           // exact value when `exact`
  Enclosure theta_pow_enc;   // enclosure of theta^h, always valid
  Enclosure decimal;         // certified decimal bracket of theta itself
};

/// Exact rational theta(x,h)^h = (h/x)^h C(x,h). Requires x >= h >= 1.
Rat theta_pow(const Rat& x, unsigned long h);

/// Exact ordering of theta(x,h) vs c, decided as theta_pow(x,h) vs c^h.
Ordering theta_cmp(const Rat& x, unsigned long h, const Rat& c);

/// Exact ordering of theta(x,h) vs c for integer x, via a single integer
/// comparison C(x,h) h^h c_den^h vs c_num^h x^h.
Ordering theta_cmp_int(const Int& x, unsigned long h, const Rat& c);

/// Certified decimal bracket of theta(x,h) with width <= 10^-digits.
Enclosure theta_decimal(const Rat& x, unsigned long h, unsigned digits);

/// Certified enclosure of lim_{x->inf} theta(x,h) = (2 pi h)^{-1/(2h)} e.
Enclosure theta_limit(unsigned long h, unsigned digits = 60);

/// The asymptotic approximation (2x-h) e / (2x (2 pi h)^{1/(2h)}), as a
/// certified enclosure of the approximation value itself (not a bound on
/// theta; the regime of validity is x >> h).
Enclosure theta_approx(const Rat& x, unsigned long h, unsigned digits = 30);

/// Least integer x in [h, x_max] with theta(x,h) >= c, or nullopt.
/// Binary search by monotonicity of theta in x; `linear` forces a
/// full scan for auditing.
std::optional<Int> min_x_threshold(unsigned long h, const Rat& c,
                                   const Int& x_max, bool linear = false);

/// The h in [1,x] maximizing theta(x,h); ties go to the smaller h.
/// Cross-h comparisons are exact (cross-powered rationals).
std::pair<unsigned long, ThetaValue> argmax_h(unsigned long x,
                                              unsigned digits = 6);

/// Rows (h, decimal bracket of theta(x,h)) for h = 1..x.
std::vector<std::pair<unsigned long, Enclosure>> theta_curve(
    unsigned long x, unsigned digits = 6);

struct RegionResult {
  bool ok = true;
  unsigned long first_failure = 0;  // least failing h, when !ok
};

/// True iff theta(x,h) >= c for every integer h in [h_lo, h_hi].
/// Large instances are screened with certified MPFR interval arithmetic
/// and resolved exactly whenever the screen is inconclusive.
RegionResult region_check(const Int& x, unsigned long h_lo,
                          unsigned long h_hi, const Rat& c);

/// Approximate maximizer h of theta(x,.) from 2h^2 = (2x-h)(ln(2 pi h)-1);
/// numeric, non-certified.
Rat hstar_estimate(const Rat& x);

/// Approximate maximizer x of theta(.,h): (2h^2/(ln(2 pi h)-1) + h)/2;
/// numeric, non-certified.
Rat xstar_estimate(unsigned long h);

}  // namespace macsum
