#pragma once

#include <string>
#include <vector>

#include "macsum/arith.hpp"

namespace macsum {

// A certified rational interval [lo,hi] bracketing a real quantity.
// Certification is by exact sign evaluations at the endpoints; lo == hi
// means the quantity is known exactly.
struct Enclosure {
  Rat lo;
  Rat hi;

  Rat width() const { return hi - lo; }
  bool is_point() const { return lo == hi; }
};

/// Certified enclosure of the unique real x >= h with C(x,h) = d.
/// Requires d >= 1, h >= 1, tol > 0. The result satisfies
/// binom_rat(lo,h) <= d <= binom_rat(hi,h) and hi-lo <= tol; exact
/// integer solutions give a point enclosure.
Enclosure solve_x(const Int& d, unsigned long h, const Rat& tol);

/// One refinement (dyadic bisection) step; endpoints keep the bracketing
/// invariant of solve_x.
Enclosure refine_x(const Enclosure& e, const Int& d, unsigned long h);

struct BoundPair {
  Int lower_prev;  // bound on |(h-1)A|
  Int upper_next;  // bound on |(h+1)A|
};

/// Condensed-Macaulay bounds: ceil C(x-1,h-1) and floor C(x+1,h+1) with
/// C(x,h)=m, both exact (the enclosure of x is refined until rounding is
/// unambiguous). Requires m >= 1, h >= 2.
BoundPair condensed_bounds(const Int& m, unsigned long h);

/// Plunnecke bounds: ceil m^{(h-1)/h} and floor m^{(h+1)/h}, exact via
/// integer h-th roots. Requires m >= 1; lower_prev needs h >= 2.
BoundPair plunnecke_bounds(const Int& m, unsigned long h);

/// Certified enclosure of prod_{j=i+1}^h x_j/j, given enclosures of the
/// x_j with C(x_j,j)=|jA|. xs is indexed by j (xs[j] used for i<j<=h).
Enclosure chain_upper(unsigned long i, unsigned long h,
                      const std::vector<Enclosure>& xs);

/// Certified decimal bracket of t^{1/r} with width <= 10^-digits:
/// endpoints are multiples of 10^-digits and the bracket is verified by
/// exact rational powering. Requires t >= 0.
Enclosure root_decimal(const Rat& t, unsigned long r, unsigned digits);

/// v printed with `digits` decimal places, rounded down (round_up=false)
/// or up. Exact, no floating point.
std::string to_decimal(const Rat& v, unsigned digits, bool round_up);

}  // namespace macsum
