#include "macsum/realbinom.hpp"

#include <sstream>
#include <stdexcept>

namespace macsum {

namespace {

// Largest integer n >= h with C(n,h) <= d, for d >= 1.
Int integer_bracket(const Int& d, unsigned long h) {
  Int lo(static_cast<long>(h));
  Int hi = lo + 1;
  while (binom_int(hi, h) <= d) {
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > 1) {
    Int mid = (lo + hi) / 2;
    if (binom_int(mid, h) <= d)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

}  // namespace

Enclosure refine_x(const Enclosure& e, const Int& d, unsigned long h) {
  if (e.is_point()) return e;
  Rat mid = (e.lo + e.hi) / 2;
  Rat v = binom_rat(mid, h);
  int c = cmp(v, Rat(d));
  if (c == 0) return {mid, mid};
  if (c < 0) return {mid, e.hi};
  return {e.lo, mid};
}

Enclosure solve_x(const Int& d, unsigned long h, const Rat& tol) {
  if (d < 1) throw std::invalid_argument("solve_x: d must be >= 1");
  if (h == 0) throw std::invalid_argument("solve_x: h must be >= 1");
  if (sgn(tol) <= 0) throw std::invalid_argument("solve_x: tol must be positive");
  Int n = integer_bracket(d, h);
  if (binom_int(n, h) == d) {
    Rat p(n);
    return {p, p};
  }
  Enclosure e{Rat(n), Rat(n + 1)};
  while (!e.is_point() && e.width() > tol) e = refine_x(e, d, h);
  return e;
}

BoundPair plunnecke_bounds(const Int& m, unsigned long h) {
  if (m < 1) throw std::invalid_argument("plunnecke_bounds: m must be >= 1");
  if (h == 0) throw std::invalid_argument("plunnecke_bounds: h must be >= 1");
  Int mlo, mhi;
  mpz_pow_ui(mlo.get_mpz_t(), m.get_mpz_t(), h - 1);
  mpz_pow_ui(mhi.get_mpz_t(), m.get_mpz_t(), h + 1);
  return {ceil_root(mlo, h), floor_root(mhi, h)};
}

BoundPair condensed_bounds(const Int& m, unsigned long h) {
  if (m < 1) throw std::invalid_argument("condensed_bounds: m must be >= 1");
  if (h < 2) throw std::invalid_argument("condensed_bounds: h must be >= 2");
  Enclosure e = solve_x(m, h, Rat(1));
  // Refine until the ceilings/floors of the endpoint evaluations agree,
  // so both returned integers are exact. A rational x is necessarily an
  // integer (x(x-1)...(x-h+1) = h! m is monic over Z), so for a
  // non-point enclosure x is irrational and both loops terminate.
  for (int iter = 0; iter < 100000; ++iter) {
    Int lo_ceil = ceil_rat(binom_rat(e.lo - 1, h - 1));
    Int hi_ceil = ceil_rat(binom_rat(e.hi - 1, h - 1));
    Int lo_floor = floor_rat(binom_rat(e.lo + 1, h + 1));
    Int hi_floor = floor_rat(binom_rat(e.hi + 1, h + 1));
    if (lo_ceil == hi_ceil && lo_floor == hi_floor) return {lo_ceil, lo_floor};
    e = refine_x(e, m, h);
  }
  throw std::runtime_error("condensed_bounds: rounding did not stabilize");
}

Enclosure chain_upper(unsigned long i, unsigned long h,
                      const std::vector<Enclosure>& xs) {
  if (!(1 <= i && i < h)) throw std::invalid_argument("chain_upper: need 1 <= i < h");
  if (xs.size() <= h) throw std::invalid_argument("chain_upper: enclosures missing");
  Enclosure prod{Rat(1), Rat(1)};
  for (unsigned long j = i + 1; j <= h; ++j) {
    if (sgn(xs[j].lo) <= 0 || xs[j].lo > xs[j].hi)
      throw std::invalid_argument("chain_upper: invalid enclosure");
    Rat den(static_cast<long>(j));
    prod.lo *= xs[j].lo / den;
    prod.hi *= xs[j].hi / den;
  }
  return prod;
}

Enclosure root_decimal(const Rat& t, unsigned long r, unsigned digits) {
  if (sgn(t) < 0) throw std::invalid_argument("root_decimal: t must be nonnegative");
  if (r == 0) throw std::invalid_argument("root_decimal: r must be >= 1");
  Int scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  Int scale_r;
  mpz_pow_ui(scale_r.get_mpz_t(), scale.get_mpz_t(), r);
  Int n;
  mpz_fdiv_q(n.get_mpz_t(), Int(t.get_num() * scale_r).get_mpz_t(),
             t.get_den().get_mpz_t());
  Int k = floor_root(n, r);
  // The truncation above can land one step off; certify by exact powering.
  while (k > 0 && pow_rat(Rat(k) / Rat(scale), r) > t) --k;
  while (pow_rat(Rat(k + 1) / Rat(scale), r) < t) ++k;
  Rat lo = Rat(k) / Rat(scale);
  Rat hi = Rat(k + 1) / Rat(scale);
  if (pow_rat(lo, r) == t) return {lo, lo};
  if (pow_rat(hi, r) == t) return {hi, hi};
  return {lo, hi};
}

std::string to_decimal(const Rat& v, unsigned digits, bool round_up) {
  Int scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  Rat scaled = v * Rat(scale);
  Int n = round_up ? ceil_rat(scaled) : floor_rat(scaled);
  bool neg = sgn(n) < 0;
  Int a = abs(n);
  Int ip = a / scale;
  Int fp = a % scale;
  std::ostringstream os;
  if (neg) os << "-";
  os << ip;
  if (digits > 0) {
    std::string f = fp.get_str();
    os << "." << std::string(digits - f.size(), '0') << f;
  }
  return os.str();
}

}  // namespace macsum
