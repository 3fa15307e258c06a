#pragma once

#include <gmpxx.h>

#include <compare>

namespace macsum {

// Arbitrary-precision integers and rationals. mpq_class keeps rationals
// canonical (lowest terms, positive denominator), which the rest of the
// library relies on.
using Int = mpz_class;
using Rat = mpq_class;

enum class Ordering { Less = -1, Equal = 0, Greater = 1 };

inline Ordering ordering_of(int sign) {
  return sign < 0 ? Ordering::Less : sign > 0 ? Ordering::Greater : Ordering::Equal;
}

/// C(n,k) with C(n,k)=0 for k>n and C(n,0)=1. Requires n >= 0.
Int binom_int(const Int& n, unsigned long k);

/// Real-argument binomial C(x,k) = x(x-1)...(x-k+1)/k!, evaluated exactly.
Rat binom_rat(const Rat& x, unsigned long k);

/// Exact ordering of a^{1/p} vs b^{1/q} for a,b >= 0, p,q >= 1,
/// decided by cross-powering: a^q vs b^p.
Ordering cmp_pow(const Rat& a, unsigned long p, const Rat& b, unsigned long q);

/// Largest k with k^r <= m. Requires m >= 0, r >= 1.
Int floor_root(const Int& m, unsigned long r);

/// Smallest k with k^r >= m.
Int ceil_root(const Int& m, unsigned long r);

/// Largest integer <= v.
Int floor_rat(const Rat& v);

/// Smallest integer >= v.
Int ceil_rat(const Rat& v);

/// v^e for rational v, integer e >= 0.
Rat pow_rat(const Rat& v, unsigned long e);

}  // namespace macsum
