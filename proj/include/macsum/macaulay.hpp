#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "macsum/arith.hpp"

namespace macsum {

// One term C(top, low) of a binomial representation.
struct BinRepTerm {
  Int top;
  unsigned long low;
};

// The i-th binomial representation of a nonnegative integer:
// a = sum of C(a_j, j) with a_i > a_{i-1} > ... and a_j >= j for every
// stored term. Trailing zero binomials are omitted, so represent(0,i)
// has an empty term list.
struct BinRep {
  unsigned long degree = 1;
  std::vector<BinRepTerm> terms;  // low descending from degree

  Int value() const;
  std::string to_string() const;  // "C(8,5)+C(7,4)+..." or "0"
};

/// The unique i-th binomial representation of a >= 0. Requires i >= 1.
BinRep represent(const Int& a, unsigned long i);

/// Macaulay successor a^<i>: shift every term C(a_j,j) -> C(a_j+1,j+1).
/// successor(0,i) = 0.
Int successor(const Int& a, unsigned long i);

/// Smallest m >= 1 with successor(m,i) >= d. Requires d >= 1.
/// A valid lower bound for d_i given d_{i+1} = d.
Int min_predecessor(const Int& d, unsigned long i);

struct OSeqCheck {
  bool ok = true;
  std::size_t violation = 0;  // least violating index i, when !ok
};

/// Admissibility per Macaulay: seq(0)=1 and seq(i+1) <= successor(seq(i),i)
/// for all i >= 1 in range.
OSeqCheck is_o_sequence(const std::vector<Int>& seq);

}  // namespace macsum
