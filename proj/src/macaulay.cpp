#include "macsum/macaulay.hpp"

#include <sstream>
#include <stdexcept>

namespace macsum {

Int BinRep::value() const {
  Int v(0);
  for (const auto& t : terms) v += binom_int(t.top, t.low);
  return v;
}

std::string BinRep::to_string() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms) {
    if (!first) os << "+";
    os << "C(" << t.top << "," << t.low << ")";
    first = false;
  }
  return os.str();
}

namespace {

// Largest n with C(n,j) <= rem, for rem >= 1. Binary search; C(.,j) is
// strictly increasing on n >= j.
Int greedy_top(const Int& rem, unsigned long j) {
  Int lo(static_cast<long>(j));
  Int hi = lo + 1;
  while (binom_int(hi, j) <= rem) {
    lo = hi;
    hi *= 2;
  }
  // invariant: C(lo,j) <= rem < C(hi,j)
  while (hi - lo > 1) {
    Int mid = (lo + hi) / 2;
    if (binom_int(mid, j) <= rem)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

}  // namespace

BinRep represent(const Int& a, unsigned long i) {
  if (sgn(a) < 0) throw std::invalid_argument("represent: a must be nonnegative");
  if (i == 0) throw std::invalid_argument("represent: degree must be >= 1");
  BinRep rep;
  rep.degree = i;
  Int rem = a;
  for (unsigned long j = i; j >= 1 && sgn(rem) > 0; --j) {
    Int top = greedy_top(rem, j);
    rem -= binom_int(top, j);
    rep.terms.push_back({top, j});
  }
  return rep;
}

Int successor(const Int& a, unsigned long i) {
  BinRep rep = represent(a, i);
  Int s(0);
  for (const auto& t : rep.terms) s += binom_int(t.top + 1, t.low + 1);
  return s;
}

Int min_predecessor(const Int& d, unsigned long i) {
  if (d < 1) throw std::invalid_argument("min_predecessor: d must be >= 1");
  if (i == 0) throw std::invalid_argument("min_predecessor: degree must be >= 1");
  // successor(.,i) is nondecreasing; binary search over [1,d].
  // successor(d,i) >= d always, so the search is well defined.
  Int lo(1), hi = d;
  while (lo < hi) {
    Int mid = (lo + hi) / 2;
    if (successor(mid, i) >= d)
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

OSeqCheck is_o_sequence(const std::vector<Int>& seq) {
  if (seq.empty()) throw std::invalid_argument("is_o_sequence: empty sequence");
  if (seq[0] != 1) return {false, 0};
  for (std::size_t i = 1; i + 1 < seq.size(); ++i) {
    if (sgn(seq[i]) < 0 || sgn(seq[i + 1]) < 0) return {false, i};
    if (seq[i + 1] > successor(seq[i], static_cast<unsigned long>(i)))
      return {false, i};
  }
  return {true, 0};
}

}  // namespace macsum
