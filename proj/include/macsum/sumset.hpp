#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "macsum/macaulay.hpp"
#include "macsum/realbinom.hpp"
#include "macsum/theta.hpp"

namespace macsum {

enum class AmbientKind { Integers, IntegerVectors, IntegersMod };

struct Ambient {
  AmbientKind kind = AmbientKind::Integers;
  unsigned dim = 1;           // IntegerVectors only
  std::int64_t modulus = 0;   // IntegersMod only

  std::string to_string() const;
};

// Group elements as coordinate vectors; dimension 1 for Z and Z/n.
using Elem = std::vector<std::int64_t>;

// A finite subset of Z, Z^d or Z/n; elements deduplicated and sorted.
struct FiniteSet {
  Ambient ambient;
  std::vector<Elem> elements;

  static FiniteSet integers(std::vector<std::int64_t> values);
  static FiniteSet vectors(unsigned dim, std::vector<Elem> values);
  static FiniteSet mod(std::int64_t n, std::vector<std::int64_t> values);

  std::size_t size() const { return elements.size(); }
};

struct GrowthSeq {
  std::vector<Int> values;  // values[h] = |hA|
};

struct CapExceeded : std::runtime_error {
  GrowthSeq partial;
  explicit CapExceeded(GrowthSeq p)
      : std::runtime_error("sumset cardinality cap exceeded"),
        partial(std::move(p)) {}
};

inline constexpr std::size_t kDefaultCap = 10'000'000;

/// (|0A|, ..., |HA|) by incremental (h+1)A = hA + A with deduplication.
/// Throws CapExceeded (carrying the partial sequence) if any level
/// outgrows `cap`.
GrowthSeq iterate_sumsets(const FiniteSet& A, unsigned long H,
                          std::size_t cap = kDefaultCap);

// All three bound families on |(h-1)A| and |(h+1)A| for given |hA| = m,
// plus the theta improvement factor. Pure arithmetic.
struct BoundReport {
  Int m;
  unsigned long h = 2;
  Enclosure x;
  BoundPair plunnecke;
  BoundPair condensed;
  BoundPair macaulay;  // lower via min_predecessor, upper via successor
  ThetaValue theta;
};

BoundReport bound_report(const Int& m, unsigned long h);

struct Verdict {
  unsigned long h = 0;
  bool ok = true;
  std::string detail;
};

/// For 2 <= h <= H-1, checks the actual |(h-1)A| and |(h+1)A| of A
/// against every bound in bound_report(|hA|, h). Any violation indicates
/// an implementation bug.
std::vector<Verdict> check_bounds(const FiniteSet& A, unsigned long H,
                                  std::size_t cap = kDefaultCap);

// Extremal search for omega(h,i,m) over subsets of Z: min |iA| for i<h,
// max |iA| for i>h, among canonical sets (min 0, gcd of elements 1) of
// given size with max element <= max_elem and |hA| = m.
struct SearchSpec {
  unsigned long h = 2;
  unsigned long i = 3;
  Int m;
  std::size_t set_size = 3;
  std::int64_t max_elem = 50;
  std::uint64_t budget = 1'000'000;  // candidate sets to examine
  std::uint64_t seed = 1;            // randomized fallback
};

struct SearchResult {
  bool found = false;
  std::vector<std::int64_t> best_set;
  Int best_value;
  bool exhaustive = false;
  std::uint64_t examined = 0;
  std::uint64_t matched = 0;  // candidates with |hA| = m
};

SearchResult extremal_search(const SearchSpec& spec);

}  // namespace macsum
