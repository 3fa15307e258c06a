#pragma once

#include <vector>

#include "macsum/sumset.hpp"

namespace macsum {

// A monomial in n commuting variables, as its exponent vector.
struct Monomial {
  std::vector<unsigned> exps;

  unsigned long degree() const;
  bool divides(const Monomial& other) const;
  std::string to_string() const;  // "X1^2*X3" style; "1" for the unit

  bool operator==(const Monomial&) const = default;
};

/// Graded reverse-lexicographic order (the pinned enumeration order).
bool grevlex_less(const Monomial& a, const Monomial& b);

/// All degree-h monomials in n variables, in grevlex order.
std::vector<Monomial> monomials_of_degree(unsigned nvars, unsigned long h,
                                          std::size_t cap = kDefaultCap);

// An equivalence class of degree-h monomials sharing the image
// sum_i alpha_i a_i under the evaluation map into the group.
struct MonomialClass {
  unsigned long degree = 0;
  Elem image;
  std::vector<Monomial> members;  // grevlex order; front() is the representative
};

/// The partition of all C(n-1+h,h) degree-h monomials on A = {a_1..a_n}
/// by image. The class count equals |hA|.
std::vector<MonomialClass> classes(const FiniteSet& A, unsigned long h,
                                   std::size_t cap = kDefaultCap);

/// Binomial generators u - v of the presentation ideal, one pair
/// (member, representative) per non-representative member of every class
/// of degree <= h_max.
std::vector<std::pair<Monomial, Monomial>> presentation_generators(
    const FiniteSet& A, unsigned long h_max, std::size_t cap = kDefaultCap);

// A monomial ideal by its minimal generators (no generator divides
// another; enforced on construction).
struct MonomialIdeal {
  std::vector<Monomial> gens;

  static MonomialIdeal from_generators(std::vector<Monomial> gens);
};

/// Hilbert function of S/J up to degree H: the count of degree-h
/// monomials in nvars variables divisible by no generator of J.
GrowthSeq hilbert_monomial_quotient(unsigned nvars, const MonomialIdeal& J,
                                    unsigned long H,
                                    std::size_t cap = kDefaultCap);

}  // namespace macsum
