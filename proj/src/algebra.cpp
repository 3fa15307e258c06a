#include "macsum/algebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace macsum {

unsigned long Monomial::degree() const {
  unsigned long d = 0;
  for (unsigned e : exps) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  if (exps.size() != other.exps.size()) return false;
  for (std::size_t i = 0; i < exps.size(); ++i)
    if (exps[i] > other.exps[i]) return false;
  return true;
}

std::string Monomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    if (!first) os << "*";
    os << "X" << (i + 1);
    if (exps[i] > 1) os << "^" << exps[i];
    first = false;
  }
  return first ? "1" : os.str();
}

bool grevlex_less(const Monomial& a, const Monomial& b) {
  unsigned long da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  // equal degree: smaller iff the last nonzero entry of a-b is positive
  for (std::size_t i = a.exps.size(); i-- > 0;) {
    if (a.exps[i] != b.exps[i]) return a.exps[i] > b.exps[i];
  }
  return false;
}

std::vector<Monomial> monomials_of_degree(unsigned nvars, unsigned long h,
                                          std::size_t cap) {
  if (nvars == 0) throw std::invalid_argument("monomials_of_degree: nvars >= 1");
  Int count = binom_int(Int(static_cast<long>(nvars - 1 + h)), h);
  if (count > static_cast<long>(std::min<std::size_t>(
                  cap, std::numeric_limits<long>::max())))
    throw CapExceeded(GrowthSeq{});
  std::vector<Monomial> out;
  Monomial cur;
  cur.exps.assign(nvars, 0);
  // recursive composition enumeration
  auto rec = [&](auto&& self, unsigned var, unsigned long rem) -> void {
    if (var + 1 == nvars) {
      cur.exps[var] = static_cast<unsigned>(rem);
      out.push_back(cur);
      return;
    }
    for (unsigned long e = 0; e <= rem; ++e) {
      cur.exps[var] = static_cast<unsigned>(e);
      self(self, var + 1, rem - e);
    }
    cur.exps[var] = 0;
  };
  rec(rec, 0, h);
  std::sort(out.begin(), out.end(), grevlex_less);
  return out;
}

namespace {

std::int64_t mod_reduce(std::int64_t v, std::int64_t n) {
  std::int64_t r = v % n;
  return r < 0 ? r + n : r;
}

Elem image_of(const FiniteSet& A, const Monomial& m) {
  Elem img(A.ambient.dim, 0);
  for (std::size_t i = 0; i < m.exps.size(); ++i)
    for (unsigned k = 0; k < A.ambient.dim; ++k)
      img[k] += static_cast<std::int64_t>(m.exps[i]) * A.elements[i][k];
  if (A.ambient.kind == AmbientKind::IntegersMod)
    img[0] = mod_reduce(img[0], A.ambient.modulus);
  return img;
}

}  // namespace

std::vector<MonomialClass> classes(const FiniteSet& A, unsigned long h,
                                   std::size_t cap) {
  unsigned n = static_cast<unsigned>(A.size());
  std::vector<Monomial> monos = monomials_of_degree(n, h, cap);
  std::map<Elem, std::vector<Monomial>> by_image;
  for (auto& m : monos) by_image[image_of(A, m)].push_back(std::move(m));
  std::vector<MonomialClass> out;
  out.reserve(by_image.size());
  for (auto& [img, members] : by_image)
    out.push_back({h, img, std::move(members)});
  // deterministic output: by grevlex of the class representative
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return grevlex_less(a.members.front(), b.members.front());
  });
  return out;
}

std::vector<std::pair<Monomial, Monomial>> presentation_generators(
    const FiniteSet& A, unsigned long h_max, std::size_t cap) {
  std::vector<std::pair<Monomial, Monomial>> out;
  for (unsigned long h = 1; h <= h_max; ++h) {
    for (const auto& cls : classes(A, h, cap)) {
      for (std::size_t j = 1; j < cls.members.size(); ++j)
        out.emplace_back(cls.members[j], cls.members.front());
    }
  }
  return out;
}

MonomialIdeal MonomialIdeal::from_generators(std::vector<Monomial> gens) {
  std::vector<Monomial> minimal;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
      if (i == j) continue;
      if (gens[j].divides(gens[i]) &&
          (gens[i] != gens[j] || j < i))
        redundant = true;
    }
    if (!redundant) minimal.push_back(gens[i]);
  }
  std::sort(minimal.begin(), minimal.end(), grevlex_less);
  return {std::move(minimal)};
}

GrowthSeq hilbert_monomial_quotient(unsigned nvars, const MonomialIdeal& J,
                                    unsigned long H, std::size_t cap) {
  for (const auto& g : J.gens)
    if (g.exps.size() != nvars)
      throw std::invalid_argument("hilbert_monomial_quotient: generator arity");
  GrowthSeq seq;
  for (unsigned long h = 0; h <= H; ++h) {
    unsigned long count = 0;
    for (const auto& m : monomials_of_degree(nvars, h, cap)) {
      bool in_ideal = false;
      for (const auto& g : J.gens)
        if (g.divides(m)) {
          in_ideal = true;
          break;
        }
      if (!in_ideal) ++count;
    }
    seq.values.push_back(count);
  }
  return seq;
}

}  // namespace macsum
