#include "macsum/sumset.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace macsum {

std::string Ambient::to_string() const {
  switch (kind) {
    case AmbientKind::Integers:
      return "Z";
    case AmbientKind::IntegerVectors:
      return "Z^" + std::to_string(dim);
    case AmbientKind::IntegersMod:
      return "Z/" + std::to_string(modulus);
  }
  return "?";
}

namespace {

std::int64_t mod_reduce(std::int64_t v, std::int64_t n) {
  std::int64_t r = v % n;
  return r < 0 ? r + n : r;
}

void normalize(FiniteSet& s) {
  if (s.elements.empty())
    throw std::invalid_argument("FiniteSet: must be nonempty");
  for (auto& e : s.elements) {
    if (e.size() != s.ambient.dim)
      throw std::invalid_argument("FiniteSet: element dimension mismatch");
    if (s.ambient.kind == AmbientKind::IntegersMod)
      e[0] = mod_reduce(e[0], s.ambient.modulus);
  }
  std::sort(s.elements.begin(), s.elements.end());
  s.elements.erase(std::unique(s.elements.begin(), s.elements.end()),
                   s.elements.end());
}

}  // namespace

FiniteSet FiniteSet::integers(std::vector<std::int64_t> values) {
  FiniteSet s;
  s.ambient = {AmbientKind::Integers, 1, 0};
  for (auto v : values) s.elements.push_back({v});
  normalize(s);
  return s;
}

FiniteSet FiniteSet::vectors(unsigned dim, std::vector<Elem> values) {
  if (dim == 0) throw std::invalid_argument("FiniteSet: dim must be >= 1");
  FiniteSet s;
  s.ambient = {AmbientKind::IntegerVectors, dim, 0};
  s.elements = std::move(values);
  normalize(s);
  return s;
}

FiniteSet FiniteSet::mod(std::int64_t n, std::vector<std::int64_t> values) {
  if (n <= 0) throw std::invalid_argument("FiniteSet: modulus must be positive");
  FiniteSet s;
  s.ambient = {AmbientKind::IntegersMod, 1, n};
  for (auto v : values) s.elements.push_back({v});
  normalize(s);
  return s;
}

GrowthSeq iterate_sumsets(const FiniteSet& A, unsigned long H, std::size_t cap) {
  GrowthSeq seq;
  seq.values.push_back(1);
  const unsigned dim = A.ambient.dim;
  const bool modular = A.ambient.kind == AmbientKind::IntegersMod;
  std::vector<Elem> cur = {Elem(dim, 0)};
  for (unsigned long h = 1; h <= H; ++h) {
    std::vector<Elem> next;
    next.reserve(cur.size() * A.elements.size());
    for (const auto& a : cur)
      for (const auto& b : A.elements) {
        Elem s(dim);
        for (unsigned k = 0; k < dim; ++k) s[k] = a[k] + b[k];
        if (modular) s[0] = mod_reduce(s[0], A.ambient.modulus);
        next.push_back(std::move(s));
      }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    if (next.size() > cap) throw CapExceeded(seq);
    seq.values.push_back(static_cast<unsigned long>(next.size()));
    cur = std::move(next);
  }
  return seq;
}

BoundReport bound_report(const Int& m, unsigned long h) {
  if (m < 1) throw std::invalid_argument("bound_report: m must be >= 1");
  if (h < 2) throw std::invalid_argument("bound_report: h must be >= 2");
  BoundReport r;
  r.m = m;
  r.h = h;
  r.x = solve_x(m, h, Rat(1, 1000000000000L));
  r.plunnecke = plunnecke_bounds(m, h);
  r.condensed = condensed_bounds(m, h);
  r.macaulay = {min_predecessor(m, h - 1), successor(m, h)};

  ThetaValue& t = r.theta;
  t.x = r.x;
  t.h = h;
  // theta^h = h^h m / x^h; decreasing in x, so endpoints swap.
  Int hh;
  mpz_ui_pow_ui(hh.get_mpz_t(), h, h);
  t.theta_pow_enc = {Rat(hh * m) / pow_rat(r.x.hi, h),
                     Rat(hh * m) / pow_rat(r.x.lo, h)};
  t.exact = r.x.is_point();
  if (t.exact) t.theta_pow_h = t.theta_pow_enc.lo;
  Enclosure mroot = root_decimal(Rat(m), h, 12);
  Rat hr(static_cast<long>(h));
  t.decimal = {hr / r.x.hi * mroot.lo, hr / r.x.lo * mroot.hi};
  return r;
}

std::vector<Verdict> check_bounds(const FiniteSet& A, unsigned long H,
                                  std::size_t cap) {
  if (H < 2) throw std::invalid_argument("check_bounds: H must be >= 2");
  GrowthSeq g = iterate_sumsets(A, H, cap);
  std::vector<Verdict> out;
  for (unsigned long h = 2; h + 1 <= H; ++h) {
    BoundReport r = bound_report(g.values[h], h);
    const Int& prev = g.values[h - 1];
    const Int& next = g.values[h + 1];
    Verdict v;
    v.h = h;
    std::ostringstream bad;
    auto check_lower = [&](const char* name, const Int& b) {
      if (prev < b) bad << name << " lower violated (" << prev << " < " << b << "); ";
    };
    auto check_upper = [&](const char* name, const Int& b) {
      if (next > b) bad << name << " upper violated (" << next << " > " << b << "); ";
    };
    check_lower("plunnecke", r.plunnecke.lower_prev);
    check_lower("condensed", r.condensed.lower_prev);
    check_lower("macaulay", r.macaulay.lower_prev);
    check_upper("plunnecke", r.plunnecke.upper_next);
    check_upper("condensed", r.condensed.upper_next);
    check_upper("macaulay", r.macaulay.upper_next);
    v.detail = bad.str();
    v.ok = v.detail.empty();
    out.push_back(std::move(v));
  }
  return out;
}

namespace {

std::int64_t gcd_all(const std::vector<std::int64_t>& v) {
  std::int64_t g = 0;
  for (auto e : v) g = std::gcd(g, e);
  return g;
}

// Examines one canonical candidate {0} + tail; updates the running best.
void consider(const SearchSpec& spec, const std::vector<std::int64_t>& tail,
              SearchResult& res) {
  ++res.examined;
  std::vector<std::int64_t> elems = {0};
  elems.insert(elems.end(), tail.begin(), tail.end());
  FiniteSet A = FiniteSet::integers(elems);
  unsigned long H = std::max(spec.h, spec.i);
  GrowthSeq g;
  try {
    g = iterate_sumsets(A, H);
  } catch (const CapExceeded&) {
    return;
  }
  if (g.values[spec.h] != spec.m) return;
  ++res.matched;
  const Int& val = g.values[spec.i];
  bool better;
  if (!res.found)
    better = true;
  else if (spec.i < spec.h)
    better = val < res.best_value;
  else if (spec.i > spec.h)
    better = val > res.best_value;
  else
    better = false;
  if (better) {
    res.found = true;
    res.best_value = val;
    res.best_set = elems;
  }
}

}  // namespace

SearchResult extremal_search(const SearchSpec& spec) {
  if (spec.set_size < 1 || spec.max_elem < 1)
    throw std::invalid_argument("extremal_search: degenerate spec");
  SearchResult res;
  std::size_t k = spec.set_size - 1;  // elements besides 0
  Int space = binom_int(Int(spec.max_elem), k);
  if (space <= static_cast<long>(std::min<std::uint64_t>(
                   spec.budget, std::numeric_limits<long>::max()))) {
    res.exhaustive = true;
    // next-combination enumeration of k values from 1..max_elem
    std::vector<std::int64_t> tail(k);
    std::iota(tail.begin(), tail.end(), 1);
    while (true) {
      if (k == 0 || gcd_all(tail) == 1) consider(spec, tail, res);
      // advance
      std::size_t pos = k;
      while (pos > 0 &&
             tail[pos - 1] == spec.max_elem - static_cast<std::int64_t>(k - pos))
        --pos;
      if (pos == 0) break;
      ++tail[pos - 1];
      for (std::size_t j = pos; j < k; ++j) tail[j] = tail[j - 1] + 1;
    }
  } else {
    std::mt19937_64 rng(spec.seed);
    std::uniform_int_distribution<std::int64_t> dist(1, spec.max_elem);
    for (std::uint64_t it = 0; it < spec.budget; ++it) {
      std::vector<std::int64_t> tail;
      while (tail.size() < k) {
        std::int64_t v = dist(rng);
        if (std::find(tail.begin(), tail.end(), v) == tail.end())
          tail.push_back(v);
      }
      std::sort(tail.begin(), tail.end());
      std::int64_t g = gcd_all(tail);
      if (g > 1)
        for (auto& v : tail) v /= g;
      consider(spec, tail, res);
    }
  }
  return res;
}

}  // namespace macsum
