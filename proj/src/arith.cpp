#include "macsum/arith.hpp"

#include <stdexcept>

namespace macsum {

Int binom_int(const Int& n, unsigned long k) {
  if (sgn(n) < 0) throw std::invalid_argument("binom_int: n must be nonnegative");
  Int r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

Rat binom_rat(const Rat& x, unsigned long k) {
  Rat r(1);
  for (unsigned long i = 0; i < k; ++i) {
    r *= (x - Rat(static_cast<long>(i))) / Rat(static_cast<long>(k - i));
  }
  r.canonicalize();
  return r;
}

Rat pow_rat(const Rat& v, unsigned long e) {
  Rat r;
  mpz_pow_ui(r.get_num_mpz_t(), v.get_num().get_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), v.get_den().get_mpz_t(), e);
  // v canonical implies v^e canonical; no reduction needed.
  return r;
}

Ordering cmp_pow(const Rat& a, unsigned long p, const Rat& b, unsigned long q) {
  if (sgn(a) < 0 || sgn(b) < 0) throw std::invalid_argument("cmp_pow: negative base");
  if (p == 0 || q == 0) throw std::invalid_argument("cmp_pow: zero root index");
  return ordering_of(cmp(pow_rat(a, q), pow_rat(b, p)));
}

Int floor_root(const Int& m, unsigned long r) {
  if (sgn(m) < 0) throw std::invalid_argument("floor_root: m must be nonnegative");
  if (r == 0) throw std::invalid_argument("floor_root: r must be positive");
  Int k;
  mpz_root(k.get_mpz_t(), m.get_mpz_t(), r);
  return k;
}

Int ceil_root(const Int& m, unsigned long r) {
  Int k = floor_root(m, r);
  Int kp;
  mpz_pow_ui(kp.get_mpz_t(), k.get_mpz_t(), r);
  if (kp < m) ++k;
  return k;
}

Int floor_rat(const Rat& v) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), v.get_num().get_mpz_t(), v.get_den().get_mpz_t());
  return q;
}

Int ceil_rat(const Rat& v) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), v.get_num().get_mpz_t(), v.get_den().get_mpz_t());
  return q;
}

}  // namespace macsum
