#include "dop/bigq.hpp"

namespace dop {

std::optional<long> as_long(const BigQ& a) {
  if (!is_integer(a)) return std::nullopt;
  BigZ n = a.get_num();
  if (!n.fits_slong_p()) return std::nullopt;
  return n.get_si();
}

BigZ binomial_z(unsigned long n, unsigned long k) {
  BigZ r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigQ binomial_q(unsigned long n, unsigned long k) { return BigQ(binomial_z(n, k)); }

BigZ crt_pair(const BigZ& r1, const BigZ& m1, const BigZ& r2, const BigZ& m2) {
  // x = r1 + m1 * t, t = (r2 - r1) / m1 mod m2
  BigZ inv;
  mpz_invert(inv.get_mpz_t(), m1.get_mpz_t(), m2.get_mpz_t());
  BigZ t = ((r2 - r1) * inv) % m2;
  if (sgn(t) < 0) t += m2;
  return r1 + m1 * t;
}

std::optional<BigQ> rational_reconstruct(const BigZ& r, const BigZ& m) {
  // Half-extended Euclid on (m, r), stop when remainder < sqrt(m/2).
  BigZ bound;
  mpz_sqrt(bound.get_mpz_t(), BigZ(m / 2).get_mpz_t());
  BigZ r0 = m, r1 = r % m;
  if (sgn(r1) < 0) r1 += m;
  BigZ t0 = 0, t1 = 1;
  while (r1 > bound) {
    BigZ q = r0 / r1;
    BigZ r2 = r0 - q * r1;
    BigZ t2 = t0 - q * t1;
    r0 = r1; r1 = r2;
    t0 = t1; t1 = t2;
  }
  if (sgn(t1) == 0) return std::nullopt;
  BigZ p = r1, q = t1;
  if (sgn(q) < 0) { p = -p; q = -q; }
  if (q > bound) return std::nullopt;
  BigZ g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  if (g != 1) return std::nullopt;
  BigQ res(p, q);
  res.canonicalize();
  return res;
}

}  // namespace dop
