#include "dop/fp.hpp"

#include <cassert>
#include <random>

namespace dop {

void fp_trim(PolyFp& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int fp_deg(const PolyFp& a) { return (int)a.size() - 1; }

PolyFp fp_add(const Fp& F, const PolyFp& a, const PolyFp& b) {
  PolyFp r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = F.add(r[i], b[i]);
  fp_trim(r);
  return r;
}

PolyFp fp_sub(const Fp& F, const PolyFp& a, const PolyFp& b) {
  PolyFp r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
  fp_trim(r);
  return r;
}

PolyFp fp_mul(const Fp& F, const PolyFp& a, const PolyFp& b) {
  if (a.empty() || b.empty()) return {};
  PolyFp r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j)
      if (b[j]) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  fp_trim(r);
  return r;
}

PolyFp fp_scale(const Fp& F, const PolyFp& a, uint64_t s) {
  PolyFp r = a;
  for (auto& v : r) v = F.mul(v, s);
  fp_trim(r);
  return r;
}

std::pair<PolyFp, PolyFp> fp_divrem(const Fp& F, const PolyFp& a, const PolyFp& b) {
  assert(!b.empty());
  PolyFp q, r = a;
  int db = fp_deg(b);
  if (fp_deg(r) < db) return {q, r};
  q.assign(fp_deg(r) - db + 1, 0);
  uint64_t ilb = F.inv(b.back());
  while (fp_deg(r) >= db) {
    int d = fp_deg(r) - db;
    uint64_t t = F.mul(r.back(), ilb);
    q[d] = t;
    for (int i = 0; i <= db; ++i) r[d + i] = F.sub(r[d + i], F.mul(t, b[i]));
    fp_trim(r);
  }
  fp_trim(q);
  return {q, r};
}

PolyFp fp_gcd(const Fp& F, PolyFp a, PolyFp b) {
  while (!b.empty()) {
    auto r = fp_divrem(F, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return fp_monic(F, a);
}

PolyFp fp_derivative(const Fp& F, const PolyFp& a) {
  PolyFp r;
  if (fp_deg(a) < 1) return r;
  r.resize(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) r[i - 1] = F.mul(a[i], i % F.p);
  fp_trim(r);
  return r;
}

uint64_t fp_eval(const Fp& F, const PolyFp& a, uint64_t x0) {
  uint64_t r = 0;
  for (size_t i = a.size(); i-- > 0;) r = F.add(F.mul(r, x0), a[i]);
  return r;
}

PolyFp fp_monic(const Fp& F, const PolyFp& a) {
  if (a.empty()) return a;
  return fp_scale(F, a, F.inv(a.back()));
}

PolyFp fp_powmod(const Fp& F, PolyFp a, uint64_t e, const PolyFp& m) {
  PolyFp r{1};
  a = fp_divrem(F, a, m).second;
  while (e) {
    if (e & 1) r = fp_divrem(F, fp_mul(F, r, a), m).second;
    a = fp_divrem(F, fp_mul(F, a, a), m).second;
    e >>= 1;
  }
  return r;
}

namespace {

void fp_roots_rec(const Fp& F, const PolyFp& f, std::mt19937_64& rng,
                  std::vector<uint64_t>& out) {
  int d = fp_deg(f);
  if (d <= 0) return;
  if (d == 1) {
    out.push_back(F.mul(F.neg(f[0]), F.inv(f[1])));
    return;
  }
  // f splits into linear factors; split via gcd(f, (x+a)^((p-1)/2) - 1).
  while (true) {
    uint64_t a = rng() % F.p;
    PolyFp g = fp_powmod(F, PolyFp{a, 1}, (F.p - 1) / 2, f);
    if (g.empty()) g = PolyFp{F.p - 1};
    else g[0] = F.sub(g[0], 1);
    fp_trim(g);
    PolyFp h = fp_gcd(F, f, g);
    if (fp_deg(h) > 0 && fp_deg(h) < d) {
      fp_roots_rec(F, h, rng, out);
      fp_roots_rec(F, fp_divrem(F, f, h).first, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<uint64_t> fp_roots(const Fp& F, const PolyFp& a) {
  std::vector<uint64_t> out;
  if (fp_deg(a) < 1) return out;
  // keep only the part splitting in linear factors: gcd(a, x^p - x)
  PolyFp xp = fp_powmod(F, PolyFp{0, 1}, F.p, a);
  PolyFp g = fp_gcd(F, a, fp_sub(F, xp, PolyFp{0, 1}));
  if (fp_deg(g) < 1) return out;
  // squarefree
  PolyFp gs = fp_divrem(F, g, fp_gcd(F, g, fp_derivative(F, g))).first;
  std::mt19937_64 rng(0x5eedULL ^ F.p);
  fp_roots_rec(F, gs, rng, out);
  return out;
}

std::optional<PolyFp> reduce_mod_prime(const Poly& a, uint64_t p) {
  Fp F(p);
  PolyFp r(a.c.size());
  for (size_t i = 0; i < a.c.size(); ++i) {
    BigZ d = a.c[i].get_den();
    BigZ dm = d % BigZ((unsigned long)p);
    if (dm == 0) return std::nullopt;
    BigZ n = a.c[i].get_num() % BigZ((unsigned long)p);
    if (sgn(n) < 0) n += (unsigned long)p;
    r[i] = F.mul(n.get_ui(), F.inv(dm.get_ui()));
  }
  fp_trim(r);
  return r;
}

std::vector<BigQ> fp_rational_roots(const Poly& a) {
  std::vector<BigQ> out;
  if (a.deg() < 1) return out;
  auto ps = primes_62(8);
  for (size_t pi = 0; pi + 1 < ps.size(); pi += 2) {
    uint64_t p1 = ps[pi], p2 = ps[pi + 1];
    auto r1 = reduce_mod_prime(a, p1);
    auto r2 = reduce_mod_prime(a, p2);
    if (!r1 || !r2) continue;
    if (fp_deg(*r1) != a.deg() || fp_deg(*r2) != a.deg()) continue;  // lc vanished
    auto roots1 = fp_roots(Fp(p1), *r1);
    auto roots2 = fp_roots(Fp(p2), *r2);
    BigZ m = BigZ((unsigned long)p1) * BigZ((unsigned long)p2);
    for (uint64_t u : roots1) {
      for (uint64_t v : roots2) {
        BigZ r = crt_pair(BigZ((unsigned long)u), BigZ((unsigned long)p1),
                          BigZ((unsigned long)v), BigZ((unsigned long)p2));
        auto cand = rational_reconstruct(r, m);
        if (!cand) continue;
        if (!is_zero(eval(a, *cand))) continue;
        bool seen = false;
        for (const auto& w : out) seen = seen || (w == *cand);
        if (!seen) out.push_back(*cand);
      }
    }
    return out;
  }
  return out;
}

PolyFp fp_interpolate(const Fp& F, const std::vector<uint64_t>& xs,
                      const std::vector<uint64_t>& ys) {
  // Newton divided differences.
  size_t n = xs.size();
  std::vector<uint64_t> dd = ys;
  for (size_t k = 1; k < n; ++k)
    for (size_t i = n; i-- > k;)
      dd[i] = F.mul(F.sub(dd[i], dd[i - 1]), F.inv(F.sub(xs[i], xs[i - k])));
  PolyFp r;
  for (size_t i = n; i-- > 0;) {
    // r = r * (x - xs[i]) + dd[i]
    PolyFp nr(r.size() + 1, 0);
    for (size_t j = 0; j < r.size(); ++j) {
      nr[j + 1] = F.add(nr[j + 1], r[j]);
      nr[j] = F.sub(nr[j], F.mul(r[j], xs[i]));
    }
    if (nr.empty()) nr.resize(1, 0);
    nr[0] = F.add(nr[0], dd[i]);
    fp_trim(nr);
    r = std::move(nr);
  }
  return r;
}

size_t fp_rank(const Fp& F, MatFp m) {
  size_t rank = 0;
  for (size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    size_t piv = rank;
    while (piv < m.rows && m.at(piv, col) == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != rank)
      for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(rank, j));
    uint64_t ip = F.inv(m.at(rank, col));
    for (size_t i = rank + 1; i < m.rows; ++i) {
      uint64_t f = F.mul(m.at(i, col), ip);
      if (!f) continue;
      for (size_t j = col; j < m.cols; ++j)
        m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(rank, j)));
    }
    ++rank;
  }
  return rank;
}

uint64_t fp_det(const Fp& F, MatFp m) {
  assert(m.rows == m.cols);
  uint64_t det = 1;
  for (size_t col = 0; col < m.cols; ++col) {
    size_t piv = col;
    while (piv < m.rows && m.at(piv, col) == 0) ++piv;
    if (piv == m.rows) return 0;
    if (piv != col) {
      for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(col, j));
      det = F.neg(det);
    }
    det = F.mul(det, m.at(col, col));
    uint64_t ip = F.inv(m.at(col, col));
    for (size_t i = col + 1; i < m.rows; ++i) {
      uint64_t f = F.mul(m.at(i, col), ip);
      if (!f) continue;
      for (size_t j = col; j < m.cols; ++j)
        m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(col, j)));
    }
  }
  return det;
}

std::vector<std::vector<uint64_t>> fp_nullspace(const Fp& F, MatFp m) {
  std::vector<size_t> pivcol;
  size_t rank = 0;
  for (size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    size_t piv = rank;
    while (piv < m.rows && m.at(piv, col) == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != rank)
      for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(rank, j));
    uint64_t ip = F.inv(m.at(rank, col));
    for (size_t j = 0; j < m.cols; ++j) m.at(rank, j) = F.mul(m.at(rank, j), ip);
    for (size_t i = 0; i < m.rows; ++i) {
      if (i == rank) continue;
      uint64_t f = m.at(i, col);
      if (!f) continue;
      for (size_t j = 0; j < m.cols; ++j)
        m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(rank, j)));
    }
    pivcol.push_back(col);
    ++rank;
  }
  std::vector<std::vector<uint64_t>> basis;
  std::vector<bool> ispiv(m.cols, false);
  for (size_t c : pivcol) ispiv[c] = true;
  for (size_t free = 0; free < m.cols; ++free) {
    if (ispiv[free]) continue;
    std::vector<uint64_t> v(m.cols, 0);
    v[free] = 1;
    for (size_t r = 0; r < pivcol.size(); ++r) v[pivcol[r]] = F.neg(m.at(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

MatFp fp_matmul(const Fp& F, const MatFp& a, const MatFp& b) {
  assert(a.cols == b.rows);
  MatFp r(a.rows, b.cols);
  for (size_t i = 0; i < a.rows; ++i)
    for (size_t k = 0; k < a.cols; ++k) {
      uint64_t v = a.at(i, k);
      if (!v) continue;
      for (size_t j = 0; j < b.cols; ++j)
        r.at(i, j) = F.add(r.at(i, j), F.mul(v, b.at(k, j)));
    }
  return r;
}

bool is_prime_u64(uint64_t n) {
  BigZ z((unsigned long)n);
  return mpz_probab_prime_p(z.get_mpz_t(), 30) > 0;
}

std::vector<uint64_t> primes_62(size_t count, uint64_t skip_divisor_of) {
  std::vector<uint64_t> out;
  uint64_t cand = (1ULL << 62) - 57;
  BigZ skip((unsigned long)skip_divisor_of);
  while (out.size() < count) {
    if (is_prime_u64(cand)) {
      bool ok = true;
      if (skip_divisor_of != 0) {
        BigZ c((unsigned long)cand);
        ok = (skip % c) != 0;
      }
      if (ok) out.push_back(cand);
    }
    cand -= 2;
  }
  return out;
}

}  // namespace dop
