#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dop/poly.hpp"

namespace dop {

// Arithmetic in Z/p for primes p < 2^62.
struct Fp {
  uint64_t p;
  explicit Fp(uint64_t prime) : p(prime) {}

  uint64_t add(uint64_t a, uint64_t b) const { uint64_t s = a + b; return s >= p ? s - p : s; }
  uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + p - b; }
  uint64_t neg(uint64_t a) const { return a ? p - a : 0; }
  uint64_t mul(uint64_t a, uint64_t b) const {
    return (uint64_t)((__uint128_t)a * b % p);
  }
  uint64_t powm(uint64_t a, uint64_t e) const {
    uint64_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  uint64_t inv(uint64_t a) const { return powm(a, p - 2); }
};

// Dense polynomial over Fp, lowest degree first, trimmed.
using PolyFp = std::vector<uint64_t>;

void fp_trim(PolyFp& a);
int fp_deg(const PolyFp& a);
PolyFp fp_add(const Fp& F, const PolyFp& a, const PolyFp& b);
PolyFp fp_sub(const Fp& F, const PolyFp& a, const PolyFp& b);
PolyFp fp_mul(const Fp& F, const PolyFp& a, const PolyFp& b);
PolyFp fp_scale(const Fp& F, const PolyFp& a, uint64_t s);
std::pair<PolyFp, PolyFp> fp_divrem(const Fp& F, const PolyFp& a, const PolyFp& b);
PolyFp fp_gcd(const Fp& F, PolyFp a, PolyFp b);  // monic
PolyFp fp_derivative(const Fp& F, const PolyFp& a);
uint64_t fp_eval(const Fp& F, const PolyFp& a, uint64_t x0);
PolyFp fp_monic(const Fp& F, const PolyFp& a);
// a^e mod m
PolyFp fp_powmod(const Fp& F, PolyFp a, uint64_t e, const PolyFp& m);

// All roots in Fp of a (not necessarily squarefree; roots listed once).
std::vector<uint64_t> fp_roots(const Fp& F, const PolyFp& a);

// Reduce rational polynomial mod p (fails if a denominator vanishes mod p).
std::optional<PolyFp> reduce_mod_prime(const Poly& a, uint64_t p);

// Rational roots of a squarefree polynomial over Q via two-prime modular lift,
// exactly verified.
std::vector<BigQ> fp_rational_roots(const Poly& a);

// Newton interpolation: poly of degree < n through (xs[i], ys[i]).
PolyFp fp_interpolate(const Fp& F, const std::vector<uint64_t>& xs,
                      const std::vector<uint64_t>& ys);

// Dense matrix over Fp, row major.
struct MatFp {
  size_t rows = 0, cols = 0;
  std::vector<uint64_t> a;
  MatFp() = default;
  MatFp(size_t r, size_t c) : rows(r), cols(c), a(r * c, 0) {}
  uint64_t& at(size_t i, size_t j) { return a[i * cols + j]; }
  uint64_t at(size_t i, size_t j) const { return a[i * cols + j]; }
};

size_t fp_rank(const Fp& F, MatFp m);
uint64_t fp_det(const Fp& F, MatFp m);
// Nullspace basis (column vectors) of m.
std::vector<std::vector<uint64_t>> fp_nullspace(const Fp& F, MatFp m);
MatFp fp_matmul(const Fp& F, const MatFp& a, const MatFp& b);

// Deterministic list of primes just below 2^62 (for CRT towers) and below 2^31.
std::vector<uint64_t> primes_62(size_t count, uint64_t skip_divisor_of = 0);

bool is_prime_u64(uint64_t n);

}  // namespace dop
