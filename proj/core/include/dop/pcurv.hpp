#pragma once

#include <string>
#include <vector>

#include "dop/diffop.hpp"
#include "dop/fp.hpp"

namespace dop {

// Rational function over F_p: num/den, den monic nonzero.
struct RatFp {
  PolyFp num, den{1};
};

// p-curvature matrix A_p of the companion system of L mod p, kept with a
// cleared denominator: A_p = B / ell^p where ell = lc(L) mod p.
struct PCurvMat {
  uint64_t p = 0;
  size_t n = 0;
  std::vector<PolyFp> B;  // row major, n*n polynomial entries
  PolyFp ell;             // leading coefficient mod p
  int ell_pow = 0;        // denominator exponent (= p)
  const PolyFp& at(size_t i, size_t j) const { return B[i * n + j]; }
};

PCurvMat p_curvature(const DiffOp& L, uint64_t p);

struct PCurvatureReport {
  uint64_t prime = 0;
  bool good = true;
  std::string notice;
  // characteristic polynomial of A_p in lambda: coefficient of lambda^j at
  // index j, entries rational functions mod p
  std::vector<RatFp> charpoly;
  int minpoly_degree = 0;
  std::vector<int> rank_sequence;  // rank of A_p^k over F_p(x), k = 1..n
  bool nilpotent = false;
};

PCurvatureReport p_curvature_report(const DiffOp& L, uint64_t p);

// Per-prime reports; bad primes are flagged (good = false) and skipped.
std::vector<PCurvatureReport> nilpotence_sweep(const DiffOp& L,
                                               const std::vector<uint64_t>& primes);

}  // namespace dop
