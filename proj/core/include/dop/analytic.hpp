#pragma once

#include <vector>

#include "dop/diffop.hpp"
#include "dop/series.hpp"

namespace dop {

// Formal solutions at x = 0 with integer exponents; sols[k] is a LogSeries
// (components multiply log(x)^j / j!). Basis echelonized by log degree with
// the triangular normalization (for MUM operators sols[k] has log degree k,
// top log component starting with 1, lower components reduced).
struct LogSeriesBasis {
  std::vector<LogSeries> sols;
  bool mum = false;        // indicial polynomial at 0 is c * theta^order
  int analytic_count = 0;  // members without logs
};

// Frobenius basis at x = 0 (exponents restricted to rational integers).
LogSeriesBasis frobenius_basis(const DiffOp& L, int terms);

// q = x exp(ytilde1 / y0) for a MUM operator.
PowerSeries nome(const DiffOp& L, int terms);

// W_k = det of the k x k derivative matrix of the first k basis solutions,
// logs substituted away after differentiation; returns [W_0 .. W_nmax].
std::vector<PowerSeries> wronskian_determinants(const LogSeriesBasis& basis, int nmax);

// K_n = W_1^(n(n-2)) W_n / W_2^C(n,2) in x, or composed with the inverse
// nome when in_q is set (classical Yukawa coupling is K_3).
PowerSeries yukawa(const DiffOp& L, int n, bool in_q, int terms);

// evidence about rescalings making the coefficients integral
struct BoundedProbe {
  bool candidate_found = false;
  BigZ lambda = 1;                  // lambda^n c_n integral for computed n
  std::vector<BigZ> prime_support;  // denominator primes seen (sorted)
  bool support_growing = false;     // new primes kept appearing near the tail
};
BoundedProbe globally_bounded_probe(const PowerSeries& s);

// residual of the quadratic form sum form[i][j] S_i S_j over the basis
LogSeries quadratic_relation_check(const LogSeriesBasis& basis,
                                   const std::vector<std::vector<BigQ>>& form);

}  // namespace dop
