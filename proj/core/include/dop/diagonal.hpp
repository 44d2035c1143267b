#pragma once

#include <optional>
#include <vector>

#include "dop/diffop.hpp"
#include "dop/series.hpp"

namespace dop {

// Multivariate rational function N/D given by sparse terms
// (exponent vector, coefficient); D must have a nonzero constant term.
struct MultiRat {
  int nvars = 0;
  std::vector<std::pair<std::vector<int>, BigQ>> num, den;
};

// Univariate diagonal series: coefficient of t^n is the coefficient of
// (x_1 ... x_k)^n in the Taylor expansion of R at the origin.
// When R is symmetric under all variable permutations, coefficients are
// stored per sorted exponent tuple, which keeps 5-6 variable diagonals cheap.
PowerSeries diag_series(const MultiRat& R, int terms);

struct GuessedODE {
  DiffOp op;  // polynomial coefficients, normalized
  int order = 0;
  int degree = 0;
  int guard_terms_verified = 0;
};

// Smallest (order, then degree) operator sum p_i(x) Dx^i with deg p_i <= degree
// annihilating s through every supplied coefficient. The final `guard`
// coefficients are withheld from the linear solve and checked afterwards;
// the whole candidate is verified exactly over Q before being returned.
std::optional<GuessedODE> guess_ode(const PowerSeries& s, int max_order,
                                    int max_degree, int guard = 10);

}  // namespace dop
