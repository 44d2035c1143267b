#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dop/ratfun.hpp"
#include "dop/series.hpp"

namespace dop {

// Linear differential operator sum a[n] Dx^n with rational function
// coefficients; a trimmed (a.back() nonzero unless the operator is zero).
struct DiffOp {
  std::vector<RatFun> a;

  DiffOp() = default;
  explicit DiffOp(std::vector<RatFun> coeffs) : a(std::move(coeffs)) { trim(); }

  static DiffOp zero() { return DiffOp(); }
  static DiffOp one() { return mult(RatFun(BigQ(1))); }
  static DiffOp Dx(int k = 1);
  static DiffOp mult(const RatFun& f);  // order-0 multiplication operator
  static DiffOp theta();                // x*Dx

  int order() const { return (int)a.size() - 1; }  // -1 for zero
  bool is_zero_o() const { return a.empty(); }
  RatFun coeff(int n) const { return (n >= 0 && n < (int)a.size()) ? a[n] : RatFun(); }
  const RatFun& lc() const { return a.back(); }
  void trim();

  bool operator==(const DiffOp& o) const { return a == o.a; }
  bool operator!=(const DiffOp& o) const { return !(*this == o); }
};

// Operator written as sum over i of x^i P[i](theta), theta = x*Dx.
struct ThetaOp {
  std::vector<Poly> P;  // P[i] is the theta-polynomial multiplied by x^i

  int xdeg() const { return (int)P.size() - 1; }
  int order() const;
  Poly coeff(int i) const { return (i >= 0 && i < (int)P.size()) ? P[i] : Poly(); }
  void trim();
};

// Product of rational powers of polynomials times exp of a rational function:
// cst * prod factors[k].first ^ factors[k].second * exp(exp_part).
// Represents hyperexponential functions with rational log-derivative whose
// residues are rational.
struct HyperexpFun {
  BigQ cst = BigQ(1);
  std::vector<std::pair<Poly, BigQ>> factors;
  RatFun exp_part;  // zero when absent

  bool algebraic() const;  // all exponents rational, no exp part
  bool rational() const;   // all exponents integers, no exp part
};

RatFun logderiv(const HyperexpFun& f);
RatFun as_ratfun(const HyperexpFun& f);  // requires rational()
HyperexpFun hyperexp_pow(const HyperexpFun& f, const BigQ& e);
HyperexpFun hyperexp_mul(const HyperexpFun& f, const HyperexpFun& g);
std::string to_string(const HyperexpFun& f, const std::string& var = "x");

// Arithmetic.
DiffOp operator+(const DiffOp& A, const DiffOp& B);
DiffOp operator-(const DiffOp& A, const DiffOp& B);
DiffOp operator-(const DiffOp& A);
DiffOp operator*(const DiffOp& A, const BigQ& s);
DiffOp op_mul(const DiffOp& A, const DiffOp& B);  // composition A after B

DiffOp op_adjoint(const DiffOp& L);

// Monic form (divide by leading coefficient on the left).
DiffOp monicize(const DiffOp& L);
// Clear denominators and integer content: primitive polynomial-coefficient form
// with positive primitive leading polynomial.
DiffOp poly_normalize(const DiffOp& L);
// A == c*B for a nonzero rational constant c? Returns c.
std::optional<BigQ> equal_up_to_unit(const DiffOp& A, const DiffOp& B);

// theta-form: x^shift * (multiplier(x) * L) == sum x^i P_i(theta).
struct RebaseResult {
  ThetaOp op;
  Poly multiplier;  // polynomial that cleared the denominators
  int shift;        // power of x multiplied on the left (= order of L)
  int xfactor;      // common power of x removed from all terms
};
RebaseResult rebase(const DiffOp& L);
DiffOp rebase_inv(const ThetaOp& T);  // back to Dx form (poly coefficients)

// Right Euclidean division: A = Q*B + R, order(R) < order(B).
std::pair<DiffOp, DiffOp> right_divide(const DiffOp& A, const DiffOp& B);

// Least common left multiple, monic.
DiffOp lclm(const DiffOp& A, const DiffOp& B);

// S*L = Lm*Dx^m with Lm of the same order as L (spec: equivalent operator
// under the m-fold derivative map). Fails (nullopt) in degenerate cases.
struct EquivShift {
  DiffOp Lm;  // monic
  DiffOp S;
};
std::optional<EquivShift> equivalent_shift(const DiffOp& L, int m);

// Wronskian of L as hyperexponential function (solution of w' = -a_{N-1}/a_N w),
// normalized with constant 1. Nullopt when not representable with rational
// residues within the budget.
std::optional<HyperexpFun> wronskian(const DiffOp& L);

// Solve f'/f = u for f hyperexponential with rational exponents; exponential
// part split off into exp_part (poles of order > 1 and polynomial part).
std::optional<HyperexpFun> hyperexp_from_logderiv(const RatFun& u);

// Apply L to a series / rational function / log-series.
PowerSeries apply(const DiffOp& L, const PowerSeries& y);
LogSeries apply(const DiffOp& L, const LogSeries& y);
RatFun apply_to_ratfun(const DiffOp& L, const RatFun& y);

// Conjugation: f^{-1} L f where f has rational log-derivative u (f'/f = u).
DiffOp conjugate_by_logderiv(const DiffOp& L, const RatFun& u);

// L with x replaced by c*x (solutions rescaled).
DiffOp rescale_x(const DiffOp& L, const BigQ& c);

std::string to_string(const DiffOp& L);
std::string to_string_theta(const ThetaOp& T);

}  // namespace dop
