#pragma once

#include <utility>
#include <vector>

#include "dop/bigq.hpp"

namespace dop {

// Dense univariate polynomial over Q, coefficients lowest degree first.
// Invariant: no trailing zero coefficients (zero polynomial has empty c).
struct Poly {
  std::vector<BigQ> c;

  Poly() = default;
  explicit Poly(const BigQ& a) { if (!is_zero(a)) c.push_back(a); }
  explicit Poly(std::vector<BigQ> cs) : c(std::move(cs)) { trim(); }

  static Poly x(int k = 1);                 // x^k
  static Poly constant(const BigQ& a) { return Poly(a); }

  int deg() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
  bool is_zero_p() const { return c.empty(); }
  const BigQ& lc() const { return c.back(); }
  BigQ coeff(int i) const { return (i >= 0 && i < (int)c.size()) ? c[i] : BigQ(0); }
  void trim();

  bool operator==(const Poly& o) const { return c == o.c; }
  bool operator!=(const Poly& o) const { return !(*this == o); }
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator-(const Poly& a);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const BigQ& s);
Poly operator*(const BigQ& s, const Poly& a);

Poly shift_up(const Poly& a, int k);        // a * x^k
Poly pow(const Poly& a, unsigned e);
Poly derivative(const Poly& a);
BigQ eval(const Poly& a, const BigQ& x0);
Poly compose(const Poly& a, const Poly& b); // a(b(x))

// Quotient and remainder over Q (b nonzero).
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
Poly exact_div(const Poly& a, const Poly& b);  // asserts remainder zero
bool divides(const Poly& b, const Poly& a);

// Monic gcd.
Poly gcd(const Poly& a, const Poly& b);
Poly lcm(const Poly& a, const Poly& b);

Poly monic(const Poly& a);

// Integer content of the coefficient list (after clearing denominators):
// returns s > 0 such that a / s has coprime integer coefficients; sign kept in poly.
BigQ rational_content(const Poly& a);
Poly primitive_part(const Poly& a);   // a / (rational_content * sign(lc))

// Squarefree decomposition (Yun): list of (factor, multiplicity), factors
// monic, pairwise coprime, product of factor^mult = monic(a).
std::vector<std::pair<Poly, int>> squarefree_factor(const Poly& a);

// Resultant over Q.
BigQ resultant(const Poly& a, const Poly& b);

// Rational roots with multiplicities (exactly verified).
std::vector<std::pair<BigQ, int>> rational_roots(const Poly& a);

// Integer roots only.
std::vector<std::pair<BigZ, int>> integer_roots(const Poly& a);

std::string to_string(const Poly& a, const std::string& var = "x");

}  // namespace dop
