#pragma once

#include <optional>
#include <vector>

#include "dop/diffop.hpp"
#include "dop/systems.hpp"

namespace dop {

// Local exponent data at a singular place. For a finite place the place is a
// monic squarefree factor of the leading coefficient whose roots all see the
// same coefficient valuations; ext_coeffs[k] is the coefficient of nu^k of the
// indicial polynomial as an element of Q[t]/(factor), and norm is
// Res_t(factor, indicial) in Q[nu] (equal to the indicial itself when the
// factor is linear). For the place at infinity the indicial lives over Q and
// norm holds it directly.
struct IndicialInfo {
  bool regular = true;
  std::vector<Poly> ext_coeffs;
  Poly norm;
};

// Indicial data at a finite place (factor must be monic, squarefree, and
// valuation-uniform across the coefficients, e.g. irreducible) or at infinity.
IndicialInfo indicial_info(const DiffOp& L, const Poly& factor);
IndicialInfo indicial_info_infinity(const DiffOp& L);

// The Q[nu] polynomial whose integer roots bound local valuations.
Poly indicial_at(const DiffOp& L, const Poly& factor);
Poly indicial_at_infinity(const DiffOp& L);

// Splits the squarefree factors of the leading coefficient into monic pieces
// whose roots share the coefficient valuation profile.
std::vector<Poly> singular_place_factors(const DiffOp& L);

struct SingularityProfile {
  std::vector<std::pair<Poly, Poly>> finite;  // (place factor, indicial norm)
  Poly infinity;
  bool all_regular = true;
};
SingularityProfile singularity_profile(const DiffOp& L);

struct RatSolBasis {
  std::vector<RatFun> solutions;
  // false when a degree/denominator bound had to fall back to a heuristic
  // budget (irregular place); the returned span is then a lower bound.
  bool complete = true;
};

// Basis of rational solutions of L(y) = 0; every element verified by exact
// substitution. Echelonized deterministically with monic numerators.
RatSolBasis rational_solutions(const DiffOp& L);

// All solutions of the form prod factor^e with rational exponents e taken
// from indicial roots at the singular places; verified by exact substitution.
std::vector<HyperexpFun> power_product_solutions(const DiffOp& L);

// Basis of rational vector solutions of a theta-system with simple poles.
std::vector<std::vector<RatFun>> rational_solutions_system(const LinSystem& S);

}  // namespace dop
