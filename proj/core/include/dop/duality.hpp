#pragma once

#include <optional>

#include "dop/diffop.hpp"

namespace dop {

// Homomorphism data: M * T = S * L exactly.
struct Intertwiner {
  DiffOp T, S;
  enum class Relation { LT_eq_SM, conjugation } relation = Relation::LT_eq_SM;
};

// target = left * rho * right + lambda / rho with left, right self-adjoint
struct Decomposition {
  DiffOp left;
  RatFun rho;
  DiffOp right;
  BigQ lambda;
};

// order-four decomposition: L = Z2s * (1/A0) * A2 + A0 with Z2s, A2
// order-two self-adjoint operators and A0 a function
struct Decomposition4 {
  DiffOp Z2s;
  DiffOp A2;
  RatFun A0;
};

// adjoint(L) == L exactly (the adjoint convention already absorbs the
// (-1)^order sign, so odd-order self-adjoint operators compare equal too)
bool is_selfadjoint(const DiffOp& L);

// f with L * f = f * adjoint(L), determined by matching the subleading
// coefficient (f'/f = aN'/aN - 2 a_{N-1} / (N aN)) and verified exactly.
std::optional<HyperexpFun> conjugation_to_adjoint(const DiffOp& L);

// smallest-order T with order <= max_order such that M * T = S * L; the
// ansatz denominator is (lc(L) lc(M))^b with b escalating to degree_budget.
// nullopt means the budget was exhausted, never a proof of nonexistence.
std::optional<Intertwiner> find_intertwiner(const DiffOp& M, const DiffOp& L,
                                            int max_order, int degree_budget);

enum class DualityClass { self_adjoint, conjugated, intertwined, none_within_budget };

struct DualityReport {
  DualityClass cls = DualityClass::none_within_budget;
  std::optional<HyperexpFun> conjugator;
  std::optional<Intertwiner> intertwiner;
  // for intertwined results: S == unit * adjoint(T)
  BigQ unit = BigQ(1);
};

DualityReport adjoint_duality_report(const DiffOp& L, int degree_budget = 3);

// order-four operator homomorphic to its adjoint with an order-two
// intertwiner Z2: two euclidean divisions produce the self-adjoint pieces.
Decomposition4 extract_decomposition4(const DiffOp& L,
                                      const std::optional<Intertwiner>& witness = std::nullopt);

// L_{2p-n} * a * L_n + lambda / a, inputs must be self-adjoint
DiffOp build_M2p(const DiffOp& Lright, const DiffOp& Lleft, const RatFun& a,
                 const BigQ& lambda);

// both intertwining relations of the even-order decomposition:
// (a L_n) M = adjoint(M) (a L_n) and M (a L_{2p-n}) = (L_{2p-n} a) adjoint(M)
bool verify_intertwining(const DiffOp& M2p, const DiffOp& Lright,
                         const DiffOp& Lleft, const RatFun& a);

}  // namespace dop
