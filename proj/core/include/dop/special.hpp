#pragma once

#include <optional>

#include "dop/diffop.hpp"
#include "dop/solve.hpp"
#include "dop/systems.hpp"

namespace dop {

struct CYReport {
  bool strong = false;            // actual power order < generic order
  bool symmetric_strong = false;  // closed-form condition (orders 3 and 4 only)
  std::optional<RatSolBasis> weak;
  int generic_order = 0;
  int actual_order = 0;
};

// order-four condition 8 a1 + a3^3 - 4 a3 a2 + 6 a3 a3' - 8 a2' + 4 a3'' = 0
// (input monicized first); equivalent to the exterior square dropping to
// order five
bool cy_condition_order4(const DiffOp& L);

// order-three symmetric condition
// 4 a2^3 - 18 a1 a2 + 9 a2'' + 18 a2 a2' + 54 a0 - 27 a1' = 0
bool sym_cy_condition_order3(const DiffOp& L);

// order drop of the square power plus rational solutions of the square of
// the shifted equivalent operators (m escalating to order-1)
CYReport weak_cy_check(const DiffOp& L, PowerKind kind);

// self-adjoint normal forms; order 5 takes {a5, a3, a1}, order 6 takes
// {a6, a4, a2, a0}, head coefficient nonzero
DiffOp selfadjoint_normal_form(int order, const std::vector<RatFun>& free_coeffs);

}  // namespace dop
