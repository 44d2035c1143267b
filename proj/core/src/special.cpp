#include <dop/special.hpp>

#include <stdexcept>

namespace dop {

bool cy_condition_order4(const DiffOp& L) {
  if (L.order() != 4) throw std::invalid_argument("cy_condition_order4: need order four");
  DiffOp M = monicize(L);
  RatFun a3 = M.coeff(3), a2 = M.coeff(2), a1 = M.coeff(1);
  RatFun expr = a1 * BigQ(8) + a3 * a3 * a3 - a3 * a2 * BigQ(4) +
                a3 * derivative(a3) * BigQ(6) - derivative(a2) * BigQ(8) +
                derivative(derivative(a3)) * BigQ(4);
  return expr.is_zero_r();
}

bool sym_cy_condition_order3(const DiffOp& L) {
  if (L.order() != 3) throw std::invalid_argument("sym_cy_condition_order3: need order three");
  DiffOp M = monicize(L);
  RatFun a2 = M.coeff(2), a1 = M.coeff(1), a0 = M.coeff(0);
  RatFun expr = a2 * a2 * a2 * BigQ(4) - a1 * a2 * BigQ(18) +
                derivative(derivative(a2)) * BigQ(9) + a2 * derivative(a2) * BigQ(18) +
                a0 * BigQ(54) - derivative(a1) * BigQ(27);
  return expr.is_zero_r();
}

CYReport weak_cy_check(const DiffOp& L, PowerKind kind) {
  CYReport rep;
  int N = L.order();
  if (N < 2) throw std::invalid_argument("weak_cy_check: need order >= 2");
  auto sp = scalar_power_operator(L, 2, kind);
  rep.generic_order = sp.generic_order;
  rep.actual_order = sp.P.order();
  rep.strong = rep.actual_order < rep.generic_order;
  if (N == 3 && kind == PowerKind::symmetric) rep.symmetric_strong = sym_cy_condition_order3(L);
  if (N == 4 && kind == PowerKind::exterior) rep.symmetric_strong = cy_condition_order4(L);

  for (int m = 1; m < N; ++m) {
    auto es = equivalent_shift(L, m);
    if (!es) continue;
    auto spm = scalar_power_operator(es->Lm, 2, kind);
    auto rs = rational_solutions(spm.P);
    if (!rep.weak || !rs.solutions.empty()) rep.weak = rs;
    if (!rs.solutions.empty()) break;
  }
  return rep;
}

DiffOp selfadjoint_normal_form(int order, const std::vector<RatFun>& free_coeffs) {
  auto d = [](const RatFun& f, int k) {
    RatFun r = f;
    for (int i = 0; i < k; ++i) r = derivative(r);
    return r;
  };
  if (order == 5) {
    if (free_coeffs.size() != 3)
      throw std::invalid_argument("selfadjoint_normal_form: order 5 needs {a5, a3, a1}");
    const RatFun &a5 = free_coeffs[0], &a3 = free_coeffs[1], &a1 = free_coeffs[2];
    if (a5.is_zero_r()) throw std::invalid_argument("selfadjoint_normal_form: zero head coefficient");
    std::vector<RatFun> a(6);
    a[5] = a5;
    a[4] = d(a5, 1) * BigQ(5, 2);
    a[3] = a3;
    a[2] = d(a3, 1) * BigQ(3, 2) - d(a5, 3) * BigQ(5, 2);
    a[1] = a1;
    a[0] = d(a1, 1) * BigQ(1, 2) + d(a5, 5) * BigQ(1, 2) - d(a3, 3) * BigQ(1, 4);
    return DiffOp(a);
  }
  if (order == 6) {
    if (free_coeffs.size() != 4)
      throw std::invalid_argument("selfadjoint_normal_form: order 6 needs {a6, a4, a2, a0}");
    const RatFun &a6 = free_coeffs[0], &a4 = free_coeffs[1], &a2 = free_coeffs[2],
                 &a0 = free_coeffs[3];
    if (a6.is_zero_r()) throw std::invalid_argument("selfadjoint_normal_form: zero head coefficient");
    std::vector<RatFun> a(7);
    a[6] = a6;
    a[5] = d(a6, 1) * BigQ(3);
    a[4] = a4;
    a[3] = d(a4, 1) * BigQ(2) - d(a6, 3) * BigQ(5);
    a[2] = a2;
    a[1] = d(a2, 1) - d(a4, 3) + d(a6, 5) * BigQ(3);
    a[0] = a0;
    return DiffOp(a);
  }
  throw std::invalid_argument("selfadjoint_normal_form: order must be 5 or 6");
}

}  // namespace dop
