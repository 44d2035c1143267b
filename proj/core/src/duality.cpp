#include <dop/duality.hpp>

#include <stdexcept>

#include <dop/qlinalg.hpp>

namespace dop {

bool is_selfadjoint(const DiffOp& L) {
  if (L.is_zero_o()) return true;
  auto c = equal_up_to_unit(op_adjoint(L), L);
  return c.has_value() && *c == BigQ(1);
}

std::optional<HyperexpFun> conjugation_to_adjoint(const DiffOp& L) {
  int N = L.order();
  if (N < 1) return std::nullopt;
  RatFun aN = L.lc();
  RatFun u = derivative(aN) / aN - L.coeff(N - 1) * BigQ(2, N) / aN;
  if (!(conjugate_by_logderiv(L, u) == op_adjoint(L))) return std::nullopt;
  return hyperexp_from_logderiv(u);
}

namespace {

// scale T by a rational constant: integer-content 1, positive leading sign
DiffOp unit_normalize(const DiffOp& T) {
  if (T.is_zero_o()) return T;
  Poly all;  // concatenate numerator coefficients to reuse content machinery
  BigQ c(0);
  for (auto& t : T.a)
    for (auto& v : t.num.c) {
      if (is_zero(c)) c = abs(v);
      // gcd of rationals: gcd of numerators / lcm of denominators
      else {
        BigZ gn = gcd(BigZ(c.get_num()), BigZ(v.get_num()));
        BigZ gl = lcm(BigZ(c.get_den()), BigZ(v.get_den()));
        c = BigQ(gn) / BigQ(gl);
      }
    }
  (void)all;
  if (is_zero(c)) return T;
  if (sgn(T.lc().num.lc()) < 0) c = -c;
  std::vector<RatFun> out;
  for (auto& t : T.a) out.push_back(t * (BigQ(1) / c));
  return DiffOp(out);
}

}  // namespace

std::optional<Intertwiner> find_intertwiner(const DiffOp& M, const DiffOp& L,
                                            int max_order, int degree_budget) {
  int ordL = L.order();
  if (ordL < 1 || max_order < 0 || max_order >= ordL)
    throw std::invalid_argument("find_intertwiner: need 0 <= max_order < order(L)");
  DiffOp Lp = poly_normalize(L);
  DiffOp Mp = poly_normalize(M);
  Poly base = monic(Lp.lc().num * Mp.lc().num);

  int d0 = 0;
  for (auto& c : Lp.a) d0 = std::max(d0, c.num.deg());
  for (auto& c : Mp.a) d0 = std::max(d0, c.num.deg());
  d0 += ordL + max_order + 2;

  for (int b = 0; b <= degree_budget; ++b) {
    Poly den(BigQ(1));
    for (int i = 0; i < b; ++i) den = den * base;
    int numdeg = den.deg() + d0;

    // precompute M * (x^j / den), then right-compose with Dx^i by shifting
    std::vector<DiffOp> Gj(numdeg + 1);
    for (int j = 0; j <= numdeg; ++j)
      Gj[j] = op_mul(Mp, DiffOp::mult(RatFun(Poly::x(j), den)));

    for (int k = 0; k <= max_order; ++k) {
      size_t cols = (size_t)(k + 1) * (numdeg + 1);
      // remainders per unknown
      std::vector<std::vector<RatFun>> rems(cols, std::vector<RatFun>(ordL));
      for (int i = 0; i <= k; ++i)
        for (int j = 0; j <= numdeg; ++j) {
          // (M * x^j/den) * Dx^i: shift coefficients up by i
          DiffOp Sh;
          Sh.a.assign(Gj[j].a.size() + i, RatFun());
          for (size_t n = 0; n < Gj[j].a.size(); ++n) Sh.a[n + i] = Gj[j].a[n];
          Sh.trim();
          DiffOp R = right_divide(Sh, Lp).second;
          auto& slot = rems[(size_t)i * (numdeg + 1) + j];
          for (int n = 0; n < ordL; ++n) slot[n] = R.coeff(n);
        }
      // clear denominators slot by slot
      std::vector<Poly> slot_lcm(ordL, Poly(BigQ(1)));
      for (int n = 0; n < ordL; ++n)
        for (auto& rr : rems) slot_lcm[n] = lcm(slot_lcm[n], rr[n].den);
      int maxdeg = 0;
      std::vector<std::vector<Poly>> cleared(cols, std::vector<Poly>(ordL));
      for (size_t cidx = 0; cidx < cols; ++cidx)
        for (int n = 0; n < ordL; ++n) {
          cleared[cidx][n] = rems[cidx][n].num * exact_div(slot_lcm[n], rems[cidx][n].den);
          maxdeg = std::max(maxdeg, cleared[cidx][n].deg());
        }
      MatQ mat((size_t)ordL * (maxdeg + 1), cols);
      for (size_t cidx = 0; cidx < cols; ++cidx)
        for (int n = 0; n < ordL; ++n)
          for (int r = 0; r <= cleared[cidx][n].deg(); ++r)
            mat.at((size_t)n * (maxdeg + 1) + r, cidx) = cleared[cidx][n].coeff(r);

      auto ns = q_nullspace(mat);
      if (ns.empty()) continue;
      // pick the kernel vector giving the smallest-order T
      std::optional<DiffOp> best;
      for (auto& v : ns) {
        std::vector<RatFun> t(k + 1);
        for (int i = 0; i <= k; ++i) {
          Poly p;
          p.c.assign(v.begin() + (size_t)i * (numdeg + 1),
                     v.begin() + (size_t)(i + 1) * (numdeg + 1));
          p.trim();
          t[i] = RatFun(p, den);
        }
        DiffOp T(t);
        if (T.is_zero_o()) continue;
        if (!best || T.order() < best->order()) best = T;
      }
      if (!best) continue;
      DiffOp T = unit_normalize(*best);
      auto [S, R] = right_divide(op_mul(Mp, T), Lp);
      if (!R.is_zero_o()) throw std::logic_error("find_intertwiner: verification failed");
      Intertwiner out;
      out.T = T;
      out.S = S;
      out.relation = Intertwiner::Relation::LT_eq_SM;
      return out;
    }
  }
  return std::nullopt;
}

DualityReport adjoint_duality_report(const DiffOp& L, int degree_budget) {
  DualityReport rep;
  if (is_selfadjoint(L)) {
    rep.cls = DualityClass::self_adjoint;
    return rep;
  }
  if (auto f = conjugation_to_adjoint(L)) {
    rep.cls = DualityClass::conjugated;
    rep.conjugator = f;
    return rep;
  }
  int N = L.order();
  DiffOp adjL = op_adjoint(L);
  for (int k = 0; k < N; ++k) {
    auto it = find_intertwiner(L, adjL, k, degree_budget);
    if (!it) continue;
    rep.cls = DualityClass::intertwined;
    rep.intertwiner = it;
    if (auto c = equal_up_to_unit(it->S, op_adjoint(it->T))) rep.unit = BigQ(1) / *c;
    return rep;
  }
  rep.cls = DualityClass::none_within_budget;
  return rep;
}

Decomposition4 extract_decomposition4(const DiffOp& L,
                                      const std::optional<Intertwiner>& witness) {
  if (L.order() != 4) throw std::invalid_argument("extract_decomposition4: need order four");
  DiffOp adjL = op_adjoint(L);
  DiffOp Z2;
  if (witness) {
    Z2 = witness->T;
  } else {
    auto it = find_intertwiner(L, adjL, 2, 4);
    if (!it) throw std::runtime_error("extract_decomposition4: no order-two intertwiner within budget");
    Z2 = it->T;
  }
  if (Z2.order() != 2)
    throw std::runtime_error("extract_decomposition4: intertwiner is not order two");

  auto [A2, R] = right_divide(adjL, Z2);
  if (R.order() > 0)
    throw std::runtime_error("extract_decomposition4: remainder is not a function");
  Decomposition4 dec;
  dec.A2 = A2;
  dec.A0 = R.coeff(0);
  if (dec.A0.is_zero_r())
    throw std::runtime_error("extract_decomposition4: degenerate zero remainder");
  dec.Z2s = op_mul(DiffOp::mult(dec.A0), Z2);

  if (!is_selfadjoint(dec.Z2s) || !is_selfadjoint(dec.A2))
    throw std::runtime_error("extract_decomposition4: pieces not self-adjoint");
  RatFun invA0 = inverse(dec.A0);
  DiffOp reassembled =
      op_mul(op_mul(dec.Z2s, DiffOp::mult(invA0)), dec.A2) + DiffOp::mult(dec.A0);
  if (!(reassembled == L))
    throw std::runtime_error("extract_decomposition4: reassembly mismatch");
  DiffOp lhs1 = op_mul(op_mul(dec.A2, DiffOp::mult(invA0)), L);
  DiffOp rhs1 = op_mul(op_mul(adjL, DiffOp::mult(invA0)), dec.A2);
  DiffOp lhs2 = op_mul(op_mul(L, DiffOp::mult(invA0)), dec.Z2s);
  DiffOp rhs2 = op_mul(op_mul(dec.Z2s, DiffOp::mult(invA0)), adjL);
  if (!(lhs1 == rhs1) || !(lhs2 == rhs2))
    throw std::runtime_error("extract_decomposition4: intertwining relations failed");
  return dec;
}

DiffOp build_M2p(const DiffOp& Lright, const DiffOp& Lleft, const RatFun& a,
                 const BigQ& lambda) {
  if (!is_selfadjoint(Lright) || !is_selfadjoint(Lleft))
    throw std::invalid_argument("build_M2p: factors must be self-adjoint");
  DiffOp M = op_mul(op_mul(Lleft, DiffOp::mult(a)), Lright);
  if (!is_zero(lambda)) M = M + DiffOp::mult(RatFun(lambda) / a);
  return M;
}

bool verify_intertwining(const DiffOp& M2p, const DiffOp& Lright,
                         const DiffOp& Lleft, const RatFun& a) {
  DiffOp adjM = op_adjoint(M2p);
  DiffOp lhs1 = op_mul(op_mul(Lright, DiffOp::mult(a)), M2p);
  DiffOp rhs1 = op_mul(adjM, op_mul(DiffOp::mult(a), Lright));
  DiffOp lhs2 = op_mul(M2p, op_mul(DiffOp::mult(a), Lleft));
  DiffOp rhs2 = op_mul(op_mul(Lleft, DiffOp::mult(a)), adjM);
  return lhs1 == rhs1 && lhs2 == rhs2;
}

}  // namespace dop
