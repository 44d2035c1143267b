#include <dop/verify.hpp>

#include <random>
#include <sstream>
#include <stdexcept>

#include <dop/analytic.hpp>
#include <dop/catalog.hpp>
#include <dop/diagonal.hpp>
#include <dop/diffop.hpp>
#include <dop/duality.hpp>
#include <dop/fp.hpp>
#include <dop/parser.hpp>
#include <dop/pcurv.hpp>
#include <dop/qlinalg.hpp>
#include <dop/series.hpp>
#include <dop/solve.hpp>
#include <dop/special.hpp>
#include <dop/systems.hpp>

namespace dop {
namespace {

CheckResult ck(const std::string& name, bool pass, const std::string& detail = "") {
  return CheckResult{name, pass, detail};
}

Poly P(std::vector<BigQ> c) { return Poly(std::move(c)); }
RatFun RF(Poly n, Poly d) { return RatFun(std::move(n), std::move(d)); }

// a == unit * b with one global nonzero rational constant
std::optional<BigQ> ratfun_unit(const RatFun& a, const RatFun& b) {
  if (a.is_zero_r() || b.is_zero_r()) return std::nullopt;
  RatFun r = a * inverse(b);
  if (r.num.deg() != 0 || r.den.deg() != 0) return std::nullopt;
  return r.num.coeff(0) / r.den.coeff(0);
}

std::string qstr(const BigQ& q) { return q.get_str(); }

bool match_prefix(const PowerSeries& s, int lo,
                  const std::vector<std::string>& golden, std::string* why) {
  for (size_t i = 0; i < golden.size(); ++i) {
    BigQ want(golden[i]);
    if (s.coeff(lo + (int)i) != want) {
      if (why)
        *why = "coefficient of x^" + std::to_string(lo + (int)i) + " is " +
               qstr(s.coeff(lo + (int)i)) + ", wanted " + golden[i];
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Randomized operator builders (fixed seeds; rng()%n keeps the draw sequence
// independent of the standard-library distribution implementation).

BigQ rand_q(std::mt19937_64& rng, long span = 9) {
  long n = (long)(rng() % (2 * span + 1)) - span;
  long d = 1 + (long)(rng() % 4);
  return BigQ(n, d);
}

BigQ rand_q_nonzero(std::mt19937_64& rng, long span = 9) {
  for (;;) {
    BigQ q = rand_q(rng, span);
    if (!is_zero(q)) return q;
  }
}

Poly rand_poly(std::mt19937_64& rng, int maxdeg, bool nonzero = false) {
  for (;;) {
    std::vector<BigQ> c((size_t)(rng() % (maxdeg + 1)) + 1);
    for (auto& v : c) v = rand_q(rng, 5);
    Poly p(c);
    if (!nonzero || !p.is_zero_p()) return p;
  }
}

RatFun rand_ratfun(std::mt19937_64& rng, int maxdeg, bool nonzero = false) {
  return RatFun(rand_poly(rng, maxdeg, nonzero), rand_poly(rng, maxdeg, true));
}

DiffOp rand_op(std::mt19937_64& rng, int order, int maxdeg = 2) {
  std::vector<RatFun> a((size_t)order + 1);
  for (int i = 0; i < order; ++i) a[(size_t)i] = RatFun(rand_poly(rng, maxdeg));
  a[(size_t)order] = RatFun(rand_poly(rng, maxdeg, true));
  return DiffOp(a);
}

DiffOp rand_selfadjoint(std::mt19937_64& rng, int order) {
  for (;;) {
    DiffOp B = rand_op(rng, order, 2);
    DiffOp A = B + op_adjoint(B);
    if (A.order() == order && is_selfadjoint(A)) return A;
  }
}

// order-two self-adjoint operator b2 Dx^2 + b2' Dx + b0
DiffOp selfadj2(const RatFun& b2, const RatFun& b0) {
  return DiffOp({b0, derivative(b2), b2});
}

// ---------------------------------------------------------------------------
// Bounded-ansatz rational vector solutions of a theta system.
//
// Looks for Y_j = n_j(x) / (x^A (x-1)^B) with deg n_j <= d solving
// theta Y = M Y. Solved mod several 62-bit word primes (the reduced-echelon
// nullspace basis is deterministic, so vectors correspond across primes),
// lifted by CRT + rational reconstruction, then every candidate is verified
// exactly over Q, which makes the result rigorous.

struct VecSol {
  std::vector<Poly> num;  // per coordinate; denominator x^A (x-1)^B
};

std::vector<VecSol> theta_vector_solutions(const LinSystem& S, int A, int B,
                                           int d) {
  size_t n = S.dim();
  Poly Delta(BigQ(1));
  for (auto& row : S.M)
    for (auto& e : row) Delta = lcm(Delta, e.den);
  std::vector<std::vector<Poly>> N(n, std::vector<Poly>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (!S.M[i][j].is_zero_r())
        N[i][j] = S.M[i][j].num * exact_div(Delta, S.M[i][j].den);

  int rowdeg = d + Delta.deg() + 2;
  size_t cols = n * (size_t)(d + 1);
  std::vector<std::vector<std::vector<uint64_t>>> allns;
  std::vector<uint64_t> used;
  for (uint64_t p : primes_62(8)) {
    Fp F(p);
    auto Dm = reduce_mod_prime(Delta, p);
    if (!Dm) continue;
    MatFp mat(n * (size_t)(rowdeg + 1), cols);
    bool bad = false;
    for (size_t i = 0; i < n && !bad; ++i) {
      for (size_t j = 0; j < n; ++j) {
        auto Nm = reduce_mod_prime(N[i][j], p);
        if (!Nm) {
          bad = true;
          break;
        }
        PolyFp rhs0 = fp_mul(F, *Nm, PolyFp{F.p - 1, 1});  // (x-1) N_ij
        for (int k = 0; k <= d; ++k) {
          size_t col = j * (size_t)(d + 1) + (size_t)k;
          // equation block i, times x^A (x-1)^B Delta (x-1):
          //   x n_i'(x-1) Delta - n_i (A(x-1)+Bx) Delta = (x-1) sum_j N_ij n_j
          PolyFp contrib;
          PolyFp rterm = rhs0;
          rterm.insert(rterm.begin(), (size_t)k, 0);
          if (j == i) {
            auto md = [&](long v) {
              long r = v % (long)p;
              if (r < 0) r += (long)p;
              return (uint64_t)r;
            };
            PolyFp lin{md(-((long)k - A)), md((long)k - A - B)};
            PolyFp l = fp_mul(F, lin, *Dm);
            l.insert(l.begin(), (size_t)k, 0);
            contrib = fp_sub(F, l, rterm);
          } else {
            contrib = fp_sub(F, PolyFp{}, rterm);
          }
          for (size_t t = 0; t < contrib.size(); ++t)
            if (contrib[t]) mat.at(i * (size_t)(rowdeg + 1) + t, col) = contrib[t];
        }
      }
    }
    if (bad) continue;
    auto ns = fp_nullspace(F, mat);
    if (!allns.empty() && ns.size() != allns.front().size()) continue;
    allns.push_back(ns);
    used.push_back(p);
    if (used.size() >= 3) break;
  }
  if (allns.empty() || allns.front().empty()) return {};
  size_t dim = allns.front().size();

  std::vector<VecSol> out;
  for (size_t v = 0; v < dim; ++v) {
    std::vector<BigZ> rem(cols);
    BigZ mod(1);
    for (size_t pi = 0; pi < used.size(); ++pi) {
      BigZ m(mpz_class(std::to_string(used[pi])));
      for (size_t c = 0; c < cols; ++c) {
        BigZ r(mpz_class(std::to_string(allns[pi][v][c])));
        rem[c] = (pi == 0) ? r : crt_pair(rem[c], mod, r, m);
      }
      mod = (pi == 0) ? m : mod * m;
    }
    VecSol sol;
    sol.num.resize(n);
    bool ok = true;
    for (size_t j = 0; j < n && ok; ++j) {
      std::vector<BigQ> cs((size_t)d + 1);
      for (int k = 0; k <= d; ++k) {
        auto q = rational_reconstruct(rem[j * (size_t)(d + 1) + (size_t)k], mod);
        if (!q) {
          ok = false;
          break;
        }
        cs[(size_t)k] = *q;
      }
      if (ok) sol.num[j] = Poly(cs);
    }
    if (!ok) continue;
    // exact verification over Q: theta Y == M Y
    Poly dn = shift_up(pow(P({BigQ(-1), BigQ(1)}), B), A);
    std::vector<RatFun> Y(n);
    for (size_t j = 0; j < n; ++j) Y[j] = RatFun(sol.num[j], dn);
    bool verified = true;
    for (size_t i = 0; i < n && verified; ++i) {
      RatFun lhs = RatFun(Poly::x(1)) * derivative(Y[i]);
      RatFun rhs;
      for (size_t j = 0; j < n; ++j) rhs = rhs + S.M[i][j] * Y[j];
      if (!(lhs == rhs)) verified = false;
    }
    if (verified) out.push_back(std::move(sol));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Minimal scalar-annihilator order of a system functional mod p, via the row
// iteration c_{j+1} = theta(c_j) + c_j M over Fp(x). The rank profile is read
// off evaluations at many random points: full rank at one point already
// proves independence over Q (a Q(x)-dependence would survive reduction), so
// only the *upper* bound (the dependence at the stated order) is modular.

int minimal_order_mod_p(const LinSystem& S, size_t func_index, uint64_t p,
                        int jmax) {
  Fp F(p);
  size_t n = S.dim();
  Poly Delta(BigQ(1));
  for (auto& row : S.M)
    for (auto& e : row) Delta = lcm(Delta, e.den);
  auto Dm = reduce_mod_prime(Delta, p);
  if (!Dm) return -1;
  std::vector<std::vector<PolyFp>> N(n, std::vector<PolyFp>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (!S.M[i][j].is_zero_r()) {
        auto nm = reduce_mod_prime(S.M[i][j].num, p);
        auto dm = reduce_mod_prime(S.M[i][j].den, p);
        if (!nm || !dm) return -1;
        auto [q, r] = fp_divrem(F, fp_mul(F, *nm, *Dm), *dm);
        if (!r.empty()) return -1;
        N[i][j] = q;
      }
  // rows[j] = c_j * Delta^j, stored as polynomial rows
  std::vector<std::vector<PolyFp>> rows;
  std::vector<PolyFp> c0(n);
  c0[func_index] = PolyFp{1};
  rows.push_back(c0);
  auto dD = fp_derivative(F, *Dm);
  for (int j = 0; j < jmax; ++j) {
    std::vector<PolyFp> nx(n);
    for (size_t k = 0; k < n; ++k) {
      PolyFp d = fp_derivative(F, rows[(size_t)j][k]);
      d.insert(d.begin(), 1, 0);
      PolyFp t1 = fp_mul(F, d, *Dm);
      PolyFp t2 = fp_mul(F, rows[(size_t)j][k], dD);
      t2.insert(t2.begin(), 1, 0);
      t2 = fp_scale(F, t2, (uint64_t)(j % (long)p));
      nx[k] = fp_sub(F, t1, t2);
    }
    for (size_t k = 0; k < n; ++k) {
      PolyFp acc = nx[k];
      for (size_t i = 0; i < n; ++i)
        if (!rows[(size_t)j][i].empty() && !N[i][k].empty())
          acc = fp_add(F, acc, fp_mul(F, rows[(size_t)j][i], N[i][k]));
      nx[k] = acc;
    }
    rows.push_back(nx);
  }
  std::mt19937_64 rng(0x5eedULL);
  std::vector<size_t> maxrank(rows.size(), 0);
  for (int trial = 0; trial < 40; ++trial) {
    uint64_t t = rng() % p;
    if (fp_eval(F, *Dm, t) == 0) continue;
    MatFp m(rows.size(), n);
    for (size_t j = 0; j < rows.size(); ++j)
      for (size_t k = 0; k < n; ++k) m.at(j, k) = fp_eval(F, rows[j][k], t);
    for (size_t j = 1; j <= rows.size(); ++j) {
      MatFp sub(j, n);
      for (size_t a = 0; a < j; ++a)
        for (size_t k = 0; k < n; ++k) sub.at(a, k) = m.at(a, k);
      size_t r = fp_rank(F, sub);
      if (r > maxrank[j - 1]) maxrank[j - 1] = r;
    }
  }
  for (size_t j = 0; j < rows.size(); ++j)
    if (maxrank[j] < j + 1) return (int)j;
  return jmax + 1;
}

// ---------------------------------------------------------------------------
// Shared pipelines for the guessed diagonal operators (criteria 3, 6, 7).

PowerSeries series_632(int terms) {
  MultiRat R = parse_multirat("1/(1+z-x*y+x*z+y^2)", 3);
  return diag_series(R, terms);
}

PowerSeries series_633(int terms) {
  MultiRat R = parse_multirat("(1-x-y+x*y*z)/(1-x-y-x*y-y^2*z^3)", 3);
  return diag_series(R, terms);
}

DiffOp guessed_632() {
  auto g = guess_ode(series_632(80), 4, 14);
  if (!g) throw std::runtime_error("no order-4 annihilator found for the 6.3.2 diagonal");
  return g->op;
}

DiffOp guessed_633() {
  auto g = guess_ode(series_633(185), 5, 26);
  if (!g) throw std::runtime_error("no order-5 annihilator found for the 6.3.3 diagonal");
  return g->op;
}

DiffOp guessed_62() {
  MultiRat R = parse_multirat("1/(1-3*x+z-5*y^2)", 3);
  auto g = guess_ode(diag_series(R, 40), 4, 12);
  if (!g) throw std::runtime_error("no order-4 annihilator found for the 6.2 diagonal");
  return g->op;
}

Poly poly_632_p3() {  // (71x+14)(x-2)x
  return P({BigQ(14), BigQ(71)}) * P({BigQ(-2), BigQ(1)}) * Poly::x(1);
}
Poly poly_632_p4() {
  return P({BigQ(16), BigQ(192), BigQ(984), BigQ(-1568), BigQ(729)});
}
Poly poly_633_p10() {
  return P({BigQ(162), BigQ(-810), BigQ(15660), BigQ(-45360), BigQ(-66582),
            BigQ(-281004), BigQ(196287), BigQ(383388), BigQ(-637392),
            BigQ(165760), BigQ(11008)});
}
Poly poly_633_p6() {
  return P({BigQ(54), BigQ(0), BigQ(0), BigQ(-9909), BigQ(0), BigQ(0), BigQ(1024)});
}

// rational-solution basis of a scalar power of the order-one-shifted
// equivalent operator, compared against the expected solution up to a unit
CheckResult power_ratsol_check(const std::string& name, const DiffOp& L,
                               PowerKind kind, const RatFun& expect) {
  auto sh = equivalent_shift(L, 1);
  if (!sh) return ck(name, false, "no order-1 shifted equivalent operator");
  auto pw = scalar_power_operator(sh->Lm, 2, kind);
  RatSolBasis rs = rational_solutions(pw.P);
  if (rs.solutions.size() != 1)
    return ck(name, false, "expected a one-dimensional rational solution space, got " +
                               std::to_string(rs.solutions.size()));
  auto u = ratfun_unit(rs.solutions[0], expect);
  if (!u) return ck(name, false, "solution is not proportional to the expected one: " +
                                     to_string(rs.solutions[0]));
  return ck(name, true, "unit " + qstr(*u));
}

// ---------------------------------------------------------------------------
// Criterion 1: duality goldens.

CriterionResult criterion1() {
  CriterionResult res{1, "duality goldens", {}};

  auto conj_mult = [](const DiffOp& L, const RatFun& c) {
    return equal_up_to_unit(op_mul(DiffOp::mult(c), op_adjoint(L)),
                            op_mul(L, DiffOp::mult(c)));
  };

  {
    DiffOp L = catalog_get("G3bcc");
    auto u = conj_mult(L, RatFun(Poly::x(1)));
    res.checks.push_back(ck("x*adjoint(G3bcc) = G3bcc*x", u.has_value(),
                            u ? "unit " + qstr(*u) : ""));
  }
  for (const char* name : {"G3sc", "G3fcc"}) {
    DiffOp L = catalog_get(name);
    DiffOp M = op_mul(DiffOp::mult(RF(Poly(BigQ(1)), Poly::x(1))), L);
    res.checks.push_back(ck(std::string("(1/x)") + name + " self-adjoint",
                            is_selfadjoint(M)));
  }
  {
    DiffOp L = catalog_get("G3diam");
    RatFun c = RF(pow(P({BigQ(-4), BigQ(0), BigQ(1)}), 2), Poly::x(1));
    auto u = conj_mult(L, c);
    res.checks.push_back(ck("G3diam conjugated by (x^2-4)^2/x", u.has_value(),
                            u ? "unit " + qstr(*u) : ""));
  }
  for (const char* name : {"G4prell", "G4broad"}) {
    DiffOp L = catalog_get(name);
    auto u = equal_up_to_unit(op_mul(L, DiffOp::mult(RatFun(Poly::x(1)))),
                              op_mul(DiffOp::mult(RatFun(Poly::x(1))), op_adjoint(L)));
    res.checks.push_back(ck(std::string(name) + "*x = x*adjoint(" + name + ")",
                            u.has_value(), u ? "unit " + qstr(*u) : ""));
  }
  for (int n = 1; n <= 5; ++n) {
    DiffOp L = catalog_get("E" + std::to_string(n));
    DiffOp M = op_mul(DiffOp::mult(RF(Poly(BigQ(1)), Poly::x(1))), L);
    res.checks.push_back(ck("(1/x)E" + std::to_string(n) + " self-adjoint",
                            is_selfadjoint(M)));
  }
  for (const char* name : {"H2plus", "H2minus"}) {
    DiffOp L = catalog_get(name);
    auto f = conjugation_to_adjoint(L);
    if (!f) {
      res.checks.push_back(ck(std::string(name) + " conjugated by x*sqrt((1-36x)(1-4x))", false,
                              "no conjugator found"));
      continue;
    }
    // log-derivative of x((1-36x)(1-4x))^(1/2):
    RatFun expect = RF(Poly(BigQ(1)), Poly::x(1)) +
                    RF(Poly(BigQ(-18)), P({BigQ(1), BigQ(-36)})) +
                    RF(Poly(BigQ(-2)), P({BigQ(1), BigQ(-4)}));
    RatFun u = logderiv(*f);
    bool okp = (u == expect);
    bool okm = ((RatFun() - u) == expect);
    res.checks.push_back(ck(std::string(name) + " conjugated by x*sqrt((1-36x)(1-4x))",
                            okp || okm, okm ? "conjugator direction inverted" : ""));
  }
  return res;
}

// ---------------------------------------------------------------------------
// Criterion 2: order drops.

CriterionResult criterion2() {
  CriterionResult res{2, "power-operator order drops", {}};

  auto order_is = [&](const std::string& label, const DiffOp& L, int k,
                      PowerKind kind, int want) {
    auto pw = scalar_power_operator(L, k, kind);
    res.checks.push_back(ck(label, pw.P.order() == want,
                            "order " + std::to_string(pw.P.order()) +
                                (pw.dropped > 0 ? " (dropped " + std::to_string(pw.dropped) + ")" : "")));
  };

  for (const char* name : {"G3bcc", "G3sc", "G3fcc", "G3diam"})
    order_is(std::string("Sym2(") + name + ") order 5", catalog_get(name), 2,
             PowerKind::symmetric, 5);
  for (const char* name : {"G4fcc", "G4broad", "G4prell"})
    order_is(std::string("Ext2(") + name + ") order 5", catalog_get(name), 2,
             PowerKind::exterior, 5);
  for (BigQ mu : {BigQ(0), BigQ(2), BigQ(1, 3)})
    order_is("Ext2(C(" + qstr(mu) + ")) order 5",
             catalog_get("Cmu", {{"mu", mu}}), 2, PowerKind::exterior, 5);
  order_is("Sym2(G4asc(3)) order 9", catalog_get("G4asc", {{"alpha", BigQ(3)}}),
           2, PowerKind::symmetric, 9);

  {
    std::mt19937_64 rng(0xa11ce);
    DiffOp L5 = selfadjoint_normal_form(
        5, {RatFun(rand_poly(rng, 2, true)), rand_ratfun(rng, 2),
            rand_ratfun(rng, 2)});
    order_is("Sym2(random order-5 self-adjoint normal form) order 14", L5, 2,
             PowerKind::symmetric, 14);
  }

  // order-7 entries: modular certification of the minimal annihilator order.
  // Independence of the functional rows is proved over Q by a full-rank
  // evaluation; the dependence at the stated order is certified mod two
  // 62-bit primes.
  auto primes = primes_62(2);
  for (const char* name : {"Ehat1", "Ehat2"}) {
    DiffOp E = catalog_get(name);
    LinSystem C = theta_companion(E);
    struct Item {
      PowerKind kind;
      size_t func;
      int dimcap;
      int want;
      const char* label;
    } items[] = {{PowerKind::symmetric, 0, 28, 27, "Sym2"},
                 {PowerKind::exterior, 1, 21, 14, "Ext2"}};
    for (auto& it : items) {
      LinSystem S2 = tensor_power_system(C, 2, it.kind);
      bool ok = true;
      for (uint64_t p : primes) {
        int ord = minimal_order_mod_p(S2, it.func, p, it.dimcap);
        if (ord != it.want) ok = false;
      }
      res.checks.push_back(ck(std::string(it.label) + "(" + name + ") order " +
                                  std::to_string(it.want),
                              ok, "certified mod 2 word-size primes"));
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// Criterion 3: rational solutions.

CriterionResult criterion3() {
  CriterionResult res{3, "rational solutions of power operators", {}};

  res.checks.push_back(power_ratsol_check(
      "Sym2(shifted G3fcc): 1/(x^2 (4x+1)^2 (12x-1))", catalog_get("G3fcc"),
      PowerKind::symmetric,
      RF(Poly(BigQ(1)),
         Poly::x(2) * pow(P({BigQ(1), BigQ(4)}), 2) * P({BigQ(-1), BigQ(12)}))));
  res.checks.push_back(power_ratsol_check(
      "Ext2(shifted G4prell): 1/((225x^3-259x^2-35x-1) x^3)",
      catalog_get("G4prell"), PowerKind::exterior,
      RF(Poly(BigQ(1)),
         P({BigQ(-1), BigQ(-35), BigQ(-259), BigQ(225)}) * Poly::x(3))));
  {
    Poly den = Poly::x(3);
    for (long k : {6L, 10L, 14L, 15L, 18L, 42L}) den = den * P({BigQ(-1), BigQ(k)});
    res.checks.push_back(power_ratsol_check(
        "Ext2(shifted G4broad): 1/(x^3 (6x-1)(10x-1)(14x-1)(15x-1)(18x-1)(42x-1))",
        catalog_get("G4broad"), PowerKind::exterior, RF(Poly(BigQ(1)), den)));
  }
  res.checks.push_back(power_ratsol_check(
      "Sym2(shifted G4asc(3)): (5x+3)/(x^2 (1-9x)(1-x)(1-25x))",
      catalog_get("G4asc", {{"alpha", BigQ(3)}}), PowerKind::symmetric,
      RF(P({BigQ(3), BigQ(5)}),
         Poly::x(2) * P({BigQ(1), BigQ(-9)}) * P({BigQ(1), BigQ(-1)}) *
             P({BigQ(1), BigQ(-25)}))));

  // order-one summands of Sym^2 of the m=3 shifted order-seven operators:
  // rational vector solutions found by bounded ansatz and verified exactly.
  struct M3 {
    const char* name;
    Poly expect_den;  // of the first coordinate (= the scalar solution y^2)
    const char* label;
  } m3[] = {
      {"Ehat1", Poly::x(6) * pow(P({BigQ(-1), BigQ(1)}), 3),
       "Sym2(E1^(3)) rational solution 1/((x-1)^3 x^6)"},
      {"Ehat2", Poly::x(6) * pow(P({BigQ(-1), BigQ(1)}), 2),
       "Sym2(E2^(3)) rational solution 1/((x-1)^2 x^6)"},
  };
  for (auto& item : m3) {
    DiffOp E = catalog_get(item.name);
    auto sh = equivalent_shift(E, 3);
    if (!sh) {
      res.checks.push_back(ck(item.label, false, "equivalent shift failed"));
      continue;
    }
    LinSystem S2 = tensor_power_system(theta_companion(sh->Lm), 2,
                                       PowerKind::symmetric);
    const int A = 8, B = 18, d = 28;
    auto sols = theta_vector_solutions(S2, A, B, d);
    if (sols.size() != 1) {
      res.checks.push_back(ck(item.label, false,
                              "rational vector solution space has dimension " +
                                  std::to_string(sols.size())));
      continue;
    }
    Poly dn = shift_up(pow(P({BigQ(-1), BigQ(1)}), B), A);
    RatFun first(sols[0].num[0], dn);
    auto u = ratfun_unit(first, RF(Poly(BigQ(1)), item.expect_den));
    res.checks.push_back(ck(item.label, u.has_value(),
                            u ? "unit " + qstr(*u) : to_string(first)));
  }

  {
    // algebraic order-one summand of Ext^3(E1^(2)): substituting
    // Y = a1 Z with a1 = (x-1)^(-9/2) x^(-9) makes the diagonally shifted
    // system rational; a solution Z with first coordinate c x^3 states that
    // the exterior-cube Wronskian solution is c * a1 (the x^3 converts the
    // theta-Wronskian coordinate to the Dx-Wronskian).
    DiffOp E = catalog_get("Ehat1");
    auto sh = equivalent_shift(E, 2);
    std::string label = "Ext3(E1^(2)) algebraic solution 1/((x-1)^(9/2) x^9)";
    if (!sh) {
      res.checks.push_back(ck(label, false, "equivalent shift failed"));
    } else {
      LinSystem S3 = tensor_power_system(theta_companion(sh->Lm), 3,
                                         PowerKind::exterior);
      RatFun xu = RF(P({BigQ(0), BigQ(-9, 2)}), P({BigQ(-1), BigQ(1)})) +
                  RatFun(Poly(BigQ(-9)));  // x * a1'/a1
      for (size_t i = 0; i < S3.dim(); ++i) S3.M[i][i] = S3.M[i][i] - xu;
      const int A = 4, B = 24, d = 46;
      auto sols = theta_vector_solutions(S3, A, B, d);
      if (sols.size() != 1) {
        res.checks.push_back(ck(label, false,
                                "rational vector solution space has dimension " +
                                    std::to_string(sols.size())));
      } else {
        Poly dn = shift_up(pow(P({BigQ(-1), BigQ(1)}), B), A);
        RatFun first(sols[0].num[0], dn);
        auto u = ratfun_unit(first, RatFun(Poly::x(3)));
        res.checks.push_back(ck(label, u.has_value(),
                                u ? "unit " + qstr(*u) : to_string(first)));
      }
    }
  }

  {
    DiffOp L4 = guessed_632();
    auto pw = scalar_power_operator(L4, 2, PowerKind::exterior);
    RatSolBasis rs = rational_solutions(pw.P);
    RatFun expect = RF(poly_632_p3(), Poly::x(2) * poly_632_p4());
    std::string label = "Ext2 of the guessed 6.3.2 operator: p3/(x^2 p4)";
    if (rs.solutions.size() != 1)
      res.checks.push_back(ck(label, false, "solution space dimension " +
                                                std::to_string(rs.solutions.size())));
    else {
      auto u = ratfun_unit(rs.solutions[0], expect);
      res.checks.push_back(ck(label, u.has_value(), u ? "unit " + qstr(*u) : ""));
    }
  }
  {
    DiffOp L5 = guessed_633();
    auto [Q, R] = right_divide(L5, DiffOp::Dx());
    std::string label = "Ext2 of the 6.3.3 order-4 right quotient: p10/(x^2 p6^2)";
    if (!R.is_zero_o() || Q.order() != 4) {
      res.checks.push_back(ck(label, false, "guessed operator not divisible by Dx"));
    } else {
      auto pw = scalar_power_operator(Q, 2, PowerKind::exterior);
      RatSolBasis rs = rational_solutions(pw.P);
      RatFun expect = RF(poly_633_p10(), Poly::x(2) * pow(poly_633_p6(), 2));
      if (rs.solutions.size() != 1)
        res.checks.push_back(ck(label, false, "solution space dimension " +
                                                  std::to_string(rs.solutions.size())));
      else {
        auto u = ratfun_unit(rs.solutions[0], expect);
        res.checks.push_back(ck(label, u.has_value(), u ? "unit " + qstr(*u) : ""));
      }
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// Criterion 4: series, nome and Yukawa goldens.

const std::vector<std::string> kY0[6] = {
    {},
    {"1", "2688", "19707264", "191647334400", "2133255623587200",
     "25707449648409919488"},
    {"1", "384", "537984", "1097318400", "2680866518400", "7283382738960384"},
    {"1", "1512", "9885240", "95782780800", "1117658718099000",
     "14536396497887776512"},
    {"1", "14976", "1254798720", "159551671910400", "24603126146687088000",
     "4241337041632715022974976"},
    {"1", "2678400", "65172299068800", "2494516941707677286400",
     "116986156694543894801624380800",
     "6160069364202852097613676563979878400"}};

const std::vector<std::string> kNomeE[6] = {
    {},
    {"1", "7040", "67555904", "747082784768", "8968272297124128"},
    {"1", "1152", "2150976", "4983447552", "13054714896672"},
    {"1", "5562", "49552317", "547802062578", "6855142017357054"},
    {"1", "72576", "8462979648", "1230038144557056", "203018472128017391904"},
    {"1", "20200320", "689499895026240", "29916247864887732510720",
     "1488739080271271648779215102240"}};

CriterionResult criterion4() {
  CriterionResult res{4, "series, nome and Yukawa goldens", {}};
  std::string why;

  for (int n = 1; n <= 5; ++n) {
    DiffOp E = catalog_get("E" + std::to_string(n));
    LogSeriesBasis b = frobenius_basis(E, 7);
    bool ok = b.mum && !b.sols.empty() &&
              match_prefix(b.sols[0].comps[0], 0, kY0[n], &why);
    res.checks.push_back(ck("y0 of E" + std::to_string(n) + " (6 terms)", ok,
                            ok ? "" : why));
  }
  for (int n = 1; n <= 5; ++n) {
    DiffOp E = catalog_get("E" + std::to_string(n));
    bool ok = match_prefix(nome(E, 8), 1, kNomeE[n], &why);
    res.checks.push_back(ck("nome of E" + std::to_string(n) + " (5 terms)", ok,
                            ok ? "" : why));
  }
  {
    const std::vector<std::string> kx1 = {"1", "768", "3218688", "23958847488",
                                          "229225505561856", "2508123114368335872"};
    const std::vector<std::string> kq1 = {"1", "768", "-2188032", "2883403776",
                                          "-1360234636032", "-3787008084959232"};
    const std::vector<std::string> kx2 = {"1", "256", "1023232", "3869310976",
                                          "14664270683392", "56048323595665408"};
    const std::vector<std::string> kq2 = {"1", "256", "728320", "1640611840",
                                          "3618799525120", "8043817914720256"};
    DiffOp E1 = catalog_get("E1"), E2 = catalog_get("E2");
    struct Item {
      const char* label;
      const DiffOp* op;
      bool in_q;
      const std::vector<std::string>* want;
    } items[] = {{"K(1) in x", &E1, false, &kx1},
                 {"K(1) in q", &E1, true, &kq1},
                 {"K(2) in x", &E2, false, &kx2},
                 {"K(2) in q", &E2, true, &kq2}};
    for (auto& it : items) {
      bool ok = match_prefix(yukawa(*it.op, 3, it.in_q, 8), 0, *it.want, &why);
      res.checks.push_back(ck(std::string(it.label) + " (6 terms)", ok, ok ? "" : why));
    }
  }
  {
    struct Item {
      int N;
      const char* label;
      std::vector<std::string> want;
    } items[] = {
        {4, "nome of L3", {"1", "104", "15188", "2585184", "480222434"}},
        {5, "nome of L4", {"1", "770", "1014275", "1703916750", "3286569025625"}},
        {6, "nome of L5", {"1", "6264", "87103188", "1736438167584", "42329034160944354"}}};
    for (auto& it : items) {
      DiffOp L = catalog_get("LN", {{"N", BigQ(it.N)}});
      bool ok = match_prefix(nome(L, 8), 1, it.want, &why);
      res.checks.push_back(ck(std::string(it.label) + " (5 terms)", ok, ok ? "" : why));
    }
  }
  {
    struct Item {
      int N;
      const char* label;
      std::vector<std::string> want;
    } items[] = {{5, "K3(L4)", {"1", "575", "1418125", "3798200625",
                                "10597067934375", "30287765070550575"}},
                 {6, "K3(L5)", {"1", "10080", "357073920", "13943124679680",
                                "570470634728386560", "23986351416805190461440"}}};
    for (auto& it : items) {
      DiffOp L = catalog_get("LN", {{"N", BigQ(it.N)}});
      bool ok = match_prefix(yukawa(L, 3, false, 8), 0, it.want, &why);
      res.checks.push_back(ck(std::string(it.label) + " (6 terms)", ok, ok ? "" : why));
    }
  }
  for (const char* name : {"Ehat1", "Ehat2"}) {
    DiffOp E = catalog_get(name);
    PowerSeries K3 = yukawa(E, 3, false, 21);
    PowerSeries K3p2 = K3 * K3;
    PowerSeries K3p3 = K3p2 * K3;
    PowerSeries K3p5 = K3p3 * K3p2;
    PowerSeries K3p7 = K3p5 * K3p2;
    bool ok = series_equal(yukawa(E, 4, false, 21), K3p2) &&
              series_equal(yukawa(E, 5, false, 21), K3p3) &&
              series_equal(yukawa(E, 6, false, 21), K3p5) &&
              series_equal(yukawa(E, 7, false, 21), K3p7);
    res.checks.push_back(ck(std::string("K4=K3^2, K5=K3^3, K6=K3^5, K7=K3^7 for ") +
                                name + " (20 terms)",
                            ok));
  }
  {
    DiffOp L4 = catalog_get("LN", {{"N", BigQ(5)}});
    DiffOp E2 = scalar_power_operator(L4, 2, PowerKind::exterior).P;
    PowerSeries a = yukawa(L4, 3, false, 9);
    PowerSeries b = yukawa(E2, 3, false, 9);
    PowerSeries prod = a * b * b;  // K3(L4) * K3(Ext2(L4))^2 == 1
    bool ok = series_equal(prod, PowerSeries::one(8));
    res.checks.push_back(ck("K3(L4) = K3(Ext2(L4))^(-2) (8 terms)", ok));
  }
  return res;
}

// ---------------------------------------------------------------------------
// Criterion 5: quadratic relations.

CriterionResult criterion5() {
  CriterionResult res{5, "quadratic relations among solutions", {}};
  {
    DiffOp E = catalog_get("Ehat1");
    LogSeriesBasis basis = frobenius_basis(E, 24);
    std::vector<std::vector<BigQ>> form(7, std::vector<BigQ>(7, BigQ(0)));
    form[0][6] = BigQ(2);   // 2 S1 S7
    form[5][1] = BigQ(-2);  // -2 S6 S2
    form[4][2] = BigQ(2);   // 2 S5 S3
    form[3][3] = BigQ(-1);  // -S4^2
    LogSeries r = quadratic_relation_check(basis, form);
    bool zero = true;
    for (auto& c : r.comps)
      for (int k = c.lo; k < c.prec() && k <= 20; ++k)
        if (!is_zero(c.coeff(k))) zero = false;
    res.checks.push_back(ck("2 S1 S7 - 2 S6 S2 + 2 S5 S3 - S4^2 = 0 for Ehat1 (to x^20)",
                            zero));
  }
  {
    DiffOp nf = catalog_get("nonfuchs");
    LogSeriesBasis b = frobenius_basis(nf, 25);
    std::string label = "Q(f,f',f'') = 225/4 for the analytic solution of nonfuchs (to x^20)";
    if (b.sols.size() != 1 || b.analytic_count != 1) {
      res.checks.push_back(ck(label, false, "expected a single analytic Frobenius solution"));
    } else {
      PowerSeries f = b.sols[0].comps[0];
      PowerSeries f1 = derivative(f), f2 = derivative(f1);
      auto poly_ps = [&](std::initializer_list<BigQ> c) {
        return expand_at_zero(Poly(std::vector<BigQ>(c)), 23);
      };
      // 9(36x+5)x^2 f''^2 - 324 x^2 f'' f' - 648 x^2 f'' f + (81x-5) f'^2
      //   + 9(36x-5) f f' + 9(36x-5) f^2
      PowerSeries Q = poly_ps({BigQ(45), BigQ(324)}) * f2 * f2 +
                      poly_ps({BigQ(0), BigQ(0), BigQ(-324)}) * f2 * f1 +
                      poly_ps({BigQ(0), BigQ(0), BigQ(-648)}) * f2 * f +
                      poly_ps({BigQ(-5), BigQ(81)}) * f1 * f1 +
                      poly_ps({BigQ(-45), BigQ(324)}) * f * f1 +
                      poly_ps({BigQ(-45), BigQ(324)}) * f * f;
      // the x^2 factors of the f'' terms ride along with the polynomials:
      // 9(36x+5)x^2 = 324x^3 + 45x^2
      Q = Q + (poly_ps({BigQ(0), BigQ(0), BigQ(45), BigQ(324)}) -
               poly_ps({BigQ(45), BigQ(324)})) *
                  f2 * f2;
      bool ok = true;
      if (Q.coeff(0) != BigQ(225, 4)) ok = false;
      for (int k = 1; k <= 20 && ok; ++k)
        if (!is_zero(Q.coeff(k))) ok = false;
      res.checks.push_back(ck(label, ok));
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// Criterion 6: decompositions.

CriterionResult criterion6() {
  CriterionResult res{6, "self-adjoint decompositions", {}};
  {
    // (1/x^2) G4asc(3) = Y1s . rho . Y3s - 512/rho with both factors
    // self-adjoint; lambda = 8 (alpha^2-1)^2 = 512 exactly. (The sign of the
    // additive term depends on the adjoint sign convention for the odd-order
    // factors; the adjoint here absorbs (-1)^order.)
    std::string label = "G4asc(3) = Y1s.rho.Y3s + lambda/rho with |lambda| = 512";
    DiffOp G = catalog_get("G4asc", {{"alpha", BigQ(3)}});
    DiffOp Gp = op_mul(DiffOp::mult(RF(Poly(BigQ(1)), Poly::x(2))), G);
    Poly p53 = P({BigQ(3), BigQ(5)}), p253 = P({BigQ(-3), BigQ(25)});
    RatFun rho = RF(pow(p53, 4), pow(p253, 3));
    DiffOp rhoY1s({RatFun(P({BigQ(345), BigQ(125)})), RatFun(p53 * p253 * BigQ(2))});
    DiffOp Y1s = op_mul(DiffOp::mult(inverse(rho)), rhoY1s);
    auto [Q, R] = right_divide(op_adjoint(Gp), rhoY1s);
    bool ok = false;
    std::string detail;
    if (R.order() == 0) {
      DiffOp Y3s = op_adjoint(Q);
      auto lam = ratfun_unit(R.coeff(0), inverse(rho));
      DiffOp reasm = op_mul(op_mul(Y1s, DiffOp::mult(rho)), Y3s) +
                     DiffOp::mult(R.coeff(0));
      if (lam && is_selfadjoint(Y1s) && is_selfadjoint(Y3s) && reasm == Gp &&
          (*lam == BigQ(512) || *lam == BigQ(-512))) {
        ok = true;
        detail = "lambda = " + qstr(*lam) + ", exact reassembly";
      }
    }
    res.checks.push_back(ck(label, ok, detail));
  }
  {
    std::string label = "decomposition extraction on an operator equivalent to C(2)";
    bool ok = false;
    std::string detail;
    try {
      DiffOp C2 = catalog_get("Cmu", {{"mu", BigQ(2)}});
      auto sh = equivalent_shift(C2, 1);
      if (sh) {
        Decomposition4 dec = extract_decomposition4(sh->Lm);
        DiffOp reasm = op_mul(op_mul(dec.Z2s, DiffOp::mult(inverse(dec.A0))), dec.A2) +
                       DiffOp::mult(dec.A0);
        ok = is_selfadjoint(dec.Z2s) && is_selfadjoint(dec.A2) && reasm == sh->Lm;
        detail = "Z2s and A2 self-adjoint, exact reassembly";
      }
    } catch (const std::exception& e) {
      detail = e.what();
    }
    res.checks.push_back(ck(label, ok, detail));
  }
  {
    std::mt19937_64 rng(0xd5a1);
    int okcount = 0;
    for (int t = 0; t < 20; ++t) {
      int n = 1 + (int)(rng() % 3);
      int m = (rng() % 2) ? n : n + 2;  // 2p - n
      DiffOp Lr = rand_selfadjoint(rng, n);
      DiffOp Ll = rand_selfadjoint(rng, m);
      RatFun a = rand_ratfun(rng, 2, true);
      BigQ lam = (n == m) ? rand_q(rng) : BigQ(0);
      DiffOp M = build_M2p(Lr, Ll, a, lam);
      if (verify_intertwining(M, Lr, Ll, a)) ++okcount;
    }
    res.checks.push_back(ck("intertwining relations for 20 random synthetic M2p",
                            okcount == 20,
                            std::to_string(okcount) + "/20"));
  }
  {
    std::string label = "6.2 guessed operator: A0 = lambda/c0 with lambda = 9/5^4, c0 = x^2(x^2-16/(9*5^6))";
    bool ok = false;
    std::string detail;
    try {
      DiffOp L = monicize(guessed_62());
      Decomposition4 dec = extract_decomposition4(L);
      RatFun expect = RF(Poly(BigQ(9, 625)),
                         Poly::x(2) * P({BigQ(-16, 140625), BigQ(0), BigQ(1)}));
      auto u = ratfun_unit(dec.A0, expect);
      ok = u.has_value();
      if (u) detail = "unit " + qstr(*u);
    } catch (const std::exception& e) {
      detail = e.what();
    }
    res.checks.push_back(ck(label, ok, detail));
  }
  {
    std::string label = "6.3.2 guessed operator: A0 = lambda/c0 = 9 p6/(p3^2 p4)";
    bool ok = false;
    std::string detail;
    try {
      DiffOp L5 = guessed_632();
      DiffOp L = monicize(L5);
      Decomposition4 dec = extract_decomposition4(L);
      Poly p6 = P({BigQ(448), BigQ(10304), BigQ(-15796), BigQ(82424),
                   BigQ(-2047), BigQ(10514), BigQ(676)});
      RatFun expect = RF(p6 * BigQ(9), pow(poly_632_p3(), 2) * poly_632_p4());
      auto u = ratfun_unit(dec.A0, expect);
      ok = u.has_value();
      if (u) detail = "unit " + qstr(*u);
    } catch (const std::exception& e) {
      detail = e.what();
    }
    res.checks.push_back(ck(label, ok, detail));
  }
  return res;
}

// ---------------------------------------------------------------------------
// Criterion 7: diagonals of rational functions.

CriterionResult criterion7() {
  CriterionResult res{7, "diagonals and differential-equation guessing", {}};
  std::string why;

  for (int N = 2; N <= 6; ++N) {
    MultiRat R;
    R.nvars = N;
    R.num.push_back({std::vector<int>((size_t)N, 0), BigQ(1)});
    R.den.push_back({std::vector<int>((size_t)N, 0), BigQ(1)});
    for (int i = 0; i < N; ++i) {
      std::vector<int> e((size_t)N, 0);
      e[(size_t)i] = 1;
      R.den.push_back({e, BigQ(-1)});
    }
    PowerSeries s = diag_series(R, 30);
    bool ok = true;
    BigQ c(1);
    for (int k = 0; k < 30 && ok; ++k) {
      if (s.coeff(k) != c) ok = false;
      // (N(k+1))! / ((k+1)!)^N from (Nk)! / (k!)^N
      BigQ f(1);
      for (int j = 1; j <= N; ++j) f *= BigQ(N * k + j, k + 1);
      c *= f;
    }
    res.checks.push_back(ck("diagonal of 1/(1-x1-...-x" + std::to_string(N) +
                                ") = (" + std::to_string(N) + "k)!/(k!)^" +
                                std::to_string(N) + " (30 terms)",
                            ok));
  }
  {
    MultiRat R = parse_multirat("1/(1-3*x-5*y-7*z+x*y+2*y*z^2+3*x^2*z^2)", 3);
    PowerSeries s = diag_series(R, 10);
    bool ok = match_prefix(
        s, 0,
        {"1", "616", "947175", "1812651820", "3833011883965",
         "8582819380142616", "19946071353510410136", "47578122531207001944168",
         "115702070514540009854741415", "285583642613093627090885877280"},
        &why);
    res.checks.push_back(ck("6.3.1 diagonal prefix (10 terms)", ok, ok ? "" : why));
  }
  {
    PowerSeries s = series_632(13);
    bool ok = match_prefix(s, 0,
                           {"1", "-2", "3", "40", "-545", "3948", "-14910",
                            "-55176", "1544895", "-14999270", "82528303",
                            "-29585712", "-5093494406"},
                           &why);
    res.checks.push_back(ck("6.3.2 diagonal prefix (13 terms)", ok, ok ? "" : why));
  }
  {
    PowerSeries s = series_633(22);
    const char* nz[] = {"1", "1", "10", "32", "966", "3192", "120340",
                        "401720", "16712150", "56066920", "2466298800",
                        "8298484992", "378403867380", "1275714885984",
                        "59651272137600"};
    int exps[] = {0, 1, 3, 4, 6, 7, 9, 10, 12, 13, 15, 16, 18, 19, 21};
    bool ok = true;
    size_t at = 0;
    for (int k = 0; k <= 21 && ok; ++k) {
      if (at < 15 && exps[at] == k) {
        if (s.coeff(k) != BigQ(nz[at])) ok = false;
        ++at;
      } else if (!is_zero(s.coeff(k))) {
        ok = false;
      }
    }
    res.checks.push_back(ck("6.3.3 diagonal prefix and zero pattern (to x^21)", ok));
  }
  {
    MultiRat R = parse_multirat("(1-7*x+2*y*z)/(1+3*x*z-5*y^3)", 3);
    PowerSeries s = diag_series(R, 19);
    const char* nz[] = {"1", "-540", "510300", "-541282500", "604514137500",
                        "-695204544150000", "814769502147562500"};
    bool ok = true;
    for (int k = 0; k <= 18 && ok; ++k) {
      if (k % 3 == 0) {
        if (s.coeff(k) != BigQ(nz[k / 3])) ok = false;
      } else if (!is_zero(s.coeff(k))) {
        ok = false;
      }
    }
    res.checks.push_back(ck("algebraic-case diagonal (7 nonzero terms)", ok));
  }
  {
    std::vector<BigQ> c(40);
    c[0] = BigQ(1);
    for (int k = 1; k < 40; ++k) {
      BigQ f(1);
      for (int j = 1; j <= 5; ++j) f *= BigQ(5 * (k - 1) + j);
      BigQ k5 = BigQ(k) * BigQ(k) * BigQ(k) * BigQ(k) * BigQ(k);
      c[(size_t)k] = c[(size_t)k - 1] * f / k5;
    }
    PowerSeries s(0, c);
    auto g = guess_ode(s, 4, 6);
    std::string label = "guessed annihilator of sum (5k)!/(k!)^5 x^k is L4";
    if (!g) {
      res.checks.push_back(ck(label, false, "guessing failed"));
    } else {
      DiffOp L4 = poly_normalize(catalog_get("LN", {{"N", BigQ(5)}}));
      auto u = equal_up_to_unit(poly_normalize(g->op), L4);
      res.checks.push_back(ck(label, u.has_value(), u ? "unit " + qstr(*u) : ""));
    }
  }
  {
    std::string label = "6.3.3 guessed order-5 operator = (order-4 quotient) * Dx";
    try {
      DiffOp L5 = guessed_633();
      auto [Q, R] = right_divide(L5, DiffOp::Dx());
      res.checks.push_back(ck(label, R.is_zero_o() && Q.order() == 4,
                              "order " + std::to_string(L5.order()) +
                                  ", remainder zero: " + (R.is_zero_o() ? "yes" : "no")));
    } catch (const std::exception& e) {
      res.checks.push_back(ck(label, false, e.what()));
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// Criterion 8: p-curvature.

CriterionResult criterion8() {
  CriterionResult res{8, "p-curvature", {}};
  {
    DiffOp G = catalog_get("G4asc", {{"alpha", BigQ(3)}});
    bool ok = true;
    std::string detail;
    for (uint64_t p : {7ULL, 11ULL, 13ULL}) {
      PCurvatureReport r = p_curvature_report(G, p);
      bool zero_low = r.good && r.charpoly.size() == 5;
      for (size_t j = 0; j + 1 < r.charpoly.size() && zero_low; ++j) {
        const RatFp& c = r.charpoly[j];
        for (auto v : c.num)
          if (v) zero_low = false;
      }
      if (!zero_low || r.minpoly_degree != 3) {
        ok = false;
        detail = "failed at p=" + std::to_string(p);
      }
    }
    res.checks.push_back(ck("G4asc(3): charpoly = lambda^4, minpoly degree 3 (p=7,11,13)",
                            ok, detail));
  }
  {
    bool ok = true;
    std::string detail;
    std::vector<int> want = {6, 5, 4, 3, 2, 1, 0};
    for (int n = 1; n <= 5 && ok; ++n) {
      DiffOp E = catalog_get("E" + std::to_string(n));
      for (uint64_t p : {11ULL, 13ULL}) {
        PCurvatureReport r = p_curvature_report(E, p);
        if (!r.good || !r.nilpotent || r.rank_sequence != want) {
          ok = false;
          detail = "E" + std::to_string(n) + " at p=" + std::to_string(p);
        }
      }
    }
    res.checks.push_back(ck("E1..E5 nilpotent with single-J7-block ranks {6,5,4,3,2,1,0} (p=11,13)",
                            ok, detail));
  }
  {
    bool ok = true;
    std::string detail;
    for (const char* name : {"H2plus", "H2minus", "M2fcc", "Dia2"}) {
      for (uint64_t p : {11ULL, 13ULL}) {
        PCurvatureReport r = p_curvature_report(catalog_get(name), p);
        if (!r.good || !r.nilpotent) {
          ok = false;
          detail = std::string(name) + " at p=" + std::to_string(p);
        }
      }
    }
    res.checks.push_back(ck("order-2 hypergeometric catalog entries nilpotent (p=11,13)",
                            ok, detail));
  }
  return res;
}

// ---------------------------------------------------------------------------
// Criterion 9: randomized property suites.

CriterionResult criterion9() {
  CriterionResult res{9, "randomized property suites", {}};

  {
    std::mt19937_64 rng(101);
    int n = 0, ok = 0;
    for (int t = 0; t < 110; ++t) {
      DiffOp A = rand_op(rng, 1 + (int)(rng() % 4));
      DiffOp B = rand_op(rng, 1 + (int)(rng() % 3));
      ++n;
      if (op_adjoint(op_adjoint(A)) == A &&
          op_adjoint(op_mul(A, B)) == op_mul(op_adjoint(B), op_adjoint(A)))
        ++ok;
    }
    res.checks.push_back(ck("adjoint involution and anti-homomorphism",
                            ok == n, std::to_string(ok) + "/" + std::to_string(n)));
  }
  {
    std::mt19937_64 rng(102);
    int n = 0, ok = 0;
    for (int t = 0; t < 110; ++t) {
      DiffOp A = rand_op(rng, 1 + (int)(rng() % 3));
      DiffOp B = rand_op(rng, 1 + (int)(rng() % 3));
      ++n;
      auto [Q, R] = right_divide(A, B);
      bool good = (op_mul(Q, B) + R == A) && R.order() < B.order();
      if (good) {
        DiffOp L = lclm(A, B);
        good = right_divide(L, A).second.is_zero_o() &&
               right_divide(L, B).second.is_zero_o() &&
               L.order() <= A.order() + B.order();
      }
      if (good) ++ok;
    }
    res.checks.push_back(ck("right_divide and lclm laws",
                            ok == n, std::to_string(ok) + "/" + std::to_string(n)));
  }
  {
    // W adj(L) and Ext^(N-1)(L) (aN W) agree for operators with rational
    // Wronskian W (a_{N-1} = -(W'/W) aN). The library scalar power operator
    // is polynomial-normalized, so both sides are compared monicized (equal
    // up to one left rational-function normalization).
    std::mt19937_64 rng(103);
    int n = 0, ok = 0;
    for (int t = 0; t < 100; ++t) {
      int N = 3 + (int)(rng() % 2);
      RatFun W = rand_ratfun(rng, 1, true);
      RatFun aN = RatFun(rand_poly(rng, 1, true));
      std::vector<RatFun> a((size_t)N + 1);
      a[(size_t)N] = aN;
      a[(size_t)N - 1] = RatFun() - derivative(W) / W * aN;
      for (int i = 0; i < N - 1; ++i) a[(size_t)i] = RatFun(rand_poly(rng, 1));
      DiffOp L(a);
      if (L.order() != N) continue;
      ++n;
      DiffOp E = scalar_power_operator(L, N - 1, PowerKind::exterior).P;
      DiffOp lhs = op_mul(DiffOp::mult(W), op_adjoint(L));
      DiffOp rhs = op_mul(E, DiffOp::mult(aN * W));
      if (lhs.order() == rhs.order() && monicize(lhs) == monicize(rhs)) ++ok;
    }
    res.checks.push_back(ck("W * adjoint(L) = Ext^(N-1)(L) * (aN W), orders 3-4",
                            n >= 100 && ok == n,
                            std::to_string(ok) + "/" + std::to_string(n)));
  }
  {
    // W Ext2(adjoint(Omega4)) = Ext2(Omega4) W for monic order-4 operators
    // with rational Wronskian (a3 = -W'/W), again modulo the polynomial
    // normalization of the scalar powers.
    std::mt19937_64 rng(104);
    int n = 0, ok = 0;
    for (int t = 0; t < 100; ++t) {
      RatFun W = rand_ratfun(rng, 1, true);
      std::vector<RatFun> a(5);
      a[4] = RatFun(Poly(BigQ(1)));
      a[3] = RatFun() - derivative(W) / W;
      for (int i = 0; i < 3; ++i) a[(size_t)i] = RatFun(rand_poly(rng, 1));
      DiffOp Om(a);
      ++n;
      DiffOp E1 = scalar_power_operator(op_adjoint(Om), 2, PowerKind::exterior).P;
      DiffOp E2 = scalar_power_operator(Om, 2, PowerKind::exterior).P;
      DiffOp lhs = op_mul(DiffOp::mult(W), E1);
      DiffOp rhs = op_mul(E2, DiffOp::mult(W));
      if (lhs.order() == rhs.order() && monicize(lhs) == monicize(rhs)) ++ok;
    }
    res.checks.push_back(ck("W * Ext2(adjoint(Omega4)) = Ext2(Omega4) * W",
                            n >= 100 && ok == n,
                            std::to_string(ok) + "/" + std::to_string(n)));
  }
  {
    // the Wronskian 1/beta2 of the right self-adjoint factor solves
    // Ext2(L2 M2 + lambda)
    std::mt19937_64 rng(105);
    int n = 0, ok = 0;
    for (int t = 0; t < 100; ++t) {
      RatFun a2 = RatFun(rand_poly(rng, 2, true)), a0 = RatFun(rand_poly(rng, 2));
      RatFun b2 = RatFun(rand_poly(rng, 2, true)), b0 = RatFun(rand_poly(rng, 2));
      BigQ lam = rand_q(rng);
      DiffOp L = op_mul(selfadj2(a2, a0), selfadj2(b2, b0)) + DiffOp::mult(RatFun(lam));
      if (L.order() != 4) continue;
      ++n;
      DiffOp E = scalar_power_operator(L, 2, PowerKind::exterior).P;
      if (apply_to_ratfun(E, inverse(b2)).is_zero_r()) ++ok;
    }
    res.checks.push_back(ck("1/beta2 solves Ext2(L2 M2 + lambda)",
                            n >= 100 && ok == n,
                            std::to_string(ok) + "/" + std::to_string(n)));
  }
  {
    // Calabi-Yau condition <=> conjugated to the adjoint, both directions
    std::mt19937_64 rng(106);
    int n = 0, ok = 0;
    for (int t = 0; t < 60; ++t) {  // forward
      RatFun a3 = RatFun(rand_poly(rng, 1));
      RatFun a2 = RatFun(rand_poly(rng, 1));
      RatFun a0 = RatFun(rand_poly(rng, 1));
      RatFun a3p = derivative(a3);
      RatFun a1 = (a3 * a2 * BigQ(4) - a3 * a3 * a3 - a3 * a3p * BigQ(6) +
                   derivative(a2) * BigQ(8) - derivative(a3p) * BigQ(4)) *
                  BigQ(1, 8);
      DiffOp Om({a0, a1, a2, a3, RatFun(Poly(BigQ(1)))});
      ++n;
      if (cy_condition_order4(Om) && conjugation_to_adjoint(Om).has_value()) ++ok;
    }
    for (int t = 0; t < 60; ++t) {  // converse
      DiffOp A = rand_selfadjoint(rng, 4);
      RatFun g = rand_ratfun(rng, 1, true);
      if (g.num.deg() == 0 && g.den.deg() == 0) continue;
      DiffOp Om = conjugate_by_logderiv(A, derivative(g) * inverse(g));
      ++n;
      if (cy_condition_order4(Om)) ++ok;
    }
    res.checks.push_back(ck("Calabi-Yau condition <=> conjugated to adjoint (both directions)",
                            n >= 100 && ok == n,
                            std::to_string(ok) + "/" + std::to_string(n)));
  }
  {
    // Sym3(M2) + f satisfies the order-4 Calabi-Yau condition
    std::mt19937_64 rng(107);
    int n = 0, ok = 0;
    for (int t = 0; t < 100; ++t) {
      DiffOp M2 = rand_op(rng, 2, 1);
      RatFun f = rand_ratfun(rng, 1);
      DiffOp S = scalar_power_operator(M2, 3, PowerKind::symmetric).P;
      if (S.order() != 4) continue;
      DiffOp M4 = monicize(S) + DiffOp::mult(f);
      ++n;
      if (cy_condition_order4(M4)) ++ok;
    }
    res.checks.push_back(ck("Sym3(M2) + f satisfies the Calabi-Yau condition",
                            n >= 100 && ok == n,
                            std::to_string(ok) + "/" + std::to_string(n)));
  }
  {
    // C(mu) X3(mu) = Y3(mu) C(mu+2)
    std::mt19937_64 rng(108);
    int n = 0, ok = 0;
    std::vector<BigQ> mus = {BigQ(1, 3), BigQ(2), BigQ(7, 5)};
    while (mus.size() < 103) mus.push_back(rand_q(rng, 20));
    for (const BigQ& mu : mus) {
      try {
        DiffOp C1 = catalog_get("Cmu", {{"mu", mu}});
        DiffOp C2 = catalog_get("Cmu", {{"mu", mu + 2}});
        DiffOp X3 = catalog_get("X3", {{"mu", mu}});
        DiffOp Y3 = catalog_get("Y3", {{"mu", mu}});
        ++n;
        if (equal_up_to_unit(op_mul(C1, X3), op_mul(Y3, C2)).has_value()) ++ok;
      } catch (const std::exception&) {
        // parameter outside the family's domain; skip
      }
    }
    res.checks.push_back(ck("C(mu) X3(mu) = Y3(mu) C(mu+2)",
                            n >= 100 && ok == n,
                            std::to_string(ok) + "/" + std::to_string(n)));
  }
  return res;
}

// ---------------------------------------------------------------------------
// Criterion 10: negative control.

CriterionResult criterion10() {
  CriterionResult res{10, "negative control", {}};
  // 3F2([1/9,4/9,5/9],[1/3,1]; 729x): exact coefficients by term recurrence
  std::vector<BigQ> c(40);
  c[0] = BigQ(1);
  for (int k = 1; k < 40; ++k) {
    BigQ km1(k - 1);
    BigQ ratio = BigQ(729) * (km1 + BigQ(1, 9)) * (km1 + BigQ(4, 9)) *
                 (km1 + BigQ(5, 9)) /
                 ((km1 + BigQ(1, 3)) * (km1 + BigQ(1)) * BigQ(k));
    c[(size_t)k] = c[(size_t)k - 1] * ratio;
  }
  bool prefix_ok = c[1] == BigQ(60) && c[2] == BigQ(20475) && c[3] == BigQ(9373650);
  res.checks.push_back(ck("3F2([1/9,4/9,5/9],[1/3,1];729x) prefix 1, 60, 20475, 9373650",
                          prefix_ok));
  PowerSeries s(0, c);
  auto g = guess_ode(s, 3, 8);
  if (!g) {
    res.checks.push_back(ck("order-3 annihilator guessed", false));
    return res;
  }
  res.checks.push_back(ck("order-3 annihilator guessed", g->order == 3,
                          "order " + std::to_string(g->order) + ", degree " +
                              std::to_string(g->degree)));
  DualityReport rep = adjoint_duality_report(g->op, 6);
  res.checks.push_back(ck(
      "adjoint_duality_report returns none_within_budget at degree budget 6",
      rep.cls == DualityClass::none_within_budget,
      "budget-relative: exhausting the ansatz budget is not a proof of "
      "non-equivalence; the known intertwiner here is transcendental"));
  return res;
}

}  // namespace

CriterionResult run_criterion(int id) {
  switch (id) {
    case 1: return criterion1();
    case 2: return criterion2();
    case 3: return criterion3();
    case 4: return criterion4();
    case 5: return criterion5();
    case 6: return criterion6();
    case 7: return criterion7();
    case 8: return criterion8();
    case 9: return criterion9();
    case 10: return criterion10();
    default: throw std::invalid_argument("run_criterion: id must be 1..10");
  }
}

std::vector<CriterionResult> run_all_criteria() {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= 10; ++id) out.push_back(run_criterion(id));
  return out;
}

}  // namespace dop
