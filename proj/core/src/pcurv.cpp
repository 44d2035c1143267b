#include <dop/pcurv.hpp>

#include <random>
#include <stdexcept>

namespace dop {

namespace {

// Division-free Berkowitz characteristic polynomial of an n x n matrix with
// entries in F_p[x]: returns coefficients of lambda^j (ascending j, c_n = 1).
std::vector<PolyFp> berkowitz_polyfp(const Fp& F, const std::vector<PolyFp>& M, size_t n) {
  auto at = [&](size_t i, size_t j) -> const PolyFp& { return M[i * n + j]; };
  std::vector<PolyFp> cp{PolyFp{1}};  // descending: cp[i] multiplies lambda^{m-i}
  for (size_t k = 0; k < n; ++k) {
    size_t m = k + 1;
    std::vector<PolyFp> c(m + 1);
    c[0] = PolyFp{1};
    c[1] = fp_scale(F, at(k, k), F.neg(1));
    std::vector<PolyFp> v(k);
    for (size_t i = 0; i < k; ++i) v[i] = at(i, k);
    for (size_t j = 2; j <= m; ++j) {
      PolyFp s;
      for (size_t i = 0; i < k; ++i) s = fp_add(F, s, fp_mul(F, at(k, i), v[i]));
      c[j] = fp_scale(F, s, F.neg(1));
      if (j < m) {
        std::vector<PolyFp> w(k);
        for (size_t i = 0; i < k; ++i) {
          PolyFp acc;
          for (size_t t = 0; t < k; ++t) acc = fp_add(F, acc, fp_mul(F, at(i, t), v[t]));
          w[i] = acc;
        }
        v = std::move(w);
      }
    }
    std::vector<PolyFp> r(cp.size() + m);
    for (size_t i = 0; i < cp.size(); ++i)
      for (size_t j = 0; j <= m; ++j)
        r[i + j] = fp_add(F, r[i + j], fp_mul(F, cp[i], c[j]));
    r.resize(m + 1);
    cp = std::move(r);
  }
  std::vector<PolyFp> out(n + 1);
  for (size_t j = 0; j <= n; ++j) out[j] = cp[n - j];
  return out;
}

MatFp eval_mat(const Fp& F, const PCurvMat& A, uint64_t x0) {
  MatFp M(A.n, A.n);
  for (size_t i = 0; i < A.n; ++i)
    for (size_t j = 0; j < A.n; ++j) M.at(i, j) = fp_eval(F, A.at(i, j), x0);
  uint64_t lv = fp_eval(F, A.ell, x0);
  if (lv == 0) throw std::runtime_error("eval_mat: leading coefficient vanished");
  uint64_t s = F.inv(F.powm(lv, A.ell_pow));
  for (auto& v : M.a) v = F.mul(v, s);
  return M;
}

}  // namespace

PCurvMat p_curvature(const DiffOp& L, uint64_t p) {
  DiffOp Lp = poly_normalize(L);
  int N = Lp.order();
  if (N < 1) throw std::invalid_argument("p_curvature: order must be >= 1");
  Fp F(p);
  std::vector<PolyFp> a(N + 1);
  for (int i = 0; i <= N; ++i) {
    auto r = reduce_mod_prime(Lp.a[i].num, p);
    if (!r) throw std::invalid_argument("p_curvature: bad prime (coefficient denominator)");
    a[i] = *r;
  }
  PolyFp ell = a[N];
  if (fp_deg(ell) < 0) throw std::invalid_argument("p_curvature: bad prime (leading coefficient vanishes)");

  size_t n = (size_t)N;
  // first-order system for (y, y', ..., y^{(n-1)}): A1 = C/ell with
  // superdiagonal ell and last row -a_j
  std::vector<PolyFp> A1(n * n);
  for (size_t i = 0; i + 1 < n; ++i) A1[i * n + (i + 1)] = ell;
  for (size_t j = 0; j < n; ++j) A1[(n - 1) * n + j] = fp_scale(F, a[j], F.neg(1));

  PolyFp elld = fp_derivative(F, ell);
  // A_k = B_k / ell^k; B_{k+1} = B_k' ell - k ell' B_k + B_k C, B_1 = C = A1
  std::vector<PolyFp> B = A1;
  for (uint64_t k = 1; k < p; ++k) {
    std::vector<PolyFp> Bn(n * n);
    uint64_t km = k % p;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        PolyFp t = fp_mul(F, fp_derivative(F, B[i * n + j]), ell);
        t = fp_sub(F, t, fp_scale(F, fp_mul(F, elld, B[i * n + j]), km));
        PolyFp acc;
        for (size_t m = 0; m < n; ++m)
          acc = fp_add(F, acc, fp_mul(F, B[i * n + m], A1[m * n + j]));
        Bn[i * n + j] = fp_add(F, t, acc);
      }
    B = std::move(Bn);
  }
  PCurvMat R;
  R.p = p;
  R.n = n;
  R.B = std::move(B);
  R.ell = ell;
  R.ell_pow = (int)p;
  return R;
}

PCurvatureReport p_curvature_report(const DiffOp& L, uint64_t p) {
  PCurvatureReport rep;
  rep.prime = p;
  PCurvMat A;
  try {
    A = p_curvature(L, p);
  } catch (const std::exception& e) {
    rep.good = false;
    rep.notice = e.what();
    return rep;
  }
  Fp F(p);
  size_t n = A.n;

  // exact characteristic polynomial: chi_A(lambda) = e^{-n} chi_B(e lambda),
  // e = ell^p, so the lambda^j coefficient is c_j / e^{n-j}
  auto cB = berkowitz_polyfp(F, A.B, n);
  rep.charpoly.resize(n + 1);
  for (size_t j = 0; j <= n; ++j) {
    PolyFp num = cB[j];
    PolyFp den{1};
    for (size_t t = 0; t < (size_t)A.ell_pow * (n - j); ++t) den = fp_mul(F, den, A.ell);
    PolyFp g = fp_gcd(F, num, den);
    if (fp_deg(g) > 0) {
      num = fp_divrem(F, num, g).first;
      den = fp_divrem(F, den, g).first;
    }
    if (fp_deg(den) >= 0 && den.back() != 1) {
      uint64_t s = F.inv(den.back());
      den = fp_scale(F, den, s);
      num = fp_scale(F, num, s);
    }
    rep.charpoly[j] = {num, den};
  }
  bool lam_n = true;
  for (size_t j = 0; j < n; ++j)
    if (fp_deg(rep.charpoly[j].num) >= 0) lam_n = false;
  rep.nilpotent = lam_n;  // exact: charpoly == lambda^n

  if (rep.nilpotent) {
    // exact rank/minpoly data from symbolic powers of B (B^k = 0 iff A^k = 0,
    // and rank profiles agree since ell is a unit in F_p(x))
    std::vector<std::vector<PolyFp>> pw{A.B};
    rep.minpoly_degree = (int)n;
    for (size_t k = 1; k < n; ++k) {
      std::vector<PolyFp> nx(n * n);
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
          PolyFp acc;
          for (size_t m = 0; m < n; ++m)
            acc = fp_add(F, acc, fp_mul(F, pw.back()[i * n + m], A.B[m * n + j]));
          nx[i * n + j] = acc;
        }
      pw.push_back(std::move(nx));
    }
    for (size_t k = 0; k < n; ++k) {
      bool zero = true;
      for (auto& e : pw[k])
        if (fp_deg(e) >= 0) zero = false;
      if (zero) {
        rep.minpoly_degree = (int)k + 1;  // A^{k+1} = 0 first: minpoly lambda^{k+1}
        break;
      }
    }
  }

  // rank sequence over F_p(x): max of pointwise ranks across samples
  std::mt19937_64 rng(0xD0C5EEDULL ^ p);
  auto sample = [&]() {
    for (int tries = 0; tries < 4000; ++tries) {
      uint64_t x0 = rng() % p;
      if (fp_eval(F, A.ell, x0) != 0) return x0;
    }
    throw std::runtime_error("p_curvature_report: no usable sample point");
  };
  std::vector<int> best_ranks(n, 0);
  int krylov = 0;
  for (int t = 0; t < 3; ++t) {
    MatFp M = eval_mat(F, A, sample());
    MatFp P = M;
    for (size_t k = 0; k < n; ++k) {
      best_ranks[k] = std::max(best_ranks[k], (int)fp_rank(F, P));
      P = fp_matmul(F, P, M);
    }
    MatFp K(n + 1, n * n);
    MatFp Q(n, n);
    for (size_t i = 0; i < n; ++i) Q.at(i, i) = 1;
    for (size_t k = 0; k <= n; ++k) {
      for (size_t e = 0; e < n * n; ++e) K.at(k, e) = Q.a[e];
      Q = fp_matmul(F, Q, M);
    }
    krylov = std::max(krylov, (int)fp_rank(F, K));
  }
  rep.rank_sequence = best_ranks;
  if (!rep.nilpotent) rep.minpoly_degree = krylov;  // rank {I..A^{d-1}} = deg minpoly
  if (rep.nilpotent && best_ranks.back() != 0)
    throw std::logic_error("p_curvature_report: rank/charpoly nilpotence disagreement");
  return rep;
}

std::vector<PCurvatureReport> nilpotence_sweep(const DiffOp& L,
                                               const std::vector<uint64_t>& primes) {
  std::vector<PCurvatureReport> out;
  for (uint64_t p : primes) out.push_back(p_curvature_report(L, p));
  return out;
}

}  // namespace dop
