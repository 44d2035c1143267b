#include <dop/analytic.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>

namespace dop {

namespace {

// linear forms over the current parameter list; shorter vectors are
// implicitly zero-padded
using Form = std::vector<BigQ>;

BigQ form_get(const Form& f, size_t i) { return i < f.size() ? f[i] : BigQ(0); }

void form_axpy(Form& dst, const BigQ& a, const Form& src) {
  if (is_zero(a)) return;
  if (dst.size() < src.size()) dst.resize(src.size());
  for (size_t i = 0; i < src.size(); ++i) dst[i] += a * src[i];
}

}  // namespace

LogSeriesBasis frobenius_basis(const DiffOp& L, int terms) {
  LogSeriesBasis basis;
  DiffOp Lp = poly_normalize(L);
  int N = Lp.order();
  if (N < 0) throw std::invalid_argument("frobenius_basis: zero operator");
  RebaseResult rb = rebase(Lp);
  const auto& P = rb.op.P;
  int d = rb.op.xdeg();
  const Poly& P0 = P[0];
  if (P0.deg() != N) throw std::invalid_argument("frobenius_basis: irregular singular at 0");
  basis.mum = true;
  for (int k = 0; k < N; ++k)
    if (!is_zero(P0.coeff(k))) basis.mum = false;

  auto roots = integer_roots(P0);
  if (roots.empty()) return basis;
  long lmin = roots[0].first.get_si(), lmax = lmin;
  int K = 0;
  for (auto& [r, m] : roots) {
    lmin = std::min(lmin, (long)r.get_si());
    lmax = std::max(lmax, (long)r.get_si());
    K += m;
  }
  long nend = lmax + std::max(terms, 1);

  // P_i^(k)(nu)/k! tables
  std::vector<std::vector<Poly>> DP(d + 1, std::vector<Poly>(K + 1));
  for (int i = 0; i <= d; ++i) {
    DP[i][0] = P[i];
    for (int k = 1; k <= K; ++k) DP[i][k] = derivative(DP[i][k - 1]) * BigQ(1, k);
  }

  size_t np = 0;
  std::vector<bool> alive;
  std::vector<std::vector<Form>> c;  // c[n - lmin][j] as linear form in params

  auto substitute = [&](const Form& v) {
    // constraint sum v[i] p_i = 0: eliminate the most recent involved param
    size_t r = v.size();
    while (r > 0 && is_zero(v[r - 1])) --r;
    if (r == 0) return;  // trivially satisfied
    --r;
    BigQ inv = BigQ(-1) / v[r];
    for (auto& row : c)
      for (auto& f : row) {
        BigQ w = form_get(f, r);
        if (is_zero(w)) continue;
        f[r] = BigQ(0);
        for (size_t s = 0; s < r; ++s) {
          BigQ add = w * v[s] * inv;
          if (is_zero(add)) continue;
          if (f.size() <= s) f.resize(s + 1);
          f[s] += add;
        }
      }
    alive[r] = false;
  };

  for (long n = lmin; n <= nend; ++n) {
    auto compute_b = [&](int j) {
      Form f;
      for (int i = 1; i <= d && n - i >= lmin; ++i)
        for (int k = 0; j + k < K; ++k) {
          BigQ w = -eval(DP[i][k], BigQ(n - i));
          form_axpy(f, w, c[n - i - lmin][j + k]);
        }
      return f;
    };
    std::vector<BigQ> t(K + 1);
    for (int k = 0; k <= K; ++k) t[k] = eval(DP[0][k], BigQ(n));
    int m = 0;
    while (m <= K && is_zero(t[m])) ++m;
    if (m > K) throw std::logic_error("frobenius_basis: indicial vanished identically");
    // constraints: rows K-m .. K-1 demand b[j] = 0; each elimination rewrites
    // the coefficient table, so recompute the row right before using it
    for (int j = K - m; j < K; ++j) substitute(compute_b(j));
    std::vector<Form> b(K);
    for (int j = 0; j < K; ++j) b[j] = compute_b(j);
    std::vector<Form> cn(K);
    for (int j = K - 1 - m; j >= 0; --j) {
      Form rhs = b[j];
      for (int k = m + 1; j + k < K; ++k)
        form_axpy(rhs, -t[k], cn[j + k]);
      for (auto& v : rhs) v = v / t[m];
      cn[j + m] = std::move(rhs);
    }
    for (int j = 0; j < m; ++j) {
      alive.push_back(true);
      ++np;
      Form e(np, BigQ(0));
      e[np - 1] = BigQ(1);
      cn[j] = std::move(e);
    }
    c.push_back(std::move(cn));
  }

  // extract basis solutions from surviving parameters
  std::vector<LogSeries> sols;
  for (size_t p = 0; p < np; ++p) {
    if (!alive[p]) continue;
    LogSeries s;
    s.comps.assign(K, PowerSeries());
    bool nonzero = false;
    for (int j = 0; j < K; ++j) {
      std::vector<BigQ> coeffs(c.size());
      for (size_t i = 0; i < c.size(); ++i) coeffs[i] = form_get(c[i][j], p);
      s.comps[j] = PowerSeries((int)lmin, std::move(coeffs));
      nonzero = nonzero || !s.comps[j].is_zero_s();
    }
    if (nonzero) sols.push_back(std::move(s));
  }

  // canonical triangular normalization
  std::stable_sort(sols.begin(), sols.end(), [](const LogSeries& a, const LogSeries& b) {
    int da = a.log_degree(), db = b.log_degree();
    if (da != db) return da < db;
    return a.comps[da].valuation() < b.comps[db].valuation();
  });
  for (size_t k = 0; k < sols.size(); ++k) {
    int dk = sols[k].log_degree();
    const PowerSeries& top = sols[k].comps[dk];
    BigQ lead = top.coeff(top.valuation());
    if (!is_zero(lead)) sols[k] = sols[k] * (BigQ(1) / lead);
    for (size_t i = 0; i < k; ++i) {
      int di = sols[i].log_degree();
      int ni = sols[i].comps[di].valuation();
      if (di >= (int)sols[k].comps.size()) continue;
      BigQ w = sols[k].comps[di].coeff(ni);
      if (!is_zero(w)) sols[k] = sols[k] - sols[i] * w;
    }
  }
  basis.sols = std::move(sols);
  for (auto& s : basis.sols)
    if (s.log_degree() == 0) ++basis.analytic_count;
  if (basis.mum && (int)basis.sols.size() != N) basis.mum = false;
  return basis;
}

PowerSeries nome(const DiffOp& L, int terms) {
  auto basis = frobenius_basis(L, terms + 2);
  if (!basis.mum) throw std::invalid_argument("nome: operator is not MUM at 0");
  const PowerSeries& y0 = basis.sols[0].comps[0];
  const PowerSeries& yt1 = basis.sols[1].comps[0];
  PowerSeries ratio = yt1 / y0;
  PowerSeries q = exp_series(ratio);
  q.lo += 1;  // multiply by x
  return q.truncated(terms + 1);
}

namespace {

PowerSeries series_det(const std::vector<std::vector<PowerSeries>>& M) {
  size_t k = M.size();
  // subset dynamic programming over column subsets
  std::vector<PowerSeries> minor(1u << k);
  int prec = 1 << 30;
  for (auto& row : M)
    for (auto& e : row) prec = std::min(prec, e.prec());
  minor[0] = PowerSeries::one(std::max(prec, 1));
  for (uint32_t S = 1; S < (1u << k); ++S) {
    int r = __builtin_popcount(S) - 1;  // row index
    PowerSeries acc;
    bool first = true;
    int sign = (r % 2 == 0) ? 1 : -1;  // Laplace expansion along row r
    for (size_t col = 0; col < k; ++col) {
      if (!(S >> col & 1)) continue;
      PowerSeries term = M[r][col] * minor[S & ~(1u << col)];
      if (sign < 0) term = -term;
      acc = first ? term : acc + term;
      first = false;
      sign = -sign;
    }
    minor[S] = acc;
  }
  return minor[(1u << k) - 1];
}

}  // namespace

std::vector<PowerSeries> wronskian_determinants(const LogSeriesBasis& basis, int nmax) {
  if ((int)basis.sols.size() < nmax)
    throw std::invalid_argument("wronskian_determinants: basis too small");
  std::vector<std::vector<PowerSeries>> rows;  // rows[r][c]: r-th derivative of sol c, log -> 0
  std::vector<LogSeries> ders(basis.sols.begin(), basis.sols.begin() + nmax);
  for (int r = 0; r < nmax; ++r) {
    std::vector<PowerSeries> row;
    for (auto& sol : ders) row.push_back(sol.comps.empty() ? PowerSeries() : sol.comps[0]);
    rows.push_back(std::move(row));
    for (auto& sol : ders) sol = derivative(sol);
  }
  std::vector<PowerSeries> W(nmax + 1);
  W[0] = PowerSeries::one(rows.empty() ? 1 : rows[0][0].prec());
  for (int kk = 1; kk <= nmax; ++kk) {
    std::vector<std::vector<PowerSeries>> M(kk, std::vector<PowerSeries>(kk));
    for (int r = 0; r < kk; ++r)
      for (int cc = 0; cc < kk; ++cc) M[r][cc] = rows[r][cc];
    W[kk] = series_det(M).normalized();
  }
  return W;
}

PowerSeries yukawa(const DiffOp& L, int n, bool in_q, int terms) {
  if (n < 3 || n > 7) throw std::invalid_argument("yukawa: n must be 3..7");
  auto basis = frobenius_basis(L, terms + n + 2);
  if (!basis.mum) throw std::invalid_argument("yukawa: operator is not MUM at 0");
  auto W = wronskian_determinants(basis, n);
  PowerSeries Kx = pow(W[1], n * (n - 2)) * W[n] * pow(inverse(W[2]), n * (n - 1) / 2);
  Kx = Kx.normalized();
  if (!in_q) return Kx.truncated(std::min(Kx.prec(), terms + Kx.valuation()));
  const PowerSeries& y0 = basis.sols[0].comps[0];
  const PowerSeries& yt1 = basis.sols[1].comps[0];
  PowerSeries q = exp_series(yt1 / y0);
  q.lo += 1;
  PowerSeries xq = reversion(q);  // x as a series in q
  PowerSeries Kq = compose(Kx, xq);
  return Kq.truncated(std::min(Kq.prec(), terms + Kq.valuation()));
}

BoundedProbe globally_bounded_probe(const PowerSeries& s) {
  BoundedProbe rep;
  std::map<BigZ, long> prime_exp;    // prime -> needed exponent in lambda
  std::map<BigZ, size_t> first_seen;
  size_t count = s.c.size();
  bool impossible = false;
  for (size_t i = 0; i < count; ++i) {
    long n = s.lo + (long)i;
    BigZ den = s.c[i].get_den();
    if (den == 1) continue;
    if (n <= 0) impossible = true;
    // factor the denominator: trial division, then a (probable) prime tail
    BigZ rest = den;
    auto record = [&](const BigZ& p, long e) {
      if (n > 0) {
        long need = (e + n - 1) / n;
        auto it = prime_exp.find(p);
        if (it == prime_exp.end() || it->second < need) prime_exp[p] = need;
      }
      if (!first_seen.count(p)) first_seen[p] = i;
    };
    for (long p = 2; p <= 1000000L && rest > 1; p = (p == 2 ? 3 : p + 2)) {
      if (!mpz_divisible_ui_p(rest.get_mpz_t(), p)) continue;
      long e = 0;
      while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
        rest /= p;
        ++e;
      }
      record(BigZ(p), e);
    }
    if (rest > 1) record(rest, 1);
  }
  for (auto& pe : prime_exp) rep.prime_support.push_back(pe.first);
  // growing support: a new denominator prime first appears in the last third
  size_t tail = count - count / 3;
  for (auto& [p, i] : first_seen)
    if (i >= tail) rep.support_growing = true;
  if (impossible || rep.support_growing) return rep;
  BigZ lambda(1);
  for (auto& [p, e] : prime_exp)
    for (long i = 0; i < e; ++i) lambda *= p;
  // verify
  for (size_t i = 0; i < count; ++i) {
    long n = s.lo + (long)i;
    if (n >= 1) {
      BigZ lam_pow;
      mpz_pow_ui(lam_pow.get_mpz_t(), lambda.get_mpz_t(), (unsigned long)n);
      BigQ v = s.c[i] * BigQ(lam_pow);
      if (!is_integer(v)) return rep;
    } else if (!is_integer(s.c[i])) {
      return rep;
    }
  }
  rep.candidate_found = true;
  rep.lambda = lambda;
  return rep;
}

LogSeries quadratic_relation_check(const LogSeriesBasis& basis,
                                   const std::vector<std::vector<BigQ>>& form) {
  LogSeries acc;
  for (size_t i = 0; i < form.size(); ++i)
    for (size_t j = 0; j < form[i].size(); ++j) {
      if (is_zero(form[i][j])) continue;
      if (i >= basis.sols.size() || j >= basis.sols.size())
        throw std::invalid_argument("quadratic_relation_check: form exceeds basis size");
      acc = acc + (basis.sols[i] * basis.sols[j]) * form[i][j];
    }
  return acc;
}

}  // namespace dop
