#include "dop/diffop.hpp"

#include <cassert>
#include <sstream>

namespace dop {

void DiffOp::trim() {
  while (!a.empty() && a.back().is_zero_r()) a.pop_back();
}

DiffOp DiffOp::Dx(int k) {
  DiffOp L;
  L.a.assign(k + 1, RatFun());
  L.a[k] = RatFun(BigQ(1));
  return L;
}

DiffOp DiffOp::mult(const RatFun& f) {
  DiffOp L;
  if (!f.is_zero_r()) L.a.push_back(f);
  return L;
}

DiffOp DiffOp::theta() {
  DiffOp L;
  L.a.assign(2, RatFun());
  L.a[1] = RatFun::x();
  return L;
}

int ThetaOp::order() const {
  int d = -1;
  for (const auto& p : P) d = std::max(d, p.deg());
  return d;
}

void ThetaOp::trim() {
  while (!P.empty() && P.back().is_zero_p()) P.pop_back();
}

DiffOp operator+(const DiffOp& A, const DiffOp& B) {
  DiffOp r;
  r.a.resize(std::max(A.a.size(), B.a.size()), RatFun());
  for (size_t i = 0; i < A.a.size(); ++i) r.a[i] = A.a[i];
  for (size_t i = 0; i < B.a.size(); ++i) r.a[i] = r.a[i] + B.a[i];
  r.trim();
  return r;
}

DiffOp operator-(const DiffOp& A) {
  DiffOp r = A;
  for (auto& v : r.a) v = -v;
  return r;
}

DiffOp operator-(const DiffOp& A, const DiffOp& B) { return A + (-B); }

DiffOp operator*(const DiffOp& A, const BigQ& s) {
  if (is_zero(s)) return DiffOp();
  DiffOp r = A;
  for (auto& v : r.a) v = v * s;
  return r;
}

namespace {

// Dx * C (compose derivative on the left).
DiffOp dx_left(const DiffOp& C) {
  DiffOp r;
  r.a.assign(C.a.size() + 1, RatFun());
  for (size_t n = 0; n < C.a.size(); ++n) {
    r.a[n + 1] = r.a[n + 1] + C.a[n];
    r.a[n] = r.a[n] + derivative(C.a[n]);
  }
  r.trim();
  return r;
}

}  // namespace

DiffOp op_mul(const DiffOp& A, const DiffOp& B) {
  if (A.is_zero_o() || B.is_zero_o()) return DiffOp();
  DiffOp r;
  DiffOp cur = B;  // Dx^i * B
  for (int i = 0; i <= A.order(); ++i) {
    if (!A.a[i].is_zero_r()) {
      DiffOp term = cur;
      for (auto& v : term.a) v = v * A.a[i];
      r = r + term;
    }
    if (i < A.order()) cur = dx_left(cur);
  }
  return r;
}

DiffOp op_adjoint(const DiffOp& L) {
  int N = L.order();
  DiffOp r;
  for (int n = 0; n <= N; ++n) {
    if (L.a[n].is_zero_r()) continue;
    // Dx^n * a_n = sum_k C(n,k) a_n^(k) Dx^(n-k)
    RatFun d = L.a[n];
    for (int k = 0; k <= n; ++k) {
      DiffOp term = DiffOp::Dx(n - k);
      term.a[n - k] = d * BigQ(binomial_z(n, k));
      if ((n % 2) == 1) term = -term;
      r = r + term;
      if (k < n) d = derivative(d);
    }
  }
  if ((N % 2) == 1) r = -r;
  return r;
}

DiffOp monicize(const DiffOp& L) {
  if (L.is_zero_o()) return L;
  DiffOp r = L;
  RatFun inv = inverse(L.lc());
  for (auto& v : r.a) v = v * inv;
  return r;
}

DiffOp poly_normalize(const DiffOp& L) {
  if (L.is_zero_o()) return L;
  Poly D(BigQ(1));
  for (const auto& v : L.a) D = lcm(D, v.den);
  Poly all;
  std::vector<Poly> cs(L.a.size());
  for (size_t i = 0; i < L.a.size(); ++i)
    cs[i] = L.a[i].num * exact_div(D, L.a[i].den);
  // joint primitive normalization
  Poly joint;
  for (const auto& p : cs)
    for (const auto& v : p.c) joint.c.push_back(v);
  joint.trim();
  BigQ s = rational_content(Poly(joint.c));
  if (sgn(cs.back().lc()) < 0) s = -s;
  DiffOp r;
  for (auto& p : cs) r.a.push_back(RatFun(p * (BigQ(1) / s)));
  r.trim();
  return r;
}

std::optional<BigQ> equal_up_to_unit(const DiffOp& A, const DiffOp& B) {
  if (A.order() != B.order()) return std::nullopt;
  if (A.is_zero_o()) return BigQ(1);
  // c with A = c*B: from leading coefficients
  if (B.lc().is_zero_r()) return std::nullopt;
  RatFun cr = A.lc() / B.lc();
  if (!cr.is_constant()) return std::nullopt;
  BigQ c = cr.num.coeff(0) / cr.den.coeff(0);
  for (int n = 0; n <= A.order(); ++n)
    if (A.coeff(n) != B.coeff(n) * c) return std::nullopt;
  return c;
}

namespace {

// Falling factorial theta(theta-1)...(theta-n+1) as polynomial in theta.
Poly falling_factorial(int n) {
  Poly r(BigQ(1));
  Poly t = Poly::x(1);
  for (int k = 0; k < n; ++k) r = r * (t - Poly(BigQ(k)));
  return r;
}

// Stirling numbers of the second kind S(k,j) table.
std::vector<std::vector<BigQ>> stirling2(int kmax) {
  std::vector<std::vector<BigQ>> S(kmax + 1, std::vector<BigQ>(kmax + 1, BigQ(0)));
  S[0][0] = 1;
  for (int k = 1; k <= kmax; ++k)
    for (int j = 1; j <= k; ++j) S[k][j] = S[k - 1][j - 1] + BigQ(j) * S[k - 1][j];
  return S;
}

}  // namespace

RebaseResult rebase(const DiffOp& L) {
  RebaseResult res;
  res.shift = L.order();
  Poly D(BigQ(1));
  for (const auto& v : L.a) D = lcm(D, v.den);
  res.multiplier = D;
  int N = L.order();
  // x^N * D * L = sum_n b_n(x) x^(N-n) FF_n(theta)
  std::vector<Poly> P;
  for (int n = 0; n <= N; ++n) {
    if (L.a[n].is_zero_r()) continue;
    Poly b = L.a[n].num * exact_div(D, L.a[n].den);
    Poly ff = falling_factorial(n);
    for (int j = 0; j <= b.deg(); ++j) {
      if (is_zero(b.coeff(j))) continue;
      int i = j + N - n;
      if ((int)P.size() <= i) P.resize(i + 1);
      P[i] = P[i] + ff * b.coeff(j);
    }
  }
  // strip common power of x
  int xf = 0;
  while (xf < (int)P.size() && P[xf].is_zero_p()) ++xf;
  res.xfactor = xf;
  res.op.P.assign(P.begin() + xf, P.end());
  res.op.trim();
  return res;
}

DiffOp rebase_inv(const ThetaOp& T) {
  int ord = T.order();
  auto S = stirling2(std::max(ord, 1));
  std::vector<Poly> a(ord + 1);
  for (int i = 0; i <= T.xdeg(); ++i) {
    const Poly& p = T.coeff(i);
    for (int k = 0; k <= p.deg(); ++k) {
      if (is_zero(p.coeff(k))) continue;
      for (int j = (k == 0 ? 0 : 1); j <= k; ++j) {
        if (is_zero(S[k][j])) continue;
        a[j] = a[j] + shift_up(Poly(p.coeff(k) * S[k][j]), i + j);
      }
    }
  }
  DiffOp r;
  for (auto& p : a) r.a.push_back(RatFun(p));
  r.trim();
  return r;
}

std::pair<DiffOp, DiffOp> right_divide(const DiffOp& A, const DiffOp& B) {
  assert(!B.is_zero_o());
  DiffOp Q, R = A;
  int db = B.order();
  if (R.order() < db) return {Q, R};
  // Dx^i * B precomputed
  std::vector<DiffOp> DB{B};
  for (int i = 0; i < R.order() - db; ++i) DB.push_back(dx_left(DB.back()));
  while (!R.is_zero_o() && R.order() >= db) {
    int d = R.order() - db;
    RatFun t = R.lc() / B.lc();
    DiffOp term = DB[d];
    for (auto& v : term.a) v = v * t;
    R = R - term;
    if (!R.is_zero_o() && R.order() == d + db) {
      // numerical cancellation impossible over exact arithmetic
      assert(false);
    }
    DiffOp qt;
    qt.a.assign(d + 1, RatFun());
    qt.a[d] = t;
    qt.trim();
    Q = Q + qt;
  }
  return {Q, R};
}

namespace {

// Incremental linear elimination over Q(x) with dependency recovery.
struct QxElim {
  size_t width;
  // echelon rows: (vector, combo) with pivot positions
  std::vector<std::vector<RatFun>> rows;
  std::vector<std::vector<RatFun>> combos;
  std::vector<size_t> pivots;

  explicit QxElim(size_t w) : width(w) {}

  // Insert vector with tag index; returns dependency coefficients (over all
  // previously inserted vectors, in insertion order, last entry = this one)
  // if the vector is dependent, otherwise empty.
  std::optional<std::vector<RatFun>> insert(std::vector<RatFun> v) {
    size_t idx = combos.empty() ? 0 : combos[0].size();
    std::vector<RatFun> combo(idx + 1, RatFun());
    combo[idx] = RatFun(BigQ(1));
    for (auto& c : combos) c.push_back(RatFun());
    for (size_t r = 0; r < rows.size(); ++r) {
      size_t p = pivots[r];
      if (v[p].is_zero_r()) continue;
      RatFun f = v[p] / rows[r][p];
      for (size_t j = 0; j < width; ++j)
        if (!rows[r][j].is_zero_r()) v[j] = v[j] - f * rows[r][j];
      for (size_t j = 0; j < combo.size(); ++j)
        if (!combos[r][j].is_zero_r()) combo[j] = combo[j] - f * combos[r][j];
    }
    size_t p = 0;
    while (p < width && v[p].is_zero_r()) ++p;
    if (p == width) return combo;
    rows.push_back(std::move(v));
    combos.push_back(std::move(combo));
    pivots.push_back(p);
    return std::nullopt;
  }
};

// One reduction step: given remainder coefficients r (length N) of an operator
// T mod L (monic not required), return coefficients of Dx*T mod L.
std::vector<RatFun> dx_mod(const std::vector<RatFun>& r, const DiffOp& L) {
  size_t N = r.size();
  std::vector<RatFun> s(N, RatFun());
  for (size_t i = 0; i < N; ++i) s[i] = derivative(r[i]);
  for (size_t i = 0; i + 1 < N; ++i) s[i + 1] = s[i + 1] + r[i];
  // overflow term r[N-1]*Dx^N reduced by L
  const RatFun& top = r[N - 1];
  if (!top.is_zero_r()) {
    RatFun f = top / L.lc();
    for (size_t i = 0; i < N; ++i) s[i] = s[i] - f * L.a[i];
  }
  return s;
}

}  // namespace

DiffOp lclm(const DiffOp& A, const DiffOp& B) {
  assert(!A.is_zero_o() && !B.is_zero_o());
  size_t NA = A.order(), NB = B.order();
  if (NA == 0 || NB == 0) {
    return monicize(NA == 0 ? B : A);
  }
  std::vector<RatFun> ra(NA, RatFun()), rb(NB, RatFun());
  ra[0] = RatFun(BigQ(1));
  rb[0] = RatFun(BigQ(1));
  QxElim elim(NA + NB);
  for (size_t k = 0; k <= NA + NB; ++k) {
    std::vector<RatFun> joint(NA + NB);
    for (size_t i = 0; i < NA; ++i) joint[i] = ra[i];
    for (size_t i = 0; i < NB; ++i) joint[NA + i] = rb[i];
    auto dep = elim.insert(std::move(joint));
    if (dep) {
      DiffOp r;
      r.a = *dep;
      r.trim();
      return monicize(r);
    }
    ra = dx_mod(ra, A);
    rb = dx_mod(rb, B);
  }
  assert(false && "lclm: no dependency found");
  return DiffOp();
}

std::optional<EquivShift> equivalent_shift(const DiffOp& L, int m) {
  if (L.is_zero_o() || m <= 0) return std::nullopt;
  DiffOp C = lclm(L, DiffOp::Dx(m));
  if (C.order() != L.order() + m) return std::nullopt;
  auto [lm, rem] = right_divide(C, DiffOp::Dx(m));
  if (!rem.is_zero_o()) return std::nullopt;
  auto [s, rem2] = right_divide(C, L);
  if (!rem2.is_zero_o()) return std::nullopt;
  EquivShift res;
  res.Lm = monicize(lm);
  // scale S consistently with the monic normalization of Lm: S*L = Lm*Dx^m
  res.S = s;
  return res;
}

namespace {

// Hermite reduction: u = g' + h with h having squarefree denominator.
// Returns (g, h).
std::pair<RatFun, RatFun> hermite_reduce(const RatFun& u) {
  RatFun g;  // zero
  RatFun h = u;
  while (true) {
    auto sq = squarefree_factor(h.den);
    int maxmult = 0;
    for (auto& [f, m] : sq) maxmult = std::max(maxmult, m);
    if (maxmult <= 1) break;
    // pick highest multiplicity factor block: D = product f^m over m = maxmult
    Poly Dm(BigQ(1));
    for (auto& [f, m] : sq)
      if (m == maxmult) Dm = Dm * f;
    Poly rest = exact_div(h.den, pow(Dm, (unsigned)maxmult));
    // h = A / (rest * Dm^m). Find B, C with A = B * rest * Dm' * (1-m) + C*Dm (...)
    // Use standard step: write h = (B/Dm^(m-1))' + remainder form by solving
    // A = -(m-1) B Dm' rest + (B' rest + B rest' ... ) ; do it via linear algebra
    // on polynomial coefficients instead: B unknown with deg B < deg Dm^(m-1)...
    // Simpler exact approach: extended gcd split.
    // A/(rest*Dm^m): since gcd(Dm, rest*Dm') = 1, write A = s*Dm + t*rest*Dm'
    // Then A/(rest Dm^m) = s/(rest Dm^(m-1)) + t Dm'/Dm^m
    // and t*Dm'/Dm^m = -(t/((m-1) Dm^(m-1)))' + t'/((m-1) Dm^(m-1))
    Poly A = h.num;
    Poly Dp = derivative(Dm) * rest;
    // extended gcd: find s,t with s*Dm + t*Dp = A
    Poly r0 = Dm, r1 = Dp;
    Poly s0(BigQ(1)), s1, t0, t1(BigQ(1));
    while (r1.deg() > 0) {
      auto [q, r2] = divrem(r0, r1);
      Poly s2 = s0 - q * s1, t2 = t0 - q * t1;
      r0 = r1; r1 = r2;
      s0 = s1; s1 = s2;
      t0 = t1; t1 = t2;
    }
    assert(!r1.is_zero_p());
    BigQ inv = BigQ(1) / r1.coeff(0);
    Poly s = s1 * inv * A, t = t1 * inv * A;
    // reduce t mod Dm^(m-1)-ish sizes via division to keep degrees small:
    // t*Dp + s*Dm = A; substitute t -> t mod Dm, s absorbs the rest.
    auto [tq, tr] = divrem(t, Dm);
    t = tr;
    s = s + tq * Dp;
    int m = maxmult;
    Poly denom_low = pow(Dm, (unsigned)(m - 1));
    RatFun gterm(t * BigQ(-1, m - 1), denom_low);
    g = g + gterm;
    RatFun hn = RatFun(s, rest * denom_low) +
                RatFun(derivative(t) * BigQ(1, m - 1), denom_low);
    h = hn;
  }
  return {g, h};
}

}  // namespace

std::optional<HyperexpFun> hyperexp_from_logderiv(const RatFun& u) {
  HyperexpFun f;
  if (u.is_zero_r()) return f;
  auto [g, h] = hermite_reduce(u);
  // polynomial part of h -> exp part too
  auto [w, a] = divrem(h.num, h.den);
  RatFun expPart = g;
  if (!w.is_zero_p()) {
    // integral of w
    Poly iw;
    iw.c.assign(w.c.size() + 1, BigQ(0));
    for (size_t i = 0; i < w.c.size(); ++i) iw.c[i + 1] = w.c[i] / BigQ((long)(i + 1));
    iw.trim();
    expPart = expPart + RatFun(iw);
  }
  f.exp_part = expPart;
  Poly D = h.den;
  if (a.is_zero_p() || D.deg() == 0) return f;
  if (D.deg() > 30) return std::nullopt;  // residue budget
  // Residues at the roots of D are the eigenvalues of multiplication by
  // a/D' in Q[x]/(D) (D squarefree, so D' invertible mod D).
  Poly Dp = derivative(D);
  AlgExtElem dpe(Dp, D);
  auto inv = ext_inverse(dpe);
  assert(inv.ok);  // D squarefree
  Poly wmul = divrem(a * inv.inverse.rep, D).second;
  int d = D.deg();
  // multiplication matrix
  std::vector<std::vector<BigQ>> M(d, std::vector<BigQ>(d, BigQ(0)));
  Poly col = wmul;
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) M[i][j] = col.coeff(i);
    col = divrem(shift_up(col, 1), D).second;
  }
  // charpoly det(tI - M) by interpolation at t = 0..d
  std::vector<BigQ> xs, ys;
  for (int t0 = 0; t0 <= d; ++t0) {
    std::vector<std::vector<BigQ>> A(d, std::vector<BigQ>(d));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) A[i][j] = (i == j) ? BigQ(BigQ(t0) - M[i][j]) : BigQ(-M[i][j]);
    // fraction Gaussian determinant
    BigQ det(1);
    for (int c2 = 0; c2 < d; ++c2) {
      int piv = c2;
      while (piv < d && is_zero(A[piv][c2])) ++piv;
      if (piv == d) { det = 0; break; }
      if (piv != c2) { std::swap(A[piv], A[c2]); det = -det; }
      det *= A[c2][c2];
      BigQ ip = BigQ(1) / A[c2][c2];
      for (int i = c2 + 1; i < d; ++i) {
        if (is_zero(A[i][c2])) continue;
        BigQ fmul = A[i][c2] * ip;
        for (int j = c2; j < d; ++j) A[i][j] -= fmul * A[c2][j];
      }
    }
    xs.push_back(BigQ(t0));
    ys.push_back(det);
  }
  std::vector<BigQ> dd = ys;
  for (int k = 1; k <= d; ++k)
    for (int i = d; i >= k; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - k]);
  Poly R;
  for (int i = d; i >= 0; --i) {
    R = R * (Poly::x(1) - Poly(xs[i])) + Poly(dd[i]);
  }
  Poly covered(BigQ(1));
  for (auto& [t0, mult] : rational_roots(R)) {
    if (is_zero(t0)) continue;
    Poly q = gcd(a - Dp * t0, D);
    if (q.deg() < 1) continue;
    f.factors.push_back({q, t0});
    covered = covered * q;
  }
  if (covered.deg() != D.deg()) return std::nullopt;  // irrational residues remain
  return f;
}

bool HyperexpFun::algebraic() const { return exp_part.is_zero_r(); }

bool HyperexpFun::rational() const {
  if (!exp_part.is_zero_r()) return false;
  for (const auto& [q, e] : factors)
    if (!is_integer(e)) return false;
  return true;
}

RatFun logderiv(const HyperexpFun& f) {
  RatFun u = derivative(f.exp_part);
  for (const auto& [q, e] : f.factors) u = u + RatFun(derivative(q), q) * e;
  return u;
}

RatFun as_ratfun(const HyperexpFun& f) {
  assert(f.rational());
  RatFun r(f.cst);
  for (const auto& [q, e] : f.factors) {
    long ei = e.get_num().get_si();
    r = r * pow(RatFun(q), (int)ei);
  }
  return r;
}

HyperexpFun hyperexp_pow(const HyperexpFun& f, const BigQ& e) {
  HyperexpFun r;
  r.cst = 1;  // rational power of the constant is not tracked symbolically
  for (const auto& [q, ee] : f.factors) r.factors.push_back({q, ee * e});
  r.exp_part = f.exp_part * e;
  return r;
}

HyperexpFun hyperexp_mul(const HyperexpFun& f, const HyperexpFun& g) {
  HyperexpFun r = f;
  r.cst = f.cst * g.cst;
  r.exp_part = f.exp_part + g.exp_part;
  for (const auto& [q, e] : g.factors) {
    bool merged = false;
    for (auto& [q2, e2] : r.factors)
      if (q2 == q) { e2 += e; merged = true; break; }
    if (!merged) r.factors.push_back({q, e});
  }
  std::erase_if(r.factors, [](const auto& p) { return is_zero(p.second); });
  return r;
}

std::optional<HyperexpFun> wronskian(const DiffOp& L) {
  assert(L.order() >= 1);
  RatFun u = -(L.coeff(L.order() - 1) / L.lc());
  return hyperexp_from_logderiv(u);
}

PowerSeries apply(const DiffOp& L, const PowerSeries& y) {
  PowerSeries r = PowerSeries::zero(y.prec());
  PowerSeries d = y;
  for (int n = 0; n <= L.order(); ++n) {
    if (!L.a[n].is_zero_r()) {
      PowerSeries c = expand_at_zero(L.a[n], y.prec() - std::min(0, d.lo) + 4);
      r = r + c * d;
    }
    if (n < L.order()) d = derivative(d);
  }
  return r;
}

LogSeries apply(const DiffOp& L, const LogSeries& y) {
  LogSeries r;
  LogSeries d = y;
  int prec = y.comps.empty() ? 0 : y.comps[0].prec();
  for (int n = 0; n <= L.order(); ++n) {
    if (!L.a[n].is_zero_r()) {
      PowerSeries c = expand_at_zero(L.a[n], prec + L.order() + 4);
      LogSeries t = d;
      for (auto& comp : t.comps) comp = comp * c;
      r = r + t;
    }
    if (n < L.order()) d = derivative(d);
  }
  return r;
}

RatFun apply_to_ratfun(const DiffOp& L, const RatFun& y) {
  RatFun r;
  RatFun d = y;
  for (int n = 0; n <= L.order(); ++n) {
    if (!L.a[n].is_zero_r()) r = r + L.a[n] * d;
    if (n < L.order()) d = derivative(d);
  }
  return r;
}

DiffOp conjugate_by_logderiv(const DiffOp& L, const RatFun& u) {
  DiffOp dxu = DiffOp::Dx(1);
  dxu.a[0] = u;
  DiffOp r;
  for (int n = L.order(); n >= 0; --n) {
    r = op_mul(r, dxu) + DiffOp::mult(L.coeff(n));
  }
  return r;
}

DiffOp rescale_x(const DiffOp& L, const BigQ& c) {
  assert(!is_zero(c));
  Poly cx = Poly::x(1) * c;
  DiffOp r;
  BigQ cinv = BigQ(1) / c, f(1);
  for (int n = 0; n <= L.order(); ++n) {
    RatFun an = L.coeff(n);
    r.a.push_back(RatFun(compose(an.num, cx) * f, compose(an.den, cx)));
    f *= cinv;
  }
  r.trim();
  return r;
}

std::string to_string(const DiffOp& L) {
  if (L.is_zero_o()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int n = L.order(); n >= 0; --n) {
    if (L.a[n].is_zero_r()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(L.a[n]) << ")";
    if (n > 0) os << "*Dx";
    if (n > 1) os << "^" << n;
  }
  return os.str();
}

std::string to_string_theta(const ThetaOp& T) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= T.xdeg(); ++i) {
    if (T.coeff(i).is_zero_p()) continue;
    if (!first) os << " + ";
    first = false;
    if (i > 0) {
      os << "x";
      if (i > 1) os << "^" << i;
      os << "*";
    }
    os << "(" << to_string(T.coeff(i), "theta") << ")";
  }
  if (first) os << "0";
  return os.str();
}

std::string to_string(const HyperexpFun& f, const std::string& var) {
  std::ostringstream os;
  os << f.cst.get_str();
  for (const auto& [q, e] : f.factors)
    os << " * (" << to_string(q, var) << ")^(" << e.get_str() << ")";
  if (!f.exp_part.is_zero_r()) os << " * exp(" << to_string(f.exp_part, var) << ")";
  return os.str();
}

}  // namespace dop
