#include <dop/solve.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>

#include <dop/qlinalg.hpp>

namespace dop {

namespace {

Poly ext_reduce(const Poly& a, const Poly& f) {
  if (a.deg() < f.deg()) return a;
  return divrem(a, f).second;
}

Poly ext_mul_p(const Poly& a, const Poly& b, const Poly& f) {
  return ext_reduce(a * b, f);
}

// Newton interpolation over Q
Poly q_interpolate(const std::vector<BigQ>& xs, const std::vector<BigQ>& ys) {
  size_t n = xs.size();
  std::vector<BigQ> dd = ys;  // divided differences, in place
  for (size_t lvl = 1; lvl < n; ++lvl)
    for (size_t i = n - 1; i >= lvl; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - lvl]);
      if (i == lvl) break;
    }
  Poly res;
  for (size_t i = n; i-- > 0;) {
    Poly lin(std::vector<BigQ>{-xs[i], BigQ(1)});
    res = res * lin + Poly(dd[i]);
  }
  return res;
}

// falling factorial nu (nu-1) ... (nu-n+1) as a polynomial in nu
Poly falling_factorial(int n) {
  Poly r(BigQ(1));
  for (int i = 0; i < n; ++i) r = r * Poly(std::vector<BigQ>{BigQ(-i), BigQ(1)});
  return r;
}

// f-adic valuation of a (f squarefree and valuation-uniform on a's roots)
int poly_valuation(Poly a, const Poly& f, Poly* cofactor = nullptr) {
  int v = 0;
  while (!a.is_zero_p() && divides(f, a)) {
    a = exact_div(a, f);
    ++v;
  }
  if (cofactor) *cofactor = a;
  return v;
}

// split a squarefree g into monic pieces of uniform valuation in a:
// an irreducible p | g has p^k | a iff p | gcd(a, a', ..., a^(k-1))
std::vector<Poly> split_uniform(const Poly& g, const Poly& a) {
  std::vector<Poly> out;
  if (a.is_zero_p()) {
    out.push_back(g);
    return out;
  }
  std::vector<Poly> G{monic(g)};
  Poly d = a;
  while (G.back().deg() > 0) {
    G.push_back(gcd(G.back(), d));
    d = derivative(d);
  }
  for (size_t k = 0; k + 1 < G.size(); ++k) {
    Poly piece = exact_div(G[k], G[k + 1]);
    if (piece.deg() > 0) out.push_back(monic(piece));
  }
  if (G.back().deg() > 0) out.push_back(monic(G.back()));
  return out;
}

std::vector<Poly> coeff_polys(const DiffOp& Lp) {
  std::vector<Poly> a;
  for (auto& r : Lp.a) a.push_back(r.num);  // poly_normalize leaves den == 1
  return a;
}

// norm Res_t(f, sum_k coeffs[k](t) nu^k) in Q[nu] by interpolation in nu
Poly ext_norm(const std::vector<Poly>& coeffs, const Poly& f) {
  int dnu = -1;
  for (size_t k = 0; k < coeffs.size(); ++k)
    if (!coeffs[k].is_zero_p()) dnu = (int)k;
  if (dnu < 0) return Poly();
  if (f.deg() == 1) {
    std::vector<BigQ> c(dnu + 1);
    for (int k = 0; k <= dnu; ++k) c[k] = coeffs[k].coeff(0);
    return Poly(c);
  }
  int npts = dnu * f.deg() + 1;
  std::vector<BigQ> xs(npts), ys(npts);
  for (int j = 0; j < npts; ++j) {
    xs[j] = BigQ(j);
    Poly E;
    BigQ jp(1);
    for (int k = 0; k <= dnu; ++k) {
      E = E + coeffs[k] * jp;
      jp *= BigQ(j);
    }
    E = ext_reduce(E, f);
    ys[j] = E.is_zero_p() ? BigQ(0) : resultant(f, E);
  }
  return q_interpolate(xs, ys);
}

}  // namespace

IndicialInfo indicial_info(const DiffOp& L, const Poly& factor) {
  DiffOp Lp = poly_normalize(L);
  int N = Lp.order();
  if (N < 0) throw std::invalid_argument("indicial_info: zero operator");
  Poly f = monic(factor);
  if (f.deg() < 1) throw std::invalid_argument("indicial_info: constant place");
  auto a = coeff_polys(Lp);

  std::vector<int> v(N + 1, 0);
  std::vector<Poly> h(N + 1);
  int m = 0;
  bool first = true;
  for (int n = 0; n <= N; ++n) {
    if (a[n].is_zero_p()) continue;
    v[n] = poly_valuation(a[n], f, &h[n]);
    if (first || v[n] - n < m) m = v[n] - n;
    first = false;
  }

  IndicialInfo info;
  info.regular = (v[N] - N == m);
  info.ext_coeffs.assign(N + 1, Poly());
  Poly fp = ext_reduce(derivative(f), f);
  for (int n = 0; n <= N; ++n) {
    if (a[n].is_zero_p() || v[n] - n != m) continue;
    Poly c = ext_reduce(h[n], f);
    for (int i = 0; i < n; ++i) c = ext_mul_p(c, fp, f);
    Poly ff = falling_factorial(n);
    for (int k = 0; k <= n; ++k)
      if (!is_zero(ff.coeff(k))) info.ext_coeffs[k] = info.ext_coeffs[k] + c * ff.coeff(k);
  }
  for (auto& e : info.ext_coeffs) e = ext_reduce(e, f);
  info.norm = ext_norm(info.ext_coeffs, f);
  return info;
}

IndicialInfo indicial_info_infinity(const DiffOp& L) {
  DiffOp Lp = poly_normalize(L);
  int N = Lp.order();
  if (N < 0) throw std::invalid_argument("indicial_info: zero operator");
  RebaseResult rb = rebase(Lp);
  IndicialInfo info;
  Poly top = rb.op.P.empty() ? Poly() : rb.op.P.back();
  info.norm = top;
  info.ext_coeffs.assign(top.deg() + 1, Poly());
  for (int k = 0; k <= top.deg(); ++k) info.ext_coeffs[k] = Poly(top.coeff(k));
  info.regular = (top.deg() == N);
  return info;
}

Poly indicial_at(const DiffOp& L, const Poly& factor) { return indicial_info(L, factor).norm; }
Poly indicial_at_infinity(const DiffOp& L) { return indicial_info_infinity(L).norm; }

std::vector<Poly> singular_place_factors(const DiffOp& L) {
  DiffOp Lp = poly_normalize(L);
  if (Lp.order() < 0) return {};
  auto a = coeff_polys(Lp);
  std::vector<Poly> pieces;
  for (auto& [u, mult] : squarefree_factor(a.back()))
    if (u.deg() >= 1) pieces.push_back(monic(u));
  for (auto& an : a) {
    if (an.is_zero_p()) continue;
    std::vector<Poly> next;
    for (auto& g : pieces)
      for (auto& piece : split_uniform(g, an)) next.push_back(piece);
    pieces = std::move(next);
  }
  return pieces;
}

SingularityProfile singularity_profile(const DiffOp& L) {
  SingularityProfile prof;
  for (auto& f : singular_place_factors(L)) {
    auto info = indicial_info(L, f);
    prof.all_regular = prof.all_regular && info.regular;
    prof.finite.push_back({f, info.norm});
  }
  auto ii = indicial_info_infinity(L);
  prof.infinity = ii.norm;
  prof.all_regular = prof.all_regular && ii.regular;
  return prof;
}

namespace {

// basis of polynomials p with deg <= degmax and L(p/den) = 0
std::vector<RatFun> denominator_bounded_solutions(const DiffOp& Lp, const Poly& den,
                                                  long degmax) {
  std::vector<RatFun> out;
  if (degmax < 0) return out;
  RatFun u(-derivative(den), den);
  DiffOp M = conjugate_by_logderiv(Lp, u);
  Poly dlcm(BigQ(1));
  for (auto& c : M.a) dlcm = lcm(dlcm, c.den);
  std::vector<Poly> A(M.a.size());
  for (size_t n = 0; n < M.a.size(); ++n) A[n] = M.a[n].num * exact_div(dlcm, M.a[n].den);

  int N = M.order();
  std::vector<Poly> images(degmax + 1);
  int maxdeg = 0;
  for (long k = 0; k <= degmax; ++k) {
    Poly img;
    for (int n = 0; n <= N && n <= k; ++n) {
      // n-th derivative of x^k is k(k-1)...(k-n+1) x^(k-n)
      BigQ c(1);
      for (int i = 0; i < n; ++i) c *= BigQ(k - i);
      img = img + shift_up(A[n] * c, (int)k - n);
    }
    images[k] = img;
    maxdeg = std::max(maxdeg, img.deg());
  }
  MatQ mat(maxdeg + 1, degmax + 1);
  for (long k = 0; k <= degmax; ++k)
    for (int r = 0; r <= images[k].deg(); ++r) mat.at(r, k) = images[k].coeff(r);
  for (auto& v : q_nullspace(mat)) {
    Poly p(std::vector<BigQ>(v.begin(), v.end()));
    if (p.is_zero_p()) continue;
    RatFun r(monic(p), den);
    if (!apply_to_ratfun(Lp, r).is_zero_r())
      throw std::logic_error("rational_solutions: candidate failed verification");
    out.push_back(r);
  }
  return out;
}

}  // namespace

RatSolBasis rational_solutions(const DiffOp& L) {
  RatSolBasis basis;
  DiffOp Lp = poly_normalize(L);
  int N = Lp.order();
  if (N < 0) throw std::invalid_argument("rational_solutions: zero operator");
  if (N == 0) return basis;  // a0 * y = 0 with a0 != 0

  bool fallback = false;
  Poly den(BigQ(1));
  for (auto& f : singular_place_factors(Lp)) {
    auto info = indicial_info(Lp, f);
    if (!info.regular) {
      fallback = true;
      continue;
    }
    auto ir = integer_roots(info.norm);
    if (ir.empty()) return basis;  // every valuation there would need an integer root
    BigZ mn = ir[0].first;
    for (auto& [r, mult] : ir) mn = std::min(mn, r);
    long mf = std::max(0L, -(long)mn.get_si());
    for (long i = 0; i < mf; ++i) den = den * f;
  }

  auto iinf = indicial_info_infinity(Lp);
  long degmax = -1;
  bool inf_ok = false;
  if (iinf.regular) {
    auto ir = integer_roots(iinf.norm);
    if (ir.empty() && !fallback) return basis;
    if (!ir.empty()) {
      BigZ mx = ir[0].first;
      for (auto& [r, mult] : ir) mx = std::max(mx, r);
      degmax = (long)mx.get_si();
      inf_ok = true;
    }
  } else {
    fallback = true;
  }

  if (!fallback) {
    basis.solutions = denominator_bounded_solutions(Lp, den, degmax + den.deg());
    return basis;
  }

  // universal-denominator fallback for irregular places
  basis.complete = false;
  Poly lcmon = monic(Lp.lc().num);
  size_t prev = 0;
  for (int B = 1; B <= 3; ++B) {
    Poly d(BigQ(1));
    for (int i = 0; i < B; ++i) d = d * lcmon;
    long dm = inf_ok ? degmax + d.deg() : d.deg() + N + 20;
    basis.solutions = denominator_bounded_solutions(Lp, d, dm);
    if (B > 1 && basis.solutions.size() == prev) break;
    prev = basis.solutions.size();
  }
  return basis;
}

std::vector<HyperexpFun> power_product_solutions(const DiffOp& L) {
  std::vector<HyperexpFun> out;
  DiffOp Lp = poly_normalize(L);
  int N = Lp.order();
  if (N < 1) return out;

  auto places = singular_place_factors(Lp);
  std::vector<std::vector<BigQ>> cand(places.size());
  for (size_t i = 0; i < places.size(); ++i) {
    auto info = indicial_info(Lp, places[i]);
    for (auto& [r, mult] : rational_roots(info.norm)) {
      // the exponent must kill the indicial at every root of the place
      Poly val;
      BigQ rp(1);
      for (auto& ck : info.ext_coeffs) {
        val = val + ck * rp;
        rp *= r;
      }
      if (ext_reduce(val, places[i]).is_zero_p()) cand[i].push_back(r);
    }
    if (cand[i].empty()) return out;
  }
  auto iinf = indicial_info_infinity(Lp);
  std::vector<BigQ> inf_roots;
  for (auto& [r, mult] : rational_roots(iinf.norm)) inf_roots.push_back(r);
  if (inf_roots.empty()) return out;

  long combos = 1;
  for (auto& c : cand) {
    combos *= (long)c.size();
    if (combos > 20000) throw std::runtime_error("power_product_solutions: combination budget exceeded");
  }

  std::vector<size_t> idx(places.size(), 0);
  for (long it = 0; it < combos; ++it) {
    // decode combination
    long t = it;
    for (size_t i = 0; i < places.size(); ++i) {
      idx[i] = t % cand[i].size();
      t /= cand[i].size();
    }
    BigQ esum(0);
    for (size_t i = 0; i < places.size(); ++i) esum += cand[i][idx[i]] * BigQ(places[i].deg());
    bool infok = false;
    for (auto& r : inf_roots) infok = infok || (r == esum);
    if (!infok) continue;

    RatFun w;
    for (size_t i = 0; i < places.size(); ++i)
      w = w + RatFun(derivative(places[i]), places[i]) * cand[i][idx[i]];
    // u = prod f^e solves L(u) = 0 iff sum a_k r_k = 0 with r_0 = 1,
    // r_{k+1} = r_k' + r_k w  (r_k = u^(k)/u)
    RatFun acc, r(BigQ(1));
    for (int k = 0; k <= N; ++k) {
      acc = acc + Lp.a[k] * r;
      if (k < N) r = derivative(r) + r * w;
    }
    if (!acc.is_zero_r()) continue;
    HyperexpFun h;
    for (size_t i = 0; i < places.size(); ++i)
      if (!is_zero(cand[i][idx[i]])) h.factors.push_back({places[i], cand[i][idx[i]]});
    out.push_back(h);
  }
  return out;
}

namespace {

// Samuelson-Berkowitz characteristic polynomial det(nu I - A) over Q[t]/(f);
// division-free, entries and result coefficients are reduced representatives.
std::vector<Poly> berkowitz_charpoly(const std::vector<std::vector<Poly>>& A, const Poly& f) {
  size_t n = A.size();
  std::vector<Poly> V{Poly(BigQ(1))};
  if (n == 0) return V;
  V = {Poly(BigQ(1)), ext_reduce(-A[0][0], f)};
  for (size_t i = 1; i < n; ++i) {
    // Toeplitz column: 1, -a_ii, -(row M^k col) for k = 0..i-1
    std::vector<Poly> c(i + 2);
    c[0] = Poly(BigQ(1));
    c[1] = ext_reduce(-A[i][i], f);
    std::vector<Poly> w(i);
    for (size_t j = 0; j < i; ++j) w[j] = A[j][i];
    for (size_t k = 0; k < i; ++k) {
      Poly dot;
      for (size_t j = 0; j < i; ++j) dot = dot + ext_mul_p(A[i][j], w[j], f);
      c[k + 2] = ext_reduce(-dot, f);
      if (k + 1 < i) {
        std::vector<Poly> w2(i);
        for (size_t r = 0; r < i; ++r) {
          Poly s;
          for (size_t j = 0; j < i; ++j) s = s + ext_mul_p(A[r][j], w[j], f);
          w2[r] = ext_reduce(s, f);
        }
        w = std::move(w2);
      }
    }
    std::vector<Poly> V2(V.size() + 1);
    for (size_t a = 0; a < c.size(); ++a)
      for (size_t b = 0; b < V.size(); ++b)
        if (a + b < V2.size()) V2[a + b] = V2[a + b] + ext_mul_p(c[a], V[b], f);
    for (auto& e : V2) e = ext_reduce(e, f);
    V = std::move(V2);
  }
  return V;  // highest power of nu first
}

}  // namespace

std::vector<std::vector<RatFun>> rational_solutions_system(const LinSystem& S) {
  if (S.deriv != Derivation::theta)
    throw std::invalid_argument("rational_solutions_system: convert to a theta system first");
  size_t n = S.dim();
  if (n == 0) return {};

  // simple-pole checks: every entry denominator squarefree and nonzero at 0
  Poly d(BigQ(1));
  for (auto& row : S.M)
    for (auto& e : row) {
      for (auto& [u, mult] : squarefree_factor(e.den))
        if (mult > 1 && u.deg() > 0)
          throw std::invalid_argument("rational_solutions_system: non-simple pole; use the theta route");
      if (e.den.deg() > 0 && is_zero(e.den.coeff(0)))
        throw std::invalid_argument("rational_solutions_system: entry with pole at 0; use the theta route");
      d = lcm(d, e.den);
    }

  // worklist of finite places: x itself plus denominator factors, refined so
  // each place either divides an entry denominator or is coprime to it
  std::vector<Poly> places;
  for (auto& [u, mult] : squarefree_factor(d))
    if (u.deg() > 0) places.push_back(monic(u));
  for (auto& row : S.M)
    for (auto& e : row) {
      std::vector<Poly> next;
      for (auto& g : places) {
        Poly h = gcd(g, e.den);
        if (h.deg() > 0 && h.deg() < g.deg()) {
          next.push_back(monic(h));
          next.push_back(monic(exact_div(g, h)));
        } else {
          next.push_back(g);
        }
      }
      places = std::move(next);
    }

  Poly den(BigQ(1));
  long val0_min = 0;  // contribution of the place x handled with the others

  // process finite places with dynamic splitting on zero divisors
  std::vector<Poly> work = places;
  work.push_back(Poly::x(1));  // the theta pole at 0
  while (!work.empty()) {
    Poly f = work.back();
    work.pop_back();
    bool at_zero = (f.deg() == 1 && is_zero(f.coeff(0)));
    std::vector<std::vector<Poly>> R(n, std::vector<Poly>(n));
    bool split = false;
    for (size_t i = 0; i < n && !split; ++i)
      for (size_t j = 0; j < n && !split; ++j) {
        const RatFun& e = S.M[i][j];
        if (e.is_zero_r()) continue;
        if (at_zero) {
          // residue of M/x at 0 is M(0)
          auto inv = ext_inverse(AlgExtElem(e.den, f));
          if (!inv.ok) throw std::logic_error("rational_solutions_system: pole at 0 slipped through");
          R[i][j] = ext_mul_p(ext_reduce(e.num, f), inv.inverse.rep, f);
        } else if (divides(f, e.den)) {
          // residue of num/(den x) at a simple root of f: num / (den' t)
          Poly dd = ext_reduce(derivative(e.den) * Poly::x(1), f);
          auto inv = ext_inverse(AlgExtElem(dd, f));
          if (!inv.ok) {
            if (inv.factor.deg() > 0 && inv.factor.deg() < f.deg()) {
              work.push_back(monic(inv.factor));
              work.push_back(monic(exact_div(f, inv.factor)));
              split = true;
              continue;
            }
            throw std::logic_error("rational_solutions_system: residue inversion failed");
          }
          R[i][j] = ext_mul_p(ext_reduce(e.num, f), inv.inverse.rep, f);
        }  // entry regular at this place: residue 0
      }
    if (split) continue;
    auto chi = berkowitz_charpoly(R, f);  // highest nu power first
    std::vector<Poly> coeffs(chi.size());
    for (size_t k = 0; k < chi.size(); ++k) coeffs[k] = chi[chi.size() - 1 - k];
    Poly norm = ext_norm(coeffs, f);
    auto ir = integer_roots(norm);
    if (ir.empty()) return {};
    BigZ mn = ir[0].first;
    for (auto& [r, mult] : ir) mn = std::min(mn, r);
    long mf = std::max(0L, -(long)mn.get_si());
    for (long i = 0; i < mf; ++i) den = den * f;
    (void)val0_min;
  }

  // exponents at infinity: eigenvalues of lim M(x)
  std::vector<std::vector<Poly>> Minf(n, std::vector<Poly>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      const RatFun& e = S.M[i][j];
      if (e.num.deg() > e.den.deg())
        throw std::runtime_error("rational_solutions_system: irregular at infinity");
      if (e.num.deg() == e.den.deg() && !e.is_zero_r())
        Minf[i][j] = Poly(e.num.lc() / e.den.lc());
    }
  auto chi_inf = berkowitz_charpoly(Minf, Poly::x(1));
  std::vector<BigQ> ci(chi_inf.size());
  for (size_t k = 0; k < chi_inf.size(); ++k) ci[k] = chi_inf[chi_inf.size() - 1 - k].coeff(0);
  auto ir_inf = integer_roots(Poly(ci));
  if (ir_inf.empty()) return {};
  BigZ mx = ir_inf[0].first;
  for (auto& [r, mult] : ir_inf) mx = std::max(mx, r);
  long degmax = (long)mx.get_si() + den.deg();
  if (degmax < 0) return {};

  // ansatz y_i = p_i / den, theta(y_i) = sum_j M_ij y_j; multiply by den^2 d
  Poly denp = derivative(den);
  size_t cols = n * (degmax + 1);
  std::vector<std::vector<Poly>> eq(n, std::vector<Poly>(cols));
  int maxdeg = 0;
  for (size_t j = 0; j < n; ++j)
    for (long k = 0; k <= degmax; ++k) {
      size_t col = j * (degmax + 1) + k;
      // theta(x^k/den) * den^2 * d = (k x^k den - x^(k+1) den') d
      Poly th = (shift_up(den, (int)k) * BigQ(k) - shift_up(denp, (int)k + 1)) * d;
      eq[j][col] = eq[j][col] + th;
      for (size_t i = 0; i < n; ++i) {
        const RatFun& e = S.M[i][j];
        if (e.is_zero_r()) continue;
        Poly term = shift_up(e.num * exact_div(d, e.den) * den, (int)k);
        eq[i][col] = eq[i][col] - term;
      }
    }
  for (auto& row : eq)
    for (auto& p : row) maxdeg = std::max(maxdeg, p.deg());

  MatQ mat(n * (maxdeg + 1), cols);
  for (size_t i = 0; i < n; ++i)
    for (size_t col = 0; col < cols; ++col)
      for (int r = 0; r <= eq[i][col].deg(); ++r)
        mat.at(i * (maxdeg + 1) + r, col) = eq[i][col].coeff(r);

  std::vector<std::vector<RatFun>> out;
  for (auto& v : q_nullspace(mat)) {
    std::vector<RatFun> y(n);
    for (size_t j = 0; j < n; ++j) {
      Poly p;
      p.c.assign(v.begin() + j * (degmax + 1), v.begin() + (j + 1) * (degmax + 1));
      p.trim();
      y[j] = RatFun(p, den);
    }
    // verify: x y_i' == sum_j M_ij y_j
    for (size_t i = 0; i < n; ++i) {
      RatFun lhs = RatFun::x() * derivative(y[i]);
      RatFun rhs;
      for (size_t j = 0; j < n; ++j) rhs = rhs + S.M[i][j] * y[j];
      if (!(lhs == rhs)) throw std::logic_error("rational_solutions_system: verification failed");
    }
    out.push_back(std::move(y));
  }
  return out;
}

}  // namespace dop
