#include <dop/diagonal.hpp>
#include <dop/fp.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace dop {

namespace {

using Expo = std::vector<int>;

std::map<Expo, BigQ> term_map(const std::vector<std::pair<Expo, BigQ>>& terms, int nvars) {
  std::map<Expo, BigQ> m;
  for (auto& [e, c] : terms) {
    if ((int)e.size() != nvars) throw std::invalid_argument("diag_series: exponent arity mismatch");
    for (int v : e)
      if (v < 0) throw std::invalid_argument("diag_series: negative exponent");
    if (!is_zero(c)) m[e] += c;
  }
  for (auto it = m.begin(); it != m.end();)
    it = is_zero(it->second) ? m.erase(it) : std::next(it);
  return m;
}

bool is_symmetric(const std::map<Expo, BigQ>& m, int nvars) {
  for (int i = 0; i + 1 < nvars; ++i) {
    for (auto& [e, c] : m) {
      Expo f = e;
      std::swap(f[i], f[i + 1]);
      auto it = m.find(f);
      if (it == m.end() || it->second != c) return false;
    }
  }
  return true;
}

}  // namespace

PowerSeries diag_series(const MultiRat& R, int terms) {
  int k = R.nvars;
  if (k < 1) throw std::invalid_argument("diag_series: need at least one variable");
  auto num = term_map(R.num, k), den = term_map(R.den, k);
  Expo zero(k, 0);
  auto d0it = den.find(zero);
  if (d0it == den.end()) throw std::invalid_argument("diag_series: denominator vanishes at origin");
  BigQ d0 = d0it->second;

  bool sym = is_symmetric(num, k) && is_symmetric(den, k);
  auto canon = [&](Expo e) {
    if (sym) std::sort(e.begin(), e.end(), std::greater<int>());
    return e;
  };
  // generic (non-symmetric) expansions fill the whole exponent box: refuse
  // sizes that cannot fit in memory
  if (!sym) {
    double box = 1;
    for (int i = 0; i < k; ++i) box *= (double)terms + 1;
    if (box > 4e7) throw std::invalid_argument("diag_series: expansion too large for a non-symmetric function");
  }

  std::map<Expo, BigQ> memo;
  std::function<BigQ(const Expo&)> coeff = [&](const Expo& e) -> BigQ {
    auto it = memo.find(e);
    if (it != memo.end()) return it->second;
    BigQ acc(0);
    auto nit = num.find(e);
    if (nit != num.end()) acc = nit->second;
    for (auto& [u, c] : den) {
      if (u == zero) continue;
      Expo f(k);
      bool ok = true;
      for (int i = 0; i < k && ok; ++i) {
        f[i] = e[i] - u[i];
        ok = f[i] >= 0;
      }
      if (ok) acc -= c * coeff(canon(f));
    }
    acc = acc / d0;
    memo.emplace(e, acc);
    return acc;
  };

  std::vector<BigQ> out(terms);
  for (int n = 0; n < terms; ++n) out[n] = coeff(Expo(k, n));
  return PowerSeries(0, std::move(out));
}

namespace {

// s reduced mod p; nullopt if a denominator vanishes
std::optional<std::vector<uint64_t>> reduce_coeffs(const std::vector<BigQ>& c, uint64_t p) {
  Fp F(p);
  std::vector<uint64_t> r(c.size());
  for (size_t i = 0; i < c.size(); ++i) {
    BigZ nu = c[i].get_num(), de = c[i].get_den();
    uint64_t dm = mpz_fdiv_ui(de.get_mpz_t(), p);
    if (dm == 0) return std::nullopt;
    uint64_t nm = mpz_fdiv_ui(nu.get_mpz_t(), p);
    r[i] = F.mul(nm, F.inv(dm));
  }
  return r;
}

}  // namespace

std::optional<GuessedODE> guess_ode(const PowerSeries& s, int max_order,
                                    int max_degree, int guard) {
  PowerSeries sn = s.normalized();
  int T = (int)sn.c.size();
  if (T <= guard + 2) return std::nullopt;
  // exact derivative coefficient tables: der[i] holds Dx^i s, with
  // der[i] starting at exponent sn.lo - i and losing one term per derivative
  std::vector<std::vector<BigQ>> der(max_order + 1);
  std::vector<int> dlo(max_order + 1);
  der[0] = sn.c;
  dlo[0] = sn.lo;
  for (int i = 1; i <= max_order; ++i) {
    dlo[i] = dlo[i - 1] - 1;
    der[i].resize(der[i - 1].size());
    for (size_t j = 0; j < der[i - 1].size(); ++j)
      der[i][j] = der[i - 1][j] * BigQ(dlo[i - 1] + (long)j);
  }
  // coefficient of x^m in x^j * Dx^i s, trusted for m < sn.lo + T - i
  auto entry = [&](int i, int j, int m) -> BigQ {
    long idx = (long)m - j - dlo[i];
    if (idx < 0 || idx >= (long)der[i].size()) return BigQ(0);
    return der[i][idx];
  };

  auto primes = primes_62(40);
  for (int r = 1; r <= max_order; ++r) {
    int m0 = sn.lo - r, m1 = sn.lo + T - r;  // trusted equation window
    int rows_all = m1 - m0;
    int rows_fit = rows_all - guard;
    for (int d = 0; d <= max_degree; ++d) {
      int U = (r + 1) * (d + 1);
      if (rows_fit < U + 1) break;  // genuinely underdetermined: stop widening
      // modular screen with the first usable prime
      std::vector<std::vector<uint64_t>> residues;  // per prime, flattened solution
      std::vector<uint64_t> used;
      std::optional<GuessedODE> found;
      size_t pivot_sig = SIZE_MAX;
      for (size_t pi = 0; pi < primes.size() && !found; ++pi) {
        uint64_t p = primes[pi];
        Fp F(p);
        MatFp M(rows_fit, U);
        bool bad = false;
        for (int m = m0; m < m0 + rows_fit && !bad; ++m)
          for (int i = 0; i <= r && !bad; ++i)
            for (int j = 0; j <= d; ++j) {
              BigQ v = entry(i, j, m);
              uint64_t dm = mpz_fdiv_ui(v.get_den().get_mpz_t(), p);
              if (dm == 0) { bad = true; break; }
              uint64_t nm = mpz_fdiv_ui(v.get_num().get_mpz_t(), p);
              M.at(m - m0, i * (d + 1) + j) = F.mul(nm, F.inv(dm));
            }
        if (bad) continue;
        auto ns = fp_nullspace(F, M);
        if (ns.empty()) {
          if (used.empty()) { found.reset(); pivot_sig = SIZE_MAX; }
          break;  // no solution at this shape (screened)
        }
        // normalize: scale so the last nonzero entry is 1 (consistent across
        // primes when the pivot structure matches)
        auto v = ns[0];
        size_t last = U;
        for (size_t t = U; t-- > 0;)
          if (v[t]) { last = t; break; }
        if (last == U) continue;
        if (pivot_sig == SIZE_MAX) pivot_sig = last;
        if (last != pivot_sig) continue;  // unlucky prime
        uint64_t inv = F.inv(v[last]);
        for (auto& x : v) x = F.mul(x, inv);
        residues.push_back(v);
        used.push_back(p);
        if (residues.size() < 2) continue;
        // CRT + rational reconstruction
        std::vector<BigQ> sol(U);
        bool ok = true;
        for (int t = 0; t < U && ok; ++t) {
          BigZ rres(residues[0][t]), mod(used[0]);
          for (size_t q = 1; q < used.size(); ++q) {
            rres = crt_pair(rres, mod, BigZ(residues[q][t]), BigZ(used[q]));
            mod *= BigZ(used[q]);
          }
          auto rec = rational_reconstruct(rres, mod);
          if (!rec) ok = false;
          else sol[t] = *rec;
        }
        if (!ok) continue;
        // exact verification over every trusted coefficient, guard included
        bool annihilates = true;
        for (int m = m0; m < m1 && annihilates; ++m) {
          BigQ acc(0);
          for (int i = 0; i <= r; ++i)
            for (int j = 0; j <= d; ++j)
              if (!is_zero(sol[i * (d + 1) + j])) acc += sol[i * (d + 1) + j] * entry(i, j, m);
          annihilates = is_zero(acc);
        }
        if (!annihilates) continue;  // keep adding primes
        GuessedODE g;
        g.op.a.assign(r + 1, RatFun());
        for (int i = 0; i <= r; ++i) {
          Poly pi;
          pi.c.assign(sol.begin() + i * (d + 1), sol.begin() + (i + 1) * (d + 1));
          pi.trim();
          g.op.a[i] = RatFun(pi);
        }
        g.op = poly_normalize(g.op);
        g.order = g.op.order();
        g.degree = 0;
        for (auto& a : g.op.a) g.degree = std::max(g.degree, a.num.deg());
        g.guard_terms_verified = guard;
        if (g.order == r) found = g;
        else break;  // leading coefficient vanished: not really order r
      }
      if (found) return found;
    }
  }
  return std::nullopt;
}

}  // namespace dop
