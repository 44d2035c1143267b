#include "dop/poly.hpp"

#include <cassert>
#include <sstream>

#include "dop/fp.hpp"

namespace dop {

void Poly::trim() {
  while (!c.empty() && is_zero(c.back())) c.pop_back();
}

Poly Poly::x(int k) {
  Poly p;
  p.c.assign(k + 1, BigQ(0));
  p.c[k] = 1;
  return p;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), BigQ(0));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
  r.trim();
  return r;
}

Poly operator-(const Poly& a) {
  Poly r = a;
  for (auto& v : r.c) v = -v;
  return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero_p() || b.is_zero_p()) return Poly();
  Poly r;
  r.c.assign(a.c.size() + b.c.size() - 1, BigQ(0));
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (is_zero(a.c[i])) continue;
    for (size_t j = 0; j < b.c.size(); ++j) {
      if (is_zero(b.c[j])) continue;
      r.c[i + j] += a.c[i] * b.c[j];
    }
  }
  r.trim();
  return r;
}

Poly operator*(const Poly& a, const BigQ& s) {
  if (is_zero(s)) return Poly();
  Poly r = a;
  for (auto& v : r.c) v *= s;
  return r;
}

Poly operator*(const BigQ& s, const Poly& a) { return a * s; }

Poly shift_up(const Poly& a, int k) {
  if (a.is_zero_p()) return a;
  Poly r;
  r.c.assign(a.c.size() + k, BigQ(0));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i + k] = a.c[i];
  return r;
}

Poly pow(const Poly& a, unsigned e) {
  Poly r(BigQ(1)), base = a;
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

Poly derivative(const Poly& a) {
  Poly r;
  if (a.deg() < 1) return r;
  r.c.resize(a.c.size() - 1);
  for (size_t i = 1; i < a.c.size(); ++i) r.c[i - 1] = a.c[i] * BigQ((long)i);
  r.trim();
  return r;
}

BigQ eval(const Poly& a, const BigQ& x0) {
  BigQ r(0);
  for (size_t i = a.c.size(); i-- > 0;) r = r * x0 + a.c[i];
  return r;
}

Poly compose(const Poly& a, const Poly& b) {
  Poly r;
  for (size_t i = a.c.size(); i-- > 0;) r = r * b + Poly(a.c[i]);
  return r;
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
  assert(!b.is_zero_p());
  Poly q, r = a;
  int db = b.deg();
  if (r.deg() < db) return {q, r};
  q.c.assign(r.deg() - db + 1, BigQ(0));
  while (r.deg() >= db) {
    int d = r.deg() - db;
    BigQ t = r.lc() / b.lc();
    q.c[d] = t;
    for (int i = 0; i <= db; ++i) r.c[d + i] -= t * b.c[i];
    r.trim();
  }
  q.trim();
  return {q, r};
}

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divrem(a, b);
  assert(r.is_zero_p());
  return q;
}

bool divides(const Poly& b, const Poly& a) {
  if (a.is_zero_p()) return true;
  if (b.deg() > a.deg()) return false;
  return divrem(a, b).second.is_zero_p();
}

namespace {

// Primitive integer representation: p = (s) * sum z_i x^i with gcd(z_i) = 1.
std::vector<BigZ> to_primitive_z(const Poly& a) {
  std::vector<BigZ> z(a.c.size());
  BigZ l(1);
  for (const auto& v : a.c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
  for (size_t i = 0; i < a.c.size(); ++i) {
    BigQ v = a.c[i] * BigQ(l);
    z[i] = v.get_num();
  }
  BigZ g(0);
  for (const auto& v : z) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (g != 0 && g != 1)
    for (auto& v : z) v /= g;
  return z;
}

BigZ content_z(const std::vector<BigZ>& z) {
  BigZ g(0);
  for (const auto& v : z) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  return g;
}

void trim_z(std::vector<BigZ>& z) {
  while (!z.empty() && z.back() == 0) z.pop_back();
}

// Pseudo-remainder of a by b over Z (both trimmed, b nonzero).
std::vector<BigZ> prem_z(std::vector<BigZ> a, const std::vector<BigZ>& b) {
  int db = (int)b.size() - 1;
  while ((int)a.size() - 1 >= db && !a.empty()) {
    int d = (int)a.size() - 1 - db;
    BigZ la = a.back(), lb = b.back();
    for (auto& v : a) v *= lb;
    for (int i = 0; i <= db; ++i) a[d + i] -= la * b[i];
    trim_z(a);
  }
  return a;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero_p()) return monic(b);
  if (b.is_zero_p()) return monic(a);
  auto A = to_primitive_z(a), B = to_primitive_z(b);
  if (A.size() < B.size()) std::swap(A, B);
  while (!B.empty()) {
    auto R = prem_z(A, B);
    BigZ g = content_z(R);
    if (g > 1)
      for (auto& v : R) v /= g;
    A = std::move(B);
    B = std::move(R);
  }
  Poly r;
  r.c.reserve(A.size());
  for (const auto& v : A) r.c.push_back(BigQ(v));
  r.trim();
  return monic(r);
}

Poly lcm(const Poly& a, const Poly& b) {
  if (a.is_zero_p() || b.is_zero_p()) return Poly();
  return monic(exact_div(a * b, gcd(a, b)));
}

Poly monic(const Poly& a) {
  if (a.is_zero_p()) return a;
  return a * (BigQ(1) / a.lc());
}

BigQ rational_content(const Poly& a) {
  if (a.is_zero_p()) return BigQ(1);
  BigZ l(1);
  for (const auto& v : a.c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
  BigZ g(0);
  for (const auto& v : a.c) {
    BigQ w = v * BigQ(l);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w.get_num().get_mpz_t());
  }
  BigQ r(g, l);
  r.canonicalize();
  return r;
}

Poly primitive_part(const Poly& a) {
  if (a.is_zero_p()) return a;
  BigQ s = rational_content(a);
  if (sgn(a.lc()) < 0) s = -s;
  return a * (BigQ(1) / s);
}

std::vector<std::pair<Poly, int>> squarefree_factor(const Poly& a) {
  std::vector<std::pair<Poly, int>> out;
  if (a.deg() < 1) return out;
  Poly f = monic(a);
  Poly fp = derivative(f);
  Poly g = gcd(f, fp);
  Poly w = exact_div(f, g);
  Poly y = exact_div(fp, g);
  Poly z = y - derivative(w);
  int i = 1;
  while (!w.is_zero_p() && w.deg() > 0) {
    Poly h = gcd(w, z);
    if (h.deg() > 0) out.push_back({h, i});
    w = exact_div(w, h);
    z = exact_div(z, h) - derivative(w);
    ++i;
  }
  return out;
}

BigQ resultant(const Poly& a, const Poly& b) {
  if (a.is_zero_p() || b.is_zero_p()) return BigQ(0);
  if (a.deg() == 0) return pow(a, (unsigned)b.deg()).coeff(0);
  if (b.deg() == 0) return pow(b, (unsigned)a.deg()).coeff(0);
  // res(a,b) = lc(b)^(deg a - deg r) * (-1)^(deg a * deg b) * res(b, r)
  Poly r = divrem(a, b).second;
  BigQ sign = ((a.deg() * b.deg()) % 2 == 0) ? BigQ(1) : BigQ(-1);
  if (r.is_zero_p()) return BigQ(0);
  BigQ lb = b.lc();
  BigQ scale(1);
  for (int i = 0; i < a.deg() - r.deg(); ++i) scale *= lb;
  return sign * scale * resultant(b, r);
}

std::vector<std::pair<BigQ, int>> rational_roots(const Poly& a) {
  std::vector<std::pair<BigQ, int>> out;
  if (a.deg() < 1) return out;
  auto sq = squarefree_factor(a);
  for (auto& [f, mult] : sq) {
    // x = 0 root handled directly
    Poly g = f;
    if (is_zero(g.coeff(0))) {
      out.push_back({BigQ(0), mult});
      g = exact_div(g, Poly::x(1));
    }
    if (g.deg() < 1) continue;
    for (const BigQ& r : fp_rational_roots(g)) out.push_back({r, mult});
  }
  return out;
}

std::vector<std::pair<BigZ, int>> integer_roots(const Poly& a) {
  std::vector<std::pair<BigZ, int>> out;
  for (auto& [r, m] : rational_roots(a))
    if (is_integer(r)) out.push_back({r.get_num(), m});
  return out;
}

std::string to_string(const Poly& a, const std::string& var) {
  if (a.is_zero_p()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = a.deg(); i >= 0; --i) {
    BigQ v = a.coeff(i);
    if (is_zero(v)) continue;
    if (!first) os << (sgn(v) > 0 ? " + " : " - ");
    else if (sgn(v) < 0) os << "-";
    first = false;
    BigQ av = abs(v);
    bool unit = (av == 1);
    if (i == 0 || !unit) os << av.get_str();
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace dop
