#include "dop/series.hpp"

#include <cassert>
#include <sstream>

namespace dop {

PowerSeries PowerSeries::one(int prec) {
  PowerSeries s = zero(prec);
  if (prec > 0) s.c[0] = 1;
  return s;
}

PowerSeries PowerSeries::x(int prec) {
  PowerSeries s = zero(prec);
  if (prec > 1) s.c[1] = 1;
  return s;
}

PowerSeries PowerSeries::constant(const BigQ& a, int prec) {
  PowerSeries s = zero(prec);
  if (prec > 0) s.c[0] = a;
  return s;
}

int PowerSeries::valuation() const {
  for (size_t i = 0; i < c.size(); ++i)
    if (!is_zero(c[i])) return lo + (int)i;
  return prec();
}

PowerSeries PowerSeries::normalized() const {
  int v = valuation();
  if (v == lo) return *this;
  PowerSeries s;
  s.lo = v;
  s.c.assign(c.begin() + (v - lo), c.end());
  return s;
}

PowerSeries PowerSeries::truncated(int new_prec) const {
  PowerSeries s = *this;
  if (new_prec < s.prec()) s.c.resize(std::max(0, new_prec - s.lo));
  return s;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  int lo = std::min(a.lo, b.lo);
  int prec = std::min(a.prec(), b.prec());
  PowerSeries r(lo, std::vector<BigQ>(std::max(0, prec - lo), BigQ(0)));
  for (int n = lo; n < prec; ++n) r.c[n - lo] = a.coeff(n) + b.coeff(n);
  return r;
}

PowerSeries operator-(const PowerSeries& a) {
  PowerSeries r = a;
  for (auto& v : r.c) v = -v;
  return r;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) { return a + (-b); }

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries an = a.normalized(), bn = b.normalized();
  int lo = an.lo + bn.lo;
  int prec = std::min(an.lo + bn.prec(), bn.lo + an.prec());
  PowerSeries r(lo, std::vector<BigQ>(std::max(0, prec - lo), BigQ(0)));
  for (size_t i = 0; i < an.c.size(); ++i) {
    if (is_zero(an.c[i])) continue;
    int base = an.lo + (int)i + bn.lo - lo;
    size_t jmax = std::min(bn.c.size(), r.c.size() > (size_t)base ? r.c.size() - base : 0);
    for (size_t j = 0; j < jmax; ++j)
      if (!is_zero(bn.c[j])) r.c[base + j] += an.c[i] * bn.c[j];
  }
  return r;
}

PowerSeries operator*(const PowerSeries& a, const BigQ& s) {
  PowerSeries r = a;
  for (auto& v : r.c) v *= s;
  return r;
}

PowerSeries inverse(const PowerSeries& a) {
  PowerSeries an = a.normalized();
  assert(!an.c.empty() && !is_zero(an.c[0]));
  size_t n = an.c.size();
  std::vector<BigQ> inv(n, BigQ(0));
  BigQ i0 = BigQ(1) / an.c[0];
  inv[0] = i0;
  for (size_t k = 1; k < n; ++k) {
    BigQ s(0);
    for (size_t j = 1; j <= k; ++j) s += an.c[j] * inv[k - j];
    inv[k] = -s * i0;
  }
  return PowerSeries(-an.lo, std::move(inv));
}

PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) { return a * inverse(b); }

PowerSeries derivative(const PowerSeries& a) {
  PowerSeries r(a.lo - 1, std::vector<BigQ>(a.c.size(), BigQ(0)));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i] * BigQ(a.lo + (int)i);
  return r;
}

PowerSeries integrate(const PowerSeries& a) {
  PowerSeries r(a.lo + 1, std::vector<BigQ>(a.c.size(), BigQ(0)));
  for (size_t i = 0; i < a.c.size(); ++i) {
    int e = a.lo + (int)i;
    assert(e != -1 || is_zero(a.c[i]));
    if (e != -1) r.c[i] = a.c[i] / BigQ(e + 1);
  }
  return r;
}

PowerSeries pow(const PowerSeries& a, int e) {
  if (e < 0) return pow(inverse(a), -e);
  PowerSeries r = PowerSeries::one(a.prec());
  if (e == 0) return r;
  PowerSeries base = a;
  unsigned u = e;
  while (u) {
    if (u & 1) r = r * base;
    u >>= 1;
    if (u) base = base * base;
  }
  return r;
}

PowerSeries exp_series(const PowerSeries& a) {
  assert(a.valuation() >= 1);
  int prec = a.prec();
  PowerSeries r = PowerSeries::one(prec);
  // r' = a' r, r0 = 1
  PowerSeries ap = derivative(a);
  for (int n = 1; n < prec; ++n) {
    BigQ s(0);
    for (int j = 0; j < n; ++j) s += ap.coeff(n - 1 - j) * r.coeff(j);
    r.c[n] = s / BigQ(n);
  }
  return r;
}

PowerSeries log_series(const PowerSeries& a) {
  assert(a.valuation() == 0 && a.coeff(0) == 1);
  return integrate(derivative(a) / a);
}

PowerSeries compose(const PowerSeries& a, const PowerSeries& b) {
  assert(b.valuation() >= 1);
  assert(a.lo >= 0);
  int prec = std::min(a.prec(), b.prec());
  PowerSeries r = PowerSeries::zero(prec);
  for (int i = a.prec() - 1; i >= a.lo; --i) {
    r = r * b;
    r = r + PowerSeries::constant(a.coeff(i), prec);
    r = r.truncated(prec);
  }
  for (int i = 0; i < a.lo; ++i) r = (r * b).truncated(prec);
  return r;
}

PowerSeries reversion(const PowerSeries& f) {
  assert(f.valuation() == 1 && f.coeff(1) == 1);
  int prec = f.prec();
  // Newton-style term-by-term: g with f(g(x)) = x.
  PowerSeries g = PowerSeries::x(prec);
  for (int n = 2; n < prec; ++n) {
    PowerSeries fg = compose(f.truncated(n + 1), g.truncated(n + 1));
    BigQ err = fg.coeff(n);
    if (!is_zero(err)) g.c[n] -= err;
  }
  return g;
}

PowerSeries expand_at_zero(const Poly& f, int prec) {
  PowerSeries s = PowerSeries::zero(prec);
  for (int i = 0; i <= f.deg() && i < prec; ++i) s.c[i] = f.coeff(i);
  return s;
}

PowerSeries expand_at_zero(const RatFun& f, int prec) {
  if (f.is_zero_r()) return PowerSeries::zero(prec);
  int vd = 0;
  Poly d = f.den;
  while (is_zero(d.coeff(0))) {
    d = exact_div(d, Poly::x(1));
    ++vd;
  }
  int ext = prec + vd;
  PowerSeries nums = expand_at_zero(f.num, ext);
  PowerSeries dens = expand_at_zero(d, ext);
  PowerSeries r = nums * inverse(dens);
  r.lo -= vd;
  return r.truncated(prec);
}

bool series_equal(const PowerSeries& a, const PowerSeries& b) {
  int prec = std::min(a.prec(), b.prec());
  int lo = std::min(a.lo, b.lo);
  for (int n = lo; n < prec; ++n)
    if (a.coeff(n) != b.coeff(n)) return false;
  return true;
}

int LogSeries::log_degree() const {
  for (size_t j = comps.size(); j-- > 0;)
    if (!comps[j].is_zero_s()) return (int)j;
  return -1;
}

bool LogSeries::is_zero_s() const { return log_degree() < 0; }

PowerSeries& LogSeries::at(size_t j) {
  if (comps.size() <= j) comps.resize(j + 1, PowerSeries::zero(comps.empty() ? 0 : comps[0].prec()));
  return comps[j];
}

LogSeries operator+(const LogSeries& a, const LogSeries& b) {
  LogSeries r;
  size_t n = std::max(a.comps.size(), b.comps.size());
  for (size_t j = 0; j < n; ++j) {
    if (j < a.comps.size() && j < b.comps.size()) r.comps.push_back(a.comps[j] + b.comps[j]);
    else if (j < a.comps.size()) r.comps.push_back(a.comps[j]);
    else r.comps.push_back(b.comps[j]);
  }
  return r;
}

LogSeries operator-(const LogSeries& a, const LogSeries& b) { return a + (b * BigQ(-1)); }

LogSeries operator*(const LogSeries& a, const BigQ& s) {
  LogSeries r = a;
  for (auto& v : r.comps) v = v * s;
  return r;
}

LogSeries operator*(const LogSeries& a, const LogSeries& b) {
  LogSeries r;
  if (a.comps.empty() || b.comps.empty()) return r;
  size_t n = a.comps.size() + b.comps.size() - 1;
  int prec = std::min(a.comps[0].prec(), b.comps[0].prec());
  r.comps.assign(n, PowerSeries::zero(prec));
  for (size_t i = 0; i < a.comps.size(); ++i)
    for (size_t j = 0; j < b.comps.size(); ++j) {
      // log^i/i! * log^j/j! = C(i+j,i) log^(i+j)/(i+j)!
      PowerSeries t = (a.comps[i] * b.comps[j]) * BigQ(binomial_z(i + j, i));
      r.comps[i + j] = r.comps[i + j] + t;
    }
  return r;
}

LogSeries derivative(const LogSeries& a) {
  LogSeries r;
  for (size_t j = 0; j < a.comps.size(); ++j) {
    PowerSeries d = derivative(a.comps[j]);
    if (j + 1 < a.comps.size()) {
      PowerSeries t = a.comps[j + 1];  // division by x: exact exponent shift
      t.lo -= 1;
      d = d + t;
    }
    r.comps.push_back(d);
  }
  return r;
}

std::string to_string(const PowerSeries& a, const std::string& var) {
  std::ostringstream os;
  bool first = true;
  PowerSeries n = a.normalized();
  for (int k = n.lo; k < n.prec(); ++k) {
    BigQ v = n.coeff(k);
    if (is_zero(v)) continue;
    if (!first) os << (sgn(v) > 0 ? " + " : " - ");
    else if (sgn(v) < 0) os << "-";
    first = false;
    BigQ av = abs(v);
    if (k == 0 || av != 1) os << av.get_str();
    if (k != 0) {
      if (av != 1) os << "*";
      os << var;
      if (k != 1) os << "^" << k;
    }
  }
  if (first) os << "0";
  os << " + O(" << var << "^" << n.prec() << ")";
  return os.str();
}

}  // namespace dop
