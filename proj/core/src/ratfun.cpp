#include "dop/ratfun.hpp"

#include <cassert>

namespace dop {

RatFun::RatFun(Poly n, Poly d) {
  assert(!d.is_zero_p());
  if (n.is_zero_p()) {
    num = Poly();
    den = Poly(BigQ(1));
    return;
  }
  Poly g = gcd(n, d);
  if (g.deg() > 0) {
    n = exact_div(n, g);
    d = exact_div(d, g);
  }
  BigQ l = d.lc();
  num = n * (BigQ(1) / l);
  den = d * (BigQ(1) / l);
}

RatFun ratfun_normalize(const Poly& num, const Poly& den) { return RatFun(num, den); }

RatFun operator+(const RatFun& a, const RatFun& b) {
  return RatFun(a.num * b.den + b.num * a.den, a.den * b.den);
}

RatFun operator-(const RatFun& a, const RatFun& b) {
  return RatFun(a.num * b.den - b.num * a.den, a.den * b.den);
}

RatFun operator-(const RatFun& a) {
  RatFun r = a;
  r.num = -r.num;
  return r;
}

RatFun operator*(const RatFun& a, const RatFun& b) {
  return RatFun(a.num * b.num, a.den * b.den);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
  assert(!b.is_zero_r());
  return RatFun(a.num * b.den, a.den * b.num);
}

RatFun operator*(const RatFun& a, const BigQ& s) { return RatFun(a.num * s, a.den); }

RatFun inverse(const RatFun& a) {
  assert(!a.is_zero_r());
  return RatFun(a.den, a.num);
}

RatFun derivative(const RatFun& a) {
  return RatFun(derivative(a.num) * a.den - a.num * derivative(a.den), a.den * a.den);
}

RatFun pow(const RatFun& a, int e) {
  if (e < 0) return pow(inverse(a), -e);
  RatFun r(BigQ(1)), base = a;
  unsigned u = e;
  while (u) {
    if (u & 1) r = r * base;
    u >>= 1;
    if (u) base = base * base;
  }
  return r;
}

std::string to_string(const RatFun& a, const std::string& var) {
  if (a.is_polynomial()) {
    Poly p = a.num * (BigQ(1) / a.den.coeff(0));
    return to_string(p, var);
  }
  return "(" + to_string(a.num, var) + ")/(" + to_string(a.den, var) + ")";
}

AlgExtElem::AlgExtElem(Poly r, Poly m) : modulus(monic(m)) {
  rep = divrem(r, modulus).second;
}

AlgExtElem ext_add(const AlgExtElem& a, const AlgExtElem& b) {
  assert(a.modulus == b.modulus);
  return AlgExtElem(a.rep + b.rep, a.modulus);
}

AlgExtElem ext_mul(const AlgExtElem& a, const AlgExtElem& b) {
  assert(a.modulus == b.modulus);
  return AlgExtElem(a.rep * b.rep, a.modulus);
}

ExtInvResult ext_inverse(const AlgExtElem& a) {
  if (a.rep.is_zero_p()) return {false, {}, a.modulus};
  Poly g = gcd(a.rep, a.modulus);
  if (g.deg() > 0) return {false, {}, g};
  // extended Euclid over Q
  Poly r0 = a.modulus, r1 = a.rep;
  Poly t0, t1(BigQ(1));
  while (!(r1.deg() <= 0)) {
    auto [q, r2] = divrem(r0, r1);
    Poly t2 = t0 - q * t1;
    r0 = r1; r1 = r2;
    t0 = t1; t1 = t2;
  }
  assert(!r1.is_zero_p());
  Poly inv = t1 * (BigQ(1) / r1.coeff(0));
  return {true, AlgExtElem(inv, a.modulus), {}};
}

}  // namespace dop
