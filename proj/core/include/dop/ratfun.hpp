#pragma once

#include "dop/poly.hpp"

namespace dop {

// Rational function over Q in normal form: gcd(num, den) = 1, den monic.
struct RatFun {
  Poly num, den;

  RatFun() : den(BigQ(1)) {}
  RatFun(Poly n, Poly d);
  explicit RatFun(const Poly& n) : num(n), den(BigQ(1)) {}
  explicit RatFun(const BigQ& a) : num(a), den(BigQ(1)) {}

  static RatFun x() { return RatFun(Poly::x(1)); }

  bool is_zero_r() const { return num.is_zero_p(); }
  bool is_constant() const { return num.deg() <= 0 && den.deg() == 0; }
  bool is_polynomial() const { return den.deg() == 0; }

  bool operator==(const RatFun& o) const { return num == o.num && den == o.den; }
  bool operator!=(const RatFun& o) const { return !(*this == o); }
};

// Normalization entry point (spec name).
RatFun ratfun_normalize(const Poly& num, const Poly& den);

RatFun operator+(const RatFun& a, const RatFun& b);
RatFun operator-(const RatFun& a, const RatFun& b);
RatFun operator-(const RatFun& a);
RatFun operator*(const RatFun& a, const RatFun& b);
RatFun operator/(const RatFun& a, const RatFun& b);
RatFun operator*(const RatFun& a, const BigQ& s);

RatFun inverse(const RatFun& a);
RatFun derivative(const RatFun& a);
RatFun pow(const RatFun& a, int e);  // negative exponents allowed

std::string to_string(const RatFun& a, const std::string& var = "x");

// Element of Q[t]/(modulus); modulus squarefree but not necessarily
// irreducible. Inversion of a zero divisor reports the discovered factor so
// callers can split the modulus dynamically.
struct AlgExtElem {
  Poly rep;      // reduced mod modulus
  Poly modulus;  // monic, squarefree

  AlgExtElem() = default;
  AlgExtElem(Poly r, Poly m);
};

AlgExtElem ext_add(const AlgExtElem& a, const AlgExtElem& b);
AlgExtElem ext_mul(const AlgExtElem& a, const AlgExtElem& b);
// Inverse, or the nontrivial factor gcd(rep, modulus) when rep is a zero divisor.
struct ExtInvResult {
  bool ok;
  AlgExtElem inverse;  // when ok
  Poly factor;         // when !ok: proper factor of modulus (or modulus itself if rep == 0)
};
ExtInvResult ext_inverse(const AlgExtElem& a);

}  // namespace dop
