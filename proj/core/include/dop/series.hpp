#pragma once

#include <vector>

#include "dop/ratfun.hpp"

namespace dop {

// Truncated Laurent series: sum of c[i] x^(lo+i), known through order prec-1
// where prec = lo + c.size().
struct PowerSeries {
  int lo = 0;
  std::vector<BigQ> c;

  PowerSeries() = default;
  PowerSeries(int low, std::vector<BigQ> coeffs) : lo(low), c(std::move(coeffs)) {}

  static PowerSeries zero(int prec) { return PowerSeries(0, std::vector<BigQ>(prec, BigQ(0))); }
  static PowerSeries one(int prec);
  static PowerSeries x(int prec);
  static PowerSeries constant(const BigQ& a, int prec);

  int prec() const { return lo + (int)c.size(); }
  BigQ coeff(int n) const {
    int i = n - lo;
    return (i >= 0 && i < (int)c.size()) ? c[i] : BigQ(0);
  }
  // Valuation; prec() when zero to available precision.
  int valuation() const;
  bool is_zero_s() const { return valuation() >= prec(); }
  // Drop leading zeros (raises lo, keeps prec).
  PowerSeries normalized() const;
  PowerSeries truncated(int new_prec) const;
};

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator-(const PowerSeries& a);
PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator*(const PowerSeries& a, const BigQ& s);
PowerSeries operator/(const PowerSeries& a, const PowerSeries& b);

PowerSeries inverse(const PowerSeries& a);
PowerSeries derivative(const PowerSeries& a);
// Antiderivative with zero constant term; fails on x^-1 term.
PowerSeries integrate(const PowerSeries& a);
PowerSeries pow(const PowerSeries& a, int e);
// exp of a series with valuation >= 1.
PowerSeries exp_series(const PowerSeries& a);
// log of a series with constant term 1.
PowerSeries log_series(const PowerSeries& a);
// a(b(x)) with valuation(b) >= 1.
PowerSeries compose(const PowerSeries& a, const PowerSeries& b);
// Compositional inverse of f = x*(unit).
PowerSeries reversion(const PowerSeries& f);

// Expansion of a rational function at 0 to the given precision (Laurent if
// the denominator vanishes at 0).
PowerSeries expand_at_zero(const RatFun& f, int prec);
PowerSeries expand_at_zero(const Poly& f, int prec);

bool series_equal(const PowerSeries& a, const PowerSeries& b);  // up to common precision

// Series with log terms: comps[j] multiplies log(x)^j / j!.
struct LogSeries {
  std::vector<PowerSeries> comps;

  int log_degree() const;
  bool is_zero_s() const;
  PowerSeries& at(size_t j);
};

LogSeries operator+(const LogSeries& a, const LogSeries& b);
LogSeries operator-(const LogSeries& a, const LogSeries& b);
LogSeries operator*(const LogSeries& a, const LogSeries& b);
LogSeries operator*(const LogSeries& a, const BigQ& s);
LogSeries derivative(const LogSeries& a);

std::string to_string(const PowerSeries& a, const std::string& var = "x");

}  // namespace dop
