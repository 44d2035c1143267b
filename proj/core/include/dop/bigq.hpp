#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dop {

using BigZ = mpz_class;
using BigQ = mpq_class;

inline BigQ q_of(long n, long d = 1) { return BigQ(n, d); }

inline bool is_zero(const BigQ& a) { return sgn(a) == 0; }

// Numerator/denominator as integers (denominator > 0, reduced).
inline BigZ num(const BigQ& a) { return a.get_num(); }
inline BigZ den(const BigQ& a) { return a.get_den(); }

inline std::string to_string(const BigQ& a) { return a.get_str(); }

// a is an integer?
inline bool is_integer(const BigQ& a) { return a.get_den() == 1; }

// Exact integer value if a is an integer and fits in long.
std::optional<long> as_long(const BigQ& a);

// Binomial coefficient.
BigZ binomial_z(unsigned long n, unsigned long k);
BigQ binomial_q(unsigned long n, unsigned long k);

// Chinese remainder: value congruent to r1 mod m1 and r2 mod m2 (m1, m2 coprime).
BigZ crt_pair(const BigZ& r1, const BigZ& m1, const BigZ& r2, const BigZ& m2);

// Rational reconstruction of r mod m: returns p/q with |p|, q <= sqrt(m/2),
// q invertible mod m, p = q*r mod m. Empty if none exists.
std::optional<BigQ> rational_reconstruct(const BigZ& r, const BigZ& m);

}  // namespace dop
