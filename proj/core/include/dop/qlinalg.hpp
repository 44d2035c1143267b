#pragma once
#include <dop/bigq.hpp>
#include <vector>

namespace dop {

// dense exact rational matrix, row-major
struct MatQ {
  size_t rows = 0, cols = 0;
  std::vector<BigQ> a;
  MatQ() = default;
  MatQ(size_t r, size_t c) : rows(r), cols(c), a(r * c) {}
  BigQ& at(size_t i, size_t j) { return a[i * cols + j]; }
  const BigQ& at(size_t i, size_t j) const { return a[i * cols + j]; }
};

size_t q_rank(MatQ m);
// basis of the right nullspace {v : m v = 0}, reduced echelon, pivot-normalized
std::vector<std::vector<BigQ>> q_nullspace(MatQ m);
// one solution of m x = b, or empty optional if inconsistent
std::optional<std::vector<BigQ>> q_solve(MatQ m, std::vector<BigQ> b);

}  // namespace dop
