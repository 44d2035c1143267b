#include <dop/qlinalg.hpp>

#include <optional>

namespace dop {

namespace {
// in-place reduced row echelon; returns pivot column per pivot row
std::vector<size_t> rref(MatQ& m) {
  std::vector<size_t> piv;
  size_t row = 0;
  for (size_t col = 0; col < m.cols && row < m.rows; ++col) {
    size_t p = row;
    while (p < m.rows && is_zero(m.at(p, col))) ++p;
    if (p == m.rows) continue;
    if (p != row)
      for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(row, j));
    BigQ inv = BigQ(1) / m.at(row, col);
    for (size_t j = col; j < m.cols; ++j) m.at(row, j) *= inv;
    for (size_t i = 0; i < m.rows; ++i) {
      if (i == row || is_zero(m.at(i, col))) continue;
      BigQ f = m.at(i, col);
      for (size_t j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(row, j);
    }
    piv.push_back(col);
    ++row;
  }
  return piv;
}
}  // namespace

size_t q_rank(MatQ m) { return rref(m).size(); }

std::vector<std::vector<BigQ>> q_nullspace(MatQ m) {
  auto piv = rref(m);
  std::vector<bool> is_piv(m.cols, false);
  for (size_t c : piv) is_piv[c] = true;
  std::vector<std::vector<BigQ>> basis;
  for (size_t free_col = 0; free_col < m.cols; ++free_col) {
    if (is_piv[free_col]) continue;
    std::vector<BigQ> v(m.cols);
    v[free_col] = BigQ(1);
    for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m.at(r, free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<BigQ>> q_solve(MatQ m, std::vector<BigQ> b) {
  MatQ aug(m.rows, m.cols + 1);
  for (size_t i = 0; i < m.rows; ++i) {
    for (size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = b[i];
  }
  auto piv = rref(aug);
  if (!piv.empty() && piv.back() == m.cols) return std::nullopt;
  std::vector<BigQ> x(m.cols);
  for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug.at(r, m.cols);
  return x;
}

}  // namespace dop
