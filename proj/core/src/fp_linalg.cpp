#include "frobgen/fp_linalg.hpp"

#include <utility>

#include "frobgen/error.hpp"
#include "frobgen/fp_poly.hpp"

namespace frobgen::gf::fp {

std::vector<std::size_t> row_reduce(DenseMatrix& m, std::uint32_t p) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t sel = row;
    while (sel < m.rows && m.at(sel, col) == 0) ++sel;
    if (sel == m.rows) continue;
    if (sel != row) {
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(row, j));
    }
    const std::uint32_t inv = inv_mod(m.at(row, col), p);
    for (std::size_t j = col; j < m.cols; ++j) m.at(row, j) = mul_mod(m.at(row, j), inv, p);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == row) continue;
      const std::uint32_t f = m.at(i, col);
      if (f == 0) continue;
      for (std::size_t j = col; j < m.cols; ++j) {
        m.at(i, j) = sub_mod(m.at(i, j), mul_mod(f, m.at(row, j), p), p);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(DenseMatrix m, std::uint32_t p) { return row_reduce(m, p).size(); }

std::vector<std::vector<std::uint32_t>> kernel_basis(DenseMatrix m, std::uint32_t p) {
  const auto pivots = row_reduce(m, p);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<std::uint32_t>> basis;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint32_t> v(m.cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      const std::uint32_t c = m.at(r, free);
      v[pivots[r]] = c == 0 ? 0 : p - c;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<std::uint32_t>> solve(const DenseMatrix& m, const std::vector<std::uint32_t>& b,
                                                std::uint32_t p) {
  if (b.size() != m.rows) throw InvalidArgument("right-hand side has wrong length");
  DenseMatrix aug(m.rows, m.cols + 1);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = b[i] % p;
  }
  const auto pivots = row_reduce(aug, p);
  if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;
  std::vector<std::uint32_t> x(m.cols, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, m.cols);
  return x;
}

}  // namespace frobgen::gf::fp
