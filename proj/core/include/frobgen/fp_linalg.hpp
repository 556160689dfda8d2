// Dense linear algebra over a prime field F_p, used to compute F_p-kernels
// of F_p-linear maps such as X -> A X^(q) - X on E^n.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace frobgen::gf::fp {

/// Row-major dense matrix with entries in [0, p).
struct DenseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint32_t> data;

  DenseMatrix() = default;
  DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
  std::uint32_t& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  std::uint32_t at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

/// In-place reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> row_reduce(DenseMatrix& m, std::uint32_t p);

std::size_t rank(DenseMatrix m, std::uint32_t p);

/// Basis of {x : m x = 0}, one vector per free column.
std::vector<std::vector<std::uint32_t>> kernel_basis(DenseMatrix m, std::uint32_t p);

/// Some x with m x = b, or nullopt when the system is inconsistent.
std::optional<std::vector<std::uint32_t>> solve(const DenseMatrix& m, const std::vector<std::uint32_t>& b,
                                                std::uint32_t p);

}  // namespace frobgen::gf::fp
