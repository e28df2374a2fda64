#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace bctkit {

/// Solver for M x = r over GF(2) with M a square matrix of size <= 64.
///
/// The matrix is given by its columns (column j is the image of basis
/// vector e_j). Row reduction happens once; each solve is O(dim).
class Gf2LinearSolver {
 public:
  Gf2LinearSolver(std::span<const std::uint64_t> columns, unsigned dim);

  unsigned dim() const noexcept { return dim_; }
  unsigned rank() const noexcept { return rank_; }
  /// One solution with all free variables zero, or nullopt if r is not in the image.
  std::optional<std::uint64_t> solve(std::uint64_t rhs) const noexcept;
  const std::vector<std::uint64_t>& kernel_basis() const noexcept { return kernel_; }

 private:
  unsigned dim_;
  unsigned rank_ = 0;
  std::vector<std::uint64_t> reduced_;    // RREF rows
  std::vector<std::uint64_t> transform_;  // T with T*M = RREF
  std::vector<int> pivot_;                // pivot column per row, -1 for zero rows
  std::vector<std::uint64_t> kernel_;
};

}  // namespace bctkit
