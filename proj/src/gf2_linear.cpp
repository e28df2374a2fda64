#include "bctkit/gf2_linear.hpp"

#include <bit>

#include "bctkit/error.hpp"

namespace bctkit {

Gf2LinearSolver::Gf2LinearSolver(std::span<const std::uint64_t> columns, unsigned dim)
    : dim_(dim), reduced_(dim, 0), transform_(dim, 0), pivot_(dim, -1) {
  if (dim == 0 || dim > 64 || columns.size() != dim) {
    throw Error(Errc::InvalidParams, "linear system must be square with 1..64 unknowns");
  }
  for (unsigned j = 0; j < dim; ++j) {
    for (unsigned i = 0; i < dim; ++i) {
      if ((columns[j] >> i) & 1u) reduced_[i] |= std::uint64_t{1} << j;
    }
  }
  for (unsigned i = 0; i < dim; ++i) transform_[i] = std::uint64_t{1} << i;

  unsigned row = 0;
  for (unsigned col = 0; col < dim && row < dim; ++col) {
    const std::uint64_t bit = std::uint64_t{1} << col;
    unsigned sel = row;
    while (sel < dim && !(reduced_[sel] & bit)) ++sel;
    if (sel == dim) continue;
    std::swap(reduced_[sel], reduced_[row]);
    std::swap(transform_[sel], transform_[row]);
    for (unsigned i = 0; i < dim; ++i) {
      if (i != row && (reduced_[i] & bit)) {
        reduced_[i] ^= reduced_[row];
        transform_[i] ^= transform_[row];
      }
    }
    pivot_[row] = static_cast<int>(col);
    ++row;
  }
  rank_ = row;

  std::uint64_t pivots = 0;
  for (unsigned i = 0; i < rank_; ++i) pivots |= std::uint64_t{1} << pivot_[i];
  for (unsigned f = 0; f < dim; ++f) {
    if ((pivots >> f) & 1u) continue;
    std::uint64_t v = std::uint64_t{1} << f;
    for (unsigned i = 0; i < rank_; ++i) {
      if ((reduced_[i] >> f) & 1u) v |= std::uint64_t{1} << pivot_[i];
    }
    kernel_.push_back(v);
  }
}

std::optional<std::uint64_t> Gf2LinearSolver::solve(std::uint64_t rhs) const noexcept {
  std::uint64_t x = 0;
  for (unsigned i = 0; i < dim_; ++i) {
    const unsigned t = std::popcount(transform_[i] & rhs) & 1u;
    if (pivot_[i] < 0) {
      if (t) return std::nullopt;
    } else if (t) {
      x |= std::uint64_t{1} << pivot_[i];
    }
  }
  return x;
}

}  // namespace bctkit
