#ifndef HEISVOA_LINALG_HPP
#define HEISVOA_LINALG_HPP

#include "heisvoa/rational.hpp"

#include <optional>

namespace heisvoa {

// Exact linear algebra over the rationals. Pivot choice is always the first
// nonzero entry in canonical order, so every output is deterministic.

RatMatrix identity_matrix(std::size_t n);

// Reduced row echelon form, in place. Returns the pivot column of each
// pivot row.
std::vector<std::size_t> rref(RatMatrix& m);

std::size_t matrix_rank(RatMatrix m);

// Linearly independent spanning set of the kernel, in canonical order of
// the free columns.
std::vector<RatVector> kernel_basis(const RatMatrix& m, std::size_t cols);

// One exact solution of m x = target, or nullopt if none exists.
std::optional<RatVector> solve(const RatMatrix& m, const RatVector& target);

// Throws std::invalid_argument on a singular input.
RatMatrix invert(const RatMatrix& m);

RatVector mat_vec(const RatMatrix& m, const RatVector& v);

bool is_zero_matrix(const RatMatrix& m);

} // namespace heisvoa

#endif
