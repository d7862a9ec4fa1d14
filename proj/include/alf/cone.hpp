#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "alf/rational.hpp"

/// Exact linear algebra and polyhedral-cone primitives shared by the
/// Mori-cone certificate and vertex enumeration.
namespace alf::cone {

using Matrix = std::vector<RationalVector>;

/// Rank of the row set (rows may have any count; all have length dim).
std::size_t rank(const Matrix& rows, std::size_t dim);

/// Indices of a maximal linearly independent subset of rows, chosen
/// greedily in row order.
std::vector<std::size_t> independent_rows(const Matrix& rows, std::size_t dim);

/// Solves the square system A x = b; nullopt when A is singular.
std::optional<RationalVector> solve(const Matrix& a, const RationalVector& b);

/// Extreme rays of the cone { x : row . x >= 0 for every row } by the
/// double description method. Rays are primitive integer vectors in
/// lexicographic order. Returns nullopt when the rows do not span the
/// space, i.e. when the cone contains a line.
std::optional<Matrix> extreme_rays(const Matrix& rows, std::size_t dim);

}  // namespace alf::cone
