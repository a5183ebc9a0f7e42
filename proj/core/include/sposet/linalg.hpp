#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace sposet {

// Sparse integer row: (column, value) pairs with distinct columns.
using SparseRow = std::vector<std::pair<std::uint32_t, std::int64_t>>;

// Rank over the rationals.
std::size_t rational_rank(const std::vector<SparseRow>& rows, std::size_t cols);

}  // namespace sposet
