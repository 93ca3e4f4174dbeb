#include "stabpoly/linalg.hpp"

#include <cstdlib>
#include <utility>

namespace stabpoly {

int bareiss_rank(std::span<std::int64_t> rows, int row_count, int cols, int target) {
  auto at = [&](int r, int c) -> std::int64_t& { return rows[static_cast<std::size_t>(r) * cols + c]; };
  std::int64_t prev = 1;
  int rank = 0;
  for (int c = 0; c < cols && rank < row_count; ++c) {
    int pivot = rank;
    while (pivot < row_count && at(pivot, c) == 0) ++pivot;
    if (pivot == row_count) continue;
    if (pivot != rank)
      for (int k = 0; k < cols; ++k) std::swap(at(pivot, k), at(rank, k));
    const std::int64_t p = at(rank, c);
    for (int r = rank + 1; r < row_count; ++r) {
      const std::int64_t f = at(r, c);
      for (int k = c + 1; k < cols; ++k) {
        const __int128 v = static_cast<__int128>(p) * at(r, k) - static_cast<__int128>(f) * at(rank, k);
        at(r, k) = static_cast<std::int64_t>(v / prev);
      }
      at(r, c) = 0;
    }
    prev = p;
    ++rank;
    if (target >= 0 && rank >= target) return rank;
  }
  return rank;
}

}  // namespace stabpoly
