#include "pipedream/antidiagonal.hpp"

#include <algorithm>
#include <stdexcept>

#include "pipedream/transversal.hpp"

namespace pipedream {

bool is_antidiagonal(const BoxSet& boxes) {
  const auto sorted = boxes.boxes();
  for (std::size_t k = 1; k < sorted.size(); ++k) {
    if (sorted[k].row <= sorted[k - 1].row || sorted[k].col >= sorted[k - 1].col) return false;
  }
  return true;
}

namespace {

void extend(int rows, int min_row, int max_col, int remaining, BoxSet& current,
            const std::function<void(const BoxSet&)>& fn) {
  if (remaining == 0) {
    fn(current);
    return;
  }
  // The next box needs room for remaining-1 further boxes below and left.
  for (int r = min_row; r <= rows - remaining + 1; ++r) {
    for (int c = remaining; c <= max_col; ++c) {
      current.insert({r, c});
      extend(rows, r + 1, c - 1, remaining - 1, current, fn);
      current.erase({r, c});
    }
  }
}

}  // namespace

void for_each_antidiagonal(int rows, int cols, int size,
                           const std::function<void(const BoxSet&)>& fn) {
  if (rows < 1 || cols < 1 || size < 0)
    throw std::invalid_argument("rectangle sides must be positive and size non-negative");
  if (size > std::min(rows, cols)) return;
  BoxSet current;
  extend(rows, 1, cols, size, current, fn);
}

std::vector<BoxSet> antidiagonals_in_rectangle(int rows, int cols, int size) {
  std::vector<BoxSet> out;
  for_each_antidiagonal(rows, cols, size, [&](const BoxSet& a) { out.push_back(a); });
  return out;
}

SetFamily antidiagonal_candidates(const Permutation& w) {
  const int n = w.size();
  std::vector<BoxSet> all;
  for (int p = 1; p <= n; ++p) {
    for (int q = 1; q <= n; ++q) {
      const int size = 1 + rank(w, p, q);
      if (size > std::min(p, q)) continue;
      for_each_antidiagonal(p, q, size, [&](const BoxSet& a) { all.push_back(a); });
    }
  }
  return SetFamily(n, std::move(all));
}

SetFamily antidiagonal_family(const Permutation& w) {
  return minimalize(antidiagonal_candidates(w));
}

}  // namespace pipedream
