#pragma once

#include <functional>
#include <vector>

#include "pipedream/box_set.hpp"
#include "pipedream/permutation.hpp"
#include "pipedream/set_family.hpp"

namespace pipedream {

/// No box of the set is weakly southeast of another: sorted by row, rows
/// strictly increase while columns strictly decrease.
bool is_antidiagonal(const BoxSet& boxes);

/// Visits every size-`size` antidiagonal inside [rows] x [cols] exactly once,
/// in lexicographic order of the (row, col) sequence. Nothing is visited
/// when size > min(rows, cols).
void for_each_antidiagonal(int rows, int cols, int size,
                           const std::function<void(const BoxSet&)>& fn);
std::vector<BoxSet> antidiagonals_in_rectangle(int rows, int cols, int size);

/// A_w: the inclusion-minimal antidiagonals of size 1 + r_pq(w) inside
/// [p] x [q], taken over all 1 <= p, q <= n.
SetFamily antidiagonal_family(const Permutation& w);

/// The same union before the minimality filter.
SetFamily antidiagonal_candidates(const Permutation& w);

}  // namespace pipedream
