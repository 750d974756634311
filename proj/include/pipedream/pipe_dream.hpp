#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "pipedream/box_set.hpp"
#include "pipedream/permutation.hpp"
#include "pipedream/set_family.hpp"

namespace pipedream {

/// An n x n pipe dream, stored as its set of crossing tiles. Every cross
/// lies in the staircase i + j <= n; all other tiles are elbows.
class PipeDream {
 public:
  /// Throws std::invalid_argument if n is outside 1..kMaxGridSize or a
  /// cross lies on or below the main antidiagonal.
  PipeDream(int n, BoxSet crosses);
  PipeDream(int n, std::initializer_list<GridBox> crosses);

  static bool fits_staircase(int n, const BoxSet& crosses);
  /// All boxes (i, j) with i + j <= n.
  static BoxSet staircase(int n);

  int size() const { return n_; }
  const BoxSet& crosses() const { return crosses_; }
  int cross_count() const { return crosses_.size(); }
  bool is_cross(int row, int col) const { return crosses_.contains({row, col}); }

  friend bool operator==(const PipeDream&, const PipeDream&) = default;

 private:
  int n_;
  BoxSet crosses_;
};

/// Pipes are labelled by the row where they enter from the west (a < b).
struct PipePair {
  int a = 0;
  int b = 0;
  int crossings = 0;

  friend bool operator==(const PipePair&, const PipePair&) = default;
};

/// The permutation w such that the pipe entering row i from the west exits
/// the north edge at column w(i). A cross passes both pipes straight
/// through; an elbow sends a pipe from the west north and a pipe from the
/// south east.
Permutation trace(const PipeDream& dream);

/// Every pair of pipes that crosses at least once, with its crossing count,
/// sorted by (a, b).
std::vector<PipePair> crossing_counts(const PipeDream& dream);

/// Each pair of pipes crosses at most once.
bool is_reduced(const PipeDream& dream);

/// RP_w: reduced pipe dreams with trace w and length(w) crosses.
///
/// Depth-first search over the staircase column by column (bottom to top
/// within a column). A branch is cut when the pipe leaving the top of a
/// finished column is not w^{-1}(column), when a pair would cross twice,
/// or when the crosses still required by the pipes in flight exceed the
/// remaining budget.
SetFamily enumerate_rp(const Permutation& w);

inline constexpr int kBruteForceMaxSize = 6;

/// Tries every length(w)-subset of the staircase. Throws std::out_of_range
/// for n > kBruteForceMaxSize.
SetFamily enumerate_rp_bruteforce(const Permutation& w);

/// n lines of n characters: '+' cross, '.' elbow with i + j <= n + 1,
/// ' ' below that. Lines are joined by '\n' with no trailing newline.
std::string render_ascii(const PipeDream& dream);

}  // namespace pipedream
