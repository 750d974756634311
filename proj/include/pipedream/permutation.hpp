#pragma once

#include <compare>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pipedream {

/// Rank table of a permutation matrix: entry (p, q) counts the one-entries
/// weakly northwest of (p, q). Row and column 0 are stored as zeros so
/// callers can difference without bounds checks.
class RankMatrix {
 public:
  RankMatrix() = default;
  explicit RankMatrix(std::span<const int> images);

  int size() const { return n_; }

  /// Valid for 0 <= p, q <= n.
  int operator()(int p, int q) const { return table_[p * (n_ + 1) + q]; }

 private:
  int n_ = 0;
  std::vector<int> table_;
};

/// A permutation of {1..n} in one-line notation, images[i-1] = w(i).
class Permutation {
 public:
  /// Throws std::invalid_argument unless `images` is a bijection of {1..n}
  /// with n >= 1.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// n, n-1, ..., 1.
  static Permutation longest(int n);
  /// The simple transposition swapping k and k+1 in S_n.
  static Permutation simple_transposition(int n, int k);

  int size() const { return static_cast<int>(images_.size()); }
  /// w(i) for 1 <= i <= n.
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;

  const RankMatrix& ranks() const { return ranks_; }

  /// Digit string for n <= 9, comma-separated otherwise.
  std::string to_string() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.images_ == b.images_;
  }
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<int> images_;
  RankMatrix ranks_;
};

/// Accepts "2143" (one digit per entry) or "10,2,3,...,1".
/// Throws std::invalid_argument on empty input, non-numeric tokens, or a
/// sequence that is not a bijection of {1..n}.
Permutation parse_permutation(std::string_view text);

/// r_pq(w). Throws std::out_of_range unless 1 <= p, q <= n.
int rank(const Permutation& w, int p, int q);

/// Number of inversions.
int length(const Permutation& w);

/// v >= w in Bruhat order, decided by entrywise comparison of rank matrices.
/// Throws std::invalid_argument on size mismatch.
bool bruhat_geq(const Permutation& v, const Permutation& w);

/// Visits S_n in lexicographic order of one-line notation.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn);
std::vector<Permutation> all_permutations(int n);

}  // namespace pipedream
