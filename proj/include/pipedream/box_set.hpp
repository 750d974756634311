#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace pipedream {

/// Largest grid side supported by the packed box sets.
inline constexpr int kMaxGridSize = 16;

/// A 1-based (row, column) cell of the grid; row 1 is the top row.
struct GridBox {
  int row = 1;
  int col = 1;

  friend constexpr auto operator<=>(const GridBox&, const GridBox&) = default;

  /// Componentwise order: this box is weakly northwest of `other`.
  constexpr bool weakly_northwest_of(const GridBox& other) const {
    return row <= other.row && col <= other.col;
  }
};

std::ostream& operator<<(std::ostream& os, const GridBox& box);

/// A set of grid boxes packed row-major into a fixed bitset.
///
/// Bit index (row-1)*kMaxGridSize + (col-1), so ascending bit order is the
/// (row, col) lexicographic order of boxes. Membership, intersection and
/// subset tests cost one pass over kWords machine words.
class BoxSet {
 public:
  static constexpr int kCells = kMaxGridSize * kMaxGridSize;
  static constexpr int kWords = kCells / 64;

  BoxSet() = default;
  BoxSet(std::initializer_list<GridBox> boxes);
  explicit BoxSet(const std::vector<GridBox>& boxes);

  static bool in_range(const GridBox& box) {
    return box.row >= 1 && box.row <= kMaxGridSize && box.col >= 1 &&
           box.col <= kMaxGridSize;
  }
  static int index_of(const GridBox& box) {
    return (box.row - 1) * kMaxGridSize + (box.col - 1);
  }
  static GridBox box_at(int index) {
    return {index / kMaxGridSize + 1, index % kMaxGridSize + 1};
  }

  /// Throws std::out_of_range for boxes outside the supported grid.
  void insert(const GridBox& box);
  void erase(const GridBox& box);
  bool contains(const GridBox& box) const;

  int size() const {
    int count = 0;
    for (auto word : words_) count += std::popcount(word);
    return count;
  }
  bool empty() const {
    for (auto word : words_)
      if (word != 0) return false;
    return true;
  }

  bool intersects(const BoxSet& other) const {
    for (int k = 0; k < kWords; ++k)
      if ((words_[k] & other.words_[k]) != 0) return true;
    return false;
  }
  bool is_subset_of(const BoxSet& other) const {
    for (int k = 0; k < kWords; ++k)
      if ((words_[k] & ~other.words_[k]) != 0) return false;
    return true;
  }

  BoxSet& operator|=(const BoxSet& other) {
    for (int k = 0; k < kWords; ++k) words_[k] |= other.words_[k];
    return *this;
  }
  BoxSet& operator&=(const BoxSet& other) {
    for (int k = 0; k < kWords; ++k) words_[k] &= other.words_[k];
    return *this;
  }
  BoxSet& operator-=(const BoxSet& other) {
    for (int k = 0; k < kWords; ++k) words_[k] &= ~other.words_[k];
    return *this;
  }
  friend BoxSet operator|(BoxSet a, const BoxSet& b) { return a |= b; }
  friend BoxSet operator&(BoxSet a, const BoxSet& b) { return a &= b; }
  friend BoxSet operator-(BoxSet a, const BoxSet& b) { return a -= b; }

  /// Calls fn(GridBox) for every member in (row, col) order.
  template <class Fn>
  void for_each(Fn&& fn) const {
    for (int k = 0; k < kWords; ++k) {
      std::uint64_t word = words_[k];
      while (word != 0) {
        const int bit = std::countr_zero(word);
        fn(box_at(k * 64 + bit));
        word &= word - 1;
      }
    }
  }

  /// Members sorted by (row, col).
  std::vector<GridBox> boxes() const;

  /// Largest row / column over the members; 0 for the empty set.
  int max_row() const;
  int max_col() const;

  friend bool operator==(const BoxSet&, const BoxSet&) = default;

  /// Lexicographic order on the sorted box lists (a proper prefix sorts
  /// first). This is the canonical order of set families.
  friend std::strong_ordering operator<=>(const BoxSet& a, const BoxSet& b);

 private:
  std::array<std::uint64_t, kWords> words_{};
};

/// "{(1,1),(1,3)}"; the empty set prints as "{}".
std::string to_string(const BoxSet& set);
std::ostream& operator<<(std::ostream& os, const BoxSet& set);

}  // namespace pipedream
