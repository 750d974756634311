#include "pipedream/box_set.hpp"

#include <sstream>
#include <stdexcept>

namespace pipedream {

std::ostream& operator<<(std::ostream& os, const GridBox& box) {
  return os << '(' << box.row << ',' << box.col << ')';
}

BoxSet::BoxSet(std::initializer_list<GridBox> boxes) {
  for (const auto& box : boxes) insert(box);
}

BoxSet::BoxSet(const std::vector<GridBox>& boxes) {
  for (const auto& box : boxes) insert(box);
}

void BoxSet::insert(const GridBox& box) {
  if (!in_range(box)) {
    std::ostringstream msg;
    msg << "box " << box << " outside the supported " << kMaxGridSize << 'x'
        << kMaxGridSize << " grid";
    throw std::out_of_range(msg.str());
  }
  const int idx = index_of(box);
  words_[idx / 64] |= std::uint64_t{1} << (idx % 64);
}

void BoxSet::erase(const GridBox& box) {
  if (!in_range(box)) return;
  const int idx = index_of(box);
  words_[idx / 64] &= ~(std::uint64_t{1} << (idx % 64));
}

bool BoxSet::contains(const GridBox& box) const {
  if (!in_range(box)) return false;
  const int idx = index_of(box);
  return (words_[idx / 64] >> (idx % 64)) & 1U;
}

std::vector<GridBox> BoxSet::boxes() const {
  std::vector<GridBox> out;
  out.reserve(static_cast<std::size_t>(size()));
  for_each([&](GridBox b) { out.push_back(b); });
  return out;
}

int BoxSet::max_row() const {
  for (int k = kWords - 1; k >= 0; --k) {
    if (words_[k] != 0) {
      const int idx = k * 64 + 63 - std::countl_zero(words_[k]);
      return box_at(idx).row;
    }
  }
  return 0;
}

int BoxSet::max_col() const {
  int best = 0;
  for_each([&](GridBox b) { best = std::max(best, b.col); });
  return best;
}

std::strong_ordering operator<=>(const BoxSet& a, const BoxSet& b) {
  // Find the lowest cell where the sets differ. Below it the sorted lists
  // agree; the set holding that cell is smaller unless the other list has
  // already run out.
  for (int k = 0; k < BoxSet::kWords; ++k) {
    const std::uint64_t diff = a.words_[k] ^ b.words_[k];
    if (diff == 0) continue;
    const int bit = std::countr_zero(diff);
    const bool a_has = (a.words_[k] >> bit) & 1U;
    const BoxSet& without = a_has ? b : a;
    // Does `without` have any element above the differing cell?
    bool has_more = false;
    const std::uint64_t above =
        bit == 63 ? 0 : without.words_[k] & (~std::uint64_t{0} << (bit + 1));
    if (above != 0) has_more = true;
    for (int j = k + 1; j < BoxSet::kWords && !has_more; ++j)
      if (without.words_[j] != 0) has_more = true;
    const bool a_less = a_has ? has_more : !has_more;
    return a_less ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string to_string(const BoxSet& set) {
  std::string out = "{";
  bool first = true;
  set.for_each([&](GridBox b) {
    if (!first) out += ',';
    first = false;
    out += '(' + std::to_string(b.row) + ',' + std::to_string(b.col) + ')';
  });
  out += '}';
  return out;
}

std::ostream& operator<<(std::ostream& os, const BoxSet& set) {
  return os << to_string(set);
}

}  // namespace pipedream
