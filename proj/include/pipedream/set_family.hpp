#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "pipedream/box_set.hpp"

namespace pipedream {

/// A finite family of box sets inside the n x n grid, held in canonical
/// order (lexicographic on sorted box lists) with no duplicates.
class SetFamily {
 public:
  SetFamily() = default;
  /// Canonicalizes `members`. Throws std::invalid_argument if n is outside
  /// 1..kMaxGridSize or a member leaves the n x n grid.
  explicit SetFamily(int n, std::vector<BoxSet> members = {});

  int grid_size() const { return n_; }
  const std::vector<BoxSet>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(const BoxSet& set) const;

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const SetFamily&, const SetFamily&) = default;

 private:
  int n_ = 1;
  std::vector<BoxSet> members_;
};

/// Members in `a` but not in `b`, on a's grid.
SetFamily difference(const SetFamily& a, const SetFamily& b);

/// "{{(1,1),(1,3)}, {(1,1),(2,2)}}"; the empty family is "{}".
std::string to_text(const SetFamily& family);

/// Raised when a JSON document does not have the SetFamily shape.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"n": 4, "members": [[[1,1],[1,3]], ...]} in canonical order.
void to_json(nlohmann::json& j, const SetFamily& family);
/// Throws FormatError on a malformed document.
void from_json(const nlohmann::json& j, SetFamily& family);

/// Compact single-line JSON text.
std::string to_json_text(const SetFamily& family);
/// Parses JSON text; throws FormatError on syntax or schema errors.
SetFamily family_from_json_text(const std::string& text);

}  // namespace pipedream
