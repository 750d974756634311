#include "pipedream/set_family.hpp"

#include <algorithm>

namespace pipedream {

SetFamily::SetFamily(int n, std::vector<BoxSet> members)
    : n_(n), members_(std::move(members)) {
  if (n < 1 || n > kMaxGridSize)
    throw std::invalid_argument("grid size " + std::to_string(n) + " outside 1.." +
                                std::to_string(kMaxGridSize));
  for (const auto& m : members_) {
    if (m.max_row() > n || m.max_col() > n)
      throw std::invalid_argument("member " + to_string(m) + " leaves the " +
                                  std::to_string(n) + "x" + std::to_string(n) + " grid");
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool SetFamily::contains(const BoxSet& set) const {
  return std::binary_search(members_.begin(), members_.end(), set);
}

SetFamily difference(const SetFamily& a, const SetFamily& b) {
  std::vector<BoxSet> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return SetFamily(a.grid_size(), std::move(out));
}

std::string to_text(const SetFamily& family) {
  std::string out = "{";
  bool first = true;
  for (const auto& member : family) {
    if (!first) out += ", ";
    first = false;
    out += to_string(member);
  }
  out += '}';
  return out;
}

void to_json(nlohmann::json& j, const SetFamily& family) {
  auto members = nlohmann::json::array();
  for (const auto& member : family) {
    auto boxes = nlohmann::json::array();
    member.for_each([&](GridBox b) { boxes.push_back({b.row, b.col}); });
    members.push_back(std::move(boxes));
  }
  j = nlohmann::json{{"n", family.grid_size()}, {"members", std::move(members)}};
}

void from_json(const nlohmann::json& j, SetFamily& family) {
  if (!j.is_object() || !j.contains("n") || !j.contains("members"))
    throw FormatError("set family must be an object with keys \"n\" and \"members\"");
  const auto& jn = j.at("n");
  const auto& jmembers = j.at("members");
  if (!jn.is_number_integer()) throw FormatError("\"n\" must be an integer");
  if (!jmembers.is_array()) throw FormatError("\"members\" must be an array");
  const int n = jn.get<int>();
  if (n < 1 || n > kMaxGridSize)
    throw FormatError("\"n\" must lie in 1.." + std::to_string(kMaxGridSize));
  std::vector<BoxSet> members;
  for (const auto& jm : jmembers) {
    if (!jm.is_array()) throw FormatError("each member must be an array of boxes");
    BoxSet set;
    for (const auto& jb : jm) {
      if (!jb.is_array() || jb.size() != 2 || !jb[0].is_number_integer() ||
          !jb[1].is_number_integer())
        throw FormatError("each box must be a [row, col] integer pair");
      const GridBox box{jb[0].get<int>(), jb[1].get<int>()};
      if (box.row < 1 || box.row > n || box.col < 1 || box.col > n)
        throw FormatError("box (" + std::to_string(box.row) + "," + std::to_string(box.col) +
                          ") outside the grid");
      set.insert(box);
    }
    members.push_back(set);
  }
  family = SetFamily(n, std::move(members));
}

std::string to_json_text(const SetFamily& family) {
  return nlohmann::json(family).dump();
}

SetFamily family_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(e.what());
  }
  return j.get<SetFamily>();
}

}  // namespace pipedream
