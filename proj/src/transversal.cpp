#include "pipedream/transversal.hpp"

#include <algorithm>
#include <vector>

namespace pipedream {

namespace {

// Every box of `candidate` has a member of `members` meeting `candidate`
// in exactly that box.
bool every_box_has_witness(const BoxSet& candidate, const std::vector<BoxSet>& members) {
  bool ok = true;
  candidate.for_each([&](GridBox box) {
    if (!ok) return;
    BoxSet single;
    single.insert(box);
    ok = std::any_of(members.begin(), members.end(),
                     [&](const BoxSet& m) { return (m & candidate) == single; });
  });
  return ok;
}

}  // namespace

bool is_transversal(const BoxSet& candidate, const SetFamily& family) {
  return std::all_of(family.begin(), family.end(),
                     [&](const BoxSet& m) { return m.intersects(candidate); });
}

bool is_minimal_transversal(const BoxSet& candidate, const SetFamily& family) {
  return is_transversal(candidate, family) &&
         every_box_has_witness(candidate, family.members());
}

SetFamily minimalize(const SetFamily& family) {
  std::vector<BoxSet> by_size = family.members();
  std::stable_sort(by_size.begin(), by_size.end(),
                   [](const BoxSet& a, const BoxSet& b) { return a.size() < b.size(); });
  std::vector<BoxSet> kept;
  for (const auto& m : by_size) {
    const bool dominated = std::any_of(kept.begin(), kept.end(),
                                       [&](const BoxSet& k) { return k.is_subset_of(m); });
    if (!dominated) kept.push_back(m);
  }
  return SetFamily(family.grid_size(), std::move(kept));
}

SetFamily transversal_dual(const SetFamily& family) {
  const int n = family.grid_size();
  std::vector<BoxSet> order = family.members();
  if (std::any_of(order.begin(), order.end(), [](const BoxSet& m) { return m.empty(); }))
    return SetFamily(n);
  std::stable_sort(order.begin(), order.end(),
                   [](const BoxSet& a, const BoxSet& b) { return a.size() < b.size(); });

  std::vector<BoxSet> dual{BoxSet{}};
  std::vector<BoxSet> absorbed;
  absorbed.reserve(order.size());
  std::vector<BoxSet> next;
  std::vector<BoxSet> extensions;

  for (const auto& member : order) {
    absorbed.push_back(member);
    next.clear();
    extensions.clear();
    for (const auto& partial : dual) {
      if (partial.intersects(member)) {
        next.push_back(partial);
        continue;
      }
      member.for_each([&](GridBox box) {
        BoxSet extended = partial;
        extended.insert(box);
        // `member` witnesses the new box; only the old boxes need rechecking.
        bool ok = true;
        partial.for_each([&](GridBox old) {
          if (!ok) return;
          BoxSet single;
          single.insert(old);
          ok = std::any_of(absorbed.begin(), absorbed.end(),
                           [&](const BoxSet& m) { return (m & extended) == single; });
        });
        if (ok) extensions.push_back(extended);
      });
    }
    std::sort(extensions.begin(), extensions.end());
    extensions.erase(std::unique(extensions.begin(), extensions.end()), extensions.end());
    next.insert(next.end(), extensions.begin(), extensions.end());
    dual.swap(next);
  }
  return SetFamily(n, std::move(dual));
}

}  // namespace pipedream
