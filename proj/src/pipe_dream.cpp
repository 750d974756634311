#include "pipedream/pipe_dream.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

namespace pipedream {

PipeDream::PipeDream(int n, BoxSet crosses) : n_(n), crosses_(crosses) {
  if (n < 1 || n > kMaxGridSize)
    throw std::invalid_argument("pipe dream size " + std::to_string(n) + " outside 1.." +
                                std::to_string(kMaxGridSize));
  if (!fits_staircase(n, crosses_))
    throw std::invalid_argument("cross below the main antidiagonal in " + to_string(crosses_) +
                                " (n=" + std::to_string(n) + ")");
}

PipeDream::PipeDream(int n, std::initializer_list<GridBox> crosses)
    : PipeDream(n, BoxSet(crosses)) {}

bool PipeDream::fits_staircase(int n, const BoxSet& crosses) {
  bool ok = true;
  crosses.for_each([&](GridBox b) { ok = ok && b.row + b.col <= n; });
  return ok;
}

BoxSet PipeDream::staircase(int n) {
  BoxSet out;
  for (int i = 1; i < n; ++i)
    for (int j = 1; i + j <= n; ++j) out.insert({i, j});
  return out;
}

namespace {

// Routes all pipes through the grid. West pipes carry labels 1..n, the pipe
// entering the bottom of column j carries n + j. Columns are swept left to
// right, each bottom to top, so both inputs of a tile are known when it is
// visited. Returns the label leaving the top of each column.
template <class OnCross>
std::vector<int> route(const PipeDream& dream, OnCross&& on_cross) {
  const int n = dream.size();
  std::vector<int> heading_east(static_cast<std::size_t>(n + 1));
  for (int i = 1; i <= n; ++i) heading_east[static_cast<std::size_t>(i)] = i;
  std::vector<int> north_exit(static_cast<std::size_t>(n + 1), 0);
  for (int j = 1; j <= n; ++j) {
    int up = n + j;
    for (int i = n; i >= 1; --i) {
      int& west = heading_east[static_cast<std::size_t>(i)];
      if (dream.is_cross(i, j))
        on_cross(std::min(west, up), std::max(west, up));
      else
        std::swap(west, up);
    }
    north_exit[static_cast<std::size_t>(j)] = up;
  }
  return north_exit;
}

}  // namespace

Permutation trace(const PipeDream& dream) {
  const int n = dream.size();
  const auto north_exit = route(dream, [](int, int) {});
  std::vector<int> images(static_cast<std::size_t>(n), 0);
  for (int j = 1; j <= n; ++j) {
    const int pipe = north_exit[static_cast<std::size_t>(j)];
    if (pipe < 1 || pipe > n)
      throw std::logic_error("pipe from the south edge reached the north edge");
    images[static_cast<std::size_t>(pipe - 1)] = j;
  }
  return Permutation(std::move(images));
}

std::vector<PipePair> crossing_counts(const PipeDream& dream) {
  std::map<std::pair<int, int>, int> counts;
  route(dream, [&](int a, int b) { ++counts[{a, b}]; });
  std::vector<PipePair> out;
  out.reserve(counts.size());
  for (const auto& [pair, count] : counts) out.push_back({pair.first, pair.second, count});
  return out;
}

bool is_reduced(const PipeDream& dream) {
  const auto pairs = crossing_counts(dream);
  return std::all_of(pairs.begin(), pairs.end(),
                     [](const PipePair& p) { return p.crossings <= 1; });
}

namespace {

class ReducedSearch {
 public:
  explicit ReducedSearch(const Permutation& w)
      : n_(w.size()), w_(w), inverse_(w.inverse()), budget_(length(w)) {
    if (n_ > kMaxGridSize)
      throw std::invalid_argument("permutation too large for the packed grid");
    for (int i = 1; i <= n_; ++i) heading_east_[static_cast<std::size_t>(i)] = i;
  }

  std::vector<BoxSet> run() {
    column(1);
    return std::move(found_);
  }

 private:
  using Rows = std::array<int, kMaxGridSize + 2>;

  void column(int j) {
    if (j > n_) {
      if (used_ == budget_) found_.push_back(crosses_);
      return;
    }
    const Rows saved = heading_east_;
    int up = n_ + j;
    // Tiles on or below the antidiagonal are elbows.
    for (int i = n_; i > n_ - j; --i) std::swap(heading_east_[static_cast<std::size_t>(i)], up);
    cell(j, n_ - j, up);
    heading_east_ = saved;
  }

  void cell(int j, int i, int up) {
    if (i == 0) {
      if (up == inverse_(j) && feasible()) column(j + 1);
      return;
    }
    int& west = heading_east_[static_cast<std::size_t>(i)];
    const int a = std::min(west, up);
    const int b = std::max(west, up);
    if (used_ < budget_ && b <= n_ && !crossed_[a][b]) {
      crossed_[a][b] = true;
      ++used_;
      crosses_.insert({i, j});
      cell(j, i - 1, up);
      crosses_.erase({i, j});
      --used_;
      crossed_[a][b] = false;
    }
    const int from_west = west;
    west = up;
    cell(j, i - 1, from_west);
    heading_east_[static_cast<std::size_t>(i)] = from_west;
  }

  // Pipes still heading east must exit in the order of their targets; every
  // pair in the wrong vertical order needs a crossing it has not used yet.
  bool feasible() const {
    int required = 0;
    for (int r = 1; r <= n_; ++r) {
      const int a = heading_east_[static_cast<std::size_t>(r)];
      if (a > n_) continue;
      for (int s = r + 1; s <= n_; ++s) {
        const int b = heading_east_[static_cast<std::size_t>(s)];
        if (b > n_ || w_(a) < w_(b)) continue;
        if (crossed_[std::min(a, b)][std::max(a, b)]) return false;
        ++required;
      }
    }
    return used_ + required <= budget_;
  }

  int n_;
  Permutation w_;
  Permutation inverse_;
  int budget_;
  int used_ = 0;
  Rows heading_east_{};
  std::array<std::array<bool, kMaxGridSize + 1>, kMaxGridSize + 1> crossed_{};
  BoxSet crosses_;
  std::vector<BoxSet> found_;
};

}  // namespace

SetFamily enumerate_rp(const Permutation& w) {
  return SetFamily(w.size(), ReducedSearch(w).run());
}

SetFamily enumerate_rp_bruteforce(const Permutation& w) {
  const int n = w.size();
  if (n > kBruteForceMaxSize)
    throw std::out_of_range("brute-force oracle limited to n <= " +
                            std::to_string(kBruteForceMaxSize));
  const auto cells = PipeDream::staircase(n).boxes();
  const int k = length(w);
  const int m = static_cast<int>(cells.size());
  std::vector<BoxSet> found;
  if (k > m) return SetFamily(n);
  // Lexicographic walk over k-combinations of the staircase cells.
  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int t = 0; t < k; ++t) pick[static_cast<std::size_t>(t)] = t;
  while (true) {
    BoxSet set;
    for (int idx : pick) set.insert(cells[static_cast<std::size_t>(idx)]);
    const PipeDream dream(n, set);
    if (trace(dream) == w && is_reduced(dream)) found.push_back(set);
    int t = k - 1;
    while (t >= 0 && pick[static_cast<std::size_t>(t)] == m - k + t) --t;
    if (t < 0) break;
    ++pick[static_cast<std::size_t>(t)];
    for (int u = t + 1; u < k; ++u)
      pick[static_cast<std::size_t>(u)] = pick[static_cast<std::size_t>(u - 1)] + 1;
  }
  return SetFamily(n, std::move(found));
}

std::string render_ascii(const PipeDream& dream) {
  const int n = dream.size();
  std::string out;
  out.reserve(static_cast<std::size_t>(n * (n + 1)));
  for (int i = 1; i <= n; ++i) {
    if (i > 1) out += '\n';
    for (int j = 1; j <= n; ++j) {
      if (dream.is_cross(i, j))
        out += '+';
      else
        out += (i + j <= n + 1) ? '.' : ' ';
    }
  }
  return out;
}

}  // namespace pipedream
