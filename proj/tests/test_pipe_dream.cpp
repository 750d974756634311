#include <map>
#include <vector>

#include "doctest.h"
#include "pipedream/pipe_dream.hpp"

using namespace pipedream;

namespace {

// Walks one west pipe at a time through the tiles: straight on at a cross,
// turning (east <-> north) at an elbow. Independent of the column sweep
// used by the library.
struct Walk {
  std::vector<int> exit_column;                     // by pipe, 1-based
  std::map<std::pair<int, int>, int> pair_crossings;
};

Walk walk_pipes(int n, const BoxSet& crosses) {
  Walk out;
  out.exit_column.assign(static_cast<std::size_t>(n + 1), 0);
  std::vector<std::vector<GridBox>> paths(static_cast<std::size_t>(n + 1));
  for (int pipe = 1; pipe <= n; ++pipe) {
    int r = pipe, c = 1;
    bool east = true;
    while (r >= 1 && c <= n) {
      paths[static_cast<std::size_t>(pipe)].push_back({r, c});
      if (!crosses.contains({r, c})) east = !east;
      if (east)
        ++c;
      else
        --r;
    }
    out.exit_column[static_cast<std::size_t>(pipe)] = r == 0 ? c : -1;
  }
  crosses.for_each([&](GridBox box) {
    std::vector<int> through;
    for (int pipe = 1; pipe <= n; ++pipe)
      for (const auto& b : paths[static_cast<std::size_t>(pipe)])
        if (b == box) through.push_back(pipe);
    if (through.size() == 2) ++out.pair_crossings[{through[0], through[1]}];
  });
  return out;
}

std::vector<BoxSet> all_staircase_subsets(int n) {
  const auto cells = PipeDream::staircase(n).boxes();
  std::vector<BoxSet> out;
  for (unsigned mask = 0; mask < (1U << cells.size()); ++mask) {
    BoxSet s;
    for (std::size_t k = 0; k < cells.size(); ++k)
      if ((mask >> k) & 1U) s.insert(cells[k]);
    out.push_back(s);
  }
  return out;
}

SetFamily family(int n, std::vector<BoxSet> members) { return SetFamily(n, std::move(members)); }

}  // namespace

TEST_CASE("staircase invariant") {
  CHECK_NOTHROW(PipeDream(4, {{1, 3}, {3, 1}}));
  CHECK_THROWS_AS(PipeDream(4, {{2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(PipeDream(4, {{4, 4}}), std::invalid_argument);
  CHECK(PipeDream::staircase(4).size() == 6);
  CHECK(PipeDream::staircase(1).empty());
}

TEST_CASE("trace examples") {
  CHECK(trace(PipeDream(4, BoxSet{})) == Permutation::identity(4));
  CHECK(trace(PipeDream(4, {{1, 1}, {1, 3}})) == parse_permutation("2143"));
  CHECK(trace(PipeDream(3, PipeDream::staircase(3))) == parse_permutation("321"));
  for (int n = 1; n <= 8; ++n) {
    CHECK(trace(PipeDream(n, BoxSet{})) == Permutation::identity(n));
    CHECK(trace(PipeDream(n, PipeDream::staircase(n))) == Permutation::longest(n));
  }
}

TEST_CASE("crossing_counts examples") {
  CHECK(crossing_counts(PipeDream(4, BoxSet{})).empty());
  CHECK(crossing_counts(PipeDream(4, {{1, 1}, {1, 3}})) ==
        std::vector<PipePair>{{1, 2, 1}, {3, 4, 1}});
  // Pipes 2 and 3 cross at both tiles and end where they started.
  const PipeDream twice(3, {{1, 2}, {2, 1}});
  CHECK(crossing_counts(twice) == std::vector<PipePair>{{2, 3, 2}});
  CHECK(trace(twice) == Permutation::identity(3));
  // The full 3x3 staircase crosses each pair once.
  CHECK(crossing_counts(PipeDream(3, PipeDream::staircase(3))) ==
        std::vector<PipePair>{{1, 2, 1}, {1, 3, 1}, {2, 3, 1}});
}

TEST_CASE("is_reduced examples") {
  CHECK(is_reduced(PipeDream(4, BoxSet{})));
  for (const auto& d : {BoxSet{{1, 2}, {1, 3}, {2, 2}}, BoxSet{{1, 2}, {1, 3}, {3, 1}},
                        BoxSet{{1, 2}, {2, 1}, {2, 2}}, BoxSet{{1, 3}, {2, 1}, {3, 1}},
                        BoxSet{{2, 1}, {2, 2}, {3, 1}}})
    CHECK(is_reduced(PipeDream(4, d)));
  // Looks like a member of RP_1432 but traces to 1243 with pipes 2 and 4
  // crossing twice.
  const PipeDream lookalike(4, {{1, 2}, {2, 1}, {3, 1}});
  CHECK_FALSE(is_reduced(lookalike));
  CHECK(trace(lookalike) == parse_permutation("1243"));
  CHECK(crossing_counts(lookalike) == std::vector<PipePair>{{2, 4, 2}, {3, 4, 1}});
  CHECK_FALSE(is_reduced(PipeDream(3, {{1, 2}, {2, 1}})));
  CHECK(is_reduced(PipeDream(3, {{1, 1}, {1, 2}, {2, 1}})));
}

TEST_CASE("routing agrees with the pipe-walk oracle on every staircase subset") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& s : all_staircase_subsets(n)) {
      const PipeDream d(n, s);
      const Walk walk = walk_pipes(n, s);
      const Permutation w = trace(d);
      for (int i = 1; i <= n; ++i) REQUIRE(w(i) == walk.exit_column[static_cast<std::size_t>(i)]);
      std::map<std::pair<int, int>, int> counts;
      for (const auto& p : crossing_counts(d)) counts[{p.a, p.b}] = p.crossings;
      REQUIRE(counts == walk.pair_crossings);
      // |D| >= length(trace(D)), with equality exactly for reduced D.
      REQUIRE(d.cross_count() >= length(w));
      REQUIRE((d.cross_count() == length(w)) == is_reduced(d));
    }
  }
}

TEST_CASE("enumerate_rp examples") {
  CHECK(enumerate_rp(parse_permutation("2143")) ==
        family(4, {BoxSet{{1, 1}, {1, 3}}, BoxSet{{1, 1}, {2, 2}}, BoxSet{{1, 1}, {3, 1}}}));
  // Five members, matching the five terms of the Schubert polynomial of 1432
  // obtained by divided differences from x1^3*x2^2*x3.
  CHECK(enumerate_rp(parse_permutation("1432")) ==
        family(4, {BoxSet{{1, 2}, {1, 3}, {2, 2}}, BoxSet{{1, 2}, {1, 3}, {3, 1}},
                   BoxSet{{1, 2}, {2, 1}, {2, 2}}, BoxSet{{1, 3}, {2, 1}, {3, 1}},
                   BoxSet{{2, 1}, {2, 2}, {3, 1}}}));
  for (int n = 1; n <= 7; ++n) {
    CHECK(enumerate_rp(Permutation::identity(n)) == family(n, {BoxSet{}}));
    CHECK(enumerate_rp(Permutation::longest(n)) == family(n, {PipeDream::staircase(n)}));
  }
}

TEST_CASE("enumerate_rp_bruteforce examples") {
  CHECK(enumerate_rp_bruteforce(parse_permutation("2143")) ==
        family(4, {BoxSet{{1, 1}, {1, 3}}, BoxSet{{1, 1}, {2, 2}}, BoxSet{{1, 1}, {3, 1}}}));
  CHECK(enumerate_rp_bruteforce(Permutation::identity(5)) == family(5, {BoxSet{}}));
  CHECK_THROWS_AS(enumerate_rp_bruteforce(Permutation::identity(kBruteForceMaxSize + 1)),
                  std::out_of_range);
}

TEST_CASE("search and brute force agree on S_n for n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    for_each_permutation(n, [](const Permutation& w) {
      const SetFamily rp = enumerate_rp(w);
      REQUIRE(rp == enumerate_rp_bruteforce(w));
      for (const auto& d : rp) {
        const PipeDream dream(w.size(), d);
        REQUIRE(trace(dream) == w);
        REQUIRE(is_reduced(dream));
        REQUIRE(dream.cross_count() == length(w));
      }
    });
  }
}

TEST_CASE("pipe dream counts over S_n sum to the whole reduced population") {
  // Every staircase subset whose cross count equals the length of its
  // trace lands in exactly one RP_w.
  for (int n = 1; n <= 5; ++n) {
    std::size_t reduced = 0;
    for (const auto& s : all_staircase_subsets(n))
      if (is_reduced(PipeDream(n, s))) ++reduced;
    std::size_t listed = 0;
    for_each_permutation(n, [&](const Permutation& w) { listed += enumerate_rp(w).size(); });
    CHECK(listed == reduced);
  }
}

TEST_CASE("render_ascii") {
  CHECK(render_ascii(PipeDream(2, BoxSet{})) == "..\n. ");
  CHECK(render_ascii(PipeDream(4, {{1, 1}, {2, 2}})) == "+...\n.+. \n..  \n.   ");
  CHECK(render_ascii(PipeDream(4, {{1, 1}, {1, 3}})) == "+.+.\n... \n..  \n.   ");
  CHECK(render_ascii(PipeDream(1, BoxSet{})) == ".");
}
