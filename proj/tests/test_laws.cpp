#include <algorithm>

#include "doctest.h"
#include "pipedream/antidiagonal.hpp"
#include "pipedream/laws.hpp"
#include "pipedream/transversal.hpp"

using namespace pipedream;

namespace {

bool passes(const VerificationReport& r, std::string_view name) {
  const auto* c = r.find(name);
  return c != nullptr && c->pass;
}

}  // namespace

TEST_CASE("max_elbow_antidiagonal examples") {
  const PipeDream d(4, {{1, 1}, {2, 2}});
  CHECK(max_elbow_antidiagonal(d, 3, 3) == 2);
  CHECK(max_elbow_antidiagonal(d, 3, 3) == rank(parse_permutation("2143"), 3, 3));
  const PipeDream empty(5, BoxSet{});
  for (int p = 1; p <= 5; ++p)
    for (int q = 1; q <= 5; ++q) CHECK(max_elbow_antidiagonal(empty, p, q) == std::min(p, q));
  CHECK(max_elbow_antidiagonal(PipeDream(3, PipeDream::staircase(3)), 1, 1) == 0);
  CHECK_THROWS_AS(max_elbow_antidiagonal(d, 0, 1), std::out_of_range);
  CHECK_THROWS_AS(max_elbow_antidiagonal(d, 1, 5), std::out_of_range);
}

TEST_CASE("max_elbow_antidiagonal matches exhaustive search and is monotone") {
  // Oracle: the largest s for which some size-s antidiagonal in [p] x [q]
  // avoids every cross.
  const auto cells = PipeDream::staircase(4).boxes();
  for (unsigned mask = 0; mask < (1U << cells.size()); ++mask) {
    BoxSet s;
    for (std::size_t k = 0; k < cells.size(); ++k)
      if ((mask >> k) & 1U) s.insert(cells[k]);
    const PipeDream d(4, s);
    for (int p = 1; p <= 4; ++p) {
      for (int q = 1; q <= 4; ++q) {
        int best = 0;
        for (int size = 1; size <= std::min(p, q); ++size)
          for (const auto& a : antidiagonals_in_rectangle(p, q, size))
            if (!a.intersects(s)) best = size;
        const int got = max_elbow_antidiagonal(d, p, q);
        REQUIRE(got == best);
        if (p > 1) REQUIRE(got >= max_elbow_antidiagonal(d, p - 1, q));
        if (q > 1) REQUIRE(got >= max_elbow_antidiagonal(d, p, q - 1));
      }
    }
  }
}

TEST_CASE("individual checks on the worked examples and the identity") {
  for (const char* text : {"2143", "1432", "1", "1234"}) {
    const auto w = parse_permutation(text);
    CAPTURE(text);
    CHECK(passes(verify_theorem(w), kTheorem));
    CHECK(passes(verify_theorem(w), kTheoremConverse));
    CHECK(passes(verify_theorem(w), kMinimalTransversals));
    CHECK(passes(verify_claim1(w), kClaim1));
    CHECK(passes(verify_claim2(w), kClaim2));
    CHECK(passes(verify_rank_antidiagonal_law(w), kRankLaw));
    CHECK(passes(verify_double_dual(w), kDoubleDual));
  }
}

TEST_CASE("claim2 reports trace equal to w on 2143") {
  const auto w = parse_permutation("2143");
  for (const auto& e : transversal_dual(antidiagonal_family(w))) CHECK(trace(PipeDream(4, e)) == w);
}

TEST_CASE("verify_all on S_4 passes in proof order") {
  for_each_permutation(4, [](const Permutation& w) {
    const auto report = verify_all(w);
    REQUIRE(report.all_pass());
    std::vector<std::string> names;
    for (const auto& [name, result] : report.checks) names.push_back(name);
    REQUIRE(names == std::vector<std::string>{"claim1", "claim2", "rank_antidiagonal_law",
                                              "double_dual", "theorem", "theorem_converse",
                                              "minimal_transversals"});
  });
}

TEST_CASE("verify_bruhat_oracle") {
  for (int n = 1; n <= 4; ++n) CHECK(passes(verify_bruhat_oracle(n), kBruhatOracle));
  CHECK_THROWS_AS(verify_bruhat_oracle(kBruhatOracleMaxSize + 1), std::out_of_range);
}

TEST_CASE("verify_range") {
  const auto one = verify_range(1, std::chrono::seconds(60));
  REQUIRE(one.reports.size() == 1);
  CHECK(one.all_pass());
  CHECK_FALSE(one.budget_exhausted);

  const auto four = verify_range(4, std::chrono::seconds(60), 2);
  CHECK(four.total == 24);
  CHECK(four.reports.size() == 24);
  CHECK(four.passed() == 24);
  CHECK(std::is_sorted(four.reports.begin(), four.reports.end(),
                       [](const auto& a, const auto& b) { return a.permutation < b.permutation; }));

  const auto none = verify_range(4, std::chrono::milliseconds(0));
  CHECK(none.budget_exhausted);
  CHECK(none.reports.empty());
  CHECK(none.all_pass());
}

TEST_CASE("reports round-trip through JSON, counterexamples included") {
  auto report = verify_all(parse_permutation("1432"));
  report.record("synthetic_failure",
                CheckResult::failed(SetFamily(4, {BoxSet{{1, 2}, {2, 1}}, BoxSet{{3, 1}}})));
  report.stats["extra"] = 7;
  const auto text = to_json(report).dump();
  const auto back = report_from_json(nlohmann::json::parse(text));
  CHECK(back.permutation == report.permutation);
  CHECK(back.stats == report.stats);
  CHECK(back.checks.size() == report.checks.size());
  for (const auto& [name, result] : report.checks) {
    const auto* other = back.find(name);
    REQUIRE(other != nullptr);
    CHECK(*other == result);
  }
  CHECK(to_json(back).dump() == text);

  auto bad = nlohmann::json::parse(text);
  bad["checks"]["claim1"]["pass"] = false;
  CHECK_THROWS_AS(report_from_json(bad), FormatError);
}
