#include "pipedream/laws.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "pipedream/antidiagonal.hpp"
#include "pipedream/transversal.hpp"

namespace pipedream {

void VerificationReport::record(std::string name, CheckResult result) {
  checks.emplace_back(std::move(name), std::move(result));
}

void VerificationReport::merge(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  for (const auto& [key, value] : other.stats) stats[key] += value;
}

bool VerificationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const auto& entry) { return entry.second.pass; });
}

const CheckResult* VerificationReport::find(std::string_view name) const {
  for (const auto& [key, result] : checks)
    if (key == name) return &result;
  return nullptr;
}

std::vector<std::string> VerificationReport::failed_checks() const {
  std::vector<std::string> out;
  for (const auto& [key, result] : checks)
    if (!result.pass) out.push_back(key);
  return out;
}

nlohmann::json to_json(const VerificationReport& report) {
  auto checks = nlohmann::json::object();
  for (const auto& [name, result] : report.checks) {
    checks[name] = {{"pass", result.pass},
                    {"counterexample", result.counterexample
                                           ? nlohmann::json(*result.counterexample)
                                           : nlohmann::json(nullptr)}};
  }
  nlohmann::json w(std::vector<int>(report.permutation.images().begin(),
                                    report.permutation.images().end()));
  return {{"w", std::move(w)}, {"checks", std::move(checks)}, {"stats", report.stats}};
}

VerificationReport report_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object() || !j.contains("w") || !j.contains("checks"))
      throw FormatError("report must be an object with keys \"w\" and \"checks\"");
    VerificationReport report(Permutation(j.at("w").get<std::vector<int>>()));
    for (const auto& [name, jc] : j.at("checks").items()) {
      CheckResult result;
      result.pass = jc.at("pass").get<bool>();
      if (!jc.at("counterexample").is_null())
        result.counterexample = jc.at("counterexample").get<SetFamily>();
      if (!result.pass && !result.counterexample)
        throw FormatError("failing check '" + name + "' has no counterexample");
      report.record(name, std::move(result));
    }
    if (j.contains("stats")) report.stats = j.at("stats").get<std::map<std::string, std::int64_t>>();
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

LawInputs::LawInputs(const Permutation& perm)
    : w(perm), antidiagonals(antidiagonal_family(perm)), pipe_dreams(enumerate_rp(perm)) {}

namespace {

SetFamily symmetric_difference(const SetFamily& a, const SetFamily& b) {
  auto members = difference(a, b).members();
  const auto other = difference(b, a).members();
  members.insert(members.end(), other.begin(), other.end());
  return SetFamily(a.grid_size(), std::move(members));
}

BoxSet permutation_matrix(const Permutation& w) {
  BoxSet out;
  for (int i = 1; i <= w.size(); ++i) out.insert({i, w(i)});
  return out;
}

}  // namespace

VerificationReport verify_theorem(const LawInputs& in) {
  VerificationReport report(in.w);
  const int n = in.w.size();

  const auto dual_of_ad = transversal_dual(in.antidiagonals);
  report.record(std::string(kTheorem),
                dual_of_ad == in.pipe_dreams
                    ? CheckResult::ok()
                    : CheckResult::failed(symmetric_difference(dual_of_ad, in.pipe_dreams)));

  const auto dual_of_rp = transversal_dual(in.pipe_dreams);
  report.record(std::string(kTheoremConverse),
                dual_of_rp == in.antidiagonals
                    ? CheckResult::ok()
                    : CheckResult::failed(symmetric_difference(dual_of_rp, in.antidiagonals)));

  std::vector<BoxSet> not_minimal;
  for (const auto& d : in.pipe_dreams)
    if (!is_minimal_transversal(d, in.antidiagonals)) not_minimal.push_back(d);
  report.record(std::string(kMinimalTransversals),
                not_minimal.empty() ? CheckResult::ok()
                                    : CheckResult::failed(SetFamily(n, std::move(not_minimal))));

  std::int64_t below = 0;
  for (const auto& a : in.antidiagonals) {
    bool outside = false;
    a.for_each([&](GridBox b) { outside = outside || b.row + b.col > n; });
    if (outside) ++below;
  }
  report.stats["antidiagonals_below_staircase"] = below;
  return report;
}

VerificationReport verify_claim1(const LawInputs& in) {
  VerificationReport report(in.w);
  std::vector<BoxSet> misses;
  for (const auto& d : in.pipe_dreams)
    if (!is_transversal(d, in.antidiagonals)) misses.push_back(d);
  report.record(std::string(kClaim1),
                misses.empty() ? CheckResult::ok()
                               : CheckResult::failed(SetFamily(in.w.size(), std::move(misses))));
  return report;
}

VerificationReport verify_claim2(const LawInputs& in) {
  VerificationReport report(in.w);
  const int n = in.w.size();
  const auto staircase = PipeDream::staircase(n);
  std::vector<BoxSet> bad;
  std::int64_t reduced_nonminimal = 0;
  for (const auto& e : transversal_dual(in.antidiagonals)) {
    if (!PipeDream::fits_staircase(n, e)) {
      bad.push_back(e);
      continue;
    }
    const PipeDream dream(n, e);
    if (!is_reduced(dream) || !bruhat_geq(trace(dream), in.w)) {
      bad.push_back(e);
      continue;
    }
    // One-box enlargements are transversals that are not minimal; count the
    // ones that are still reduced pipe dreams.
    (staircase - e).for_each([&](GridBox b) {
      BoxSet bigger = e;
      bigger.insert(b);
      if (is_reduced(PipeDream(n, bigger))) ++reduced_nonminimal;
    });
  }
  report.record(std::string(kClaim2), bad.empty()
                                          ? CheckResult::ok()
                                          : CheckResult::failed(SetFamily(n, std::move(bad))));
  report.stats["reduced_nonminimal_transversals"] = reduced_nonminimal;
  return report;
}

int max_elbow_antidiagonal(const PipeDream& dream, int p, int q) {
  const int n = dream.size();
  if (p < 1 || p > n || q < 1 || q > n)
    throw std::out_of_range("rectangle (" + std::to_string(p) + "," + std::to_string(q) +
                            ") outside 1.." + std::to_string(n));
  // reach[i][j]: longest antidiagonal of elbows in rows <= i, columns in
  // j..q. An antidiagonal whose lowest box is (i, j) continues up-right.
  const int width = q + 2;
  std::vector<int> reach(static_cast<std::size_t>((p + 1) * width), 0);
  const auto at = [&](int i, int j) -> int& {
    return reach[static_cast<std::size_t>(i * width + j)];
  };
  for (int i = 1; i <= p; ++i) {
    for (int j = q; j >= 1; --j) {
      const int ending_here = dream.is_cross(i, j) ? 0 : 1 + at(i - 1, j + 1);
      at(i, j) = std::max({ending_here, at(i - 1, j), at(i, j + 1)});
    }
  }
  return at(p, 1);
}

VerificationReport verify_rank_antidiagonal_law(const LawInputs& in) {
  VerificationReport report(in.w);
  const int n = in.w.size();
  for (const auto& crosses : in.pipe_dreams) {
    const PipeDream dream(n, crosses);
    for (int p = 1; p <= n; ++p) {
      for (int q = 1; q <= n; ++q) {
        if (max_elbow_antidiagonal(dream, p, q) != rank(in.w, p, q)) {
          report.record(std::string(kRankLaw),
                        CheckResult::failed(SetFamily(n, {crosses, BoxSet{GridBox{p, q}}})));
          return report;
        }
      }
    }
  }
  report.record(std::string(kRankLaw), CheckResult::ok());
  return report;
}

VerificationReport verify_double_dual(const LawInputs& in) {
  VerificationReport report(in.w);
  const auto twice = transversal_dual(transversal_dual(in.antidiagonals));
  report.record(std::string(kDoubleDual),
                twice == in.antidiagonals
                    ? CheckResult::ok()
                    : CheckResult::failed(symmetric_difference(twice, in.antidiagonals)));
  return report;
}

VerificationReport verify_theorem(const Permutation& w) { return verify_theorem(LawInputs(w)); }
VerificationReport verify_claim1(const Permutation& w) { return verify_claim1(LawInputs(w)); }
VerificationReport verify_claim2(const Permutation& w) { return verify_claim2(LawInputs(w)); }
VerificationReport verify_rank_antidiagonal_law(const Permutation& w) {
  return verify_rank_antidiagonal_law(LawInputs(w));
}
VerificationReport verify_double_dual(const Permutation& w) {
  return verify_double_dual(LawInputs(w));
}

VerificationReport verify_bruhat_oracle(int n) {
  if (n < 1 || n > kBruhatOracleMaxSize)
    throw std::out_of_range("Bruhat oracle limited to 1 <= n <= " +
                            std::to_string(kBruhatOracleMaxSize));
  const auto perms = all_permutations(n);
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t k = 0; k < perms.size(); ++k)
    index[std::vector<int>(perms[k].images().begin(), perms[k].images().end())] = k;

  // Covers: swap positions i < j with w(i) < w(j) when the length grows by one.
  std::vector<std::vector<std::size_t>> covers(perms.size());
  for (std::size_t k = 0; k < perms.size(); ++k) {
    const int len = length(perms[k]);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        std::vector<int> img(perms[k].images().begin(), perms[k].images().end());
        if (img[static_cast<std::size_t>(i)] > img[static_cast<std::size_t>(j)]) continue;
        std::swap(img[static_cast<std::size_t>(i)], img[static_cast<std::size_t>(j)]);
        if (length(Permutation(img)) == len + 1) covers[k].push_back(index.at(img));
      }
    }
  }

  VerificationReport report(Permutation::identity(n));
  for (std::size_t low = 0; low < perms.size(); ++low) {
    std::vector<bool> above(perms.size(), false);
    std::vector<std::size_t> stack{low};
    above[low] = true;
    while (!stack.empty()) {
      const auto k = stack.back();
      stack.pop_back();
      for (auto up : covers[k]) {
        if (!above[up]) {
          above[up] = true;
          stack.push_back(up);
        }
      }
    }
    for (std::size_t high = 0; high < perms.size(); ++high) {
      if (bruhat_geq(perms[high], perms[low]) != above[high]) {
        report.record(std::string(kBruhatOracle),
                      CheckResult::failed(SetFamily(n, {permutation_matrix(perms[high]),
                                                        permutation_matrix(perms[low])})));
        return report;
      }
    }
  }
  report.record(std::string(kBruhatOracle), CheckResult::ok());
  return report;
}

VerificationReport verify_all(const Permutation& w) {
  const LawInputs in(w);
  VerificationReport report(w);
  report.merge(verify_claim1(in));
  report.merge(verify_claim2(in));
  report.merge(verify_rank_antidiagonal_law(in));
  report.merge(verify_double_dual(in));
  report.merge(verify_theorem(in));
  return report;
}

std::size_t RangeResult::passed() const {
  return static_cast<std::size_t>(std::count_if(
      reports.begin(), reports.end(), [](const VerificationReport& r) { return r.all_pass(); }));
}

RangeResult verify_range(int n, std::chrono::milliseconds budget, int jobs) {
  const auto perms = all_permutations(n);
  const auto deadline = std::chrono::steady_clock::now() + budget;
  std::vector<std::optional<VerificationReport>> slots(perms.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> exhausted{false};

  const auto worker = [&] {
    while (true) {
      if (std::chrono::steady_clock::now() >= deadline) {
        exhausted = true;
        return;
      }
      const std::size_t k = next.fetch_add(1);
      if (k >= perms.size()) return;
      slots[k] = verify_all(perms[k]);
    }
  };

  jobs = std::max(1, jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }

  RangeResult result;
  result.total = perms.size();
  for (auto& slot : slots)
    if (slot) result.reports.push_back(std::move(*slot));
  result.budget_exhausted = exhausted && result.reports.size() < result.total;
  return result;
}

}  // namespace pipedream
