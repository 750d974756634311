#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "pipedream/permutation.hpp"
#include "pipedream/pipe_dream.hpp"
#include "pipedream/set_family.hpp"

namespace pipedream {

struct CheckResult {
  bool pass = true;
  /// Present whenever pass is false.
  std::optional<SetFamily> counterexample;

  static CheckResult ok() { return {}; }
  static CheckResult failed(SetFamily witness) { return {false, std::move(witness)}; }

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct VerificationReport {
  Permutation permutation;
  /// In the order the checks ran.
  std::vector<std::pair<std::string, CheckResult>> checks;
  /// Observations recorded without being asserted.
  std::map<std::string, std::int64_t> stats;

  explicit VerificationReport(Permutation w) : permutation(std::move(w)) {}

  void record(std::string name, CheckResult result);
  /// Appends the checks and stats of `other`.
  void merge(const VerificationReport& other);
  bool all_pass() const;
  const CheckResult* find(std::string_view name) const;
  std::vector<std::string> failed_checks() const;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// {"w": [2,1,4,3], "checks": {name: {"pass": bool, "counterexample": family|null}},
///  "stats": {...}}
nlohmann::json to_json(const VerificationReport& report);
/// Throws FormatError on a malformed document.
VerificationReport report_from_json(const nlohmann::json& j);

/// A_w and RP_w computed once and shared by the individual checks.
struct LawInputs {
  Permutation w;
  SetFamily antidiagonals;
  SetFamily pipe_dreams;

  explicit LawInputs(const Permutation& perm);
};

// Check names as they appear in reports.
inline constexpr std::string_view kClaim1 = "claim1";
inline constexpr std::string_view kClaim2 = "claim2";
inline constexpr std::string_view kRankLaw = "rank_antidiagonal_law";
inline constexpr std::string_view kDoubleDual = "double_dual";
inline constexpr std::string_view kTheorem = "theorem";
inline constexpr std::string_view kTheoremConverse = "theorem_converse";
inline constexpr std::string_view kMinimalTransversals = "minimal_transversals";
inline constexpr std::string_view kBruhatOracle = "bruhat_oracle";

/// dual(A_w) = RP_w and dual(RP_w) = A_w, plus every member of RP_w
/// passing the minimal-transversal witness test against A_w. A failure
/// carries the symmetric difference.
VerificationReport verify_theorem(const Permutation& w);
VerificationReport verify_theorem(const LawInputs& in);

/// Every member of RP_w meets every member of A_w.
VerificationReport verify_claim1(const Permutation& w);
VerificationReport verify_claim1(const LawInputs& in);

/// Every minimal transversal of A_w is a staircase-supported reduced pipe
/// dream whose trace is >= w in Bruhat order.
VerificationReport verify_claim2(const Permutation& w);
VerificationReport verify_claim2(const LawInputs& in);

/// Largest antidiagonal inside [p] x [q] made only of elbow tiles of
/// `dream`. Throws std::out_of_range unless 1 <= p, q <= n.
int max_elbow_antidiagonal(const PipeDream& dream, int p, int q);

/// max_elbow_antidiagonal(D, p, q) = r_pq(w) for every D in RP_w and every
/// (p, q). A failure carries {D, {(p, q)}}.
VerificationReport verify_rank_antidiagonal_law(const Permutation& w);
VerificationReport verify_rank_antidiagonal_law(const LawInputs& in);

/// dual(dual(A_w)) = A_w.
VerificationReport verify_double_dual(const Permutation& w);
VerificationReport verify_double_dual(const LawInputs& in);

inline constexpr int kBruhatOracleMaxSize = 5;

/// Compares bruhat_geq on all ordered pairs of S_n with the
/// reflexive-transitive closure of length-one transposition covers. A
/// failure carries the two permutation matrices as box sets. Throws
/// std::out_of_range for n > kBruhatOracleMaxSize.
VerificationReport verify_bruhat_oracle(int n);

/// Claims first, then the rank law, the double dual and the theorem, so
/// the first failing name points at the earliest broken step.
VerificationReport verify_all(const Permutation& w);

struct RangeResult {
  std::vector<VerificationReport> reports;  // by permutation order
  std::size_t total = 0;                    // n!
  bool budget_exhausted = false;

  std::size_t passed() const;
  bool all_pass() const { return passed() == reports.size(); }
};

/// verify_all over S_n on `jobs` worker threads. Work stops being handed
/// out once `budget` has elapsed; finished reports are kept.
RangeResult verify_range(int n, std::chrono::milliseconds budget, int jobs = 1);

}  // namespace pipedream
