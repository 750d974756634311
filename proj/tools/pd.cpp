// pd: command-line front end for pipe dreams, antidiagonal families,
// transversal duals, Schubert polynomials and the exhaustive law checks.
//
// Exit status: 0 success, 1 a verification check failed, 2 bad arguments
// or an unparsable permutation, 3 malformed JSON input, 4 verification
// budget exhausted with every finished permutation passing.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "pipedream/antidiagonal.hpp"
#include "pipedream/laws.hpp"
#include "pipedream/permutation.hpp"
#include "pipedream/pipe_dream.hpp"
#include "pipedream/schubert.hpp"
#include "pipedream/set_family.hpp"
#include "pipedream/transversal.hpp"

namespace {

namespace pd = pipedream;

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kBadJson = 3,
  kBudgetExhausted = 4,
};

enum class OutputFormat { text, json, ascii };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

pd::Permutation parse_perm_arg(const std::string& text) {
  try {
    return pd::parse_permutation(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError("invalid permutation '" + text + "': " + e.what());
  }
}

void print_family(const pd::SetFamily& family, OutputFormat format) {
  switch (format) {
    case OutputFormat::text:
      std::cout << pd::to_text(family) << '\n';
      break;
    case OutputFormat::json:
      std::cout << pd::to_json_text(family) << '\n';
      break;
    case OutputFormat::ascii: {
      const int n = family.grid_size();
      for (const auto& member : family)
        if (!pd::PipeDream::fits_staircase(n, member))
          throw UsageError("ascii output needs staircase-supported sets; " +
                           pd::to_string(member) + " is not");
      bool first = true;
      for (const auto& member : family) {
        if (!first) std::cout << '\n';
        first = false;
        std::cout << pd::render_ascii(pd::PipeDream(n, member)) << '\n';
      }
      break;
    }
  }
}

pd::SetFamily read_family_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return pd::family_from_json_text(buffer.str());
}

int run_verify(int n, int budget_seconds, int jobs, OutputFormat format) {
  if (n < 1) throw UsageError("--n must be at least 1");
  if (n > pd::kMaxGridSize) throw UsageError("--n exceeds the supported grid size");
  if (format == OutputFormat::ascii) throw UsageError("ascii output is only for pipe dreams");
  const auto result =
      pd::verify_range(n, std::chrono::seconds(budget_seconds), jobs);

  if (format == OutputFormat::json) {
    auto out = nlohmann::json::array();
    for (const auto& report : result.reports) out.push_back(pd::to_json(report));
    std::cout << out.dump() << '\n';
  } else {
    for (const auto& report : result.reports) {
      std::cout << report.permutation.to_string();
      if (report.all_pass()) {
        std::cout << " pass\n";
      } else {
        std::cout << " FAIL";
        for (const auto& name : report.failed_checks()) std::cout << ' ' << name;
        std::cout << '\n';
      }
    }
    std::cout << result.passed() << '/' << result.reports.size() << " permutations pass\n";
    if (result.budget_exhausted)
      std::cout << "budget exhausted: " << result.reports.size() << " of " << result.total
                << " permutations checked\n";
  }
  if (!result.all_pass()) return kCheckFailed;
  return result.budget_exhausted ? kBudgetExhausted : kOk;
}

int default_jobs() {
  if (const char* env = std::getenv("PD_JOBS")) {
    try {
      return std::max(1, std::stoi(env));
    } catch (const std::exception&) {
      std::cerr << "pd: ignoring non-numeric PD_JOBS='" << env << "'\n";
    }
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reduced pipe dreams, antidiagonals and transversal duality"};
  app.require_subcommand(1);

  const std::map<std::string, OutputFormat> formats{
      {"text", OutputFormat::text}, {"json", OutputFormat::json}, {"ascii", OutputFormat::ascii}};
  OutputFormat format = OutputFormat::text;
  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format: text, json or ascii")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };

  std::string perm_text;
  auto* rp = app.add_subcommand("rp", "List the reduced pipe dreams of a permutation");
  rp->add_option("perm", perm_text, "Permutation, e.g. 2143 or 10,2,3,4,5,6,7,8,9,1")
      ->required();
  add_format(rp);

  auto* ad = app.add_subcommand("ad", "List the minimal antidiagonal family of a permutation");
  ad->add_option("perm", perm_text, "Permutation")->required();
  add_format(ad);

  std::string dual_input;
  auto* dual = app.add_subcommand(
      "dual", "Transversal dual of a JSON set family, or of the antidiagonal family of a permutation");
  dual->add_option("input", dual_input, "JSON file path or permutation")->required();
  add_format(dual);

  auto* schubert = app.add_subcommand("schubert", "Schubert polynomial of a permutation");
  schubert->add_option("perm", perm_text, "Permutation")->required();
  add_format(schubert);

  int verify_n = 0;
  int budget_seconds = 600;
  int jobs = default_jobs();
  auto* verify = app.add_subcommand("verify", "Check the duality laws on every permutation of S_n");
  verify->add_option("--n", verify_n, "Permutation size")->required();
  verify->add_option("--budget", budget_seconds, "Wall-clock budget in seconds")
      ->check(CLI::PositiveNumber);
  verify->add_option("--jobs", jobs, "Worker threads (default: $PD_JOBS or 1)")
      ->check(CLI::PositiveNumber);
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (rp->parsed()) {
      print_family(pd::enumerate_rp(parse_perm_arg(perm_text)), format);
    } else if (ad->parsed()) {
      if (format == OutputFormat::ascii) throw UsageError("ascii output is only for pipe dreams");
      print_family(pd::antidiagonal_family(parse_perm_arg(perm_text)), format);
    } else if (dual->parsed()) {
      const pd::SetFamily family =
          std::filesystem::is_regular_file(dual_input)
              ? read_family_file(dual_input)
              : pd::antidiagonal_family(parse_perm_arg(dual_input));
      print_family(pd::transversal_dual(family), format);
    } else if (schubert->parsed()) {
      const auto poly = pd::schubert_polynomial(parse_perm_arg(perm_text));
      if (format == OutputFormat::ascii) throw UsageError("ascii output is only for pipe dreams");
      if (format == OutputFormat::json)
        std::cout << pd::to_json(poly).dump() << '\n';
      else
        std::cout << pd::to_string(poly) << '\n';
    } else if (verify->parsed()) {
      return run_verify(verify_n, budget_seconds, jobs, format);
    }
  } catch (const UsageError& e) {
    std::cerr << "pd: " << e.what() << '\n';
    return kUsage;
  } catch (const pd::FormatError& e) {
    std::cerr << "pd: malformed JSON: " << e.what() << '\n';
    return kBadJson;
  } catch (const std::exception& e) {
    std::cerr << "pd: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}
