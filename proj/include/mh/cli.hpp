#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mh/generator.hpp"

namespace mh::cli {

// Process exit codes.
enum ExitStatus : int {
  kSuccess = 0,
  kUsageError = 1,          // bad flags, unreadable or malformed input
  kPreconditionFailed = 2,  // e.g. weighted solve on weights that are not oppositely ordered
  kVerificationFailed = 3,  // a property check returned false
};

enum class Check { opt, prop1, lemma1, induction, fast_equiv };

struct VerifyOptions {
  std::uint64_t seed = 1;
  std::size_t count = 1000;
  std::size_t max_n = 10;
  Time p_max = 30;
  bool weighted = false;
  std::vector<Check> checks{Check::opt};
};

struct CheckTally {
  Check check = Check::opt;
  std::size_t passed = 0;
  std::size_t applicable = 0;
};

struct VerifyReport {
  std::vector<CheckTally> tallies;
  std::size_t count = 0;
  // First failure in instance order, if any.
  bool failed = false;
  std::size_t failing_index = 0;
  Check failing_check = Check::opt;
  std::string failing_instance;

  bool all_passed() const { return !failed; }
};

// Generator settings for the index-th instance of a verification run: n uniform in
// [0, max_n], due dates alternating between uniform and tight.
GenSpec verify_instance_spec(const VerifyOptions& options, std::size_t index);

// Runs every selected check on `count` generated instances. Lemma and
// induction checks are vacuous on instances whose EDD sequence has no late
// job. Throws CapExceeded when max_n exceeds the oracle cap.
VerifyReport run_verification(const VerifyOptions& options);

// Prints one tally line per check and, on failure, the first failing instance
// as an instance file. Returns kSuccess or kVerificationFailed.
int print_report(const VerifyReport& report, std::ostream& out);

std::string to_string(Check check);
Check parse_check(const std::string& name);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mh::cli
