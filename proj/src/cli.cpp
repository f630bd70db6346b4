#include "mh/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mh/exact_oracle.hpp"
#include "mh/instance_io.hpp"
#include "mh/moore_hodgson.hpp"

namespace mh::cli {

namespace {

constexpr std::size_t kBenchMaxJobs = 50'000'000;
// Above this size the repeated-scan solver is too slow to serve as the
// cross-check for bench; the fast result is audited structurally instead.
constexpr std::size_t kNaiveCrossCheckMax = 200'000;

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  buf << in.rdbuf();
  return buf.str();
}

bool check_once(Check check, const Instance& instance, bool weighted, bool& applicable) {
  applicable = true;
  switch (check) {
    case Check::opt:
      if (weighted) {
        return solve_weighted_opposite(instance).first.weighted_late ==
               brute_force(instance, true).min_objective;
      }
      return solve(instance).first.num_late == brute_force(instance, false).min_objective;
    case Check::prop1:
      return check_prop1(instance);
    case Check::lemma1:
      applicable = first_rejection(instance).has_value();
      return !applicable || check_lemma1(instance);
    case Check::induction:
      applicable = first_rejection(instance).has_value();
      return !applicable || check_induction_step(instance);
    case Check::fast_equiv:
      return solve_fast(instance) == solve(instance).first;
  }
  return false;
}

// Audits what the algorithm guarantees independently of how it ran.
bool structurally_valid(const Instance& instance, const Solution& s) {
  if (s.on_time.size() + s.rejected.size() != instance.size()) return false;
  Sequence all = s.on_time;
  all.order.insert(all.order.end(), s.rejected.begin(), s.rejected.end());
  try {
    validate_sequence(instance, all);
  } catch (const InvalidInput&) {
    return false;
  }
  return !first_late_index(instance, s.on_time).has_value() &&
         s.completion_times == completion_times(instance, s.on_time);
}

int cmd_solve(const std::string& file, bool weighted, const std::string& algo, bool trace,
              bool json, std::ostream& out) {
  if (trace && algo == "fast") throw UsageError("--trace needs --algo naive; the fast solver keeps no trace");
  const Instance instance = parse_instance(read_input(file));

  if (weighted && !is_oppositely_ordered(instance)) {
    throw PreconditionViolation(
        "--weighted requires processing times and weights to be oppositely ordered");
  }

  Solution solution;
  Trace iterations;
  if (algo == "fast") {
    solution = solve_fast(instance);
  } else {
    std::tie(solution, iterations) = weighted ? solve_weighted_opposite(instance) : solve(instance);
  }

  if (trace) out << render_trace(instance, iterations);
  if (json) {
    out << solution_to_json(solution) << '\n';
  } else {
    out << render_solution(solution, weighted);
  }
  return kSuccess;
}

int cmd_verify(const VerifyOptions& options, std::ostream& out) {
  if (options.max_n > kDefaultOracleCap) {
    throw UsageError("--max-n " + std::to_string(options.max_n) + " exceeds the oracle cap of " +
                     std::to_string(kDefaultOracleCap));
  }
  return print_report(run_verification(options), out);
}

int cmd_bench(std::size_t n, std::uint64_t seed, const std::string& algo, std::size_t repeat,
              std::ostream& out) {
  if (n > kBenchMaxJobs) {
    throw UsageError("-n " + std::to_string(n) + " exceeds the limit of " +
                     std::to_string(kBenchMaxJobs) + " jobs");
  }
  if (repeat == 0) throw UsageError("--repeat must be at least 1");

  const Instance instance =
      generate({.seed = seed, .n = n, .p_max = 100, .d_mode = DueDateMode::tight});
  auto run_algo = [&](const std::string& which) {
    return which == "fast" ? solve_fast(instance) : solve_untraced(instance);
  };

  const Solution reference = run_algo(algo);
  if (n <= kNaiveCrossCheckMax) {
    const Solution other = run_algo(algo == "fast" ? "naive" : "fast");
    if (!(other == reference)) {
      out << "FAIL naive and fast solvers disagree on this instance\n";
      return kVerificationFailed;
    }
    out << "cross-check: naive and fast agree\n";
  } else {
    if (!structurally_valid(instance, reference)) {
      out << "FAIL solution is not a late-free on-time sequence plus rejections\n";
      return kVerificationFailed;
    }
    out << "cross-check: structural audit only (naive cross-check runs up to n = "
        << kNaiveCrossCheckMax << ")\n";
  }

  std::vector<double> seconds;
  seconds.reserve(repeat);
  for (std::size_t r = 0; r < repeat; ++r) {
    const auto start = std::chrono::steady_clock::now();
    const Solution s = run_algo(algo);
    const auto stop = std::chrono::steady_clock::now();
    if (s.num_late != reference.num_late) {
      out << "FAIL solver is not deterministic\n";
      return kVerificationFailed;
    }
    seconds.push_back(std::chrono::duration<double>(stop - start).count());
  }
  std::sort(seconds.begin(), seconds.end());
  const double min = seconds.front();
  const double median = seconds.size() % 2 == 1
                            ? seconds[seconds.size() / 2]
                            : 0.5 * (seconds[seconds.size() / 2 - 1] + seconds[seconds.size() / 2]);

  out << "algo: " << algo << '\n'
      << "n: " << n << '\n'
      << "seed: " << seed << '\n'
      << "num_late: " << reference.num_late << '\n'
      << std::fixed << std::setprecision(3) << "min: " << min * 1e3 << " ms\n"
      << "median: " << median * 1e3 << " ms\n"
      << std::setprecision(0)
      << "throughput: " << (min > 0 ? static_cast<double>(n) / min : 0.0) << " jobs/s\n";
  return kSuccess;
}

}  // namespace

int print_report(const VerifyReport& report, std::ostream& out) {
  for (const CheckTally& t : report.tallies) {
    out << to_string(t.check) << ": " << t.passed << '/' << report.count << " pass";
    if (t.check == Check::lemma1 || t.check == Check::induction) {
      out << " (" << t.applicable << " with a late EDD job)";
    }
    out << '\n';
  }
  if (report.failed) {
    out << "FAIL " << to_string(report.failing_check) << " on instance #" << report.failing_index
        << ":\n"
        << report.failing_instance;
    return kVerificationFailed;
  }
  return kSuccess;
}

GenSpec verify_instance_spec(const VerifyOptions& options, std::size_t index) {
  SplitMix64 rng(options.seed ^ (0xA24BAED4963EE407ULL * (index + 1)));
  GenSpec spec;
  spec.n = rng.uniform(0, options.max_n);
  spec.seed = rng.next();
  spec.p_max = options.p_max;
  spec.d_mode = index % 2 == 0 ? DueDateMode::uniform : DueDateMode::tight;
  spec.weighted_opposite = options.weighted;
  return spec;
}

VerifyReport run_verification(const VerifyOptions& options) {
  if (options.max_n > kDefaultOracleCap) {
    throw CapExceeded("max_n exceeds the oracle cap of " + std::to_string(kDefaultOracleCap));
  }
  VerifyReport report;
  report.count = options.count;
  for (Check c : options.checks) report.tallies.push_back({c, 0, 0});

  for (std::size_t i = 0; i < options.count; ++i) {
    const Instance instance = generate(verify_instance_spec(options, i));
    for (CheckTally& t : report.tallies) {
      bool applicable = true;
      const bool ok = check_once(t.check, instance, options.weighted, applicable);
      t.applicable += applicable ? 1 : 0;
      if (ok) {
        ++t.passed;
      } else if (!report.failed) {
        report.failed = true;
        report.failing_index = i;
        report.failing_check = t.check;
        report.failing_instance = write_instance(instance);
      }
    }
  }
  return report;
}

std::string to_string(Check check) {
  switch (check) {
    case Check::opt: return "opt";
    case Check::prop1: return "prop1";
    case Check::lemma1: return "lemma1";
    case Check::induction: return "induction";
    case Check::fast_equiv: return "fast-equiv";
  }
  return "?";
}

Check parse_check(const std::string& name) {
  for (Check c : {Check::opt, Check::prop1, Check::lemma1, Check::induction, Check::fast_equiv}) {
    if (to_string(c) == name) return c;
  }
  throw InvalidInput("unknown check '" + name + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimize the number of late jobs on a single machine (Moore-Hodgson)", "mhsched"};
  app.require_subcommand(1);

  std::string file;
  bool weighted = false;
  std::string algo = "naive";
  bool trace = false;
  bool json = false;
  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance file ('-' reads stdin)");
  solve_cmd->add_option("file", file, "Instance file")->required();
  solve_cmd->add_flag("--weighted", weighted, "Minimize the weighted number of late jobs");
  solve_cmd->add_option("--algo", algo, "naive or fast")->check(CLI::IsMember({"naive", "fast"}));
  auto* trace_flag = solve_cmd->add_flag("--trace", trace, "Print the iteration table");
  solve_cmd->add_flag("--json", json, "Print the solution as one JSON object")->excludes(trace_flag);

  VerifyOptions verify;
  std::vector<std::string> checks{"opt"};
  auto* verify_cmd = app.add_subcommand("verify", "Check solver and proof properties on seeded instances");
  verify_cmd->add_option("--seed", verify.seed, "Base seed");
  verify_cmd->add_option("--count", verify.count, "Number of instances");
  verify_cmd->add_option("--max-n", verify.max_n, "Largest instance size");
  verify_cmd->add_flag("--weighted", verify.weighted, "Use oppositely ordered weights");
  verify_cmd->add_option("--checks", checks, "opt,prop1,lemma1,induction,fast-equiv")
      ->delimiter(',')
      ->check(CLI::IsMember({"opt", "prop1", "lemma1", "induction", "fast-equiv"}));

  GenSpec gen;
  std::string d_mode = "uniform";
  std::string family;
  std::string output;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance file");
  auto* gen_seed = gen_cmd->add_option("--seed", gen.seed, "Seed");
  gen_cmd->add_option("-n", gen.n, "Number of jobs")->required();
  auto* gen_pmax = gen_cmd->add_option("--p-max", gen.p_max, "Largest processing time");
  auto* gen_dmode = gen_cmd->add_option("--d-mode", d_mode, "uniform, tight or loose")
                        ->check(CLI::IsMember({"uniform", "tight", "loose"}));
  auto* gen_weighted =
      gen_cmd->add_flag("--weighted-opposite", gen.weighted_opposite, "Add oppositely ordered weights");
  gen_cmd->add_option("--family", family, "all_late, none_late, all_ties or staircase")
      ->check(CLI::IsMember({"all_late", "none_late", "all_ties", "staircase"}))
      ->excludes(gen_seed)
      ->excludes(gen_pmax)
      ->excludes(gen_dmode)
      ->excludes(gen_weighted);
  gen_cmd->add_option("-o", output, "Output file (default stdout)");

  std::size_t bench_n = 100'000;
  std::uint64_t bench_seed = 1;
  std::string bench_algo = "fast";
  std::size_t repeat = 5;
  auto* bench_cmd = app.add_subcommand("bench", "Time a solver on one generated tight instance");
  bench_cmd->add_option("-n", bench_n, "Number of jobs");
  bench_cmd->add_option("--seed", bench_seed, "Seed");
  bench_cmd->add_option("--algo", bench_algo, "naive or fast")->check(CLI::IsMember({"naive", "fast"}));
  bench_cmd->add_option("--repeat", repeat, "Timed runs");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*solve_cmd) return cmd_solve(file, weighted, algo, trace, json, out);
    if (*verify_cmd) {
      verify.checks.clear();
      for (const auto& c : checks) verify.checks.push_back(parse_check(c));
      return cmd_verify(verify, out);
    }
    if (*gen_cmd) {
      gen.d_mode = parse_due_date_mode(d_mode);
      const Instance instance = family.empty() ? generate(gen) : adversarial_family(family, gen.n);
      const std::string text = write_instance(instance);
      if (output.empty()) {
        out << text;
      } else {
        std::ofstream f(output, std::ios::binary);
        if (!f || !(f << text)) throw UsageError("cannot write '" + output + "'");
      }
      return kSuccess;
    }
    if (*bench_cmd) return cmd_bench(bench_n, bench_seed, bench_algo, repeat, out);
  } catch (const PreconditionViolation& e) {
    err << "error: " << e.what() << '\n';
    return kPreconditionFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace mh::cli
