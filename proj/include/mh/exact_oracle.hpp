#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mh/core_model.hpp"

namespace mh {

// Exhaustive ground truth for small instances. Every subset of jobs is tried
// as the on-time set; a subset is feasible iff its own EDD sequence has no
// late job.

inline constexpr std::size_t kDefaultOracleCap = 20;

class CapExceeded : public Error {
 public:
  using Error::Error;
};

struct OracleOptions {
  bool weighted = false;
  bool collect_all_optimal = false;
  std::size_t cap = kDefaultOracleCap;
};

struct OracleResult {
  // Count of late jobs, or their total weight when weighted.
  Weight min_objective = 0;
  // Sorted ids. The first optimal subset in enumeration order.
  std::vector<JobId> witness_on_time;
  // Every optimal on-time set, sorted ids each; only when requested.
  std::optional<std::vector<std::vector<JobId>>> all_optimal_on_time_sets;
};

// Throws InvalidInput on unknown or repeated ids.
bool feasible_on_time(const Instance& instance, std::span<const JobId> subset);

OracleResult brute_force(const Instance& instance, const OracleOptions& options = {});

inline OracleResult brute_force(const Instance& instance, bool weighted) {
  return brute_force(instance, OracleOptions{.weighted = weighted});
}

// Job the first iteration of the algorithm rejects, if the EDD sequence has a
// late job: the longest job up to the first late one, earliest on ties.
std::optional<JobId> first_rejection(const Instance& instance);

// EDD sequence has a late job <=> the optimum is at least one.
bool check_prop1(const Instance& instance, std::size_t cap = kDefaultOracleCap);

// Some optimal on-time set leaves out first_rejection(instance).
// Throws PreconditionViolation when the EDD sequence has no late job.
bool check_lemma1(const Instance& instance, std::size_t cap = kDefaultOracleCap);

// Deleting first_rejection(instance) lowers the optimum by exactly one.
// Throws PreconditionViolation when the EDD sequence has no late job.
bool check_induction_step(const Instance& instance, std::size_t cap = kDefaultOracleCap);

}  // namespace mh
