#include "mh/exact_oracle.hpp"

#include <algorithm>
#include <cstdint>

namespace mh {

namespace {

// Jobs in EDD order, so that feasibility of a subset is one masked pass.
std::vector<Job> edd_jobs(const Instance& instance) {
  std::vector<Job> jobs;
  jobs.reserve(instance.size());
  for (JobId id : edd_order(instance).order) jobs.push_back(instance.job(id));
  return jobs;
}

bool mask_feasible(std::span<const Job> edd, std::uint64_t mask) {
  Time load = 0;
  for (std::size_t i = 0; i < edd.size(); ++i) {
    if (!(mask >> i & 1U)) continue;
    load += edd[i].p;
    if (load > edd[i].d) return false;
  }
  return true;
}

std::vector<JobId> mask_ids(std::span<const Job> edd, std::uint64_t mask) {
  std::vector<JobId> ids;
  for (std::size_t i = 0; i < edd.size(); ++i) {
    if (mask >> i & 1U) ids.push_back(edd[i].id);
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

JobId require_first_rejection(const Instance& instance) {
  auto m = first_rejection(instance);
  if (!m) throw PreconditionViolation("EDD sequence has no late job");
  return *m;
}

}  // namespace

bool feasible_on_time(const Instance& instance, std::span<const JobId> subset) {
  Sequence seq{{subset.begin(), subset.end()}};
  validate_sequence(instance, seq);
  std::sort(seq.order.begin(), seq.order.end(), [&](JobId a, JobId b) {
    const Time da = instance.job(a).d;
    const Time db = instance.job(b).d;
    return da != db ? da < db : a < b;
  });
  return !first_late_index(instance, seq).has_value();
}

OracleResult brute_force(const Instance& instance, const OracleOptions& options) {
  if (instance.size() > options.cap) {
    throw CapExceeded("brute force limited to " + std::to_string(options.cap) + " jobs, got " +
                      std::to_string(instance.size()));
  }
  if (instance.size() >= 64) throw CapExceeded("brute force cannot enumerate 2^64 subsets");

  const std::vector<Job> edd = edd_jobs(instance);
  const std::uint64_t subsets = std::uint64_t{1} << edd.size();
  const Weight total = options.weighted ? instance.total_weight() : instance.size();

  Weight best = total;
  std::uint64_t best_mask = 0;
  std::vector<std::uint64_t> optimal;

  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    if (!mask_feasible(edd, mask)) continue;
    Weight kept = 0;
    for (std::size_t i = 0; i < edd.size(); ++i) {
      if (mask >> i & 1U) kept += options.weighted ? edd[i].w : 1;
    }
    const Weight objective = total - kept;
    if (objective < best) {
      best = objective;
      best_mask = mask;
      optimal.clear();
    }
    if (objective == best && options.collect_all_optimal) optimal.push_back(mask);
  }

  OracleResult result;
  result.min_objective = best;
  result.witness_on_time = mask_ids(edd, best_mask);
  if (options.collect_all_optimal) {
    std::vector<std::vector<JobId>> sets;
    sets.reserve(optimal.size());
    for (std::uint64_t mask : optimal) sets.push_back(mask_ids(edd, mask));
    result.all_optimal_on_time_sets = std::move(sets);
  }
  return result;
}

std::optional<JobId> first_rejection(const Instance& instance) {
  const Sequence edd = edd_order(instance);
  const auto k = first_late_index(instance, edd);
  if (!k) return std::nullopt;
  JobId m = edd.order[0];
  for (std::size_t i = 1; i < *k; ++i) {
    if (instance.job(edd.order[i]).p > instance.job(m).p) m = edd.order[i];
  }
  return m;
}

bool check_prop1(const Instance& instance, std::size_t cap) {
  const bool edd_late = first_late_index(instance, edd_order(instance)).has_value();
  const bool opt_positive = brute_force(instance, {.cap = cap}).min_objective >= 1;
  return edd_late == opt_positive;
}

bool check_lemma1(const Instance& instance, std::size_t cap) {
  const JobId m = require_first_rejection(instance);
  const OracleResult r = brute_force(instance, {.collect_all_optimal = true, .cap = cap});
  return std::any_of(r.all_optimal_on_time_sets->begin(), r.all_optimal_on_time_sets->end(),
                     [m](const std::vector<JobId>& set) {
                       return !std::binary_search(set.begin(), set.end(), m);
                     });
}

bool check_induction_step(const Instance& instance, std::size_t cap) {
  const JobId m = require_first_rejection(instance);
  const Weight opt = brute_force(instance, {.cap = cap}).min_objective;
  const Weight opt_reduced = brute_force(instance.without(m), {.cap = cap}).min_objective;
  return opt >= 1 && opt_reduced == opt - 1;
}

}  // namespace mh
