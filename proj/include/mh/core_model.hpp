#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace mh {

using JobId = std::uint32_t;
using Time = std::uint64_t;
using Weight = std::uint64_t;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed instances, sequences, traces and files.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// The input is well formed but outside the domain an operation is defined on.
class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

struct Job {
  JobId id = 1;
  Time p = 0;
  Time d = 0;
  Weight w = 1;

  friend bool operator==(const Job&, const Job&) = default;
};

// Immutable set of jobs with distinct ids. Total processing time and total
// weight are guaranteed to fit in 64 bits, so every completion time and
// objective value computed from an instance is exact.
class Instance {
 public:
  Instance() = default;
  // Throws InvalidInput on id 0, duplicate ids, or overflowing totals.
  // `weight_column` records that the instance was authored with weights and
  // is kept through serialization.
  explicit Instance(std::vector<Job> jobs, bool weight_column = false);

  std::span<const Job> jobs() const { return jobs_; }
  std::size_t size() const { return jobs_.size(); }
  bool empty() const { return jobs_.empty(); }
  bool weight_column() const { return weight_column_; }

  bool contains(JobId id) const { return index_.contains(id); }
  // Throws InvalidInput for unknown ids.
  const Job& job(JobId id) const;

  Time total_processing() const { return total_p_; }
  Weight total_weight() const { return total_w_; }

  // Copy with one job removed. Throws InvalidInput for unknown ids.
  Instance without(JobId id) const;
  // Copy restricted to the given ids, in instance order.
  Instance restricted_to(std::span<const JobId> ids) const;

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.jobs_ == b.jobs_ && a.weight_column_ == b.weight_column_;
  }

 private:
  std::vector<Job> jobs_;
  std::unordered_map<JobId, std::size_t> index_;
  Time total_p_ = 0;
  Weight total_w_ = 0;
  bool weight_column_ = false;
};

// Ordered list of job ids; a schedule when it covers the whole instance.
struct Sequence {
  std::vector<JobId> order;

  std::size_t size() const { return order.size(); }
  bool empty() const { return order.empty(); }
  friend bool operator==(const Sequence&, const Sequence&) = default;
};

struct Completion {
  JobId id = 0;
  Time time = 0;

  friend bool operator==(const Completion&, const Completion&) = default;
};

struct Solution {
  Sequence on_time;               // EDD order, no late job
  std::vector<JobId> rejected;    // rejection order
  std::vector<Completion> completion_times;  // aligned with on_time
  std::size_t num_late = 0;
  Weight weighted_late = 0;

  friend bool operator==(const Solution&, const Solution&) = default;
};

// Throws InvalidInput if `seq` names an unknown job or repeats one.
void validate_sequence(const Instance& instance, const Sequence& seq);

// All ids by (d, id) ascending.
Sequence edd_order(const Instance& instance);

// Prefix sums of processing times along `seq`.
std::vector<Completion> completion_times(const Instance& instance, const Sequence& seq);

// 1-based position of the first job with C > d, if any.
std::optional<std::size_t> first_late_index(const Instance& instance, const Sequence& seq);

// Both require `seq` to be a full permutation of the instance.
std::size_t count_late(const Instance& instance, const Sequence& seq);
Weight weighted_late_sum(const Instance& instance, const Sequence& seq);

}  // namespace mh
