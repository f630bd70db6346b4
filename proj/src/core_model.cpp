#include "mh/core_model.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace mh {

namespace {

bool add_overflows(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b;
}

void require_full_permutation(const Instance& instance, const Sequence& seq) {
  validate_sequence(instance, seq);
  if (seq.size() != instance.size()) {
    throw InvalidInput("sequence covers " + std::to_string(seq.size()) + " of " +
                       std::to_string(instance.size()) + " jobs");
  }
}

template <class OnLate>
void for_each_late(const Instance& instance, const Sequence& seq, OnLate&& on_late) {
  Time load = 0;
  for (JobId id : seq.order) {
    const Job& j = instance.job(id);
    load += j.p;
    if (load > j.d) on_late(j);
  }
}

}  // namespace

Instance::Instance(std::vector<Job> jobs, bool weight_column)
    : jobs_(std::move(jobs)), weight_column_(weight_column) {
  index_.reserve(jobs_.size());
  for (std::size_t i = 0; i < jobs_.size(); ++i) {
    const Job& j = jobs_[i];
    if (j.id == 0) throw InvalidInput("job ids start at 1");
    if (!index_.emplace(j.id, i).second) {
      throw InvalidInput("duplicate job id " + std::to_string(j.id));
    }
    if (add_overflows(total_p_, j.p)) {
      throw InvalidInput("total processing time overflows 64 bits");
    }
    if (add_overflows(total_w_, j.w)) {
      throw InvalidInput("total weight overflows 64 bits");
    }
    total_p_ += j.p;
    total_w_ += j.w;
  }
}

const Job& Instance::job(JobId id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw InvalidInput("unknown job id " + std::to_string(id));
  return jobs_[it->second];
}

Instance Instance::without(JobId id) const {
  job(id);
  std::vector<Job> kept;
  kept.reserve(jobs_.size() - 1);
  std::copy_if(jobs_.begin(), jobs_.end(), std::back_inserter(kept),
               [id](const Job& j) { return j.id != id; });
  return Instance(std::move(kept), weight_column_);
}

Instance Instance::restricted_to(std::span<const JobId> ids) const {
  std::unordered_map<JobId, bool> keep;
  for (JobId id : ids) {
    job(id);
    keep[id] = true;
  }
  std::vector<Job> kept;
  kept.reserve(keep.size());
  for (const Job& j : jobs_) {
    if (keep.contains(j.id)) kept.push_back(j);
  }
  return Instance(std::move(kept), weight_column_);
}

void validate_sequence(const Instance& instance, const Sequence& seq) {
  std::unordered_map<JobId, bool> seen;
  seen.reserve(seq.size());
  for (JobId id : seq.order) {
    if (!instance.contains(id)) {
      throw InvalidInput("sequence names unknown job " + std::to_string(id));
    }
    if (!seen.emplace(id, true).second) {
      throw InvalidInput("sequence repeats job " + std::to_string(id));
    }
  }
}

Sequence edd_order(const Instance& instance) {
  std::vector<const Job*> jobs;
  jobs.reserve(instance.size());
  for (const Job& j : instance.jobs()) jobs.push_back(&j);
  std::sort(jobs.begin(), jobs.end(), [](const Job* a, const Job* b) {
    return a->d != b->d ? a->d < b->d : a->id < b->id;
  });
  Sequence seq;
  seq.order.reserve(jobs.size());
  for (const Job* j : jobs) seq.order.push_back(j->id);
  return seq;
}

std::vector<Completion> completion_times(const Instance& instance, const Sequence& seq) {
  validate_sequence(instance, seq);
  std::vector<Completion> out;
  out.reserve(seq.size());
  Time load = 0;
  for (JobId id : seq.order) {
    load += instance.job(id).p;
    out.push_back({id, load});
  }
  return out;
}

std::optional<std::size_t> first_late_index(const Instance& instance, const Sequence& seq) {
  validate_sequence(instance, seq);
  Time load = 0;
  for (std::size_t k = 0; k < seq.size(); ++k) {
    const Job& j = instance.job(seq.order[k]);
    load += j.p;
    if (load > j.d) return k + 1;
  }
  return std::nullopt;
}

std::size_t count_late(const Instance& instance, const Sequence& seq) {
  require_full_permutation(instance, seq);
  std::size_t late = 0;
  for_each_late(instance, seq, [&](const Job&) { ++late; });
  return late;
}

Weight weighted_late_sum(const Instance& instance, const Sequence& seq) {
  require_full_permutation(instance, seq);
  Weight late = 0;
  for_each_late(instance, seq, [&](const Job& j) { late += j.w; });
  return late;
}

}  // namespace mh
