#include "mh/moore_hodgson.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <unordered_map>

namespace mh {

namespace {

// `on_time` and `rejected` point into the instance.
Solution finish(const std::vector<const Job*>& on_time, const std::vector<const Job*>& rejected) {
  Solution s;
  s.on_time.order.reserve(on_time.size());
  s.completion_times.reserve(on_time.size());
  Time load = 0;
  for (const Job* j : on_time) {
    load += j->p;
    s.on_time.order.push_back(j->id);
    s.completion_times.push_back({j->id, load});
  }
  s.rejected.reserve(rejected.size());
  for (const Job* j : rejected) {
    s.rejected.push_back(j->id);
    s.weighted_late += j->w;
  }
  s.num_late = s.rejected.size();
  return s;
}

std::vector<const Job*> edd_jobs(const Instance& instance) {
  std::vector<const Job*> jobs;
  jobs.reserve(instance.size());
  for (const Job& j : instance.jobs()) jobs.push_back(&j);
  std::sort(jobs.begin(), jobs.end(), [](const Job* a, const Job* b) {
    return a->d != b->d ? a->d < b->d : a->id < b->id;
  });
  return jobs;
}

// Each iteration rescans sigma from its start. When `trace` is null nothing
// is recorded.
Solution run_iterations(const Instance& instance, Trace* trace) {
  std::vector<const Job*> sigma = edd_jobs(instance);
  std::unordered_map<JobId, std::size_t> column;
  if (trace != nullptr) {
    column.reserve(sigma.size());
    for (std::size_t c = 0; c < sigma.size(); ++c) column.emplace(sigma[c]->id, c);
  }
  const std::size_t columns = sigma.size();

  std::vector<const Job*> rejected;
  auto rejected_ids = [&] {
    std::vector<JobId> ids;
    ids.reserve(rejected.size());
    for (const Job* j : rejected) ids.push_back(j->id);
    return ids;
  };
  auto prefix_completions = [&](std::size_t count) {
    std::vector<Completion> out;
    out.reserve(count);
    Time load = 0;
    for (std::size_t i = 0; i < count; ++i) {
      load += sigma[i]->p;
      out.push_back({sigma[i]->id, load});
    }
    return out;
  };

  for (;;) {
    std::size_t k = sigma.size();
    Time load = 0;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
      load += sigma[i]->p;
      if (load > sigma[i]->d) {
        k = i;
        break;
      }
    }

    if (k == sigma.size()) {
      if (trace != nullptr) {
        trace->rows.push_back(
            {TraceRow::Kind::final, columns, prefix_completions(sigma.size()), rejected_ids()});
      }
      break;
    }

    const std::size_t scanned = trace != nullptr ? column.at(sigma[k]->id) + 1 : 0;
    if (trace != nullptr) {
      trace->rows.push_back({TraceRow::Kind::scan, scanned, prefix_completions(k + 1), rejected_ids()});
    }

    std::size_t m = 0;
    for (std::size_t i = 1; i <= k; ++i) {
      if (sigma[i]->p > sigma[m]->p) m = i;
    }
    rejected.push_back(sigma[m]);
    sigma.erase(sigma.begin() + static_cast<std::ptrdiff_t>(m));

    if (trace != nullptr) {
      trace->rows.push_back({TraceRow::Kind::reject, scanned, prefix_completions(k), rejected_ids()});
    }
  }

  return finish(sigma, rejected);
}

// Sorts by `less`, which must order primarily by key_of(). Elements are first
// spread over about n / 512 buckets of equal key range, then each bucket is
// sorted on its own, so the comparison sort works on cache-sized runs when
// keys are spread out. Degenerates to one std::sort when they are not.
template <class T, class KeyOf, class Less>
void bucketed_sort(std::vector<T>& v, KeyOf key_of, Less less) {
  constexpr std::size_t kBucketSize = 512;
  const std::size_t buckets = v.size() / kBucketSize;
  if (buckets < 2) {
    std::sort(v.begin(), v.end(), less);
    return;
  }
  const auto [lo_it, hi_it] = std::minmax_element(
      v.begin(), v.end(), [&](const T& a, const T& b) { return key_of(a) < key_of(b); });
  const std::uint64_t lo = key_of(*lo_it);
  const std::uint64_t width = (key_of(*hi_it) - lo) / buckets + 1;
  auto bucket_of = [&](const T& x) { return static_cast<std::size_t>((key_of(x) - lo) / width); };

  std::vector<std::size_t> start(buckets + 1, 0);
  for (const T& x : v) ++start[bucket_of(x) + 1];
  for (std::size_t b = 0; b < buckets; ++b) start[b + 1] += start[b];
  std::vector<T> out(v.size());
  std::vector<std::size_t> fill(start.begin(), start.end() - 1);
  for (const T& x : v) out[fill[bucket_of(x)]++] = x;
  for (std::size_t b = 0; b < buckets; ++b) {
    std::sort(out.begin() + static_cast<std::ptrdiff_t>(start[b]),
              out.begin() + static_cast<std::ptrdiff_t>(start[b + 1]), less);
  }
  v.swap(out);
}

}  // namespace

std::pair<Solution, Trace> solve(const Instance& instance) {
  Trace trace;
  Solution s = run_iterations(instance, &trace);
  return {std::move(s), std::move(trace)};
}

Solution solve_untraced(const Instance& instance) { return run_iterations(instance, nullptr); }

Solution solve_fast(const Instance& instance) {
  // Sorted by value so the EDD sort and the pass never chase pointers.
  struct Key {
    Time d;
    Time p;
    JobId id;
    std::uint32_t index;  // into instance.jobs()
  };
  struct Entry {
    Time p;
    std::size_t position;
  };
  // Top of the heap: largest p, then smallest EDD position.
  auto lower = [](const Entry& a, const Entry& b) {
    return a.p != b.p ? a.p < b.p : a.position > b.position;
  };

  const auto jobs = instance.jobs();
  std::vector<Key> edd;
  edd.reserve(jobs.size());
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    edd.push_back({jobs[i].d, jobs[i].p, jobs[i].id, static_cast<std::uint32_t>(i)});
  }
  bucketed_sort(
      edd, [](const Key& k) { return k.d; },
      [](const Key& a, const Key& b) { return a.d != b.d ? a.d < b.d : a.id < b.id; });

  std::vector<Entry> storage;
  storage.reserve(edd.size());
  std::priority_queue<Entry, std::vector<Entry>, decltype(lower)> kept(lower, std::move(storage));
  std::vector<char> is_rejected(edd.size(), 0);
  Solution s;
  Time load = 0;

  for (std::size_t pos = 0; pos < edd.size(); ++pos) {
    kept.push({edd[pos].p, pos});
    load += edd[pos].p;
    // Removing the longest kept job always restores feasibility at `pos`.
    if (load > edd[pos].d) {
      const Entry top = kept.top();
      kept.pop();
      load -= top.p;
      is_rejected[top.position] = 1;
      const Key& victim = edd[top.position];
      s.rejected.push_back(victim.id);
      s.weighted_late += jobs[victim.index].w;
    }
  }

  s.num_late = s.rejected.size();
  s.on_time.order.reserve(edd.size() - s.num_late);
  s.completion_times.reserve(edd.size() - s.num_late);
  load = 0;
  for (std::size_t pos = 0; pos < edd.size(); ++pos) {
    if (is_rejected[pos]) continue;
    load += edd[pos].p;
    s.on_time.order.push_back(edd[pos].id);
    s.completion_times.push_back({edd[pos].id, load});
  }
  return s;
}

bool is_oppositely_ordered(const Instance& instance) {
  std::vector<const Job*> jobs;
  jobs.reserve(instance.size());
  for (const Job& j : instance.jobs()) jobs.push_back(&j);
  std::sort(jobs.begin(), jobs.end(), [](const Job* a, const Job* b) { return a->p < b->p; });
  for (std::size_t i = 1; i < jobs.size(); ++i) {
    const Job& prev = *jobs[i - 1];
    const Job& cur = *jobs[i];
    if (prev.p == cur.p ? prev.w != cur.w : prev.w < cur.w) return false;
  }
  return true;
}

std::pair<Solution, Trace> solve_weighted_opposite(const Instance& instance) {
  if (!is_oppositely_ordered(instance)) {
    throw PreconditionViolation(
        "processing times and weights are not oppositely ordered; the weighted "
        "objective is not guaranteed optimal for this instance");
  }
  return solve(instance);
}

}  // namespace mh
