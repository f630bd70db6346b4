#include "mh/generator.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

namespace mh {

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::uniform(std::uint64_t lo, std::uint64_t hi) {
  const std::uint64_t span = hi - lo;
  if (span == std::numeric_limits<std::uint64_t>::max()) return next();
  const std::uint64_t range = span + 1;
  // Largest multiple of `range` that fits; draws at or above it are redrawn.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return lo + x % range;
}

namespace {

// Fisher-Yates driven by SplitMix64.
template <class T>
void shuffle(std::vector<T>& v, SplitMix64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    const std::size_t j = rng.uniform(0, i - 1);
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace

Instance generate(const GenSpec& spec) {
  if (spec.n > 0 && spec.p_max > std::numeric_limits<Time>::max() / 4 / spec.n) {
    throw InvalidInput("p_max * n is too large for exact 64-bit due dates");
  }
  SplitMix64 rng(spec.seed);
  std::vector<Job> jobs(spec.n);
  Time total = 0;
  for (std::size_t i = 0; i < spec.n; ++i) {
    jobs[i].id = static_cast<JobId>(i + 1);
    jobs[i].p = rng.uniform(0, spec.p_max);
    total += jobs[i].p;
  }

  switch (spec.d_mode) {
    case DueDateMode::uniform:
      for (Job& j : jobs) j.d = rng.uniform(0, total);
      break;
    case DueDateMode::loose:
      for (Job& j : jobs) j.d = rng.uniform(total, 2 * total);
      break;
    case DueDateMode::tight: {
      std::vector<std::size_t> slot(spec.n);
      std::iota(slot.begin(), slot.end(), std::size_t{0});
      shuffle(slot, rng);
      Time load = 0;
      for (std::size_t idx : slot) {
        load += jobs[idx].p;
        // load - load/64 + jitter - p_max, clamped at zero
        const Time target = load - load / 64 + rng.uniform(0, 2 * spec.p_max);
        jobs[idx].d = target >= spec.p_max ? target - spec.p_max : 0;
      }
      break;
    }
  }

  if (spec.weighted_opposite) {
    // Walk distinct p from longest to shortest, raising the weight by a
    // random non-negative step each time; equal p share a weight.
    std::map<Time, Weight, std::greater<>> weight_of;
    for (const Job& j : jobs) weight_of.emplace(j.p, 0);
    Weight w = rng.uniform(0, 3);
    for (auto& [p, weight] : weight_of) {
      weight = w;
      w += rng.uniform(0, 5);
    }
    for (Job& j : jobs) j.w = weight_of.at(j.p);
  }

  return Instance(std::move(jobs), spec.weighted_opposite);
}

Instance adversarial_family(std::string_view name, std::size_t n) {
  std::vector<Job> jobs(n);
  for (std::size_t i = 0; i < n; ++i) jobs[i].id = static_cast<JobId>(i + 1);

  if (name == "all_late") {
    for (Job& j : jobs) {
      j.p = 1;
      j.d = 0;
    }
  } else if (name == "none_late") {
    for (Job& j : jobs) {
      j.p = 1;
      j.d = n;
    }
  } else if (name == "all_ties") {
    for (Job& j : jobs) {
      j.p = 2;
      j.d = 5;
    }
  } else if (name == "staircase") {
    Time load = 0;
    for (std::size_t i = 0; i < n; ++i) {
      jobs[i].p = 1 + i % 3;
      load += jobs[i].p;
      jobs[i].d = load;
    }
  } else {
    throw InvalidInput("unknown instance family '" + std::string(name) + "'");
  }
  return Instance(std::move(jobs));
}

std::string_view to_string(DueDateMode mode) {
  switch (mode) {
    case DueDateMode::uniform: return "uniform";
    case DueDateMode::tight: return "tight";
    case DueDateMode::loose: return "loose";
  }
  return "uniform";
}

DueDateMode parse_due_date_mode(std::string_view name) {
  if (name == "uniform") return DueDateMode::uniform;
  if (name == "tight") return DueDateMode::tight;
  if (name == "loose") return DueDateMode::loose;
  throw InvalidInput("unknown due-date mode '" + std::string(name) + "'");
}

}  // namespace mh
