#pragma once

#include <utility>
#include <vector>

#include "mh/core_model.hpp"

namespace mh {

// One row of the iteration table.
//
// A scan row shows the current sequence up to and including its first late
// job. A reject row shows the same columns after the longest job of that
// prefix has been removed. The final row shows the whole late-free sequence.
struct TraceRow {
  enum class Kind { scan, reject, final };

  Kind kind = Kind::scan;
  // Number of leading columns of the instance's EDD order that carry a value.
  std::size_t scanned_positions = 0;
  // Completion times of the scheduled jobs among those columns, in EDD order.
  std::vector<Completion> completions;
  std::vector<JobId> rejected_so_far;

  friend bool operator==(const TraceRow&, const TraceRow&) = default;
};

struct Trace {
  std::vector<TraceRow> rows;

  friend bool operator==(const Trace&, const Trace&) = default;
};

// Moore-Hodgson by repeated scanning: start from the EDD sequence, find the
// first late job, reject the longest job up to it (earliest on ties), and
// repeat until nothing is late. Records every iteration.
std::pair<Solution, Trace> solve(const Instance& instance);

// Same iterations as solve() without the trace. O(n * rejections).
Solution solve_untraced(const Instance& instance);

// Single EDD pass with a max-heap over the kept prefix. O(n log n) and
// produces exactly the Solution of solve().
Solution solve_fast(const Instance& instance);

// True iff p_i <= p_j implies w_i >= w_j for every ordered pair of jobs.
// Equal processing times therefore need equal weights.
bool is_oppositely_ordered(const Instance& instance);

// Minimizes the weighted number of late jobs when weights are oppositely
// ordered to processing times. Throws PreconditionViolation otherwise.
std::pair<Solution, Trace> solve_weighted_opposite(const Instance& instance);

}  // namespace mh
