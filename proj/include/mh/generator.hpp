#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "mh/core_model.hpp"

namespace mh {

// SplitMix64 (Steele, Lea and Flood 2014):
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
// Bounded draws use rejection sampling on the top of the 64-bit range, so a
// given seed yields the same instances on every platform and standard library.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  // Uniform in [lo, hi]. Requires lo <= hi.
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);

 private:
  std::uint64_t state_;
};

enum class DueDateMode {
  uniform,  // d uniform in [0, total p]
  // d = L - L/64 + u - p_max (clamped at 0), where L is the load at the job's
  // slot in a random order and u is uniform in [0, 2 p_max]. The L/64 drift
  // keeps a share of jobs late at every scale.
  tight,
  loose,    // d uniform in [total p, 2 * total p]
};

struct GenSpec {
  std::uint64_t seed = 0;
  std::size_t n = 0;
  Time p_max = 10;
  DueDateMode d_mode = DueDateMode::uniform;
  bool weighted_opposite = false;
};

Instance generate(const GenSpec& spec);

// Boundary instances:
//   all_late   p = 1, d = 0; nothing fits.
//   none_late  p = 1, d = n; everything fits in any order.
//   all_ties   p = 2, d = 5; exactly two jobs fit.
//   staircase  p_j = 1 + (j - 1) mod 3, d_j = p_1 + ... + p_j; every EDD
//              completion lands exactly on its due date.
// Throws InvalidInput on an unknown name.
Instance adversarial_family(std::string_view name, std::size_t n);

std::string_view to_string(DueDateMode mode);
// Throws InvalidInput on an unknown name.
DueDateMode parse_due_date_mode(std::string_view name);

}  // namespace mh
