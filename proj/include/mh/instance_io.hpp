#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "mh/core_model.hpp"
#include "mh/moore_hodgson.hpp"

namespace mh {

// Instance files are comma-separated text:
//
//   job,p,d            or    job,p,d,w
//   1,4,6                    1,4,6,7
//   ...                      ...
//
// Blank lines and lines starting with '#' are skipped. Every record has as
// many fields as the header; without a w column every weight is 1.

class ParseError : public InvalidInput {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Throws ParseError for malformed lines and InvalidInput for duplicate ids or
// overflowing totals.
Instance parse_instance(std::string_view text);

// Canonical form: header, records by ascending id, newline-terminated. The w
// column is written iff the instance carries one or any weight differs from 1.
std::string write_instance(const Instance& instance);

// Text table in the layout of the classic worked example: the EDD sequence,
// due dates and processing times, then one completion-time row per trace row
// with '*' for rejected jobs and a trailing rejected-jobs column.
// Throws InvalidInput if the trace does not belong to the instance.
std::string render_trace(const Instance& instance, const Trace& trace);

// One-line JSON object with fields on_time, rejected, completions (id -> C),
// num_late and weighted_late.
std::string solution_to_json(const Solution& solution);
// Inverse of solution_to_json. Throws InvalidInput on malformed input.
Solution solution_from_json(std::string_view text);

// Human-readable summary used by the CLI.
std::string render_solution(const Solution& solution, bool weighted);

}  // namespace mh
