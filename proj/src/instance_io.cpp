#include "mh/instance_io.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>
#include <unordered_set>

#include <nlohmann/json.hpp>

namespace mh {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    fields.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

std::uint64_t parse_field(std::string_view field, std::string_view name, std::size_t line) {
  std::uint64_t value = 0;
  const char* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (field.empty() || ec == std::errc::invalid_argument || ptr != end) {
    throw ParseError(line, "field '" + std::string(name) + "' is not a non-negative integer: '" +
                               std::string(field) + "'");
  }
  if (ec == std::errc::result_out_of_range) {
    throw ParseError(line, "field '" + std::string(name) + "' is out of range");
  }
  return value;
}

std::string join(const std::vector<JobId>& ids, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(ids[i]);
  }
  return out;
}

std::string rstrip(std::string s) {
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& what)
    : InvalidInput("line " + std::to_string(line) + ": " + what), line_(line) {}

Instance parse_instance(std::string_view text) {
  std::vector<Job> jobs;
  std::unordered_set<JobId> seen;
  std::size_t columns = 0;
  std::size_t line_no = 0;

  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    const std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    if (columns == 0) {
      if (line == "job,p,d") {
        columns = 3;
      } else if (line == "job,p,d,w") {
        columns = 4;
      } else {
        throw ParseError(line_no, "expected header 'job,p,d' or 'job,p,d,w'");
      }
      continue;
    }

    const auto fields = split_fields(line);
    if (fields.size() != columns) {
      throw ParseError(line_no, "expected " + std::to_string(columns) + " fields, got " +
                                    std::to_string(fields.size()));
    }
    const std::uint64_t id = parse_field(fields[0], "job", line_no);
    if (id == 0 || id > std::numeric_limits<JobId>::max()) {
      throw ParseError(line_no, "job id must be between 1 and " +
                                    std::to_string(std::numeric_limits<JobId>::max()));
    }
    Job j;
    j.id = static_cast<JobId>(id);
    j.p = parse_field(fields[1], "p", line_no);
    j.d = parse_field(fields[2], "d", line_no);
    if (columns == 4) j.w = parse_field(fields[3], "w", line_no);
    if (!seen.insert(j.id).second) {
      throw ParseError(line_no, "duplicate job id " + std::to_string(j.id));
    }
    jobs.push_back(j);
  }

  if (columns == 0) throw ParseError(line_no, "missing header 'job,p,d'");
  try {
    return Instance(std::move(jobs), columns == 4);
  } catch (const ParseError&) {
    throw;
  } catch (const InvalidInput& e) {
    throw ParseError(line_no, e.what());
  }
}

std::string write_instance(const Instance& instance) {
  const bool weights = instance.weight_column() ||
                       std::any_of(instance.jobs().begin(), instance.jobs().end(),
                                   [](const Job& j) { return j.w != 1; });
  std::vector<const Job*> jobs;
  jobs.reserve(instance.size());
  for (const Job& j : instance.jobs()) jobs.push_back(&j);
  std::sort(jobs.begin(), jobs.end(), [](const Job* a, const Job* b) { return a->id < b->id; });

  std::string out = weights ? "job,p,d,w\n" : "job,p,d\n";
  for (const Job* j : jobs) {
    out += std::to_string(j->id) + ',' + std::to_string(j->p) + ',' + std::to_string(j->d);
    if (weights) out += ',' + std::to_string(j->w);
    out += '\n';
  }
  return out;
}

std::string render_trace(const Instance& instance, const Trace& trace) {
  const Sequence edd = edd_order(instance);
  const std::size_t n = edd.size();

  std::vector<std::string> labels;
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> rejected_column;

  auto add_header = [&](std::string label, auto value_of, std::string right) {
    std::vector<std::string> row;
    row.reserve(n);
    for (JobId id : edd.order) row.push_back(std::to_string(value_of(instance.job(id))));
    labels.push_back(std::move(label));
    cells.push_back(std::move(row));
    rejected_column.push_back(std::move(right));
  };
  add_header("EDD sequence:", [](const Job& j) { return j.id; }, "Rejected Jobs");
  add_header("Due date d_j:", [](const Job& j) { return j.d; }, "");
  add_header("Processing time p_j:", [](const Job& j) { return j.p; }, "");
  const std::size_t header_rows = labels.size();

  for (const TraceRow& row : trace.rows) {
    if (row.scanned_positions > n) {
      throw InvalidInput("trace row covers " + std::to_string(row.scanned_positions) +
                         " columns but the instance has " + std::to_string(n) + " jobs");
    }
    std::unordered_set<JobId> rejected;
    for (JobId id : row.rejected_so_far) {
      if (!instance.contains(id)) throw InvalidInput("trace rejects unknown job " + std::to_string(id));
      rejected.insert(id);
    }
    std::unordered_map<JobId, Time> completion;
    for (const Completion& c : row.completions) {
      if (!instance.contains(c.id) || rejected.contains(c.id)) {
        throw InvalidInput("trace has a completion time for job " + std::to_string(c.id) +
                           " that is not scheduled");
      }
      completion.emplace(c.id, c.time);
    }

    std::vector<std::string> out(n);
    for (std::size_t c = 0; c < row.scanned_positions; ++c) {
      const JobId id = edd.order[c];
      if (rejected.contains(id)) {
        out[c] = "*";
      } else if (auto it = completion.find(id); it != completion.end()) {
        out[c] = std::to_string(it->second);
      } else {
        throw InvalidInput("trace row lacks a completion time for job " + std::to_string(id));
      }
    }
    labels.emplace_back("Completion time C_j:");
    cells.push_back(std::move(out));
    rejected_column.push_back(join(row.rejected_so_far, ", "));
  }

  std::size_t label_width = 0;
  for (const auto& l : labels) label_width = std::max(label_width, l.size());
  std::vector<std::size_t> width(n, 0);
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < n; ++c) width[c] = std::max(width[c], row[c].size());
  }

  std::ostringstream os;
  auto rule = [&] {
    std::size_t len = label_width;
    for (std::size_t w : width) len += w + 1;
    os << std::string(len + 2 + std::string_view("Rejected Jobs").size(), '-') << '\n';
  };
  rule();
  for (std::size_t r = 0; r < labels.size(); ++r) {
    if (r == header_rows) rule();
    std::string line = labels[r];
    line.resize(label_width, ' ');
    for (std::size_t c = 0; c < n; ++c) {
      line += ' ';
      line += std::string(width[c] - cells[r][c].size(), ' ');
      line += cells[r][c];
    }
    line += " | " + rejected_column[r];
    os << rstrip(std::move(line)) << '\n';
  }
  rule();
  return os.str();
}

std::string solution_to_json(const Solution& s) {
  nlohmann::ordered_json j;
  j["on_time"] = s.on_time.order;
  j["rejected"] = s.rejected;
  nlohmann::ordered_json completions = nlohmann::ordered_json::object();
  for (const Completion& c : s.completion_times) completions[std::to_string(c.id)] = c.time;
  j["completions"] = std::move(completions);
  j["num_late"] = s.num_late;
  j["weighted_late"] = s.weighted_late;
  return j.dump();
}

Solution solution_from_json(std::string_view text) {
  try {
    const auto j = nlohmann::ordered_json::parse(text);
    Solution s;
    s.on_time.order = j.at("on_time").get<std::vector<JobId>>();
    s.rejected = j.at("rejected").get<std::vector<JobId>>();
    const auto& completions = j.at("completions");
    if (!completions.is_object()) throw InvalidInput("completions must be an object");
    for (auto it = completions.begin(); it != completions.end(); ++it) {
      std::uint64_t id = 0;
      const std::string& key = it.key();
      auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), id);
      if (ec != std::errc{} || ptr != key.data() + key.size() || id == 0 ||
          id > std::numeric_limits<JobId>::max()) {
        throw InvalidInput("bad job id key '" + key + "' in completions");
      }
      s.completion_times.push_back({static_cast<JobId>(id), it.value().get<Time>()});
    }
    s.num_late = j.at("num_late").get<std::size_t>();
    s.weighted_late = j.at("weighted_late").get<Weight>();
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed solution record: ") + e.what());
  }
}

std::string render_solution(const Solution& s, bool weighted) {
  std::ostringstream os;
  os << "On-time sequence: " << (s.on_time.empty() ? "(none)" : join(s.on_time.order, " ")) << '\n';
  os << "Rejected Jobs: " << (s.rejected.empty() ? "(none)" : join(s.rejected, ", ")) << '\n';
  os << "Completion times:";
  if (s.completion_times.empty()) os << " (none)";
  for (const Completion& c : s.completion_times) os << ' ' << c.id << ':' << c.time;
  os << '\n';
  os << s.num_late << " late\n";
  if (weighted) os << "Weighted late: " << s.weighted_late << '\n';
  return os.str();
}

}  // namespace mh
