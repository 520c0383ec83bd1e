#pragma once

#include "../core.hpp"
#include "../problems.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

namespace e3a::harness {

/// One finished (problem, algorithm, run) cell.
struct RunRecord {
  std::string problem;
  std::size_t m = 0;
  std::string algorithm;
  std::size_t run = 0;
  std::uint64_t seed = 0;
  double igd = 0.0;
  double hv = 0.0;
  double seconds = 0.0;
  std::size_t generations = 0;

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

inline constexpr std::string_view csv_header = "problem,m,algorithm,run,seed,igd,hv,seconds,generations";

/// Reals are written in scientific notation with 17 significant digits so
/// that parse_csv_row(to_csv_row(r)) == r.
inline std::string to_csv_row(const RunRecord& r) {
  std::string out;
  out += r.problem;
  out += ',' + std::to_string(r.m);
  out += ',' + r.algorithm;
  out += ',' + std::to_string(r.run);
  out += ',' + std::to_string(r.seed);
  out += ',' + format_double(r.igd);
  out += ',' + format_double(r.hv);
  out += ',' + format_double(r.seconds);
  out += ',' + std::to_string(r.generations);
  return out;
}

namespace detail {

template<typename T>
T parse_field(std::string_view field, std::string_view name) {
  T value{};
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw Error(Errc::IoError, "results csv: bad " + std::string(name) + " '" + std::string(field) + "'");
  }
  return value;
}

} // namespace detail

inline RunRecord parse_csv_row(std::string_view line) {
  if (!line.empty() && line.back() == '\r') {
    line.remove_suffix(1);
  }
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) {
      break;
    }
    start = comma + 1;
  }
  if (fields.size() != 9) {
    throw Error(Errc::IoError, "results csv: expected 9 fields, got " + std::to_string(fields.size()));
  }
  RunRecord r;
  r.problem = std::string(fields[0]);
  r.m = detail::parse_field<std::size_t>(fields[1], "m");
  r.algorithm = std::string(fields[2]);
  r.run = detail::parse_field<std::size_t>(fields[3], "run");
  r.seed = detail::parse_field<std::uint64_t>(fields[4], "seed");
  r.igd = detail::parse_field<double>(fields[5], "igd");
  r.hv = detail::parse_field<double>(fields[6], "hv");
  r.seconds = detail::parse_field<double>(fields[7], "seconds");
  r.generations = detail::parse_field<std::size_t>(fields[8], "generations");
  return r;
}

inline std::vector<RunRecord> read_results(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(Errc::IoError, "cannot open results " + path);
  }
  std::vector<RunRecord> out;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (first) {
      first = false;
      if (line.rfind("problem,", 0) == 0) {
        continue;
      }
    }
    if (line.empty()) {
      continue;
    }
    out.push_back(parse_csv_row(line));
  }
  return out;
}

/// Serialized, flushed appends to a results CSV shared by worker threads.
class RecordAppender {
public:
  RecordAppender(const std::string& path, bool append) {
    bool need_header = true;
    if (append) {
      std::ifstream probe(path);
      need_header = !probe || probe.peek() == std::ifstream::traits_type::eof();
    }
    out_.open(path, append ? std::ios::app : std::ios::trunc);
    if (!out_) {
      throw Error(Errc::IoError, "cannot write results " + path);
    }
    if (need_header) {
      out_ << csv_header << '\n' << std::flush;
    }
  }

  void append(const RunRecord& r) {
    std::lock_guard lock(mutex_);
    out_ << to_csv_row(r) << '\n' << std::flush;
  }

private:
  std::mutex mutex_;
  std::ofstream out_;
};

} // namespace e3a::harness
