#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace steinersurf {

// One line per search command, tab separated, in this order:
// timestamp, command (percent-encoded), input digest, parameters, outcome,
// nodes expanded, wall seconds.
struct RunRecord {
  std::string timestamp;  // UTC, ISO 8601
  std::string command;
  std::string input_digest;
  std::string parameters;  // "k=4;s=2;threads=1"
  std::string outcome;
  std::uint64_t nodes = 0;
  double seconds = 0;
};

std::string percent_encode(std::string_view s);
std::string percent_decode(std::string_view s);
// FNV-1a 64-bit, as 16 hex digits
std::string digest_hex(std::string_view data);
std::string utc_timestamp();

std::string format_run_record(const RunRecord& r);
RunRecord parse_run_record(std::string_view line);
void append_run_record(const std::string& path, const RunRecord& r);

}  // namespace steinersurf
