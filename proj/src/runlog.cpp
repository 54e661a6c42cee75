#include "steinersurf/runlog.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <vector>

#include "steinersurf/error.hpp"

namespace steinersurf {

std::string percent_encode(std::string_view s) {
  static const char* hex = "0123456789ABCDEF";
  std::string out;
  for (unsigned char ch : s) {
    if (ch == '%' || ch == '\t' || ch == '\n' || ch == '\r' || ch < 0x20 || ch >= 0x7f) {
      out += '%';
      out += hex[ch >> 4];
      out += hex[ch & 15];
    } else {
      out += static_cast<char>(ch);
    }
  }
  return out;
}

std::string percent_decode(std::string_view s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '%' && i + 2 < s.size()) {
      out += static_cast<char>(std::stoi(std::string(s.substr(i + 1, 2)), nullptr, 16));
      i += 2;
    } else {
      out += s[i];
    }
  }
  return out;
}

std::string digest_hex(std::string_view data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : data) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

std::string utc_timestamp() {
  auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string format_run_record(const RunRecord& r) {
  std::ostringstream os;
  os << r.timestamp << '\t' << percent_encode(r.command) << '\t' << r.input_digest << '\t' << r.parameters << '\t'
     << r.outcome << '\t' << r.nodes << '\t' << std::fixed << std::setprecision(3) << r.seconds;
  return os.str();
}

RunRecord parse_run_record(std::string_view line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char ch : line) {
    if (ch == '\t') {
      fields.push_back(cur);
      cur.clear();
    } else if (ch != '\n') {
      cur += ch;
    }
  }
  fields.push_back(cur);
  if (fields.size() != 7) throw Error(ErrorCode::InvalidArgument, "run record needs 7 fields");
  RunRecord r;
  r.timestamp = fields[0];
  r.command = percent_decode(fields[1]);
  r.input_digest = fields[2];
  r.parameters = fields[3];
  r.outcome = fields[4];
  r.nodes = std::stoull(fields[5]);
  r.seconds = std::stod(fields[6]);
  return r;
}

void append_run_record(const std::string& path, const RunRecord& r) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot append to run log " + path);
  out << format_run_record(r) << '\n';
}

}  // namespace steinersurf
