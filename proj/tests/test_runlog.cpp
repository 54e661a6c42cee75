#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "steinersurf/error.hpp"
#include "steinersurf/runlog.hpp"

using namespace steinersurf;

TEST_CASE("percent encoding round trips") {
  for (std::string s : {"", "plain", "color --k 4 --s 2 file.txt", "tab\there", "100%\nnew line", "\x01\x7f"}) {
    auto e = percent_encode(s);
    CHECK(e.find('\t') == std::string::npos);
    CHECK(e.find('\n') == std::string::npos);
    CHECK(percent_decode(e) == s);
  }
  // spaces stay readable; only the separators and the escape itself are encoded
  CHECK(percent_encode("a b%\t") == "a b%25%09");
}

TEST_CASE("FNV-1a digest") {
  // reference values of the 64-bit FNV-1a hash
  CHECK(digest_hex("") == "cbf29ce484222325");
  CHECK(digest_hex("a") == "af63dc4c8601ec8c");
  CHECK(digest_hex("foobar") == "85944171f73967e8");
  CHECK(digest_hex("abc").size() == 16);
}

TEST_CASE("records format and parse") {
  RunRecord r{utc_timestamp(), "color --k 4 sphere.txt", digest_hex("x"), "k=4;s=2;threads=1", "not_colorable", 12345,
              1.5};
  CHECK(r.timestamp.size() == 20);
  CHECK(r.timestamp.back() == 'Z');
  auto line = format_run_record(r);
  CHECK(std::count(line.begin(), line.end(), '\t') == 6);
  auto back = parse_run_record(line);
  CHECK(back.timestamp == r.timestamp);
  CHECK(back.command == r.command);
  CHECK(back.input_digest == r.input_digest);
  CHECK(back.parameters == r.parameters);
  CHECK(back.outcome == r.outcome);
  CHECK(back.nodes == r.nodes);
  CHECK(back.seconds == doctest::Approx(1.5));
  CHECK_THROWS_AS(parse_run_record("a\tb"), Error);
}

TEST_CASE("append only") {
  auto path = std::filesystem::temp_directory_path() / "steinersurf_runlog_test.log";
  std::filesystem::remove(path);
  RunRecord r{"2026-01-01T00:00:00Z", "chi", "0000000000000000", "s=2", "chi=3", 1, 0};
  append_run_record(path.string(), r);
  r.outcome = "chi=4";
  append_run_record(path.string(), r);
  std::ifstream in(path);
  std::string a, b, c;
  std::getline(in, a);
  std::getline(in, b);
  CHECK_FALSE(std::getline(in, c));
  CHECK(parse_run_record(a).outcome == "chi=3");
  CHECK(parse_run_record(b).outcome == "chi=4");
  CHECK_THROWS_AS(append_run_record("/nonexistent/dir/log", r), Error);
}
