#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "allsat/cli.hpp"
#include "allsat/row.hpp"

using namespace allsat;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input) {
  args.insert(args.begin(), "allsat");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split_lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

const char* kWorked =
    "p cnf 10 5\n-1 -2 -3 0\n4 5 6 7 0\n-8 -9 -10 0\n-2 -3 -4 -5 6 7 8 9 0\n1 -3 -4 -6 -7 0\n";
const char* kMu2 = "p cnf 2 2\n1 2 0\n-1 -2 0\n";

}  // namespace

TEST_CASE("count") {
  const Result r = run({"count"}, kWorked);
  CHECK(r.code == cli::kOk);
  CHECK(r.out == "rows=10 models=705\n");
}

TEST_CASE("solve prints rows then totals") {
  const Result r = run({"solve", "-"}, kMu2);
  CHECK(r.code == cli::kOk);
  CHECK(r.out == "m1 m1\nrows=1 models=2\n");
}

TEST_CASE("enum streams models") {
  const Result r = run({"enum"}, kMu2);
  CHECK(r.out == "01\n10\n");
  const Result j = run({"enum", "--format", "json"}, kMu2);
  CHECK(nlohmann::json::parse(j.out) == nlohmann::json::array({"01", "10"}));
}

TEST_CASE("enum line count equals the model count") {
  const Result e = run({"enum"}, kWorked);
  CHECK(split_lines(e.out).size() == 705);
}

TEST_CASE("verify") {
  const Result r = run({"verify"}, kWorked);
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("result=PASS") != std::string::npos);
  const Result capped = run({"verify", "--oracle-limit", "8"}, kWorked);
  CHECK(capped.code == cli::kResourceCap);
}

TEST_CASE("expand and stats") {
  const Result e = run({"expand"}, kMu2);
  CHECK(e.out == "1 0\n0 1\nrows=1 esop_rows=2\n");
  const Result s = run({"stats"}, kWorked);
  CHECK(s.out.find("rows=10\n") != std::string::npos);
  CHECK(s.out.find("models=705\n") != std::string::npos);
  CHECK(s.out.find("compression_ratio=70.500\n") != std::string::npos);
  CHECK(s.out.find("prune_calls=") != std::string::npos);
}

TEST_CASE("json and text describe the same rows") {
  const Result text = run({"solve"}, kWorked);
  const Result json = run({"solve", "--format", "json"}, kWorked);
  const auto j = nlohmann::json::parse(json.out);
  std::vector<std::string> from_json;
  for (const auto& row : j["rows"]) {
    std::string s;
    for (const auto& tok : row["symbols"]) s += (s.empty() ? "" : " ") + tok.get<std::string>();
    CHECK(row["count"] == Row::parse(s).cardinality().str());
    from_json.push_back(s);
  }
  auto text_lines = split_lines(text.out);
  text_lines.pop_back();  // totals
  CHECK(text_lines == from_json);
  CHECK(j["summary"]["models"] == "705");
}

TEST_CASE("trace goes to the error stream") {
  const Result r = run({"count", "--trace"}, kMu2);
  CHECK(r.out == "rows=1 models=2\n");
  CHECK(r.err.find("FINAL m1 m1 count=2") != std::string::npos);
}

TEST_CASE("flags and exit codes") {
  CHECK(run({"count", "--no-prune"}, kWorked).out == "rows=10 models=705\n");
  CHECK(run({"count", "--max-rows", "2"}, kWorked).code == cli::kResourceCap);
  CHECK(run({}, kWorked).code == cli::kUsage);
  CHECK(run({"bogus"}, kWorked).code == cli::kUsage);
  CHECK(run({"count", "--format", "xml"}, kWorked).code == cli::kUsage);
  const Result bad = run({"count"}, "p cnf 2 1\n1 7 0\n");
  CHECK(bad.code == cli::kParse);
  CHECK(bad.err.find("exceeds") != std::string::npos);
  CHECK(run({"count", "/nonexistent/file.cnf"}, "").code == cli::kParse);
  CHECK(run({"--help"}, "").code == cli::kOk);
}
