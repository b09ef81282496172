#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "ratcat_cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = ratcat::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

int count(const std::string& s, const std::string& needle) {
  int n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST(Cli, MemberAllMethodsAgree) {
  const Result r = run({"member", "5", "8", "1|2,7|3,4,5|6", "--method", "all"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(count(r.out, "true"), 3) << r.out;
  const Result no = run({"member", "5", "8", "1|2,6,7|3|4,5", "--method", "all"});
  EXPECT_EQ(no.code, 0);
  EXPECT_EQ(count(no.out, "false"), 3) << no.out;
}

TEST(Cli, CspJson) {
  const Result r = run({"csp", "2", "3", "--family", "catalan", "--format", "json"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.front(), '[');
  EXPECT_EQ(count(r.out, "\"d\""), 2) << r.out;
}

TEST(Cli, NcCsvFilteredByBlocks) {
  const Result r = run({"nc", "3", "5", "--blocks", "2", "--format", "csv"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(count_lines(r.out), 1 + 4) << r.out;
}

TEST(Cli, PathsTable) {
  const Result r = run({"paths", "3", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(count_lines(r.out), 1 + 7) << r.out;
}

TEST(Cli, SymmetricCounts) {
  const Result r = run({"symmetric", "3", "5", "2", "--count", "catalan", "--format", "csv"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("3,3,true"), std::string::npos) << r.out;
}

TEST(Cli, ParkWord) {
  const Result r = run({"park", "5", "8", "--word", "4,2,1,4,1", "--format", "csv"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("1,3,7->3,5 2->2 4,5,6->1,4"), std::string::npos) << r.out;
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"nc", "2", "4"}).code, 2);
  EXPECT_EQ(run({"nc", "5", "3"}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"member", "5", "8", "1|2|3"}).code, 2);
  EXPECT_EQ(run({"csp", "2", "3", "--family", "nope"}).code, 2);
  const Result big = run({"nc", "17", "18"});
  EXPECT_EQ(big.code, 2);
  EXPECT_FALSE(big.err.empty());
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args{"hnc", "3", "5", "--format", "json"};
  EXPECT_EQ(run(args).out, run(args).out);
}
