#include <gtest/gtest.h>

#include <sstream>

#include <json.hpp>

#include "pinnacle/bench.hpp"
#include "pinnacle/cli.hpp"

namespace pinnacle {
namespace {

using nlohmann::json;

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string &text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    out.push_back(line);
  }
  return out;
}

TEST(CliCount, Examples) {
  EXPECT_EQ(run({"count", "-n", "8", "-P", "5"}).out, "448\n");
  EXPECT_EQ(run({"count", "-n", "4", "-P", ""}).out, "8\n");
  EXPECT_EQ(run({"count", "-n", "4", "-P", "none"}).out, "8\n");
  EXPECT_EQ(run({"count", "-n", "12", "-P", "4,8,11"}).out, "264960\n");
  EXPECT_EQ(run({"count", "-n", "8", "-P", "5", "--method", "enumerate"}).out, "448\n");
}

TEST(CliCount, InadmissibleIsZero) {
  const auto r = run({"count", "-n", "5", "-P", "2"});
  EXPECT_EQ(r.status, cli::kOk);
  EXPECT_EQ(r.out, "0\n");
}

TEST(CliCount, Formats) {
  const auto j = json::parse(run({"--format", "json", "count", "-n", "8", "-P", "3,5"}).out);
  EXPECT_EQ(j.at("count"), 32);
  EXPECT_EQ(j.at("pinnacles"), (std::vector<int>{3, 5}));
  EXPECT_EQ(run({"--format", "csv", "count", "-n", "8", "-P", "3,5"}).out,
            "n,pinnacles,count\n8,3;5,32\n");
  const auto fits = json::parse(run({"--format", "json", "count", "-n", "62", "-P", ""}).out);
  EXPECT_EQ(fits.at("count"), 2305843009213693952ULL);
  // beyond 64 bits the count is a string
  const auto big =
      json::parse(run({"--format", "json", "count", "-n", "40", "-P", "10,20,30,40"}).out);
  EXPECT_EQ(big.at("count"), "193746240369172961085829939200");
}

TEST(CliCount, UsageErrors) {
  EXPECT_EQ(run({"count", "-n", "8"}).status, cli::kUsage);
  EXPECT_EQ(run({"count", "-P", "5"}).status, cli::kUsage);
  EXPECT_EQ(run({"count", "-n", "8", "-P", "5,x"}).status, cli::kUsage);
  EXPECT_EQ(run({"count", "-n", "8", "-P", "5", "--method", "magic"}).status, cli::kUsage);
  EXPECT_EQ(run({}).status, cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).status, cli::kUsage);
}

TEST(CliCount, EnumerateRespectsLimit) {
  EXPECT_EQ(run({"count", "-n", "14", "-P", "5", "--method", "enumerate"}).status, cli::kResource);
}

TEST(CliGenerate, Examples) {
  const auto r = run({"--sorted", "generate", "-n", "4", "-P", "3"});
  EXPECT_EQ(r.status, cli::kOk);
  EXPECT_EQ(lines(r.out), (std::vector<std::string>{"1,3,2,4", "2,3,1,4", "4,1,3,2", "4,2,3,1"}));
  EXPECT_EQ(r.err, "count: 4\n");

  const auto empty = run({"generate", "-n", "4", "-P", "2"});
  EXPECT_EQ(empty.status, cli::kOk);
  EXPECT_EQ(empty.out, "");
  EXPECT_EQ(empty.err, "count: 0\n");
}

TEST(CliGenerate, MethodsAgreeWhenSorted) {
  for (const char *pins : {"", "5", "3,5", "6,8", "4,6,8"}) {
    const auto naive = run({"--sorted", "generate", "-n", "8", "-P", pins, "--method", "naive"});
    const auto built = run({"--sorted", "generate", "-n", "8", "-P", pins, "--method", "construct"});
    ASSERT_EQ(naive.out, built.out) << pins;
    ASSERT_EQ(naive.err, built.err) << pins;
  }
}

TEST(CliGenerate, JsonRoundTrip) {
  const auto r = run({"--format", "json", "--sorted", "generate", "-n", "4", "-P", "3"});
  const auto j = json::parse(r.out);
  EXPECT_EQ(j, json::parse(j.dump()));
  EXPECT_EQ(j.get<std::vector<std::vector<int>>>(),
            (std::vector<std::vector<int>>{{1, 3, 2, 4}, {2, 3, 1, 4}, {4, 1, 3, 2}, {4, 2, 3, 1}}));
}

TEST(CliOrbits, Examples) {
  const auto four = lines(run({"orbits", "-n", "4", "-P", "4"}).out);
  ASSERT_EQ(four.size(), 3U);
  for (const auto &line : four) {
    EXPECT_EQ(line.substr(line.find(' ') + 1), "4");
  }
  const auto eight = lines(run({"orbits", "-n", "8", "-P", "5"}).out);
  ASSERT_EQ(eight.size(), 7U);
  for (const auto &line : eight) {
    EXPECT_EQ(line.substr(line.find(' ') + 1), "64");
  }
  EXPECT_EQ(run({"orbits", "-n", "1", "-P", ""}).out, "1 1\n");
}

TEST(CliOrbits, JsonAndCsv) {
  const auto j = json::parse(run({"--format", "json", "orbits", "-n", "4", "-P", "3"}).out);
  ASSERT_EQ(j.size(), 1U);
  EXPECT_EQ(j[0].at("orbit_size"), 4);
  EXPECT_EQ(j[0].at("representative"), (std::vector<int>{1, 3, 2, 4}));
  const auto csv = lines(run({"--format", "csv", "orbits", "-n", "4", "-P", "3"}).out);
  EXPECT_EQ(csv, (std::vector<std::string>{"representative,orbit_size", "1;3;2;4,4"}));
}

TEST(CliValeSets, Examples) {
  EXPECT_EQ(lines(run({"vale-sets", "-n", "8", "-P", "5"}).out),
            (std::vector<std::string>{"1,2", "1,3", "1,4"}));
  EXPECT_EQ(lines(run({"vale-sets", "-n", "12", "-P", "4,8,11"}).out).size(), 23U);
  EXPECT_EQ(run({"vale-sets", "-n", "5", "-P", ""}).out, "1\n");
  const auto j = json::parse(run({"--format", "json", "vale-sets", "-n", "8", "-P", "5"}).out);
  EXPECT_EQ(j, json::parse(R"([[1,2],[1,3],[1,4]])"));
}

TEST(CliAct, Examples) {
  EXPECT_EQ(run({"act", "--perm", "6,5,3,4,1,2,7", "-x", "4", "--dual"}).out, "6,5,1,2,4,3,7\n");
  EXPECT_EQ(run({"act", "--perm", "6,5,3,4,1,2,7", "-x", "4"}).out, "6,5,1,2,4,3,7\n");
  EXPECT_EQ(run({"act", "--perm", "6,5,3,4,1,2,7", "-x", "5", "--classic"}).out, "5,6,3,4,1,2,7\n");
  EXPECT_EQ(run({"act", "--perm", "6512437", "-x", "4"}).out, "6,5,3,4,1,2,7\n");
  EXPECT_EQ(run({"act", "--perm", "5,6,3,4,1,2,7", "-x", "5", "--classic"}).out, "6,5,3,4,1,2,7\n");
}

TEST(CliAct, Errors) {
  EXPECT_EQ(run({"act", "--perm", "1,1,2", "-x", "1"}).status, cli::kUsage);
  EXPECT_EQ(run({"act", "--perm", "1,2,3", "-x", "1", "--dual", "--classic"}).status, cli::kUsage);
  EXPECT_NE(run({"act", "--perm", "1,2,3", "-x", "9"}).status, cli::kOk);
}

TEST(CliBench, SinglePinnacleSet) {
  const auto r = run({"--runs", "1", "bench", "-n", "8", "-P", "3,5"});
  EXPECT_EQ(r.status, cli::kOk);
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 2U);
  EXPECT_EQ(rows[0], kBenchCsvHeader);
  EXPECT_EQ(rows[1].rfind("8,3;5,32,", 0), 0U) << rows[1];
}

TEST(CliBench, AllRowsAsJson) {
  const auto r = run({"--format", "json", "--runs", "1", "bench", "-n", "8", "--all"});
  ASSERT_EQ(r.status, cli::kOk) << r.err;
  const auto j = json::parse(r.out);
  ASSERT_EQ(j.size(), 35U);
  bool found = false;
  for (const auto &row : j) {
    if (row.at("pinnacles") == std::vector<int>{7, 8}) {
      EXPECT_EQ(row.at("count"), 8640);
      found = true;
    }
    EXPECT_TRUE(row.at("naive_ms").is_number());
  }
  EXPECT_TRUE(found);
}

TEST(CliBench, SkipsNaiveLegWhenTooLarge) {
  const auto r = run({"--runs", "1", "bench", "-n", "12", "-P", "4,8,11"});
  ASSERT_EQ(r.status, cli::kOk) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 2U);
  EXPECT_EQ(rows[1].rfind("12,4;8;11,264960,skipped,", 0), 0U) << rows[1];
  EXPECT_EQ(rows[1].substr(rows[1].rfind(',') + 1), "skipped");
}

TEST(CliBench, NeedsScope) {
  EXPECT_EQ(run({"bench", "-n", "8"}).status, cli::kUsage);
  EXPECT_EQ(run({"bench", "-n", "8", "-P", "5", "--all"}).status, cli::kUsage);
}

} // namespace
} // namespace pinnacle
