#include <gtest/gtest.h>

#include <set>

#include "g2flat/verify.hpp"

using namespace g2flat;

namespace {

VerifyConfig quiet() {
  VerifyConfig c;
  c.omit_timing = true;
  return c;
}

}  // namespace

TEST(Verify, RegistryHasAllTasks) {
  EXPECT_EQ(task_names().size(), 20u);
  EXPECT_TRUE(is_task("nodes-ghat"));
  EXPECT_FALSE(is_task("nodes"));
  for (const auto& n : task_names()) EXPECT_FALSE(task_claim(n).empty()) << n;
}

TEST(Verify, TaskSeedsAreStableAndDistinct) {
  EXPECT_EQ(task_seed("nodes-ghat", 1), task_seed("nodes-ghat", 1));
  EXPECT_NE(task_seed("nodes-ghat", 1), task_seed("nodes-ghat", 2));
  std::set<std::uint64_t> seeds;
  for (const auto& n : task_names()) seeds.insert(task_seed(n, 0));
  EXPECT_EQ(seeds.size(), task_names().size());
}

TEST(Verify, ConfigJson) {
  VerifyConfig c;
  c.apply_json(nlohmann::json::parse(R"({"prime": 101, "order": "lex", "seed": 9})"));
  EXPECT_EQ(c.prime, 101u);
  EXPECT_EQ(c.order, MonomialOrder::lex());
  EXPECT_EQ(c.seed, 9u);
  EXPECT_EQ(c.second_prime, 10007u);  // untouched default
  EXPECT_THROW(c.apply_json(nlohmann::json::parse(R"({"primes": 5})")), std::invalid_argument);
  EXPECT_THROW(c.apply_json(nlohmann::json::parse(R"({"prime": 100})")), std::invalid_argument);
  EXPECT_THROW(c.apply_json(nlohmann::json::parse(R"({"jobs": 0})")), std::invalid_argument);
  EXPECT_THROW(c.apply_json(nlohmann::json::parse(R"({"order": "revlex"})")), std::invalid_argument);
  EXPECT_THROW(c.apply_json(nlohmann::json::parse(R"({"seed": "x"})")), std::invalid_argument);
  EXPECT_THROW(c.apply_json(nlohmann::json::parse("[1]")), std::invalid_argument);
}

TEST(Verify, UnknownTask) {
  EXPECT_THROW(run_task("no-such-task", quiet()), std::invalid_argument);
  EXPECT_THROW(run_suite({"toric-strata", "bogus"}, quiet()), std::invalid_argument);
}

TEST(Verify, ToricStrataCounts) {
  const auto r = run_task("toric-strata", quiet());
  EXPECT_EQ(r.status, TaskStatus::pass);
  EXPECT_EQ(r.evidence["polytopes"][0]["unit_parallelograms"], 3);
  EXPECT_EQ(r.evidence["polytopes"][1]["unit_parallelograms"], 4);
}

TEST(Verify, MapInverse) {
  const auto r = run_task("map-inverse", quiet());
  EXPECT_EQ(r.status, TaskStatus::pass);
  EXPECT_EQ(r.evidence["pfaffians"], 35);
  EXPECT_EQ(r.evidence["literal_sign_n"]["nonzero_pfaffians"], 9);
}

TEST(Verify, FailureCarriesCertificate) {
  const auto r = run_task("omega1-flat", quiet());
  ASSERT_EQ(r.status, TaskStatus::fail);
  EXPECT_TRUE(r.evidence.contains("certificate"));
  EXPECT_EQ(r.evidence["c0_image"]["degree"], 18);
}

TEST(Verify, ProbabilisticPassCarriesSamplesAndSeed) {
  auto c = quiet();
  c.seed = 3;
  const auto r = run_task("singular-plane", c);
  EXPECT_EQ(r.status, TaskStatus::probabilistic_pass);
  EXPECT_EQ(r.evidence["seed"], task_seed("singular-plane", 3));
  EXPECT_EQ(r.evidence["samples"]["off_plane"], 100);
  EXPECT_EQ(r.evidence["samples"]["on_plane"], 20);
}

TEST(Verify, ReportsAreByteIdentical) {
  const std::vector<std::string> tasks = {"g2-hilbert", "conic-q", "singular-plane", "toric-reflexive"};
  auto c = quiet();
  c.seed = 5;
  const auto a = run_suite(tasks, c).json.dump();
  c.jobs = 3;
  const auto b = run_suite(tasks, c).json;
  c.jobs = 1;
  EXPECT_EQ(nlohmann::json::parse(a)["tasks"].dump(), b["tasks"].dump());
  EXPECT_EQ(a, run_suite(tasks, c).json.dump());
  c.seed = 6;
  EXPECT_NE(a, run_suite(tasks, c).json.dump());
}

TEST(Verify, ReportSchema) {
  const auto rep = run_suite({"divisor-d", "divisor-d", "bivector-lemma"}, quiet());
  ASSERT_EQ(rep.results.size(), 2u);  // duplicates run once
  EXPECT_EQ(rep.exit_code, 0);
  const auto& j = rep.json;
  EXPECT_EQ(j["config"]["prime"], 32003);
  EXPECT_EQ(j["summary"]["pass"], 2);
  for (const auto& t : j["tasks"]) {
    for (const char* key : {"name", "status", "evidence", "wall_time", "claim"}) EXPECT_TRUE(t.contains(key)) << key;
    EXPECT_TRUE(t["wall_time"].is_null());
  }
}

TEST(Verify, ExitCodes) {
  auto c = quiet();
  EXPECT_EQ(run_suite({"omega1-flat"}, c).exit_code, 1);
  c.task_timeout = 1e-9;
  const auto rep = run_suite({"ghat-hilbert"}, c);
  EXPECT_EQ(rep.results[0].status, TaskStatus::timeout);
  EXPECT_EQ(rep.exit_code, 2);
  // the stretch task may time out without failing the suite
  EXPECT_EQ(run_suite({"nodes-toric"}, c).exit_code, 0);
  c.task_timeout = 1800;
  c.global_timeout = 1e-9;
  EXPECT_EQ(run_suite({"divisor-d"}, c).results[0].status, TaskStatus::timeout);
}

TEST(Verify, SecondPrimeAndOrder) {
  auto c = quiet();
  c.order = MonomialOrder::lex();
  c.prime = 10007;
  c.second_prime = 32003;
  const auto r = run_task("g2-hilbert", c);
  EXPECT_EQ(r.status, TaskStatus::pass);
  EXPECT_EQ(r.evidence["hilbert"]["degree"], 18);
  EXPECT_EQ(r.evidence["other_order"]["order"], "grevlex");
  c.second_prime = 10007;
  EXPECT_THROW(run_task("g2-hilbert", c), std::invalid_argument);
}
