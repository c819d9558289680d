#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "g2flat/polyring.hpp"

namespace g2flat {

enum class TaskStatus { pass, fail, timeout, vacuous, probabilistic_pass };
std::string to_string(TaskStatus s);

struct VerifyConfig {
  std::uint32_t prime = 32003;
  std::uint32_t second_prime = 10007;
  std::uint64_t seed = 0;
  MonomialOrder order = MonomialOrder::grevlex();
  double task_timeout = 1800;    // seconds
  double global_timeout = 7200;  // seconds
  std::size_t jobs = 1;
  bool omit_timing = false;

  nlohmann::json to_json() const;
  /// Overrides the fields present in `j`. Throws std::invalid_argument on
  /// unknown keys or bad values.
  void apply_json(const nlohmann::json& j);
  /// Throws std::invalid_argument for out-of-range values.
  void validate() const;
};

struct TaskResult {
  std::string name;
  TaskStatus status = TaskStatus::fail;
  /// A `fail` carries evidence["certificate"]; a `probabilistic-pass`
  /// carries evidence["samples"] and evidence["seed"].
  nlohmann::json evidence;
  double wall_time = 0;
  std::string claim;
  /// Optional tasks may time out without affecting the exit code.
  bool optional = false;
};

/// Registered task names in suite order.
const std::vector<std::string>& task_names();
bool is_task(const std::string& name);
std::string task_claim(const std::string& name);

/// FNV-1a of the task name mixed with the suite seed.
std::uint64_t task_seed(const std::string& name, std::uint64_t seed);

/// Runs one task with a deadline of config.task_timeout seconds. Throws
/// std::invalid_argument for unknown names.
TaskResult run_task(const std::string& name, const VerifyConfig& config);

struct SuiteReport {
  std::vector<TaskResult> results;
  nlohmann::json json;
  /// 0 all passed, 1 some task failed, 2 some required task timed out.
  int exit_code = 0;
};

/// Runs the tasks on config.jobs worker threads. Results keep the order of
/// `names`; duplicates run once.
SuiteReport run_suite(const std::vector<std::string>& names, const VerifyConfig& config);

}  // namespace g2flat
