#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "g2flat/verify.hpp"

int main(int argc, char** argv) {
  using g2flat::VerifyConfig;
  CLI::App app{"Runs named verification tasks and writes a JSON report."};
  std::vector<std::string> tasks;
  std::uint32_t prime = 0, second_prime = 0;
  std::uint64_t seed = 0;
  std::string order, report, config_path;
  double timeout = 0;
  std::size_t jobs = 0;
  bool omit_timing = false, list = false;
  app.add_option("tasks", tasks, "Task names, or 'all'");
  app.add_option("--prime", prime, "Prime for modular computations (default 32003)");
  app.add_option("--second-prime", second_prime, "Prime for cross-checks (default 10007)");
  app.add_option("--seed", seed, "Suite seed (default 0)");
  app.add_option("--order", order, "Monomial order")->check(CLI::IsMember({"grevlex", "lex"}));
  app.add_option("--timeout", timeout, "Per-task timeout in seconds (default 1800)");
  app.add_option("--report", report, "Write the JSON report here instead of stdout");
  app.add_option("--jobs", jobs, "Worker threads (default 1)");
  app.add_option("--config", config_path, "JSON config file; flags take precedence");
  app.add_flag("--omit-timing", omit_timing, "Write null wall times so reports are byte-identical");
  app.add_flag("--list", list, "List the task names and exit");
  CLI11_PARSE(app, argc, argv);

  if (list) {
    for (const auto& n : g2flat::task_names()) std::cout << n << "  " << g2flat::task_claim(n) << "\n";
    return 0;
  }
  VerifyConfig cfg;
  try {
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw std::invalid_argument("cannot open config " + config_path);
      cfg.apply_json(nlohmann::json::parse(in));
    }
    if (app.count("--prime")) cfg.prime = prime;
    if (app.count("--second-prime")) cfg.second_prime = second_prime;
    if (app.count("--seed")) cfg.seed = seed;
    if (app.count("--order")) cfg.order = g2flat::MonomialOrder::parse(order);
    if (app.count("--timeout")) cfg.task_timeout = timeout;
    if (app.count("--jobs")) cfg.jobs = jobs;
    if (omit_timing) cfg.omit_timing = true;
    cfg.validate();
    if (tasks.empty()) throw std::invalid_argument("no tasks given (use 'all' or --list)");
    if (tasks.size() == 1 && tasks[0] == "all") tasks = g2flat::task_names();
    for (const auto& t : tasks)
      if (!g2flat::is_task(t)) throw std::invalid_argument("unknown task '" + t + "'");
  } catch (const std::exception& e) {
    std::cerr << "verify: " << e.what() << "\n";
    return 3;
  }

  const auto rep = g2flat::run_suite(tasks, cfg);
  for (const auto& r : rep.results) std::cerr << r.name << ": " << g2flat::to_string(r.status) << "\n";
  const std::string text = rep.json.dump(2) + "\n";
  if (report.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(report);
    if (!out) {
      std::cerr << "verify: cannot write " << report << "\n";
      return 3;
    }
    out << text;
  }
  return rep.exit_code;
}
