#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"lampctl: lamplighter graph experiments"};
  std::string config_path, seed, window, cap_states, cap_heldkarp, dot_out, report_out, command;
  std::vector<std::string> rest;
  app.add_option("--config", config_path, "key=value config file")->check(CLI::ExistingFile);
  app.add_option("--seed", seed, "random seed");
  app.add_option("--window", window, "window radius");
  app.add_option("--cap-states", cap_states, "search state budget");
  app.add_option("--cap-heldkarp", cap_heldkarp, "largest Held-Karp instance");
  app.add_option("--dot-out", dot_out, "write the built graph as DOT");
  app.add_option("--report-out", report_out, "write the report to a file");
  app.add_option("command", command,
                 "build | dist | homotopy | persist | leaves | folner | kappa | aptolic | distortion | ends | fixtures")
      ->required();
  app.add_option("args", rest, "positional arguments and key=value overrides");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : lampctl::kUsage;
  }

  lampctl::JobConfig cfg;
  cfg.command = command;
  try {
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      cfg.load(in);
    }
    if (!seed.empty()) cfg.set("seed", seed);
    if (!window.empty()) cfg.set("radius", window);
    if (!cap_states.empty()) cfg.set("cap_states", cap_states);
    if (!cap_heldkarp.empty()) cfg.set("cap_heldkarp", cap_heldkarp);
    for (const auto& arg : rest) {
      if (arg.find('=') != std::string::npos)
        cfg.set_assignment(arg);
      else
        cfg.args.push_back(arg);
    }
  } catch (const lampctl::usage_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return lampctl::kUsage;
  }

  lampctl::RunOptions options{dot_out};
  if (report_out.empty()) return lampctl::run(cfg, std::cout, options);
  std::ofstream out(report_out);
  if (!out) {
    std::cerr << "cannot write " << report_out << "\n";
    return lampctl::kUsage;
  }
  const int status = lampctl::run(cfg, out, options);
  std::cout << "status " << status << ", report in " << report_out << "\n";
  return status;
}
