#pragma once

#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "config.hpp"
#include "lamplighter/graph_core.hpp"

namespace lampctl {

enum Exit { kPass = 0, kFail = 1, kInconclusive = 2, kUsage = 3 };

// Plain-text report: the config, result lines, then a key=value trailer.
class Report {
 public:
  void line(const std::string& key, const std::string& value) { body_.emplace_back(key, value); }
  void trailer(const std::string& key, const std::string& value) { trailer_[key] = value; }
  std::string render(const JobConfig& cfg, int status) const;

 private:
  std::vector<std::pair<std::string, std::string>> body_;
  std::map<std::string, std::string> trailer_;
};

struct RunOptions {
  std::string dot_path;
};

// Runs one job and writes its report; returns the exit status.
int run(const JobConfig& cfg, std::ostream& out, const RunOptions& options = {});

struct FixtureResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

std::vector<FixtureResult> run_fixtures();

// Truncated cube built by cutting every corner of the 3-cube into a triangle.
lamplighter::Graph corner_cut_cube();

}  // namespace lampctl
