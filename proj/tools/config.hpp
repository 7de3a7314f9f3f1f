#pragma once

#include <istream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace lampctl {

// Exit status 3.
struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Flat key=value job description.  Only known keys are accepted.
class JobConfig {
 public:
  std::string command;
  std::vector<std::string> args;

  static const std::map<std::string, std::string>& known_keys();  // key -> default

  void set(const std::string& key, const std::string& value);
  // "key=value"; throws usage_error otherwise.
  void set_assignment(const std::string& text);
  void load(std::istream& in);

  bool has(const std::string& key) const { return values_.count(key) > 0; }
  std::string get(const std::string& key) const;
  long get_int(const std::string& key) const;
  std::vector<std::string> get_list(const std::string& key) const;  // '/'-separated
  std::vector<long> get_int_list(const std::string& key) const;

  // Sorted key=value lines of every key that was set, plus the command.
  std::string dump() const;

 private:
  std::map<std::string, std::string> values_;
};

}  // namespace lampctl
