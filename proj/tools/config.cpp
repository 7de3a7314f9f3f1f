#include "config.hpp"

#include <charconv>
#include <sstream>

namespace lampctl {

const std::map<std::string, std::string>& JobConfig::known_keys() {
  static const std::map<std::string, std::string> keys{
      {"a1", "1"},
      {"a2", "3"},
      {"balls", "3"},
      {"base", "line"},
      {"cap_heldkarp", "20"},
      {"cap_len", "12"},
      {"cap_states", "200000"},
      {"centre", ""},
      {"constant", "1"},
      {"degree", "3"},
      {"dim", "2"},
      {"eps", "1"},
      {"eta", "1"},
      {"from", "{}@0"},
      {"graph", "line"},
      {"k", "2"},
      {"kappa", "1/2"},
      {"lamp_width", "1"},
      {"lamps", "3"},
      {"leaves", ""},
      {"m", "3"},
      {"map", "double"},
      {"margin", "3"},
      {"mode", ""},
      {"n", "2"},
      {"nmax", "3"},
      {"p", "2"},
      {"pairs", "200"},
      {"path", ""},
      {"path2", ""},
      {"q", ""},
      {"r", "1"},
      {"radii", "2"},
      {"radius", "6"},
      {"rungs", ""},
      {"samples", "100"},
      {"scale", "1"},
      {"seed", "1"},
      {"sets", "500"},
      {"sides", "1/2/3/4/5/6"},
      {"spread", "4"},
      {"target", ""},
      {"to", "{-1:1,2:1}@0"},
      {"base_width", "1"},
      {"variant", "nonamenable"},
      {"width", "4"},
  };
  return keys;
}

void JobConfig::set(const std::string& key, const std::string& value) {
  if (!known_keys().count(key)) throw usage_error("unknown config key '" + key + "'");
  static const char* positive[] = {"cap_heldkarp", "cap_len", "cap_states"};
  for (const char* cap : positive)
    if (key == cap) {
      long v = 0;
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
      if (ec != std::errc{} || ptr != value.data() + value.size() || v <= 0)
        throw usage_error(key + " must be a positive integer, got '" + value + "'");
    }
  values_[key] = value;
}

void JobConfig::set_assignment(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) throw usage_error("expected key=value, got '" + text + "'");
  auto trim = [](std::string s) {
    const auto a = s.find_first_not_of(" \t"), b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
  };
  set(trim(text.substr(0, eq)), trim(text.substr(eq + 1)));
}

void JobConfig::load(std::istream& in) {
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    try {
      set_assignment(line.substr(first, last - first + 1));
    } catch (const usage_error& e) {
      throw usage_error("config line " + std::to_string(number) + ": " + e.what());
    }
  }
}

std::string JobConfig::get(const std::string& key) const {
  auto it = values_.find(key);
  if (it != values_.end()) return it->second;
  auto def = known_keys().find(key);
  if (def == known_keys().end()) throw usage_error("unknown config key '" + key + "'");
  return def->second;
}

long JobConfig::get_int(const std::string& key) const {
  const std::string text = get(key);
  long v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw usage_error(key + " must be an integer, got '" + text + "'");
  return v;
}

std::vector<std::string> JobConfig::get_list(const std::string& key) const {
  std::vector<std::string> out;
  std::stringstream ss(get(key));
  std::string item;
  while (std::getline(ss, item, '/'))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<long> JobConfig::get_int_list(const std::string& key) const {
  std::vector<long> out;
  for (const auto& item : get_list(key)) {
    long v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc{} || ptr != item.data() + item.size())
      throw usage_error(key + " must be a '/'-separated list of integers");
    out.push_back(v);
  }
  return out;
}

std::string JobConfig::dump() const {
  std::string out = "command=" + command + "\n";
  for (std::size_t i = 0; i < args.size(); ++i) out += "arg" + std::to_string(i) + "=" + args[i] + "\n";
  for (const auto& [k, v] : values_) out += k + "=" + v + "\n";
  return out;
}

}  // namespace lampctl
