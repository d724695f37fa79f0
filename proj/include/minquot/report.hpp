#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace minquot {

// Result of one verification check. Failing reports always carry at
// least one witness describing the counterexample.
struct CheckReport {
  std::string name;
  std::vector<std::pair<std::string, std::string>> params;
  bool pass = true;
  std::vector<std::string> witnesses;
  std::vector<std::pair<std::string, std::int64_t>> counts;

  void fail(std::string witness) {
    pass = false;
    witnesses.push_back(std::move(witness));
  }
  void note(std::string witness) { witnesses.push_back(std::move(witness)); }
  void count(std::string key, std::int64_t value) {
    counts.emplace_back(std::move(key), value);
  }
  void param(std::string key, std::string value) {
    params.emplace_back(std::move(key), std::move(value));
  }
};

}  // namespace minquot
