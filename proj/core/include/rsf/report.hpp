#pragma once

#include <string>
#include <vector>

namespace rsf {

// One named pass/fail line of a verification suite.
struct CheckItem {
  std::string name;
  bool pass = false;
};

struct CheckReport {
  std::vector<CheckItem> items;

  void add(std::string name, bool pass) { items.push_back({std::move(name), pass}); }
  bool all_pass() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return true;
  }
};

}  // namespace rsf
