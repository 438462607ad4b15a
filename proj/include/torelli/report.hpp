#pragma once

#include <optional>
#include <string>
#include <vector>

namespace torelli {

struct CheckItem {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Outcome of a batch of identity checks, in the order they were run.
struct CheckReport {
  std::string suite;
  std::vector<CheckItem> items;

  void add(std::string name, bool passed, std::string detail = {}) {
    items.push_back({std::move(name), passed, std::move(detail)});
  }
  void append(const CheckReport& other) {
    for (const auto& item : other.items) items.push_back({other.suite + "/" + item.name, item.passed, item.detail});
  }
  [[nodiscard]] bool passed() const {
    for (const auto& item : items) {
      if (!item.passed) return false;
    }
    return true;
  }
  [[nodiscard]] std::optional<CheckItem> first_failure() const {
    for (const auto& item : items) {
      if (!item.passed) return item;
    }
    return std::nullopt;
  }
};

}  // namespace torelli
