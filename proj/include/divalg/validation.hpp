#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace divalg {

struct Violation {
  std::string axiom;
  std::vector<std::size_t> indices;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;

  friend bool operator==(const Violation&, const Violation&) = default;
};

// passed() is derived from the violation list so the two cannot disagree.
struct ValidationReport {
  std::vector<Violation> violations;

  bool passed() const noexcept { return violations.empty(); }
  bool has(std::string_view axiom) const {
    for (const auto& v : violations) {
      if (v.axiom == axiom) return true;
    }
    return false;
  }
  void add(std::string axiom, std::vector<std::size_t> indices,
           std::int64_t lhs, std::int64_t rhs) {
    violations.push_back({std::move(axiom), std::move(indices), lhs, rhs});
  }
};

}  // namespace divalg
