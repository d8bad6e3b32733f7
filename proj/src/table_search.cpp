#include "divalg/table_search.hpp"

#include <string>

#include "divalg/errors.hpp"

namespace divalg {

std::uint64_t search_tables(
    std::size_t domain, std::size_t codomain,
    const std::vector<std::optional<Element>>& fixed,
    const std::function<bool(const TrackedTable&)>& check,
    const std::function<void(const Table&)>& accept, std::uint64_t budget) {
  Table values(domain, 0);
  std::vector<std::ptrdiff_t> position(domain, -1);
  std::vector<Element> free;
  for (Element i = 0; i < domain; ++i) {
    if (i < fixed.size() && fixed[i]) {
      values[i] = *fixed[i];
    } else {
      position[i] = static_cast<std::ptrdiff_t>(free.size());
      free.push_back(i);
    }
  }
  if (!free.empty() && codomain == 0) return 0;

  const TrackedTable tracked(values, position);
  std::uint64_t examined = 0;
  while (true) {
    if (++examined > budget) {
      throw BudgetExceeded("table search exceeded " + std::to_string(budget) +
                           " candidates");
    }
    tracked.reset();
    std::ptrdiff_t advance_at = static_cast<std::ptrdiff_t>(free.size()) - 1;
    if (check(tracked)) {
      accept(values);
    } else {
      advance_at = tracked.deepest();
    }
    // Failure that reads no free entry can never be repaired.
    if (advance_at < 0) return examined;

    for (auto p = static_cast<std::size_t>(advance_at) + 1; p < free.size(); ++p)
      values[free[p]] = 0;
    std::ptrdiff_t p = advance_at;
    while (p >= 0) {
      auto& v = values[free[static_cast<std::size_t>(p)]];
      if (++v < codomain) break;
      v = 0;
      --p;
    }
    if (p < 0) return examined;
  }
}

}  // namespace divalg
