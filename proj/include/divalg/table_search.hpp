#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "divalg/finite_set.hpp"

namespace divalg {

struct SearchOptions {
  // Candidate tables examined (plus relabelings tried) before giving up.
  std::uint64_t candidate_budget = 50'000'000;
  // Largest table, e.g. |T(T(n))|, that may be materialized or scanned.
  std::size_t table_cap = std::size_t{1} << 22;
};

// Read access to a candidate table that remembers the deepest free position
// consulted, so a failed check tells the search which prefix is to blame.
class TrackedTable {
 public:
  TrackedTable(const Table& values, const std::vector<std::ptrdiff_t>& position)
      : values_(values), position_(position) {}

  Element operator()(Element i) const {
    if (position_[i] > deepest_) deepest_ = position_[i];
    return values_[i];
  }
  std::ptrdiff_t deepest() const noexcept { return deepest_; }
  void reset() const noexcept { deepest_ = -1; }

 private:
  const Table& values_;
  const std::vector<std::ptrdiff_t>& position_;
  mutable std::ptrdiff_t deepest_ = -1;
};

/// Enumerates every table [0, domain) -> [0, codomain) that agrees with the
/// fixed entries and passes `check`, calling `accept` on each.
///
/// Free entries are assigned in increasing index order like an odometer.
/// When `check` fails after reading free entries up to position p, no
/// completion of that prefix is tried again. `check` must therefore read the
/// table only through the TrackedTable it is given. Returns the number of
/// candidates examined; throws BudgetExceeded past `budget`.
std::uint64_t search_tables(
    std::size_t domain, std::size_t codomain,
    const std::vector<std::optional<Element>>& fixed,
    const std::function<bool(const TrackedTable&)>& check,
    const std::function<void(const Table&)>& accept, std::uint64_t budget);

}  // namespace divalg
