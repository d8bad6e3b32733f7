#include "divalg/finite_set.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "divalg/errors.hpp"

namespace divalg {

FiniteSet::FiniteSet(std::size_t size) {
  labels_.reserve(size);
  for (std::size_t i = 0; i < size; ++i) labels_.push_back(std::to_string(i));
}

FiniteSet::FiniteSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (seen.size() != labels_.size()) {
    throw StructuralError("finite set labels must be distinct");
  }
}

std::string_view to_string(Monoidal kind) noexcept {
  return kind == Monoidal::coproduct ? "coproduct" : "cartesian";
}

std::size_t monoidal_unit_size(Monoidal kind) noexcept {
  return kind == Monoidal::coproduct ? 0 : 1;
}

std::size_t tensor_size(Monoidal kind, std::size_t a, std::size_t b) noexcept {
  return kind == Monoidal::coproduct ? a + b : a * b;
}

bool for_each_permutation(std::size_t n,
                          const std::function<bool(const Table&)>& visit) {
  Table p(n);
  std::iota(p.begin(), p.end(), Element{0});
  do {
    if (visit(p)) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

bool is_bijection(const Table& table, std::size_t codomain) {
  if (table.size() != codomain) return false;
  std::vector<bool> hit(codomain, false);
  for (auto v : table) {
    if (v >= codomain || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

Table inverse_permutation(const Table& p) {
  Table inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = i;
  return inv;
}

}  // namespace divalg
