#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace divalg {

using Multiplicity = std::int64_t;

// Non-negative integer combination of basis elements. Tag keeps ring objects
// and module objects from being mixed up.
template <class Tag>
class BasisVector {
 public:
  BasisVector() = default;
  explicit BasisVector(std::vector<Multiplicity> components);
  BasisVector(std::initializer_list<Multiplicity> components)
      : BasisVector(std::vector<Multiplicity>(components)) {}

  static BasisVector zero(std::size_t rank) {
    return BasisVector(std::vector<Multiplicity>(rank, 0));
  }
  static BasisVector basis(std::size_t rank, std::size_t index);

  std::size_t size() const noexcept { return components_.size(); }
  Multiplicity operator[](std::size_t i) const { return components_[i]; }
  std::span<const Multiplicity> components() const noexcept {
    return components_;
  }

  // Sum of multiplicities: the length of the object in a semisimple category.
  Multiplicity length() const noexcept;
  bool is_zero() const noexcept { return length() == 0; }

  BasisVector& operator+=(const BasisVector& other);
  friend BasisVector operator+(BasisVector a, const BasisVector& b) {
    a += b;
    return a;
  }

  std::string to_string() const;

  friend auto operator<=>(const BasisVector&, const BasisVector&) = default;

 private:
  std::vector<Multiplicity> components_;
};

struct ObjectTag {};
struct ModuleTag {};

using ObjectVector = BasisVector<ObjectTag>;
using ModuleVector = BasisVector<ModuleTag>;

extern template class BasisVector<ObjectTag>;
extern template class BasisVector<ModuleTag>;

}  // namespace divalg
