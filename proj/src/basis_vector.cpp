#include "divalg/basis_vector.hpp"

#include <numeric>
#include <sstream>

#include "divalg/errors.hpp"

namespace divalg {

template <class Tag>
BasisVector<Tag>::BasisVector(std::vector<Multiplicity> components)
    : components_(std::move(components)) {
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (components_[i] < 0) {
      throw StructuralError("negative multiplicity at index " +
                            std::to_string(i));
    }
  }
}

template <class Tag>
BasisVector<Tag> BasisVector<Tag>::basis(std::size_t rank, std::size_t index) {
  if (index >= rank) {
    throw StructuralError("basis index " + std::to_string(index) +
                          " out of range for rank " + std::to_string(rank));
  }
  std::vector<Multiplicity> c(rank, 0);
  c[index] = 1;
  return BasisVector(std::move(c));
}

template <class Tag>
Multiplicity BasisVector<Tag>::length() const noexcept {
  return std::accumulate(components_.begin(), components_.end(),
                         Multiplicity{0});
}

template <class Tag>
BasisVector<Tag>& BasisVector<Tag>::operator+=(const BasisVector& other) {
  if (other.size() != size()) {
    throw StructuralError("vector length mismatch: " + std::to_string(size()) +
                          " vs " + std::to_string(other.size()));
  }
  for (std::size_t i = 0; i < size(); ++i) components_[i] += other[i];
  return *this;
}

template <class Tag>
std::string BasisVector<Tag>::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) os << ',';
    os << components_[i];
  }
  os << ')';
  return os.str();
}

template class BasisVector<ObjectTag>;
template class BasisVector<ModuleTag>;

}  // namespace divalg
