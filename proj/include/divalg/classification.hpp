#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "divalg/basis_vector.hpp"

namespace divalg {

enum class Side { left, right };

enum class AlgebraForm {
  XtensorXdual,           // X ⊗ X*
  dualXtensorX,           // *X ⊗ X
  internal_end_of_module  // internal End of a module object
};

std::string_view to_string(AlgebraForm form) noexcept;
std::string_view to_string(Side side) noexcept;

// Verdicts for one algebra. `object` holds ring multiplicities for the direct
// forms and module multiplicities for internal_end_of_module.
struct ClassificationReport {
  std::vector<Multiplicity> object;
  AlgebraForm algebra_form = AlgebraForm::XtensorXdual;
  ObjectVector algebra;

  bool simplistic_left = false;
  bool simplistic_right = false;
  bool essential_left = false;
  bool essential_right = false;

  // Direct forms: the one-sided inverse that makes (- ⊗ X) surjective.
  std::optional<ObjectVector> inverse_witness;
  // Module form: (target module basis index, acting ring basis index).
  std::vector<std::pair<std::size_t, std::size_t>> reach_witnesses;
  // Basis indices (ring basis for direct forms, module basis otherwise) that
  // are not in the essential image.
  std::vector<std::size_t> unreachable;

  bool simplistic() const noexcept { return simplistic_left && simplistic_right; }
  bool essential() const noexcept { return essential_left && essential_right; }
};

}  // namespace divalg
