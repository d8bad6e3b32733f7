#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "divalg/basis_vector.hpp"
#include "divalg/classification.hpp"
#include "divalg/fusion_ring.hpp"
#include "divalg/validation.hpp"

namespace divalg {

using IntMatrix = std::vector<std::vector<Multiplicity>>;

// Skeleton of a left module category. actions[i][k][j] is the multiplicity of
// module basis k in X_i ▷ M_j, so X_i acts on column vectors by actions[i].
struct NimRepData {
  std::vector<std::string> module_labels;
  std::vector<IntMatrix> actions;

  std::size_t module_rank() const noexcept { return module_labels.size(); }
};

struct NimRepOptions {
  bool check_dual_compatibility = true;
};

// Unit acts as the identity, actions[i] actions[j] = Σ_k N_ij^k actions[k],
// and optionally actions[dual(i)] = transpose(actions[i]).
ValidationReport validate_nimrep(const FusionRing& ring, const NimRepData& nr,
                                 const NimRepOptions& options = {});

ModuleVector act(const FusionRing& ring, const NimRepData& nr,
                 const ObjectVector& x, const ModuleVector& m);

bool is_simple_module_object(const ModuleVector& m);

// Connected components of the module basis under all actions.
std::vector<std::vector<std::size_t>> module_blocks(const NimRepData& nr);
bool is_indecomposable(const NimRepData& nr);

/// Classifies the internal End of m.
///
/// Simplistic iff m is simple. Essential iff every module basis element e_k
/// equals actions[i]·m for some basis object i: act(x, m) is a non-negative
/// sum of the columns x_i·actions[i]·m, so hitting a length-one vector needs a
/// single contributing basis object. Decomposable NIM-reps are rejected.
ClassificationReport classify_internal_end_nimrep(const FusionRing& ring,
                                                  const NimRepData& nr,
                                                  const ModuleVector& m);

/// Runs classify_internal_end(x, left) and the regular NIM-rep classifier on
/// m = x and reports whether both verdicts agree. Requires a simple unit
/// (HypothesisError otherwise): the equivalence C ≃ Mod-(X ⊗ X*) the direct
/// classifier rests on, and indecomposability of the regular module, both
/// need it.
bool cross_check_internal_end(const FusionRing& ring, const ObjectVector& x);

// Label of a module basis element or a comma-separated vector.
ModuleVector parse_module_object(const NimRepData& nr, std::string_view text);

}  // namespace divalg
