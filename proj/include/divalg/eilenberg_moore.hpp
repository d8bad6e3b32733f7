#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "divalg/finite_set.hpp"
#include "divalg/monad.hpp"
#include "divalg/table_search.hpp"
#include "divalg/validation.hpp"

namespace divalg {

// An Eilenberg-Moore algebra (Y, ξ) with ξ: T(Y) -> Y.
struct EmAlgebra {
  FiniteSet carrier;
  Table structure;
};

// ξ∘η_Y = id_Y and ξ∘T(ξ) = ξ∘μ_Y, pointwise.
ValidationReport check_em_axioms(const FiniteMonad& monad, const EmAlgebra& a,
                                 const SearchOptions& options = {});

// Structure table relabeled along the bijection p: Y -> Y.
Table relabel_structure(const FiniteMonad& monad, const EmAlgebra& a,
                        const Table& p);
// Lexicographically minimal structure table over all relabelings.
Table canonical_structure(const FiniteMonad& monad, const EmAlgebra& a);

// All EM algebras with carrier size <= max_carrier, one per isomorphism
// class (canonical tables), ordered by carrier size then table. Monad laws
// are checked first on every carrier where T³ fits the table cap; a failure
// throws AxiomError.
std::vector<EmAlgebra> enumerate_em_algebras(const FiniteMonad& monad,
                                             std::size_t max_carrier,
                                             const SearchOptions& options = {});

// Free^T(n) = (T(n), μ_n).
EmAlgebra free_algebra(const FiniteMonad& monad, std::size_t n);

// A bijection f: Y_a -> Y_b with f∘ξ_a = ξ_b∘T(f); the lexicographically
// first one is returned.
std::optional<Table> em_isomorphic(const FiniteMonad& monad, const EmAlgebra& a,
                                   const EmAlgebra& b);

enum class Triviality { trivial, not_trivial, inapplicable };

std::string_view to_string(Triviality t) noexcept;

struct FreeWitness {
  std::size_t algebra_index = 0;  // into AdjunctionVerdict::algebras
  std::size_t generator_size = 0;
  Table bijection;                // free_algebra(generator) -> algebra
};

// Adjunction-triviality restricted to EM algebras with carrier <= bound:
// every such algebra must be isomorphic to a free one. `inapplicable` means
// fewer than two isomorphism classes were found (the non-degeneracy
// condition fails within the bound).
struct AdjunctionVerdict {
  Triviality status = Triviality::inapplicable;
  std::size_t bound = 0;
  std::vector<EmAlgebra> algebras;
  std::vector<FreeWitness> free_witnesses;
  std::vector<std::size_t> non_free;
  std::optional<EmAlgebra> counterexample;
  std::optional<std::size_t> laws_checked_up_to;

  bool trivial_up_to_bound() const noexcept {
    return status == Triviality::trivial;
  }
  std::size_t isoclasses() const noexcept { return algebras.size(); }
};

AdjunctionVerdict check_adjunction_trivial(const FiniteMonad& monad,
                                           std::size_t max_carrier,
                                           const SearchOptions& options = {});

struct HomCount {
  std::size_t source = 0;
  std::size_t target = 0;
  std::uint64_t kleisli = 0;  // |Hom(X, T(Y))|
  std::uint64_t em = 0;       // EM morphisms Free(X) -> Free(Y)
  bool images_are_em_morphisms = true;
  bool injective = true;
};

struct ComparisonReport {
  std::vector<HomCount> pairs;
  bool fully_faithful() const noexcept {
    for (const auto& p : pairs)
      if (p.kleisli != p.em || !p.images_are_em_morphisms || !p.injective)
        return false;
    return true;
  }
};

// For all X, Y of size <= max_size: K(f) = μ_Y∘T(f) maps Hom(X, T(Y))
// injectively into EM morphisms Free(X) -> Free(Y), and both sets have the
// same size (counted by brute force).
ComparisonReport check_comparison_fully_faithful(
    const FiniteMonad& monad, std::size_t max_size,
    const SearchOptions& options = {});

}  // namespace divalg
