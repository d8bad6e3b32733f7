#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "divalg/basis_vector.hpp"
#include "divalg/classification.hpp"
#include "divalg/validation.hpp"

namespace divalg {

// Raw skeletal data of a (multi)fusion category, as read from a ring file.
// fusion[i][j][k] is the multiplicity of basis k in X_i ⊗ X_j.
struct FusionRingData {
  std::vector<std::string> labels;
  ObjectVector unit;
  std::vector<std::size_t> dual;
  std::vector<std::vector<std::vector<Multiplicity>>> fusion;
};

// Structurally consistent fusion ring with flat storage. Construction checks
// shapes only; use validate_ring() for the axioms.
class FusionRing {
 public:
  explicit FusionRing(FusionRingData data);

  // Throws AxiomError listing the first violations when validation fails.
  static FusionRing validated(FusionRingData data);

  std::size_t rank() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  std::optional<std::size_t> index_of(std::string_view label) const;

  const ObjectVector& unit() const noexcept { return unit_; }
  bool unit_is_simple() const noexcept { return unit_.length() == 1; }
  std::size_t dual(std::size_t i) const { return dual_.at(i); }
  const std::vector<std::size_t>& dual_permutation() const noexcept {
    return dual_;
  }

  Multiplicity N(std::size_t i, std::size_t j, std::size_t k) const noexcept {
    return fusion_[(i * rank() + j) * rank() + k];
  }

  ObjectVector basis(std::size_t i) const {
    return ObjectVector::basis(rank(), i);
  }

  FusionRingData data() const;

 private:
  std::vector<std::string> labels_;
  ObjectVector unit_;
  std::vector<std::size_t> dual_;
  std::vector<Multiplicity> fusion_;
};

// Checks unit law, associativity, duality, Frobenius reciprocity and the
// no-zero-product condition. Dimension mismatches throw StructuralError.
ValidationReport validate_ring(const FusionRing& ring);
ValidationReport validate_ring(const FusionRingData& data);

ObjectVector tensor(const FusionRing& ring, const ObjectVector& x,
                    const ObjectVector& y);

inline Multiplicity length(const ObjectVector& x) noexcept {
  return x.length();
}

bool is_simple(const FusionRing& ring, const ObjectVector& x);

/// Returns y with y ⊗ x = 1, or nothing.
///
/// With a simple unit any inverse is simple and x must be simple too
/// (length(a ⊗ b) >= length(a) length(b)), so only basis candidates are
/// tried. With a unit of length u (multifusion) a minimal inverse is a sum of
/// exactly u simples, one per unit summand; candidates are multisets of u
/// basis elements in lexicographic order. The first hit is returned.
std::optional<ObjectVector> is_left_invertible(const FusionRing& ring,
                                               const ObjectVector& x);
/// Mirror of is_left_invertible: y with x ⊗ y = 1.
std::optional<ObjectVector> is_right_invertible(const FusionRing& ring,
                                                const ObjectVector& x);

ObjectVector dual_object(const FusionRing& ring, const ObjectVector& x);

struct FpOptions {
  double tolerance = 1e-9;
  int max_iterations = 10000;
};

// Perron eigenvalue of the left-multiplication matrix of x. Diagnostic only;
// nothing in the classifiers depends on it.
double fp_dimension(const FusionRing& ring, const ObjectVector& x,
                    const FpOptions& options = {});

// side = left classifies X ⊗ X*, side = right classifies *X ⊗ X.
ClassificationReport classify_internal_end(const FusionRing& ring,
                                           const ObjectVector& x, Side side);

// Parses a label or a comma-separated multiplicity vector; labels win.
ObjectVector parse_object(const FusionRing& ring, std::string_view text);

}  // namespace divalg
