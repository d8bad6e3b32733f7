#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace divalg {

// Elements of a finite set of size n are the indices 0..n-1.
using Element = std::size_t;
// A map of finite sets; table[x] is the image of x.
using Table = std::vector<Element>;
using ElementFn = std::function<Element(Element)>;

class FiniteSet {
 public:
  FiniteSet() = default;
  // Labels default to "0".."n-1".
  explicit FiniteSet(std::size_t size);
  // Throws StructuralError on duplicate labels.
  explicit FiniteSet(std::vector<std::string> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(Element e) const { return labels_.at(e); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

 private:
  std::vector<std::string> labels_;
};

// The two monoidal structures on finite sets used here: (⊔, ∅) and (×, {*}).
//
// Encodings are strictly associative and unital: for ⊔ the elements of A ⊔ B
// are A's indices followed by B's shifted by |A|; for × the pair (a, b) is
// a·|B| + b. Hence (A⊗B)⊗C and A⊗(B⊗C) share one index space, and 1⊗A, A⊗1
// coincide with A.
enum class Monoidal { coproduct, cartesian };

std::string_view to_string(Monoidal kind) noexcept;

std::size_t monoidal_unit_size(Monoidal kind) noexcept;
std::size_t tensor_size(Monoidal kind, std::size_t a, std::size_t b) noexcept;

// (f ⊗ g)(e) for f: A -> A2, g: B -> B2 and e in A ⊗ B.
template <class F, class G>
Element tensor_map_at(Monoidal kind, std::size_t a, std::size_t b,
                      std::size_t a2, std::size_t b2, F&& f, G&& g, Element e) {
  if (kind == Monoidal::coproduct) {
    return e < a ? f(e) : a2 + g(e - a);
  }
  return f(e / b) * b2 + g(e % b);
}

inline Element identity_at(Element e) noexcept { return e; }

// Calls visit(permutation) for all permutations of 0..n-1 in lexicographic
// order until it returns true.
bool for_each_permutation(std::size_t n,
                          const std::function<bool(const Table&)>& visit);

bool is_bijection(const Table& table, std::size_t codomain);
Table inverse_permutation(const Table& p);

}  // namespace divalg
