#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>

#include "divalg/finite_set.hpp"
#include "divalg/validation.hpp"

namespace divalg {

// A monad (T, μ, η) on a monoidal category of finite sets, evaluated
// pointwise. Objects are identified with their sizes; elements of T(n) are
// indices 0..|T(n)|-1 in a fixed encoding chosen by the monad.
class FiniteMonad {
 public:
  virtual ~FiniteMonad() = default;

  virtual std::string name() const = 0;
  virtual Monoidal ambient() const = 0;

  // |T(n)|, or nothing if it does not fit in an index.
  virtual std::optional<std::size_t> try_object_size(std::size_t n) const = 0;
  // Throws BudgetExceeded when |T(n)| is not representable.
  std::size_t object_size(std::size_t n) const;

  // η_n(x) for x in n.
  virtual Element unit_at(std::size_t n, Element x) const = 0;
  // μ_n(t) for t in T(T(n)).
  virtual Element multiply_at(std::size_t n, Element t) const = 0;
  // T(f)(t) for f: src -> dst and t in T(src).
  virtual Element fmap_at(const ElementFn& f, std::size_t src, std::size_t dst,
                          Element t) const = 0;

  virtual bool has_strength() const { return false; }
  // Left strength θ_{X,Y}: X ⊗ T(Y) -> T(X ⊗ Y) at e. Throws
  // MissingStrengthError unless has_strength().
  virtual Element strength_at(std::size_t x, std::size_t y, Element e) const;

  // Human-readable name of t in T(n).
  virtual std::string describe(std::size_t n, Element t) const;
};

// T(X) = X ⊔ S on (FinSet, ⊔, ∅): μ folds the two copies of S, η is the
// inclusion. marks = 0 is the identity monad, marks = 1 the maybe monad. The
// left strength is the associativity rearrangement X ⊔ (Y ⊔ S) = (X ⊔ Y) ⊔ S.
class CoproductExceptionMonad final : public FiniteMonad {
 public:
  explicit CoproductExceptionMonad(std::size_t marks);

  std::size_t marks() const noexcept { return marks_; }

  std::string name() const override;
  Monoidal ambient() const override { return Monoidal::coproduct; }
  std::optional<std::size_t> try_object_size(std::size_t n) const override;
  Element unit_at(std::size_t n, Element x) const override;
  Element multiply_at(std::size_t n, Element t) const override;
  Element fmap_at(const ElementFn& f, std::size_t src, std::size_t dst,
                  Element t) const override;
  bool has_strength() const override { return true; }
  Element strength_at(std::size_t x, std::size_t y, Element e) const override;
  std::string describe(std::size_t n, Element t) const override;

 private:
  std::size_t marks_;
};

// Free F2-vector space T(X) = {0,1}^X on (FinSet, ×, {*}). An element of T(X)
// is the bitmask of its support; η is the delta function, μ sums a set of
// vectors, T(f) pushes forward mod 2. θ(x, v) = δ_x ⊗ v.
class FreeVectorF2Monad final : public FiniteMonad {
 public:
  std::string name() const override { return "freevec2"; }
  Monoidal ambient() const override { return Monoidal::cartesian; }
  std::optional<std::size_t> try_object_size(std::size_t n) const override;
  Element unit_at(std::size_t n, Element x) const override;
  Element multiply_at(std::size_t n, Element t) const override;
  Element fmap_at(const ElementFn& f, std::size_t src, std::size_t dst,
                  Element t) const override;
  bool has_strength() const override { return true; }
  Element strength_at(std::size_t x, std::size_t y, Element e) const override;
  std::string describe(std::size_t n, Element t) const override;
};

enum class MonadKind { exception, freevec2 };

struct MonadSpec {
  MonadKind kind = MonadKind::exception;
  std::size_t marks = 1;
};

// "maybe", "identity", "exception" (uses `marks`), "freevec2".
MonadSpec monad_spec(std::string_view name, std::size_t marks = 1);
std::unique_ptr<FiniteMonad> make_monad(const MonadSpec& spec);

Table tabulate_unit(const FiniteMonad& monad, std::size_t n);
Table tabulate_multiply(const FiniteMonad& monad, std::size_t n);
Table tabulate_fmap(const FiniteMonad& monad, const Table& f, std::size_t src,
                    std::size_t dst);

struct MonadLawReport {
  ValidationReport report;
  // Largest n such that every carrier 0..n was checked; T³(n) beyond
  // table_cap elements is out of reach.
  std::optional<std::size_t> checked_up_to;
};

// μ∘Tμ = μ∘μT on T³(n), μ∘Tη = μ∘ηT = id on T(n), pointwise.
MonadLawReport check_monad_laws(const FiniteMonad& monad, std::size_t max_size,
                                std::size_t table_cap = std::size_t{1} << 22);

}  // namespace divalg
