#pragma once

#include "divalg/monad.hpp"

namespace fixtures {

// X ⊔ {*} whose μ sends every element to the mark: associative, but μ∘ηT is
// not the identity. Has no strength.
class ForgetfulMaybe final : public divalg::FiniteMonad {
 public:
  std::string name() const override { return "forgetful"; }
  divalg::Monoidal ambient() const override { return divalg::Monoidal::coproduct; }
  std::optional<std::size_t> try_object_size(std::size_t n) const override {
    return n + 1;
  }
  divalg::Element unit_at(std::size_t, divalg::Element x) const override { return x; }
  divalg::Element multiply_at(std::size_t n, divalg::Element) const override {
    return n;
  }
  divalg::Element fmap_at(const divalg::ElementFn& f, std::size_t src,
                          std::size_t dst, divalg::Element t) const override {
    return t < src ? f(t) : dst;
  }
};

}  // namespace fixtures
