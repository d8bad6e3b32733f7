#include "divalg/monad.hpp"

#include <bit>

#include "divalg/errors.hpp"

namespace divalg {

std::size_t FiniteMonad::object_size(std::size_t n) const {
  auto size = try_object_size(n);
  if (!size) {
    throw BudgetExceeded("|T(" + std::to_string(n) + ")| is too large for " +
                         name());
  }
  return *size;
}

Element FiniteMonad::strength_at(std::size_t, std::size_t, Element) const {
  throw MissingStrengthError(name() + " has no strength");
}

std::string FiniteMonad::describe(std::size_t, Element t) const {
  return std::to_string(t);
}

// ----------------------------------------------------------------------------

CoproductExceptionMonad::CoproductExceptionMonad(std::size_t marks)
    : marks_(marks) {}

std::string CoproductExceptionMonad::name() const {
  if (marks_ == 0) return "identity";
  if (marks_ == 1) return "maybe";
  return "exception(" + std::to_string(marks_) + ")";
}

std::optional<std::size_t> CoproductExceptionMonad::try_object_size(
    std::size_t n) const {
  return n + marks_;
}

Element CoproductExceptionMonad::unit_at(std::size_t, Element x) const {
  return x;
}

// T(T(n)) = (n ⊔ S) ⊔ S; the outer S folds onto the inner one.
Element CoproductExceptionMonad::multiply_at(std::size_t n, Element t) const {
  return t < n + marks_ ? t : t - marks_;
}

Element CoproductExceptionMonad::fmap_at(const ElementFn& f, std::size_t src,
                                         std::size_t dst, Element t) const {
  return t < src ? f(t) : dst + (t - src);
}

Element CoproductExceptionMonad::strength_at(std::size_t, std::size_t,
                                             Element e) const {
  return e;
}

std::string CoproductExceptionMonad::describe(std::size_t n, Element t) const {
  if (t < n) return std::to_string(t);
  return marks_ == 1 ? "*" : "*" + std::to_string(t - n);
}

// ----------------------------------------------------------------------------

std::optional<std::size_t> FreeVectorF2Monad::try_object_size(
    std::size_t n) const {
  if (n >= 63) return std::nullopt;
  return std::size_t{1} << n;
}

Element FreeVectorF2Monad::unit_at(std::size_t, Element x) const {
  return Element{1} << x;
}

Element FreeVectorF2Monad::multiply_at(std::size_t, Element t) const {
  Element sum = 0;
  for (Element bits = t; bits != 0; bits &= bits - 1) {
    sum ^= static_cast<Element>(std::countr_zero(bits));
  }
  return sum;
}

Element FreeVectorF2Monad::fmap_at(const ElementFn& f, std::size_t,
                                   std::size_t, Element t) const {
  Element image = 0;
  for (Element bits = t; bits != 0; bits &= bits - 1) {
    image ^= Element{1} << f(static_cast<Element>(std::countr_zero(bits)));
  }
  return image;
}

Element FreeVectorF2Monad::strength_at(std::size_t, std::size_t y,
                                       Element e) const {
  const Element x = e >> y;
  const Element v = e & ((Element{1} << y) - 1);
  return v << (x * y);
}

std::string FreeVectorF2Monad::describe(std::size_t, Element t) const {
  std::string out = "{";
  bool first = true;
  for (Element bits = t; bits != 0; bits &= bits - 1) {
    if (!first) out += ',';
    out += std::to_string(std::countr_zero(bits));
    first = false;
  }
  return out + "}";
}

// ----------------------------------------------------------------------------

MonadSpec monad_spec(std::string_view name, std::size_t marks) {
  if (name == "maybe") return {MonadKind::exception, 1};
  if (name == "identity") return {MonadKind::exception, 0};
  if (name == "exception") return {MonadKind::exception, marks};
  if (name == "freevec2") return {MonadKind::freevec2, 0};
  throw UnknownNameError("unknown monad '" + std::string(name) + "'");
}

std::unique_ptr<FiniteMonad> make_monad(const MonadSpec& spec) {
  if (spec.kind == MonadKind::freevec2) {
    return std::make_unique<FreeVectorF2Monad>();
  }
  return std::make_unique<CoproductExceptionMonad>(spec.marks);
}

Table tabulate_unit(const FiniteMonad& monad, std::size_t n) {
  Table t(n);
  for (Element x = 0; x < n; ++x) t[x] = monad.unit_at(n, x);
  return t;
}

Table tabulate_multiply(const FiniteMonad& monad, std::size_t n) {
  const auto ttn = monad.object_size(monad.object_size(n));
  Table t(ttn);
  for (Element e = 0; e < ttn; ++e) t[e] = monad.multiply_at(n, e);
  return t;
}

Table tabulate_fmap(const FiniteMonad& monad, const Table& f, std::size_t src,
                    std::size_t dst) {
  const auto tsrc = monad.object_size(src);
  const ElementFn fn = [&f](Element x) { return f[x]; };
  Table out(tsrc);
  for (Element t = 0; t < tsrc; ++t) out[t] = monad.fmap_at(fn, src, dst, t);
  return out;
}

MonadLawReport check_monad_laws(const FiniteMonad& monad, std::size_t max_size,
                                std::size_t table_cap) {
  MonadLawReport out;
  for (std::size_t n = 0; n <= max_size; ++n) {
    const auto tn = monad.try_object_size(n);
    const auto ttn = tn ? monad.try_object_size(*tn) : std::nullopt;
    const auto tttn = ttn ? monad.try_object_size(*ttn) : std::nullopt;
    if (!tttn || *tttn > table_cap) break;

    const ElementFn mu = [&](Element t) { return monad.multiply_at(n, t); };
    const ElementFn eta = [&](Element x) { return monad.unit_at(n, x); };
    const ElementFn id = [](Element x) { return x; };

    for (Element t = 0; t < *tttn; ++t) {
      const auto lhs = monad.multiply_at(n, monad.fmap_at(mu, *ttn, *tn, t));
      const auto rhs = monad.multiply_at(n, monad.multiply_at(*tn, t));
      if (lhs != rhs) {
        out.report.add("associativity", {n, t}, static_cast<std::int64_t>(lhs),
                       static_cast<std::int64_t>(rhs));
      }
    }
    for (Element t = 0; t < *tn; ++t) {
      const auto left = monad.multiply_at(n, monad.fmap_at(eta, n, *tn, t));
      const auto right = monad.multiply_at(n, monad.unit_at(*tn, t));
      if (left != t) {
        out.report.add("unit_left", {n, t}, static_cast<std::int64_t>(left),
                       static_cast<std::int64_t>(t));
      }
      if (right != t) {
        out.report.add("unit_right", {n, t}, static_cast<std::int64_t>(right),
                       static_cast<std::int64_t>(t));
      }
      const auto same = monad.fmap_at(id, n, n, t);
      if (same != t) {
        out.report.add("functor_identity", {n, t},
                       static_cast<std::int64_t>(same),
                       static_cast<std::int64_t>(t));
      }
    }
    out.checked_up_to = n;
  }
  return out;
}

}  // namespace divalg
