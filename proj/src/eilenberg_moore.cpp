#include "divalg/eilenberg_moore.hpp"

#include <set>

#include "divalg/errors.hpp"

namespace divalg {

namespace {

std::size_t checked_table_size(const FiniteMonad& monad, std::size_t n,
                               const SearchOptions& options) {
  const auto tn = monad.object_size(n);
  const auto ttn = monad.try_object_size(tn);
  if (!ttn || *ttn > options.table_cap) {
    throw BudgetExceeded("|T(T(" + std::to_string(n) + "))| exceeds the table cap for " +
                         monad.name());
  }
  return *ttn;
}

class PermutationBudget {
 public:
  explicit PermutationBudget(std::uint64_t limit) : left_(limit) {}
  void spend(std::uint64_t n) {
    if (n > left_) throw BudgetExceeded("relabeling search exceeded the candidate budget");
    left_ -= n;
  }

 private:
  std::uint64_t left_;
};

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

std::string_view to_string(Triviality t) noexcept {
  switch (t) {
    case Triviality::trivial:
      return "trivial";
    case Triviality::not_trivial:
      return "not_trivial";
    case Triviality::inapplicable:
      return "inapplicable";
  }
  return "?";
}

ValidationReport check_em_axioms(const FiniteMonad& monad, const EmAlgebra& a,
                                 const SearchOptions& options) {
  const auto n = a.carrier.size();
  const auto tn = monad.object_size(n);
  if (a.structure.size() != tn) {
    throw StructuralError("structure map has " + std::to_string(a.structure.size()) +
                          " entries, expected |T(Y)| = " + std::to_string(tn));
  }
  for (auto v : a.structure)
    if (v >= n) throw StructuralError("structure map leaves the carrier");

  ValidationReport report;
  for (Element y = 0; y < n; ++y) {
    const auto back = a.structure[monad.unit_at(n, y)];
    if (back != y) {
      report.add("em_unit", {y}, static_cast<std::int64_t>(back),
                 static_cast<std::int64_t>(y));
    }
  }
  const auto ttn = checked_table_size(monad, n, options);
  const ElementFn xi = [&a](Element t) { return a.structure[t]; };
  for (Element phi = 0; phi < ttn; ++phi) {
    const auto lhs = a.structure[monad.fmap_at(xi, tn, n, phi)];
    const auto rhs = a.structure[monad.multiply_at(n, phi)];
    if (lhs != rhs) {
      report.add("em_associativity", {phi}, static_cast<std::int64_t>(lhs),
                 static_cast<std::int64_t>(rhs));
    }
  }
  return report;
}

Table relabel_structure(const FiniteMonad& monad, const EmAlgebra& a,
                        const Table& p) {
  const auto n = a.carrier.size();
  const auto tp = tabulate_fmap(monad, p, n, n);
  Table out(a.structure.size());
  for (Element t = 0; t < a.structure.size(); ++t) out[tp[t]] = p[a.structure[t]];
  return out;
}

Table canonical_structure(const FiniteMonad& monad, const EmAlgebra& a) {
  Table best = a.structure;
  for_each_permutation(a.carrier.size(), [&](const Table& p) {
    auto candidate = relabel_structure(monad, a, p);
    if (candidate < best) best = std::move(candidate);
    return false;
  });
  return best;
}

std::vector<EmAlgebra> enumerate_em_algebras(const FiniteMonad& monad,
                                             std::size_t max_carrier,
                                             const SearchOptions& options) {
  const auto laws = check_monad_laws(monad, max_carrier, options.table_cap);
  if (!laws.report.passed()) {
    throw AxiomError(monad.name() + " violates the monad " +
                     laws.report.violations.front().axiom + " law");
  }

  std::vector<EmAlgebra> out;
  std::uint64_t spent = 0;
  PermutationBudget relabel_budget(options.candidate_budget);
  for (std::size_t n = 0; n <= max_carrier; ++n) {
    const auto tn = monad.object_size(n);
    const auto ttn = checked_table_size(monad, n, options);
    const auto mu = tabulate_multiply(monad, n);

    // ξ∘η = id pins ξ on the image of η.
    std::vector<std::optional<Element>> fixed(tn);
    bool consistent = true;
    for (Element y = 0; y < n; ++y) {
      const auto t = monad.unit_at(n, y);
      if (fixed[t] && *fixed[t] != y) consistent = false;
      fixed[t] = y;
    }
    if (!consistent) continue;

    std::set<Table> canonical;
    const auto check = [&](const TrackedTable& xi) {
      const ElementFn fn = [&xi](Element t) { return xi(t); };
      for (Element phi = 0; phi < ttn; ++phi) {
        if (xi(monad.fmap_at(fn, tn, n, phi)) != xi(mu[phi])) return false;
      }
      return true;
    };
    const auto accept = [&](const Table& xi) {
      relabel_budget.spend(factorial(n));
      canonical.insert(canonical_structure(monad, {FiniteSet(n), xi}));
    };
    spent += search_tables(tn, n, fixed, check, accept,
                           options.candidate_budget - spent);
    for (const auto& table : canonical) out.push_back({FiniteSet(n), table});
  }
  return out;
}

EmAlgebra free_algebra(const FiniteMonad& monad, std::size_t n) {
  const auto tn = monad.object_size(n);
  std::vector<std::string> labels;
  labels.reserve(tn);
  for (Element t = 0; t < tn; ++t) labels.push_back(monad.describe(n, t));
  return {FiniteSet(std::move(labels)), tabulate_multiply(monad, n)};
}

std::optional<Table> em_isomorphic(const FiniteMonad& monad, const EmAlgebra& a,
                                   const EmAlgebra& b) {
  const auto n = a.carrier.size();
  if (b.carrier.size() != n || a.structure.size() != b.structure.size()) {
    return std::nullopt;
  }
  std::optional<Table> found;
  for_each_permutation(n, [&](const Table& p) {
    const auto tp = tabulate_fmap(monad, p, n, n);
    for (Element t = 0; t < a.structure.size(); ++t) {
      if (p[a.structure[t]] != b.structure[tp[t]]) return false;
    }
    found = p;
    return true;
  });
  return found;
}

AdjunctionVerdict check_adjunction_trivial(const FiniteMonad& monad,
                                           std::size_t max_carrier,
                                           const SearchOptions& options) {
  AdjunctionVerdict verdict;
  verdict.bound = max_carrier;
  verdict.algebras = enumerate_em_algebras(monad, max_carrier, options);
  verdict.laws_checked_up_to =
      check_monad_laws(monad, max_carrier, options.table_cap).checked_up_to;
  if (verdict.algebras.size() < 2) {
    verdict.status = Triviality::inapplicable;
    return verdict;
  }

  for (std::size_t idx = 0; idx < verdict.algebras.size(); ++idx) {
    const auto& alg = verdict.algebras[idx];
    bool matched = false;
    // |T(x)| grows with x for every builtin monad.
    for (std::size_t x = 0;; ++x) {
      const auto size = monad.try_object_size(x);
      if (!size || *size > alg.carrier.size()) break;
      if (*size != alg.carrier.size()) continue;
      if (auto iso = em_isomorphic(monad, free_algebra(monad, x), alg)) {
        verdict.free_witnesses.push_back({idx, x, std::move(*iso)});
        matched = true;
        break;
      }
    }
    if (!matched) {
      verdict.non_free.push_back(idx);
      if (!verdict.counterexample) verdict.counterexample = alg;
    }
  }
  verdict.status =
      verdict.non_free.empty() ? Triviality::trivial : Triviality::not_trivial;
  return verdict;
}

ComparisonReport check_comparison_fully_faithful(const FiniteMonad& monad,
                                                 std::size_t max_size,
                                                 const SearchOptions& options) {
  ComparisonReport report;
  for (std::size_t nx = 0; nx <= max_size; ++nx) {
    for (std::size_t ny = 0; ny <= max_size; ++ny) {
      const auto tx = monad.object_size(nx);
      const auto ty = monad.object_size(ny);
      const auto ttx = checked_table_size(monad, nx, options);
      const auto mu_x = tabulate_multiply(monad, nx);

      HomCount count{nx, ny, 0, 0, true, true};

      const auto is_em_morphism = [&](const auto& g) {
        const ElementFn fn = [&g](Element t) { return g(t); };
        for (Element phi = 0; phi < ttx; ++phi) {
          if (g(mu_x[phi]) != monad.multiply_at(ny, monad.fmap_at(fn, tx, ty, phi)))
            return false;
        }
        return true;
      };
      count.em = 0;
      search_tables(
          tx, ty, {}, [&](const TrackedTable& g) { return is_em_morphism(g); },
          [&](const Table&) { ++count.em; }, options.candidate_budget);

      // Kleisli side: every f: X -> T(Y).
      std::set<Table> images;
      Table f(nx, 0);
      const bool empty_hom = nx > 0 && ty == 0;
      while (!empty_hom) {
        if (++count.kleisli > options.candidate_budget) {
          throw BudgetExceeded("Kleisli hom-set exceeds the candidate budget");
        }
        const ElementFn fn = [&f](Element x) { return f[x]; };
        Table image(tx);
        for (Element t = 0; t < tx; ++t)
          image[t] = monad.multiply_at(ny, monad.fmap_at(fn, nx, ty, t));
        if (!is_em_morphism([&image](Element t) { return image[t]; }))
          count.images_are_em_morphisms = false;
        if (!images.insert(std::move(image)).second) count.injective = false;

        std::size_t p = nx;
        while (p > 0 && ++f[p - 1] == ty) f[--p] = 0;
        if (p == 0) break;
      }
      report.pairs.push_back(count);
    }
  }
  return report;
}

}  // namespace divalg
