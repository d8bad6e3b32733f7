#include "divalg/strength.hpp"

#include <algorithm>
#include <set>

#include "divalg/errors.hpp"

namespace divalg {

namespace {

constexpr auto id = [](Element e) { return e; };

void require_strength(const FiniteMonad& monad) {
  if (!monad.has_strength()) {
    throw MissingStrengthError(monad.name() + " has no strength");
  }
}

void guard(std::size_t size, const SearchOptions& options, const char* what) {
  if (size > options.table_cap) {
    throw BudgetExceeded(std::string(what) + " has " + std::to_string(size) +
                         " elements, above the table cap");
  }
}

// |T(T(n))| must be indexable for μ_n to be evaluated.
void require_double(const FiniteMonad& monad, std::size_t n) {
  const auto tt = monad.try_object_size(monad.object_size(n));
  if (!tt) throw BudgetExceeded("|T(T(" + std::to_string(n) + "))| is too large");
}

}  // namespace

ValidationReport check_strength(const FiniteMonad& monad, std::size_t max_size,
                                const SearchOptions& options) {
  require_strength(monad);
  const auto kind = monad.ambient();
  const auto one = monoidal_unit_size(kind);
  const auto T = [&](std::size_t n) { return monad.object_size(n); };
  const auto tensor = [&](std::size_t a, std::size_t b) {
    return tensor_size(kind, a, b);
  };
  const auto theta = [&](std::size_t x, std::size_t y, Element e) {
    return monad.strength_at(x, y, e);
  };
  const auto as_int = [](Element e) { return static_cast<std::int64_t>(e); };

  ValidationReport report;
  for (std::size_t x = 0; x <= max_size; ++x) {
    for (std::size_t y = 0; y <= max_size; ++y) {
      for (std::size_t z = 0; z <= max_size; ++z) {
        const auto inner_dom = tensor(y, T(z));
        const auto inner_cod = T(tensor(y, z));
        const auto dom = tensor(x, inner_dom);
        guard(dom, options, "X ⊗ Y ⊗ T(Z)");
        for (Element e = 0; e < dom; ++e) {
          const auto moved = tensor_map_at(
              kind, x, inner_dom, x, inner_cod, id,
              [&](Element r) { return theta(y, z, r); }, e);
          const auto lhs = theta(x, tensor(y, z), moved);
          const auto rhs = theta(tensor(x, y), z, e);
          if (lhs != rhs) report.add("(i)", {x, y, z, e}, as_int(lhs), as_int(rhs));
        }
      }

      const auto ty = T(y);
      const auto tty = T(ty);
      const auto xy = tensor(x, y);
      const auto x_ty = tensor(x, ty);
      require_double(monad, xy);
      (void)T(x_ty);
      const ElementFn theta_xy = [&](Element e) { return theta(x, y, e); };

      const auto dom3 = tensor(x, tty);
      guard(dom3, options, "X ⊗ T(T(Y))");
      for (Element e = 0; e < dom3; ++e) {
        const auto flattened = tensor_map_at(
            kind, x, tty, x, ty, id,
            [&](Element t) { return monad.multiply_at(y, t); }, e);
        const auto lhs = theta(x, y, flattened);
        const auto lifted =
            monad.fmap_at(theta_xy, x_ty, T(xy), theta(x, ty, e));
        const auto rhs = monad.multiply_at(xy, lifted);
        if (lhs != rhs) report.add("(iii)", {x, y, e}, as_int(lhs), as_int(rhs));
      }

      const auto dom4 = xy;
      for (Element e = 0; e < dom4; ++e) {
        const auto lhs = theta(x, y,
                               tensor_map_at(
                                   kind, x, y, x, ty, id,
                                   [&](Element b) { return monad.unit_at(y, b); }, e));
        const auto rhs = monad.unit_at(xy, e);
        if (lhs != rhs) report.add("(iv)", {x, y, e}, as_int(lhs), as_int(rhs));
      }
    }

    const auto tx = T(x);
    guard(tx, options, "T(X)");
    for (Element e = 0; e < tx; ++e) {
      const auto image = theta(one, x, e);
      if (image != e) report.add("(ii)", {one, x, e}, as_int(image), as_int(e));
    }
  }
  return report;
}

VeryStrongReport is_very_strong(const FiniteMonad& monad, std::size_t max_size,
                                const SearchOptions& options) {
  require_strength(monad);
  const auto kind = monad.ambient();
  VeryStrongReport out;
  for (std::size_t x = 0; x <= max_size; ++x) {
    for (std::size_t y = 0; y <= max_size; ++y) {
      const auto lhs = tensor_size(kind, x, monad.object_size(y));
      const auto rhs = monad.try_object_size(tensor_size(kind, x, y));
      if (!rhs || *rhs != lhs) {
        out.cardinality_mismatches.push_back(
            {x, y, lhs, rhs ? *rhs : UINT64_MAX});
        continue;
      }
      guard(lhs, options, "X ⊗ T(Y)");
      std::vector<bool> hit(*rhs, false);
      for (Element e = 0; e < lhs; ++e) {
        const auto v = monad.strength_at(x, y, e);
        if (hit[v]) {
          out.non_bijective.emplace_back(x, y);
          break;
        }
        hit[v] = true;
      }
    }
  }
  out.very_strong = out.cardinality_mismatches.empty() && out.non_bijective.empty();
  return out;
}

ValidationReport check_monoid_axioms(const MonoidObject& a) {
  const auto kind = a.ambient;
  const auto one = monoidal_unit_size(kind);
  const auto n = a.carrier.size();
  const auto nn = tensor_size(kind, n, n);
  if (a.multiplication.size() != nn || a.unit.size() != one) {
    throw StructuralError("monoid tables have the wrong size");
  }
  for (auto v : a.multiplication)
    if (v >= n) throw StructuralError("multiplication leaves the carrier");
  for (auto v : a.unit)
    if (v >= n) throw StructuralError("unit leaves the carrier");

  const auto m = [&](Element e) { return a.multiplication[e]; };
  const auto u = [&](Element e) { return a.unit[e]; };
  ValidationReport report;
  const auto nnn = tensor_size(kind, nn, n);
  for (Element e = 0; e < nnn; ++e) {
    const auto lhs = m(tensor_map_at(kind, nn, n, n, n, m, id, e));
    const auto rhs = m(tensor_map_at(kind, n, nn, n, n, id, m, e));
    if (lhs != rhs) {
      report.add("associativity", {e}, static_cast<std::int64_t>(lhs),
                 static_cast<std::int64_t>(rhs));
    }
  }
  for (Element e = 0; e < tensor_size(kind, one, n); ++e) {
    const auto left = m(tensor_map_at(kind, one, n, n, n, u, id, e));
    if (left != e) {
      report.add("unit_left", {e}, static_cast<std::int64_t>(left),
                 static_cast<std::int64_t>(e));
    }
  }
  for (Element e = 0; e < tensor_size(kind, n, one); ++e) {
    const auto right = m(tensor_map_at(kind, n, one, n, n, id, u, e));
    if (right != e) {
      report.add("unit_right", {e}, static_cast<std::int64_t>(right),
                 static_cast<std::int64_t>(e));
    }
  }
  return report;
}

MonoidObject algebra_from_strength(const FiniteMonad& monad,
                                   std::size_t strength_check_size,
                                   const SearchOptions& options) {
  const auto strength = check_strength(monad, strength_check_size, options);
  if (!strength.passed()) {
    throw AxiomError(monad.name() + " fails strength axiom " +
                     strength.violations.front().axiom);
  }
  const auto kind = monad.ambient();
  const auto one = monoidal_unit_size(kind);
  const auto a = monad.object_size(one);

  MonoidObject out;
  out.ambient = kind;
  std::vector<std::string> labels;
  for (Element t = 0; t < a; ++t) labels.push_back(monad.describe(one, t));
  out.carrier = FiniteSet(std::move(labels));
  // θ_{T(1),1}: T(1) ⊗ T(1) -> T(T(1) ⊗ 1) = T(T(1)), then μ_1.
  const auto aa = tensor_size(kind, a, a);
  out.multiplication.resize(aa);
  for (Element e = 0; e < aa; ++e)
    out.multiplication[e] = monad.multiply_at(one, monad.strength_at(a, one, e));
  out.unit = tabulate_unit(monad, one);

  const auto report = check_monoid_axioms(out);
  if (!report.passed()) {
    throw AxiomError("T(1) fails the monoid " + report.violations.front().axiom +
                     " axiom");
  }
  return out;
}

ValidationReport check_module_axioms(const MonoidObject& a, const RightModule& m) {
  const auto kind = a.ambient;
  const auto one = monoidal_unit_size(kind);
  const auto n = a.carrier.size();
  const auto y = m.carrier.size();
  const auto ya = tensor_size(kind, y, n);
  if (m.action.size() != ya) throw StructuralError("action table has the wrong size");
  for (auto v : m.action)
    if (v >= y) throw StructuralError("action leaves the carrier");

  const auto rho = [&](Element e) { return m.action[e]; };
  const auto mult = [&](Element e) { return a.multiplication[e]; };
  const auto unit = [&](Element e) { return a.unit[e]; };
  ValidationReport report;
  for (Element e = 0; e < tensor_size(kind, y, one); ++e) {
    const auto back = rho(tensor_map_at(kind, y, one, y, n, id, unit, e));
    if (back != e) {
      report.add("module_unit", {e}, static_cast<std::int64_t>(back),
                 static_cast<std::int64_t>(e));
    }
  }
  const auto yaa = tensor_size(kind, ya, n);
  for (Element e = 0; e < yaa; ++e) {
    const auto lhs = rho(tensor_map_at(kind, ya, n, y, n, rho, id, e));
    const auto rhs = rho(tensor_map_at(kind, y, tensor_size(kind, n, n), y, n, id, mult, e));
    if (lhs != rhs) {
      report.add("module_associativity", {e}, static_cast<std::int64_t>(lhs),
                 static_cast<std::int64_t>(rhs));
    }
  }
  return report;
}

RightModule free_right_module(const MonoidObject& a, std::size_t n) {
  const auto kind = a.ambient;
  const auto k = a.carrier.size();
  const auto size = tensor_size(kind, n, k);
  const auto kk = tensor_size(kind, k, k);
  RightModule out{FiniteSet(size), Table(tensor_size(kind, size, k))};
  const auto mult = [&](Element e) { return a.multiplication[e]; };
  for (Element e = 0; e < out.action.size(); ++e)
    out.action[e] = tensor_map_at(kind, n, kk, n, k, id, mult, e);
  return out;
}

std::optional<Table> modules_isomorphic(const MonoidObject& a,
                                        const RightModule& p,
                                        const RightModule& q) {
  const auto y = p.carrier.size();
  if (q.carrier.size() != y || p.action.size() != q.action.size()) {
    return std::nullopt;
  }
  const auto kind = a.ambient;
  const auto k = a.carrier.size();
  std::optional<Table> found;
  for_each_permutation(y, [&](const Table& phi) {
    const auto f = [&phi](Element e) { return phi[e]; };
    for (Element e = 0; e < p.action.size(); ++e) {
      if (phi[p.action[e]] != q.action[tensor_map_at(kind, y, k, y, k, f, id, e)])
        return false;
    }
    found = phi;
    return true;
  });
  return found;
}

ModuleSurvey survey_right_modules(const MonoidObject& a, std::size_t max_carrier,
                                  const SearchOptions& options) {
  const auto kind = a.ambient;
  const auto one = monoidal_unit_size(kind);
  const auto k = a.carrier.size();
  const auto kk = tensor_size(kind, k, k);
  const auto mult = [&](Element e) { return a.multiplication[e]; };

  ModuleSurvey survey;
  survey.bound = max_carrier;
  std::uint64_t spent = 0;
  for (std::size_t y = 0; y <= max_carrier; ++y) {
    const auto ya = tensor_size(kind, y, k);
    const auto yaa = tensor_size(kind, ya, k);
    guard(yaa, options, "Y ⊗ A ⊗ A");

    std::vector<std::optional<Element>> fixed(ya);
    bool consistent = true;
    for (Element e = 0; e < tensor_size(kind, y, one); ++e) {
      const auto slot = tensor_map_at(
          kind, y, one, y, k, id, [&](Element o) { return a.unit[o]; }, e);
      if (fixed[slot] && *fixed[slot] != e) consistent = false;
      fixed[slot] = e;
    }
    if (!consistent) continue;

    const auto first_of_size = survey.modules.size();
    const auto check = [&](const TrackedTable& rho) {
      for (Element e = 0; e < yaa; ++e) {
        const auto lhs = rho(tensor_map_at(kind, ya, k, y, k, rho, id, e));
        const auto rhs = rho(tensor_map_at(kind, y, kk, y, k, id, mult, e));
        if (lhs != rhs) return false;
      }
      return true;
    };
    const auto accept = [&](const Table& rho) {
      RightModule candidate{FiniteSet(y), rho};
      for (auto i = first_of_size; i < survey.modules.size(); ++i) {
        if (modules_isomorphic(a, survey.modules[i], candidate)) return;
      }
      survey.modules.push_back(std::move(candidate));
    };
    spent += search_tables(ya, y, fixed, check, accept,
                           options.candidate_budget - spent);
  }

  if (survey.modules.size() < 2) {
    survey.status = Triviality::inapplicable;
    return survey;
  }
  bool all_free = true;
  for (std::size_t idx = 0; idx < survey.modules.size(); ++idx) {
    const auto& mod = survey.modules[idx];
    bool matched = false;
    for (std::size_t x = 0; x <= mod.carrier.size() && !matched; ++x) {
      if (tensor_size(kind, x, k) != mod.carrier.size()) continue;
      if (auto iso = modules_isomorphic(a, free_right_module(a, x), mod)) {
        survey.free_witnesses.push_back({idx, x, std::move(*iso)});
        matched = true;
      }
    }
    if (!matched) {
      all_free = false;
      if (!survey.counterexample) survey.counterexample = mod;
    }
  }
  survey.status = all_free ? Triviality::trivial : Triviality::not_trivial;
  return survey;
}

AgreementReport check_adjtriv_module_agreement(const FiniteMonad& monad,
                                               std::size_t max_carrier,
                                               const SearchOptions& options) {
  const auto strength_size = std::min<std::size_t>(max_carrier, 3);
  const auto very = is_very_strong(monad, strength_size, options);
  if (!very.very_strong) {
    throw HypothesisError(monad.name() + " is not left very strong");
  }
  AgreementReport out;
  out.monadic = check_adjunction_trivial(monad, max_carrier, options);
  const auto algebra = algebra_from_strength(monad, strength_size, options);
  out.essential = survey_right_modules(algebra, max_carrier, options);
  out.agree = out.monadic.status == out.essential.status;
  return out;
}

AgreementReport check_mon_ess_agreement(std::size_t marks, std::size_t max_carrier,
                                        const SearchOptions& options) {
  return check_adjtriv_module_agreement(CoproductExceptionMonad(marks),
                                        max_carrier, options);
}

}  // namespace divalg
