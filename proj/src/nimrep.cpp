#include "divalg/nimrep.hpp"

#include <charconv>
#include <numeric>

#include "divalg/catalog.hpp"
#include "divalg/errors.hpp"

namespace divalg {

namespace {

void check_shape(const FusionRing& ring, const NimRepData& nr) {
  const auto mr = nr.module_rank();
  if (mr == 0) throw StructuralError("NIM-rep must have positive module rank");
  if (nr.actions.size() != ring.rank()) {
    throw StructuralError("NIM-rep has " + std::to_string(nr.actions.size()) +
                          " action matrices, ring rank is " +
                          std::to_string(ring.rank()));
  }
  for (std::size_t i = 0; i < nr.actions.size(); ++i) {
    const auto& a = nr.actions[i];
    if (a.size() != mr) {
      throw StructuralError("action matrix " + std::to_string(i) +
                            " has wrong row count");
    }
    for (const auto& row : a) {
      if (row.size() != mr) {
        throw StructuralError("action matrix " + std::to_string(i) +
                              " has wrong column count");
      }
      for (auto v : row)
        if (v < 0) throw StructuralError("negative action multiplicity");
    }
  }
}

void check_module_vector(const NimRepData& nr, const ModuleVector& m) {
  if (m.size() != nr.module_rank()) {
    throw StructuralError("module object has " + std::to_string(m.size()) +
                          " components, module rank is " +
                          std::to_string(nr.module_rank()));
  }
}

std::vector<Multiplicity> apply(const IntMatrix& a, const ModuleVector& m) {
  std::vector<Multiplicity> out(m.size(), 0);
  for (std::size_t k = 0; k < m.size(); ++k)
    for (std::size_t j = 0; j < m.size(); ++j) out[k] += a[k][j] * m[j];
  return out;
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t a) {
    while (parent_[a] != a) a = parent_[a] = parent_[parent_[a]];
    return a;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

ValidationReport validate_nimrep(const FusionRing& ring, const NimRepData& nr,
                                 const NimRepOptions& options) {
  check_shape(ring, nr);
  ValidationReport report;
  const auto r = ring.rank();
  const auto mr = nr.module_rank();
  const auto& u = ring.unit();

  for (std::size_t k = 0; k < mr; ++k)
    for (std::size_t j = 0; j < mr; ++j) {
      Multiplicity sum = 0;
      for (std::size_t i = 0; i < r; ++i) sum += u[i] * nr.actions[i][k][j];
      const Multiplicity expected = k == j ? 1 : 0;
      if (sum != expected) report.add("unit_action", {k, j}, sum, expected);
    }

  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t a = 0; a < mr; ++a)
        for (std::size_t b = 0; b < mr; ++b) {
          Multiplicity lhs = 0;
          for (std::size_t c = 0; c < mr; ++c)
            lhs += nr.actions[i][a][c] * nr.actions[j][c][b];
          Multiplicity rhs = 0;
          for (std::size_t k = 0; k < r; ++k)
            rhs += ring.N(i, j, k) * nr.actions[k][a][b];
          if (lhs != rhs) report.add("multiplicativity", {i, j, a, b}, lhs, rhs);
        }

  if (options.check_dual_compatibility) {
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t a = 0; a < mr; ++a)
        for (std::size_t b = 0; b < mr; ++b) {
          const auto lhs = nr.actions[ring.dual(i)][a][b];
          const auto rhs = nr.actions[i][b][a];
          if (lhs != rhs) report.add("dual_compatibility", {i, a, b}, lhs, rhs);
        }
  }
  return report;
}

ModuleVector act(const FusionRing& ring, const NimRepData& nr,
                 const ObjectVector& x, const ModuleVector& m) {
  check_shape(ring, nr);
  check_module_vector(nr, m);
  if (x.size() != ring.rank()) {
    throw StructuralError("object length does not match ring rank");
  }
  std::vector<Multiplicity> out(m.size(), 0);
  for (std::size_t i = 0; i < ring.rank(); ++i) {
    if (x[i] == 0) continue;
    const auto column = apply(nr.actions[i], m);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += x[i] * column[k];
  }
  return ModuleVector(std::move(out));
}

bool is_simple_module_object(const ModuleVector& m) {
  if (m.is_zero()) throw ZeroObjectError("the zero module object is not allowed");
  return m.length() == 1;
}

std::vector<std::vector<std::size_t>> module_blocks(const NimRepData& nr) {
  const auto mr = nr.module_rank();
  DisjointSets sets(mr);
  for (const auto& a : nr.actions)
    for (std::size_t k = 0; k < mr && k < a.size(); ++k)
      for (std::size_t j = 0; j < mr && j < a[k].size(); ++j)
        if (a[k][j] != 0) sets.unite(k, j);
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::size_t> block_of(mr, mr);
  for (std::size_t k = 0; k < mr; ++k) {
    const auto root = sets.find(k);
    if (block_of[root] == mr) {
      block_of[root] = blocks.size();
      blocks.emplace_back();
    }
    blocks[block_of[root]].push_back(k);
  }
  return blocks;
}

bool is_indecomposable(const NimRepData& nr) {
  return module_blocks(nr).size() == 1;
}

ClassificationReport classify_internal_end_nimrep(const FusionRing& ring,
                                                  const NimRepData& nr,
                                                  const ModuleVector& m) {
  check_shape(ring, nr);
  check_module_vector(nr, m);
  if (m.is_zero()) throw ZeroObjectError("the zero module object is not allowed");
  const auto blocks = module_blocks(nr);
  if (blocks.size() != 1) {
    throw DecomposableModuleError("NIM-rep splits into " +
                                  std::to_string(blocks.size()) +
                                  " blocks; an indecomposable module category "
                                  "is required");
  }

  ClassificationReport report;
  report.object.assign(m.components().begin(), m.components().end());
  report.algebra_form = AlgebraForm::internal_end_of_module;

  const auto mr = nr.module_rank();
  std::vector<std::vector<Multiplicity>> columns;
  std::vector<Multiplicity> end_class(ring.rank(), 0);
  for (std::size_t i = 0; i < ring.rank(); ++i) {
    columns.push_back(apply(nr.actions[i], m));
    // [End(m) : X_i] = dim Hom(X_i ▷ m, m)
    for (std::size_t k = 0; k < mr; ++k) end_class[i] += columns[i][k] * m[k];
  }
  report.algebra = ObjectVector(std::move(end_class));

  for (std::size_t k = 0; k < mr; ++k) {
    bool reached = false;
    for (std::size_t i = 0; i < ring.rank() && !reached; ++i) {
      const auto& c = columns[i];
      bool unit_vector = true;
      for (std::size_t t = 0; t < mr && unit_vector; ++t)
        unit_vector = c[t] == (t == k ? 1 : 0);
      if (unit_vector) {
        report.reach_witnesses.emplace_back(k, i);
        reached = true;
      }
    }
    if (!reached) report.unreachable.push_back(k);
  }

  const bool simple = is_simple_module_object(m);
  report.simplistic_left = report.simplistic_right = simple;
  const bool essential = report.unreachable.empty();
  report.essential_left = report.essential_right = essential;
  return report;
}

bool cross_check_internal_end(const FusionRing& ring, const ObjectVector& x) {
  if (!ring.unit_is_simple()) {
    throw HypothesisError(
        "cross-check needs a simple unit; the regular module of a multifusion "
        "ring is decomposable");
  }
  const auto direct = classify_internal_end(ring, x, Side::left);
  const auto via_module = classify_internal_end_nimrep(
      ring, regular_nimrep(ring),
      ModuleVector({x.components().begin(), x.components().end()}));
  return direct.simplistic_left == via_module.simplistic_left &&
         direct.simplistic_right == via_module.simplistic_right &&
         direct.essential_left == via_module.essential_left &&
         direct.essential_right == via_module.essential_right;
}

ModuleVector parse_module_object(const NimRepData& nr, std::string_view text) {
  for (std::size_t k = 0; k < nr.module_labels.size(); ++k)
    if (nr.module_labels[k] == text)
      return ModuleVector::basis(nr.module_rank(), k);
  std::vector<Multiplicity> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    auto token = text.substr(pos, end - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    Multiplicity v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size() ||
        v < 0) {
      throw ParseError("'" + std::string(text) +
                       "' is neither a module label nor a multiplicity vector");
    }
    values.push_back(v);
    pos = end + 1;
  }
  if (values.size() != nr.module_rank()) {
    throw ParseError("module object has wrong number of components");
  }
  return ModuleVector(std::move(values));
}

}  // namespace divalg
