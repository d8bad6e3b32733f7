#include "divalg/fusion_ring.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

#include "divalg/errors.hpp"

namespace divalg {

std::string_view to_string(AlgebraForm form) noexcept {
  switch (form) {
    case AlgebraForm::XtensorXdual:
      return "XtensorXdual";
    case AlgebraForm::dualXtensorX:
      return "dualXtensorX";
    case AlgebraForm::internal_end_of_module:
      return "internal_end_of_module";
  }
  return "?";
}

std::string_view to_string(Side side) noexcept {
  return side == Side::left ? "left" : "right";
}

namespace {

void require_rank(const FusionRing& ring, const ObjectVector& x) {
  if (x.size() != ring.rank()) {
    throw StructuralError("object has " + std::to_string(x.size()) +
                          " components, ring rank is " +
                          std::to_string(ring.rank()));
  }
}

void require_nonzero(const ObjectVector& x) {
  if (x.is_zero()) {
    throw ZeroObjectError("the zero object is not allowed here");
  }
}

// Calls visit(candidate) for every multiset of `count` basis indices in
// lexicographic order until visit returns true.
template <class Visit>
bool for_each_multiset(std::size_t rank, std::size_t count, Visit&& visit) {
  std::vector<std::size_t> idx(count, 0);
  while (true) {
    if (visit(idx)) return true;
    std::size_t pos = count;
    while (pos > 0 && idx[pos - 1] == rank - 1) --pos;
    if (pos == 0) return false;
    ++idx[pos - 1];
    for (std::size_t p = pos; p < count; ++p) idx[p] = idx[pos - 1];
  }
}

std::optional<ObjectVector> find_inverse(const FusionRing& ring,
                                         const ObjectVector& x, Side side) {
  require_rank(ring, x);
  require_nonzero(x);
  const auto unit_length = static_cast<std::size_t>(ring.unit().length());
  if (unit_length == 1 && x.length() > 1) return std::nullopt;

  std::optional<ObjectVector> found;
  for_each_multiset(ring.rank(), unit_length,
                    [&](const std::vector<std::size_t>& idx) {
                      auto y = ObjectVector::zero(ring.rank());
                      for (auto i : idx) y += ring.basis(i);
                      const auto product = side == Side::left
                                               ? tensor(ring, y, x)
                                               : tensor(ring, x, y);
                      if (product == ring.unit()) {
                        found = std::move(y);
                        return true;
                      }
                      return false;
                    });
  return found;
}

}  // namespace

FusionRing::FusionRing(FusionRingData data) {
  const std::size_t r = data.labels.size();
  if (r == 0) throw StructuralError("fusion ring must have positive rank");
  std::set<std::string> seen;
  for (const auto& l : data.labels) {
    if (!seen.insert(l).second) {
      throw StructuralError("duplicate label '" + l + "'");
    }
  }
  if (data.unit.size() != r) {
    throw StructuralError("unit has " + std::to_string(data.unit.size()) +
                          " components, expected " + std::to_string(r));
  }
  if (data.unit.is_zero()) throw StructuralError("unit vector is zero");
  if (data.dual.size() != r) {
    throw StructuralError("dual has " + std::to_string(data.dual.size()) +
                          " entries, expected " + std::to_string(r));
  }
  std::vector<bool> hit(r, false);
  for (auto d : data.dual) {
    if (d >= r || hit[d]) throw StructuralError("dual is not a permutation");
    hit[d] = true;
  }
  if (data.fusion.size() != r) {
    throw StructuralError("fusion tensor has wrong first dimension");
  }
  fusion_.reserve(r * r * r);
  for (std::size_t i = 0; i < r; ++i) {
    if (data.fusion[i].size() != r) {
      throw StructuralError("fusion[" + std::to_string(i) +
                            "] has wrong dimension");
    }
    for (std::size_t j = 0; j < r; ++j) {
      if (data.fusion[i][j].size() != r) {
        throw StructuralError("fusion[" + std::to_string(i) + "][" +
                              std::to_string(j) + "] has wrong dimension");
      }
      for (auto n : data.fusion[i][j]) {
        if (n < 0) throw StructuralError("negative fusion multiplicity");
        fusion_.push_back(n);
      }
    }
  }
  labels_ = std::move(data.labels);
  unit_ = std::move(data.unit);
  dual_ = std::move(data.dual);
}

FusionRing FusionRing::validated(FusionRingData data) {
  FusionRing ring(std::move(data));
  auto report = validate_ring(ring);
  if (!report.passed()) {
    const auto& v = report.violations.front();
    throw AxiomError("fusion ring fails " + v.axiom + " (" +
                     std::to_string(report.violations.size()) +
                     " violations)");
  }
  return ring;
}

std::optional<std::size_t> FusionRing::index_of(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

FusionRingData FusionRing::data() const {
  FusionRingData d{labels_, unit_, dual_, {}};
  const auto r = rank();
  d.fusion.assign(r, std::vector<std::vector<Multiplicity>>(
                         r, std::vector<Multiplicity>(r, 0)));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) d.fusion[i][j][k] = N(i, j, k);
  return d;
}

ValidationReport validate_ring(const FusionRingData& data) {
  return validate_ring(FusionRing(data));
}

ValidationReport validate_ring(const FusionRing& ring) {
  ValidationReport report;
  const auto r = ring.rank();
  const auto& u = ring.unit();

  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t k = 0; k < r; ++k) {
      Multiplicity left = 0;
      Multiplicity right = 0;
      for (std::size_t i = 0; i < r; ++i) {
        left += u[i] * ring.N(i, j, k);
        right += u[i] * ring.N(j, i, k);
      }
      const Multiplicity delta = j == k ? 1 : 0;
      if (left != delta) report.add("unit_left", {j, k}, left, delta);
      if (right != delta) report.add("unit_right", {j, k}, right, delta);
    }
  }

  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k)
        for (std::size_t l = 0; l < r; ++l) {
          Multiplicity lhs = 0;
          Multiplicity rhs = 0;
          for (std::size_t m = 0; m < r; ++m) {
            lhs += ring.N(i, j, m) * ring.N(m, k, l);
            rhs += ring.N(j, k, m) * ring.N(i, m, l);
          }
          if (lhs != rhs) report.add("associativity", {i, j, k, l}, lhs, rhs);
        }

  for (std::size_t i = 0; i < r; ++i) {
    const auto d = ring.dual(i);
    if (ring.dual(d) != i) {
      report.add("dual_involution", {i}, static_cast<std::int64_t>(ring.dual(d)),
                 static_cast<std::int64_t>(i));
    }
    if (u[d] != u[i]) report.add("dual_unit_support", {i}, u[d], u[i]);
    for (std::size_t j = 0; j < r; ++j) {
      Multiplicity pairing = 0;
      for (std::size_t k = 0; k < r; ++k) pairing += u[k] * ring.N(i, j, k);
      const Multiplicity expected = j == d ? 1 : 0;
      if (pairing != expected) report.add("duality", {i, j}, pairing, expected);
    }
  }

  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) {
        const auto n = ring.N(i, j, k);
        const auto a = ring.N(ring.dual(i), k, j);
        const auto b = ring.N(k, ring.dual(j), i);
        if (n != a) report.add("frobenius_left", {i, j, k}, n, a);
        if (n != b) report.add("frobenius_right", {i, j, k}, n, b);
      }

  // With a simple unit no product of non-zero objects vanishes; in the
  // multifusion case only whole fusion matrices must be non-zero.
  for (std::size_t i = 0; i < r; ++i) {
    Multiplicity matrix_total = 0;
    for (std::size_t j = 0; j < r; ++j) {
      Multiplicity row = 0;
      for (std::size_t k = 0; k < r; ++k) row += ring.N(i, j, k);
      matrix_total += row;
      if (ring.unit_is_simple() && row == 0) {
        report.add("nonzero_product", {i, j}, 0, 1);
      }
    }
    if (matrix_total == 0) report.add("nonzero_fusion_matrix", {i}, 0, 1);
  }
  return report;
}

ObjectVector tensor(const FusionRing& ring, const ObjectVector& x,
                    const ObjectVector& y) {
  require_rank(ring, x);
  require_rank(ring, y);
  const auto r = ring.rank();
  std::vector<Multiplicity> out(r, 0);
  for (std::size_t i = 0; i < r; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < r; ++j) {
      if (y[j] == 0) continue;
      const auto c = x[i] * y[j];
      for (std::size_t k = 0; k < r; ++k) out[k] += c * ring.N(i, j, k);
    }
  }
  return ObjectVector(std::move(out));
}

bool is_simple(const FusionRing& ring, const ObjectVector& x) {
  require_rank(ring, x);
  require_nonzero(x);
  return x.length() == 1;
}

std::optional<ObjectVector> is_left_invertible(const FusionRing& ring,
                                               const ObjectVector& x) {
  return find_inverse(ring, x, Side::left);
}

std::optional<ObjectVector> is_right_invertible(const FusionRing& ring,
                                                const ObjectVector& x) {
  return find_inverse(ring, x, Side::right);
}

ObjectVector dual_object(const FusionRing& ring, const ObjectVector& x) {
  require_rank(ring, x);
  std::vector<Multiplicity> out(ring.rank(), 0);
  for (std::size_t i = 0; i < ring.rank(); ++i) out[ring.dual(i)] = x[i];
  return ObjectVector(std::move(out));
}

double fp_dimension(const FusionRing& ring, const ObjectVector& x,
                    const FpOptions& options) {
  require_rank(ring, x);
  const auto r = ring.rank();
  // matrix[k][j] = multiplicity of k in x ⊗ X_j
  std::vector<std::vector<double>> matrix(r, std::vector<double>(r, 0.0));
  std::vector<std::vector<bool>> support(r, std::vector<bool>(r, false));
  for (std::size_t i = 0; i < r; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) {
        const auto n = x[i] * ring.N(i, j, k);
        matrix[k][j] += static_cast<double>(n);
        if (n) support[k][j] = true;
      }
  }

  // A non-negative matrix is nilpotent iff its support graph is acyclic.
  auto power = support;
  for (std::size_t step = 1; step < r; ++step) {
    std::vector<std::vector<bool>> next(r, std::vector<bool>(r, false));
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < r; ++b)
        if (power[a][b])
          for (std::size_t c = 0; c < r; ++c)
            if (support[b][c]) next[a][c] = true;
    power = std::move(next);
  }
  bool nilpotent = true;
  for (const auto& row : power)
    for (bool b : row) nilpotent = nilpotent && !b;
  if (nilpotent) return 0.0;

  // Shift by the identity so periodic (e.g. permutation) matrices converge.
  std::vector<double> v(r, 1.0);
  double lambda = 0.0;
  for (int it = 0; it < options.max_iterations; ++it) {
    std::vector<double> w(r, 0.0);
    for (std::size_t k = 0; k < r; ++k) {
      w[k] = v[k];
      for (std::size_t j = 0; j < r; ++j) w[k] += matrix[k][j] * v[j];
    }
    const double next = *std::max_element(w.begin(), w.end());
    double drift = 0.0;
    for (std::size_t k = 0; k < r; ++k) {
      w[k] /= next;
      drift = std::max(drift, std::abs(w[k] - v[k]));
    }
    const bool settled = it > 0 &&
                         std::abs(next - lambda) <= options.tolerance * 1e-3 &&
                         drift <= options.tolerance;
    lambda = next;
    v = std::move(w);
    if (settled) return lambda - 1.0;
  }
  throw ConvergenceError("power iteration did not converge within " +
                         std::to_string(options.max_iterations) +
                         " iterations");
}

ClassificationReport classify_internal_end(const FusionRing& ring,
                                           const ObjectVector& x, Side side) {
  require_rank(ring, x);
  require_nonzero(x);
  ClassificationReport report;
  report.object.assign(x.components().begin(), x.components().end());
  const auto dx = dual_object(ring, x);
  if (side == Side::left) {
    report.algebra_form = AlgebraForm::XtensorXdual;
    report.algebra = tensor(ring, x, dx);
    report.inverse_witness = is_left_invertible(ring, x);
  } else {
    report.algebra_form = AlgebraForm::dualXtensorX;
    report.algebra = tensor(ring, dx, x);
    report.inverse_witness = is_right_invertible(ring, x);
  }
  const bool simple = is_simple(ring, x);
  report.simplistic_left = report.simplistic_right = simple;
  const bool essential = report.inverse_witness.has_value();
  report.essential_left = report.essential_right = essential;
  if (!essential) {
    // The unit is what (- ⊗ X) resp. (X ⊗ -) fails to reach.
    for (std::size_t i = 0; i < ring.rank(); ++i)
      if (ring.unit()[i] != 0) report.unreachable.push_back(i);
  }
  return report;
}

ObjectVector parse_object(const FusionRing& ring, std::string_view text) {
  if (auto idx = ring.index_of(text)) return ring.basis(*idx);
  std::vector<Multiplicity> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    auto token = text.substr(pos, end - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    Multiplicity value = 0;
    auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} ||
        ptr != token.data() + token.size()) {
      throw ParseError("'" + std::string(text) +
                       "' is neither a label nor a multiplicity vector");
    }
    values.push_back(value);
    pos = end + 1;
  }
  if (values.size() != ring.rank()) {
    throw ParseError("object '" + std::string(text) + "' has " +
                     std::to_string(values.size()) + " components, rank is " +
                     std::to_string(ring.rank()));
  }
  for (auto v : values)
    if (v < 0) throw ParseError("negative multiplicity in object");
  return ObjectVector(std::move(values));
}

}  // namespace divalg
