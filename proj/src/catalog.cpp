#include "divalg/catalog.hpp"

#include <charconv>

#include "divalg/errors.hpp"

namespace divalg {

namespace {

using Tensor = std::vector<std::vector<std::vector<Multiplicity>>>;

Tensor zero_tensor(std::size_t r) {
  return Tensor(r, std::vector<std::vector<Multiplicity>>(
                       r, std::vector<Multiplicity>(r, 0)));
}

// Fusion data of a ring with simple unit at index 0 and a commutative product
// given on unordered pairs.
struct CommutativeBuilder {
  std::vector<std::string> labels;
  Tensor fusion;

  explicit CommutativeBuilder(std::vector<std::string> l)
      : labels(std::move(l)), fusion(zero_tensor(labels.size())) {
    for (std::size_t i = 0; i < labels.size(); ++i) {
      fusion[0][i][i] = 1;
      fusion[i][0][i] = 1;
    }
  }
  void set(std::size_t i, std::size_t j, std::vector<Multiplicity> product) {
    fusion[i][j] = product;
    fusion[j][i] = std::move(product);
  }
  FusionRing build(std::vector<std::size_t> dual) && {
    const auto r = labels.size();
    return FusionRing::validated({std::move(labels), ObjectVector::basis(r, 0),
                                  std::move(dual), std::move(fusion)});
  }
};

std::size_t parse_parameter(std::string_view name, std::string_view family) {
  auto rest = name.substr(family.size());
  if (rest.size() >= 2 && rest.front() == '(' && rest.back() == ')') {
    rest = rest.substr(1, rest.size() - 2);
  } else if (!rest.empty() && rest.front() == ':') {
    rest.remove_prefix(1);
  } else {
    throw UnknownNameError("malformed catalog name '" + std::string(name) +
                           "'");
  }
  std::size_t n = 0;
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), n);
  if (rest.empty() || ec != std::errc{} || ptr != rest.data() + rest.size()) {
    throw UnknownNameError("malformed parameter in '" + std::string(name) +
                           "'");
  }
  return n;
}

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

}  // namespace

FusionRing fibonacci_ring() {
  CommutativeBuilder b({"1", "tau"});
  b.set(1, 1, {1, 1});
  return std::move(b).build({0, 1});
}

FusionRing ising_ring() {
  CommutativeBuilder b({"1", "sigma", "epsilon"});
  b.set(1, 1, {1, 0, 1});
  b.set(1, 2, {0, 1, 0});
  b.set(2, 2, {1, 0, 0});
  return std::move(b).build({0, 1, 2});
}

FusionRing rep_s3_ring() {
  CommutativeBuilder b({"1", "sgn", "V"});
  b.set(1, 1, {1, 0, 0});
  b.set(1, 2, {0, 0, 1});
  b.set(2, 2, {1, 1, 1});
  return std::move(b).build({0, 1, 2});
}

FusionRing vec_cyclic_ring(std::size_t n) {
  if (n < 1 || n > 12) {
    throw UnknownNameError("vec_cyclic parameter must be in 1..12, got " +
                           std::to_string(n));
  }
  std::vector<std::string> labels{"1"};
  for (std::size_t i = 1; i < n; ++i)
    labels.push_back(i == 1 ? "g" : "g^" + std::to_string(i));
  auto fusion = zero_tensor(n);
  std::vector<std::size_t> dual(n);
  for (std::size_t i = 0; i < n; ++i) {
    dual[i] = (n - i) % n;
    for (std::size_t j = 0; j < n; ++j) fusion[i][j][(i + j) % n] = 1;
  }
  return FusionRing::validated({std::move(labels), ObjectVector::basis(n, 0),
                                std::move(dual), std::move(fusion)});
}

FusionRing matrix_multifusion_ring(std::size_t n) {
  if (n < 1 || n > 3) {
    throw UnknownNameError("matrix_multifusion parameter must be in 1..3, got " +
                           std::to_string(n));
  }
  const auto r = n * n;
  auto at = [n](std::size_t i, std::size_t j) { return i * n + j; };
  std::vector<std::string> labels;
  std::vector<std::size_t> dual(r);
  std::vector<Multiplicity> unit(r, 0);
  auto fusion = zero_tensor(r);
  for (std::size_t i = 0; i < n; ++i) {
    unit[at(i, i)] = 1;
    for (std::size_t j = 0; j < n; ++j) {
      labels.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
      dual[at(i, j)] = at(j, i);
      for (std::size_t l = 0; l < n; ++l) fusion[at(i, j)][at(j, l)][at(i, l)] = 1;
    }
  }
  return FusionRing::validated({std::move(labels), ObjectVector(std::move(unit)),
                                std::move(dual), std::move(fusion)});
}

FusionRing builtin_ring(std::string_view name) {
  return catalog_entry(name).ring;
}

CatalogEntry catalog_entry(std::string_view name) {
  if (name == "fib") {
    return {"fib", fibonacci_ring(), "Fibonacci: tau ⊗ tau = 1 ⊔ tau"};
  }
  if (name == "ising") {
    return {"ising", ising_ring(),
            "Ising: sigma ⊗ sigma = 1 ⊔ epsilon, a second simplistic but not "
            "essential witness"};
  }
  if (name == "rep_s3") {
    return {"rep_s3", rep_s3_ring(),
            "Rep(S3): V ⊗ V = 1 ⊔ sgn ⊔ V, from the S3 character table"};
  }
  if (starts_with(name, "vec_cyclic")) {
    const auto n = parse_parameter(name, "vec_cyclic");
    auto ring = vec_cyclic_ring(n);
    return {"vec_cyclic(" + std::to_string(n) + ")", std::move(ring),
            "pointed: group ring of Z/" + std::to_string(n)};
  }
  if (starts_with(name, "matrix_multifusion")) {
    const auto n = parse_parameter(name, "matrix_multifusion");
    auto ring = matrix_multifusion_ring(n);
    return {"matrix_multifusion(" + std::to_string(n) + ")", std::move(ring),
            "multifusion: e_ij ⊗ e_jl = e_il, unit = ⊔ e_ii"};
  }
  throw UnknownNameError("unknown catalog ring '" + std::string(name) + "'");
}

std::vector<CatalogEntry> catalog_entries() {
  std::vector<CatalogEntry> out;
  for (auto name : {"fib", "ising", "rep_s3"}) out.push_back(catalog_entry(name));
  for (std::size_t n = 1; n <= 12; ++n)
    out.push_back(catalog_entry("vec_cyclic(" + std::to_string(n) + ")"));
  for (std::size_t n = 1; n <= 3; ++n)
    out.push_back(catalog_entry("matrix_multifusion(" + std::to_string(n) + ")"));
  return out;
}

NimRepData regular_nimrep(const FusionRing& ring) {
  const auto r = ring.rank();
  NimRepData nr{ring.labels(), {}};
  nr.actions.assign(r, IntMatrix(r, std::vector<Multiplicity>(r, 0)));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) nr.actions[i][k][j] = ring.N(i, j, k);
  return nr;
}

}  // namespace divalg
