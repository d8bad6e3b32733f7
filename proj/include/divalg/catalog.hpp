#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "divalg/fusion_ring.hpp"
#include "divalg/nimrep.hpp"

namespace divalg {

struct CatalogEntry {
  std::string name;
  FusionRing ring;
  std::string provenance;
};

// Accepted names: fib, ising, rep_s3, vec_cyclic(n) with 1 <= n <= 12,
// matrix_multifusion(n) with 1 <= n <= 3. "vec_cyclic:3" is also accepted.
FusionRing builtin_ring(std::string_view name);
CatalogEntry catalog_entry(std::string_view name);

// Fixed entries plus the parameterized families at their listed sizes.
std::vector<CatalogEntry> catalog_entries();

FusionRing fibonacci_ring();
FusionRing ising_ring();
FusionRing rep_s3_ring();
FusionRing vec_cyclic_ring(std::size_t n);
FusionRing matrix_multifusion_ring(std::size_t n);

// Action of the ring on itself by left multiplication.
NimRepData regular_nimrep(const FusionRing& ring);

}  // namespace divalg
