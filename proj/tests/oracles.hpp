#pragma once

// Reference computations written without the library, used to derive the
// frozen values in the tests.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace oracle {

using Tensor3 = std::vector<std::vector<std::vector<long>>>;

// S3 fusion rules from the character table. Basis: trivial, sign, standard.
Tensor3 s3_fusion_from_characters();

// Z/n group ring: g^i ⊗ g^j = g^{i+j mod n}.
Tensor3 cyclic_fusion(std::size_t n);

// Matrix units e_ij (index i*n+j) multiplied as actual n×n 0/1 matrices.
Tensor3 matrix_unit_fusion(std::size_t n);

std::uint64_t stirling2(std::size_t n, std::size_t k);

// Isomorphism classes of (Y, f: S -> Y) with |S| = marks, |Y| = carrier,
// under relabeling of Y: one per kernel partition of S with at most |Y|
// blocks.
std::uint64_t pointed_map_classes(std::size_t marks, std::size_t carrier);

std::uint64_t ipow(std::uint64_t base, std::uint64_t exp);

}  // namespace oracle
