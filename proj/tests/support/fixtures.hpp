#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tridisc/disc.hpp"

namespace tridisc::testing {

CombinatorialDisc single_triangle();
CombinatorialDisc hexagon_fan();
/// n triangles fanned around vertex 0, boundary 1..n.
CombinatorialDisc wheel(int n);

/// Face list of `disc` under a random vertex permutation, random face order
/// and random rotation of each triple. `perm_out` receives old -> new ids.
std::vector<Triangle> shuffled_faces(const CombinatorialDisc& disc, std::uint64_t seed,
                                     std::vector<VertexId>* perm_out = nullptr);

/// Same disc with its marked start moved `shift` steps along the boundary.
CombinatorialDisc with_start_shifted(const CombinatorialDisc& disc, int shift);

/// Mirror image: every face reversed.
CombinatorialDisc mirrored(const CombinatorialDisc& disc);

/// Error code thrown by f, or nullopt when it returns normally.
template <class F>
std::optional<ErrorCode> error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace tridisc::testing
