#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tridisc/disc.hpp"

namespace tridisc {

/// Equivalence used when comparing discs.
///   FixStart:        orientation preserving, marked boundary start kept.
///   RotateStart:     orientation preserving, any boundary start.
///   AllowReflection: any boundary start, orientation may be reversed.
enum class IsoMode { FixStart, RotateStart, AllowReflection };

std::string_view to_string(IsoMode mode);
IsoMode parse_iso_mode(std::string_view text);

/// Relabeling-invariant linearization of a rooted oriented disc.
///
/// Built by a breadth-first traversal from a boundary root: each vertex is
/// emitted as (boundary flag, degree, neighbour labels in rotation order),
/// where unseen neighbours are labelled on first sight. Interior rotations
/// start at the edge the vertex was discovered through; boundary rotations
/// are linear. The code is the lexicographic minimum over admissible roots.
struct CanonicalCode {
  IsoMode mode = IsoMode::FixStart;
  std::vector<std::int32_t> words;

  std::string to_string() const;
  auto operator<=>(const CanonicalCode&) const = default;
};

CanonicalCode canonical_code(const CombinatorialDisc& disc, IsoMode mode);

/// Vertex bijection d1 -> d2 preserving the rotation system (reversed when
/// reverses_orientation is set).
struct IsoWitness {
  std::vector<VertexId> mapping;
  bool reverses_orientation = false;
};

std::optional<IsoWitness> is_isomorphic(const CombinatorialDisc& d1, const CombinatorialDisc& d2, IsoMode mode);

/// Independent check that a witness maps darts to darts and commutes with
/// the rotation successor on every dart.
bool verify_witness(const CombinatorialDisc& d1, const CombinatorialDisc& d2, const IsoWitness& witness);

/// Smallest graph distance from the irregular vertex to a corner. Throws
/// NotIrregular on regular discs and NoCorners without degree-2 vertices.
int distance_invariant(const CombinatorialDisc& disc);

}  // namespace tridisc
