#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "tridisc/disc.hpp"
#include "tridisc/eisenstein.hpp"

namespace tridisc {

/// Region of the unit triangular lattice.
struct PatchSpec {
  enum class Shape { Triangle, Rhombus, Hexagon, Parallelogram };
  Shape shape = Shape::Triangle;
  int s1 = 1;
  int s2 = 1;  // parallelogram only

  /// "triangle:3", "rhombus:6", "hexagon:2", "parallelogram:4x3".
  static PatchSpec parse(std::string_view text);
  std::string to_string() const;
};

struct Patch {
  CombinatorialDisc disc;
  std::vector<EisensteinPoint> lattice;  // lattice coordinate of each vertex
};

/// Vertices are numbered row-major in lattice coordinates (row = w
/// component, then the real component).
Patch generate_patch_with_coordinates(const PatchSpec& spec);
CombinatorialDisc generate_patch(const PatchSpec& spec);

/// Interior vertex whose distance to the nearest corner is d; the smallest
/// id wins. Throws NotRealizable when none exists or the disc has no corner.
VertexId vertex_at_corner_distance(const CombinatorialDisc& disc, int d);

/// Graph distance from v to the nearest corner, or -1 without corners.
int corner_distance(const CombinatorialDisc& disc, VertexId v);

/// Graph distance from v to the nearest boundary vertex.
int boundary_distance(const CombinatorialDisc& disc, VertexId v);

struct BranchAtVertex {
  VertexId vertex = 0;
};
struct BranchAtCornerDistance {
  int distance = 0;
};
using BranchSelector = std::variant<BranchAtVertex, BranchAtCornerDistance>;

struct CoverSpec {
  PatchSpec base;
  BranchSelector branch;
  int sheets = 2;
};

struct BranchedCover {
  CombinatorialDisc disc;
  std::vector<VertexId> projection;  // cover vertex -> base vertex
  VertexId branch_vertex = 0;        // in the cover
  VertexId base_branch_vertex = 0;
};

/// k-sheeted cover of a regular base branched at one interior vertex: the
/// base is slit along the shortest path from the branch vertex to the
/// boundary and sheet i's right bank is glued to sheet (i+1) mod k's left
/// bank. Throws BranchOnBoundary for boundary branch vertices.
BranchedCover branched_cover(const CombinatorialDisc& base, VertexId branch, int sheets);
BranchedCover branched_cover(const CoverSpec& spec);

/// Two covers of the same base with equal boundary words and irregular
/// valence 6k, branched at vertices with corner distances d1 != d2.
std::pair<BranchedCover, BranchedCover> counterexample_pair(const PatchSpec& base, int d1, int d2, int sheets);

}  // namespace tridisc
