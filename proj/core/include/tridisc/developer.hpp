#pragma once

#include <optional>
#include <span>
#include <vector>

#include "tridisc/disc.hpp"
#include "tridisc/eisenstein.hpp"

namespace tridisc {

/// A disc slit open along an edge path from an interior vertex to the
/// boundary.
///
/// Every path vertex after the first is doubled: the copy on the left of
/// the path (walking from the cone vertex outwards) keeps its id, the copy
/// on the right gets a fresh id. The cone vertex itself stays single and
/// ends up on the boundary of the cut disc.
struct CutDisc {
  CombinatorialDisc base;
  CombinatorialDisc cut;
  VertexId cone_vertex = 0;          // same id in base and cut
  std::vector<VertexId> path;        // base ids, cone vertex first
  std::vector<VertexId> left_path;   // cut ids along the left bank
  std::vector<VertexId> right_path;  // cut ids along the right bank
  std::vector<VertexId> to_base;     // cut vertex -> base vertex

  VertexId p1() const { return left_path.back(); }
  VertexId p2() const { return right_path.back(); }
};

/// Shortest edge path from an interior vertex to the boundary; at each step
/// the smallest-id neighbour one step closer to the boundary is taken.
std::vector<VertexId> shortest_path_to_boundary(const CombinatorialDisc& disc, VertexId from);

/// Cuts along an explicit chordless path (interior vertices, then one
/// boundary vertex).
CutDisc cut_along_path(const CombinatorialDisc& disc, std::span<const VertexId> path);

/// Cuts an irregular disc from its irregular vertex. Throws NotIrregular on
/// regular discs and MultipleIrregular when the type is not (6, n).
CutDisc cut_along_shortest_path(const CombinatorialDisc& disc);
CutDisc cut_along_shortest_path(const CombinatorialDisc& disc, VertexId cone_vertex);

/// Inverse of the cut: identifies each right-bank copy with its original.
CombinatorialDisc reglue(const CutDisc& cut);

/// Exact developing map of a flat simply connected disc into the lattice.
struct Development {
  std::vector<EisensteinPoint> position;  // indexed by vertex of the developed disc
  Triangle seed{};                        // placed at 0, 1, w
  std::optional<VertexId> cone_vertex;    // present for cut discs
  std::vector<VertexId> left_path;
  std::vector<VertexId> right_path;
  std::optional<EisensteinPoint> p1;
  std::optional<EisensteinPoint> p2;
  int holonomy = 0;  // rotation class mod 6 between the two banks
};

/// Places the face holding the boundary half-edge leaving the boundary start
/// vertex at (0, 1, w) and propagates across edges. Throws
/// PropagationConflict when a vertex would get two positions, i.e. when the
/// disc carries interior curvature.
Development develop(const CombinatorialDisc& disc);
Development develop(const CutDisc& cut);

/// k in 0..5 such that w^k maps the left bank onto the right bank around the
/// cone vertex. Zero for developments without a cut.
int holonomy_rotation(const Development& dev);

/// Apex m of the isosceles triangle p1 m p2 whose apex angle is n*pi/3,
/// taken on the side that the development's orientation picks:
/// p2 - m = w^n (p1 - m). Returns nullopt (degenerate) when n is a multiple
/// of 6. Throws DegenerateCut when p1 == p2 for other n.
std::optional<EisensteinPoint> locate_singularity(const Development& dev, int n);

/// Walks the boundary using only the turning angles given by boundary
/// degrees, in the same frame as develop(). Returns q + 1 positions; the last
/// one equals the first exactly when the boundary closes.
std::vector<EisensteinPoint> develop_boundary_walk(const CombinatorialDisc& disc);

/// True when the boundary walk returns to its start with its start heading.
bool boundary_closes(const CombinatorialDisc& disc);

}  // namespace tridisc
