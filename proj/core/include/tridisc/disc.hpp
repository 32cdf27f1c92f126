#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tridisc/error.hpp"

namespace tridisc {

using VertexId = std::int32_t;
using HalfedgeId = std::int32_t;
using Triangle = std::array<VertexId, 3>;

inline constexpr HalfedgeId kNoHalfedge = -1;

/// Triangulated closed disc stored as an oriented half-edge structure.
///
/// Faces are counterclockwise triangles; half-edge 3*f+i runs from corner i
/// of face f to corner i+1. A half-edge without a twin lies on the boundary,
/// and the boundary half-edges chain into the counterclockwise boundary
/// cycle. Instances are immutable once built.
class CombinatorialDisc {
 public:
  /// Validates and builds a disc. Vertex ids may be sparse; they are
  /// compacted to 0..V-1 preserving their order. Face order is irrelevant.
  static CombinatorialDisc from_triangles(std::span<const Triangle> triangles);

  int num_vertices() const { return static_cast<int>(boundary_flag_.size()); }
  int num_faces() const { return static_cast<int>(faces_.size()); }
  int num_edges() const { return num_edges_; }
  int num_boundary_vertices() const { return static_cast<int>(boundary_cycle_.size()); }
  int num_interior_vertices() const { return num_vertices() - num_boundary_vertices(); }

  std::span<const Triangle> faces() const { return faces_; }

  bool is_boundary(VertexId v) const { return boundary_flag_[check(v)]; }
  int degree(VertexId v) const { return static_cast<int>(rotation_[check(v)].size()); }

  /// Neighbours in counterclockwise order. For a boundary vertex the list
  /// runs from its successor on the boundary cycle to its predecessor.
  std::span<const VertexId> neighbors(VertexId v) const { return rotation_[check(v)]; }

  /// Boundary vertices in counterclockwise order, starting at the lowest id.
  std::span<const VertexId> boundary_cycle() const { return boundary_cycle_; }

  bool adjacent(VertexId u, VertexId v) const;

  /// Id the vertex carried in the input to from_triangles.
  VertexId original_id(VertexId v) const { return original_ids_[check(v)]; }

  // Half-edge access.
  int num_halfedges() const { return 3 * num_faces(); }
  VertexId origin(HalfedgeId h) const { return faces_[h / 3][h % 3]; }
  VertexId target(HalfedgeId h) const { return faces_[h / 3][(h % 3 + 1) % 3]; }
  HalfedgeId next(HalfedgeId h) const { return 3 * (h / 3) + (h % 3 + 1) % 3; }
  HalfedgeId prev(HalfedgeId h) const { return 3 * (h / 3) + (h % 3 + 2) % 3; }
  HalfedgeId twin(HalfedgeId h) const { return twin_[h]; }
  int face(HalfedgeId h) const { return h / 3; }
  /// Half-edge leaving v; for boundary vertices it is the boundary one.
  HalfedgeId outgoing(VertexId v) const { return outgoing_[check(v)]; }
  /// Next outgoing half-edge counterclockwise around its origin, or
  /// kNoHalfedge when h is the last one before the boundary gap.
  HalfedgeId rotate_ccw(HalfedgeId h) const { return twin_[prev(h)]; }
  std::optional<HalfedgeId> find_halfedge(VertexId from, VertexId to) const;

  bool operator==(const CombinatorialDisc& other) const {
    return faces_ == other.faces_ && original_ids_ == other.original_ids_;
  }

 private:
  CombinatorialDisc() = default;
  VertexId check(VertexId v) const {
    if (v < 0 || v >= num_vertices()) throw Error(ErrorCode::UnknownVertex, "vertex " + std::to_string(v));
    return v;
  }

  std::vector<Triangle> faces_;
  std::vector<HalfedgeId> twin_;
  std::vector<HalfedgeId> outgoing_;
  std::vector<bool> boundary_flag_;
  std::vector<std::vector<VertexId>> rotation_;
  std::vector<VertexId> boundary_cycle_;
  std::vector<VertexId> original_ids_;
  int num_edges_ = 0;
};

struct VertexProfile {
  VertexId vertex = 0;
  int degree = 0;
  bool interior = false;
  /// Incident triangle count; degree - 1 on the boundary, degree inside.
  int triangles = 0;
};

VertexProfile vertex_profile(const CombinatorialDisc& disc, VertexId v);

/// Type (6, n): every interior vertex has degree 6 except at most one.
struct TypeClassification {
  enum class Kind { Regular, Irregular };
  Kind kind = Kind::Regular;
  VertexId vertex = -1;  // irregular vertex, or -1
  int valence = 6;

  bool regular() const { return kind == Kind::Regular; }
  bool operator==(const TypeClassification&) const = default;
};

/// Throws MultipleIrregular when two or more interior vertices deviate from 6.
TypeClassification classify_type(const CombinatorialDisc& disc);

/// Number of edges on a shortest path between a and b.
int graph_distance(const CombinatorialDisc& disc, VertexId a, VertexId b);

/// Breadth-first distances from a set of sources; unreachable stays -1.
std::vector<int> bfs_distances(const CombinatorialDisc& disc, std::span<const VertexId> sources);

/// Boundary vertices of degree 2, in boundary-cycle order.
std::vector<VertexId> corners(const CombinatorialDisc& disc);

/// Cyclic sequence of boundary degrees, read from the marked start vertex.
using BoundaryWord = std::vector<int>;
BoundaryWord boundary_word(const CombinatorialDisc& disc);

}  // namespace tridisc
