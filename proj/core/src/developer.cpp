#include "tridisc/developer.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace tridisc {

namespace {

enum class Side : signed char { Unset, Left, Right };

// Outgoing half-edges of v in counterclockwise order, starting with the
// boundary one for boundary vertices.
std::vector<HalfedgeId> fan(const CombinatorialDisc& disc, VertexId v) {
  std::vector<HalfedgeId> out;
  const HalfedgeId start = disc.outgoing(v);
  HalfedgeId h = start;
  do {
    out.push_back(h);
    h = disc.rotate_ccw(h);
  } while (h != kNoHalfedge && h != start);
  return out;
}

std::size_t index_towards(const CombinatorialDisc& disc, const std::vector<HalfedgeId>& hs, VertexId to) {
  for (std::size_t i = 0; i < hs.size(); ++i) {
    if (disc.target(hs[i]) == to) return i;
  }
  throw Error(ErrorCode::InvalidArgument, "cut path is not an edge path");
}

}  // namespace

std::vector<VertexId> shortest_path_to_boundary(const CombinatorialDisc& disc, VertexId from) {
  if (disc.is_boundary(from)) {
    throw Error(ErrorCode::InvalidArgument, "vertex " + std::to_string(from) + " already on the boundary");
  }
  const auto dist = bfs_distances(disc, disc.boundary_cycle());
  std::vector<VertexId> path{from};
  VertexId cur = from;
  while (dist[cur] > 0) {
    VertexId best = -1;
    for (VertexId u : disc.neighbors(cur)) {
      if (dist[u] == dist[cur] - 1 && (best < 0 || u < best)) best = u;
    }
    cur = best;
    path.push_back(cur);
  }
  return path;
}

CutDisc cut_along_path(const CombinatorialDisc& disc, std::span<const VertexId> path) {
  if (path.size() < 2) throw Error(ErrorCode::InvalidArgument, "cut path needs at least one edge");
  const int nv = disc.num_vertices();
  const std::size_t last = path.size() - 1;
  std::vector<int> position_on_path(nv, -1);
  for (std::size_t i = 0; i < path.size(); ++i) {
    const VertexId v = path[i];
    if (disc.is_boundary(v) != (i == last)) {
      throw Error(ErrorCode::InvalidArgument, "cut path must run through interior vertices and end on the boundary");
    }
    if (position_on_path[v] >= 0) throw Error(ErrorCode::InvalidArgument, "cut path is not simple");
    position_on_path[v] = static_cast<int>(i);
    if (i > 0 && !disc.adjacent(path[i - 1], v)) throw Error(ErrorCode::InvalidArgument, "cut path is not an edge path");
  }

  std::vector<Side> side(disc.num_faces(), Side::Unset);
  const auto mark = [&](HalfedgeId h, Side s) {
    Side& cur = side[disc.face(h)];
    if (cur != Side::Unset && cur != s) throw Error(ErrorCode::InvalidArgument, "cut path has a chord");
    cur = s;
  };
  for (std::size_t i = 1; i <= last; ++i) {
    const VertexId u = path[i];
    const auto hs = fan(disc, u);
    const std::size_t back = index_towards(disc, hs, path[i - 1]);
    if (i < last) {
      // Left bank: sweep counterclockwise from the forward edge to the backward one.
      const std::size_t fwd = index_towards(disc, hs, path[i + 1]);
      for (std::size_t k = fwd; k != back; k = (k + 1) % hs.size()) mark(hs[k], Side::Left);
      for (std::size_t k = back; k != fwd; k = (k + 1) % hs.size()) mark(hs[k], Side::Right);
    } else {
      // Linear fan: faces before the edge back along the path are on the left.
      for (std::size_t k = 0; k < back; ++k) mark(hs[k], Side::Left);
      for (std::size_t k = back; k < hs.size(); ++k) mark(hs[k], Side::Right);
    }
  }

  std::vector<Triangle> faces(disc.faces().begin(), disc.faces().end());
  for (int f = 0; f < disc.num_faces(); ++f) {
    if (side[f] != Side::Right) continue;
    for (VertexId& c : faces[f]) {
      const int i = position_on_path[c];
      if (i >= 1) c = nv + i - 1;
    }
  }

  CutDisc out{disc, CombinatorialDisc::from_triangles(faces), path[0], {path.begin(), path.end()}, {}, {}, {}};
  out.to_base.resize(out.cut.num_vertices());
  for (VertexId v = 0; v < nv; ++v) out.to_base[v] = v;
  out.left_path.push_back(path[0]);
  out.right_path.push_back(path[0]);
  for (std::size_t i = 1; i <= last; ++i) {
    out.to_base[nv + i - 1] = path[i];
    out.left_path.push_back(path[i]);
    out.right_path.push_back(static_cast<VertexId>(nv + i - 1));
  }
  return out;
}

CutDisc cut_along_shortest_path(const CombinatorialDisc& disc) {
  const TypeClassification type = classify_type(disc);
  if (type.regular()) throw Error(ErrorCode::NotIrregular, "disc has no irregular interior vertex");
  return cut_along_path(disc, shortest_path_to_boundary(disc, type.vertex));
}

CutDisc cut_along_shortest_path(const CombinatorialDisc& disc, VertexId cone_vertex) {
  const TypeClassification type = classify_type(disc);
  if (type.regular() || type.vertex != cone_vertex) {
    throw Error(ErrorCode::NotIrregular, "vertex " + std::to_string(cone_vertex) + " is not the irregular vertex");
  }
  return cut_along_path(disc, shortest_path_to_boundary(disc, cone_vertex));
}

CombinatorialDisc reglue(const CutDisc& cut) {
  std::vector<Triangle> faces;
  faces.reserve(cut.cut.num_faces());
  for (const Triangle& t : cut.cut.faces()) faces.push_back({cut.to_base[t[0]], cut.to_base[t[1]], cut.to_base[t[2]]});
  return CombinatorialDisc::from_triangles(faces);
}

Development develop(const CombinatorialDisc& disc) {
  Development dev;
  const int nv = disc.num_vertices();
  std::vector<bool> placed(nv, false);
  dev.position.assign(nv, {});

  const HalfedgeId seed_edge = disc.outgoing(disc.boundary_cycle().front());
  const int seed_face = disc.face(seed_edge);
  dev.seed = {disc.origin(seed_edge), disc.target(seed_edge), disc.target(disc.next(seed_edge))};
  const EisensteinPoint seed_pos[3] = {{0, 0}, {1, 0}, EisensteinPoint::omega()};
  for (int i = 0; i < 3; ++i) {
    dev.position[dev.seed[i]] = seed_pos[i];
    placed[dev.seed[i]] = true;
  }

  std::vector<bool> visited(disc.num_faces(), false);
  std::deque<int> queue{seed_face};
  visited[seed_face] = true;
  while (!queue.empty()) {
    const int f = queue.front();
    queue.pop_front();
    for (int i = 0; i < 3; ++i) {
      const HalfedgeId t = disc.twin(3 * f + i);
      if (t == kNoHalfedge || visited[disc.face(t)]) continue;
      const VertexId a = disc.origin(t), b = disc.target(t), c = disc.target(disc.next(t));
      const EisensteinPoint pc = dev.position[a] + (dev.position[b] - dev.position[a]).rotated();
      if (placed[c] && dev.position[c] != pc) {
        throw Error(ErrorCode::PropagationConflict, "vertex " + std::to_string(c) + " reached at two positions");
      }
      dev.position[c] = pc;
      placed[c] = true;
      visited[disc.face(t)] = true;
      queue.push_back(disc.face(t));
    }
  }
  for (const Triangle& t : disc.faces()) {
    const EisensteinPoint e = dev.position[t[1]] - dev.position[t[0]];
    if (e.norm() != 1 || dev.position[t[2]] - dev.position[t[0]] != e.rotated()) {
      throw Error(ErrorCode::PropagationConflict, "face (" + std::to_string(t[0]) + ", " + std::to_string(t[1]) + ", " +
                                                      std::to_string(t[2]) + ") is not a unit lattice triangle");
    }
  }
  return dev;
}

Development develop(const CutDisc& cut) {
  Development dev = develop(cut.cut);
  dev.cone_vertex = cut.cone_vertex;
  dev.left_path = cut.left_path;
  dev.right_path = cut.right_path;
  dev.p1 = dev.position[cut.p1()];
  dev.p2 = dev.position[cut.p2()];
  dev.holonomy = holonomy_rotation(dev);
  return dev;
}

int holonomy_rotation(const Development& dev) {
  if (!dev.cone_vertex || dev.left_path.size() < 2) return 0;
  const EisensteinPoint m = dev.position[*dev.cone_vertex];
  const EisensteinPoint left = dev.position[dev.left_path[1]] - m;
  const EisensteinPoint right = dev.position[dev.right_path[1]] - m;
  for (int k = 0; k < 6; ++k) {
    if (left.rotated(k) == right) return k;
  }
  throw Error(ErrorCode::PropagationConflict, "cut banks are not related by a lattice rotation");
}

std::optional<EisensteinPoint> locate_singularity(const Development& dev, int n) {
  const int r = ((n % 6) + 6) % 6;
  if (r == 0) return std::nullopt;
  if (!dev.p1 || !dev.p2) throw Error(ErrorCode::InvalidArgument, "development has no cut");
  const EisensteinPoint p1 = *dev.p1, p2 = *dev.p2;
  if (p1 == p2) throw Error(ErrorCode::DegenerateCut, "p1 == p2 with valence " + std::to_string(n));
  const EisensteinPoint rot = EisensteinPoint::omega_pow(r);
  const auto apex = (rot * p1 - p2).divided_by(rot - EisensteinPoint{1, 0});
  if (!apex) throw Error(ErrorCode::DegenerateCut, "apex falls off the lattice");
  return apex;
}

std::vector<EisensteinPoint> develop_boundary_walk(const CombinatorialDisc& disc) {
  const auto cycle = disc.boundary_cycle();
  std::vector<EisensteinPoint> out{{0, 0}};
  EisensteinPoint dir{1, 0};
  for (std::size_t i = 1; i <= cycle.size(); ++i) {
    out.push_back(out.back() + dir);
    // Interior angle (deg - 1) * pi/3 turns the heading by (4 - deg) * pi/3.
    dir = dir.rotated(4 - disc.degree(cycle[i % cycle.size()]));
  }
  return out;
}

bool boundary_closes(const CombinatorialDisc& disc) {
  const auto walk = develop_boundary_walk(disc);
  int turning = 0;
  for (VertexId v : disc.boundary_cycle()) turning += 4 - disc.degree(v);
  return walk.back() == walk.front() && ((turning % 6) + 6) % 6 == 0;
}

}  // namespace tridisc
