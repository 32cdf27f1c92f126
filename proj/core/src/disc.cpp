#include "tridisc/disc.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <string>

namespace tridisc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorCode::NonManifoldEdge: return "NonManifoldEdge";
    case ErrorCode::InconsistentOrientation: return "InconsistentOrientation";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::NotADisc: return "NotADisc";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::MultipleIrregular: return "MultipleIrregular";
    case ErrorCode::NotIrregular: return "NotIrregular";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::PropagationConflict: return "PropagationConflict";
    case ErrorCode::DegenerateCut: return "DegenerateCut";
    case ErrorCode::BranchOnBoundary: return "BranchOnBoundary";
    case ErrorCode::NotRealizable: return "NotRealizable";
    case ErrorCode::NoCorners: return "NoCorners";
    case ErrorCode::InfeasibleByGaussBonnet: return "InfeasibleByGaussBonnet";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

// Rotates a triangle so that its smallest id comes first; orientation kept.
Triangle normalized(Triangle t) {
  const auto it = std::min_element(t.begin(), t.end());
  std::rotate(t.begin(), it, t.end());
  return t;
}

std::string edge_name(VertexId u, VertexId v) {
  return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

CombinatorialDisc CombinatorialDisc::from_triangles(std::span<const Triangle> triangles) {
  if (triangles.empty()) throw Error(ErrorCode::EmptyInput, "no faces");

  std::vector<VertexId> ids;
  ids.reserve(triangles.size() * 3);
  for (const Triangle& t : triangles) {
    for (VertexId v : t) {
      if (v < 0) throw Error(ErrorCode::InvalidArgument, "negative vertex id " + std::to_string(v));
    }
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) {
      throw Error(ErrorCode::DegenerateTriangle,
                  "face (" + std::to_string(t[0]) + ", " + std::to_string(t[1]) + ", " +
                      std::to_string(t[2]) + ") repeats a vertex");
    }
    ids.insert(ids.end(), t.begin(), t.end());
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  const auto compact = [&ids](VertexId v) {
    return static_cast<VertexId>(std::lower_bound(ids.begin(), ids.end(), v) - ids.begin());
  };

  CombinatorialDisc d;
  d.original_ids_ = ids;
  const int nv = static_cast<int>(ids.size());
  d.faces_.reserve(triangles.size());
  for (const Triangle& t : triangles) d.faces_.push_back(normalized({compact(t[0]), compact(t[1]), compact(t[2])}));
  std::sort(d.faces_.begin(), d.faces_.end());
  for (std::size_t i = 1; i < d.faces_.size(); ++i) {
    if (d.faces_[i] == d.faces_[i - 1]) {
      const Triangle& t = d.faces_[i];
      throw Error(ErrorCode::NonManifoldEdge, "duplicate face (" + std::to_string(ids[t[0]]) + ", " +
                                                  std::to_string(ids[t[1]]) + ", " + std::to_string(ids[t[2]]) + ")");
    }
  }

  // Group half-edges by undirected edge.
  const int nh = d.num_halfedges();
  std::map<std::pair<VertexId, VertexId>, std::vector<HalfedgeId>> edges;
  for (HalfedgeId h = 0; h < nh; ++h) {
    const VertexId u = d.origin(h), v = d.target(h);
    edges[{std::min(u, v), std::max(u, v)}].push_back(h);
  }
  for (const auto& [key, hs] : edges) {
    if (hs.size() > 2) {
      throw Error(ErrorCode::NonManifoldEdge,
                  "edge " + edge_name(ids[key.first], ids[key.second]) + " lies in " + std::to_string(hs.size()) + " faces");
    }
  }
  d.twin_.assign(nh, kNoHalfedge);
  for (const auto& [key, hs] : edges) {
    if (hs.size() != 2) continue;
    if (d.origin(hs[0]) == d.origin(hs[1])) {
      throw Error(ErrorCode::InconsistentOrientation,
                  "edge " + edge_name(ids[d.origin(hs[0])], ids[d.target(hs[0])]) + " used twice in the same direction");
    }
    d.twin_[hs[0]] = hs[1];
    d.twin_[hs[1]] = hs[0];
  }
  d.num_edges_ = static_cast<int>(edges.size());

  UnionFind uf(nv);
  for (const Triangle& t : d.faces_) {
    uf.unite(t[0], t[1]);
    uf.unite(t[1], t[2]);
  }
  for (VertexId v = 1; v < nv; ++v) {
    if (uf.find(v) != uf.find(0)) throw Error(ErrorCode::NotConnected, "vertex " + std::to_string(ids[v]) + " unreachable");
  }

  d.outgoing_.assign(nv, kNoHalfedge);
  d.boundary_flag_.assign(nv, false);
  std::vector<int> corner_count(nv, 0);
  int num_boundary_halfedges = 0;
  for (HalfedgeId h = 0; h < nh; ++h) {
    const VertexId v = d.origin(h);
    ++corner_count[v];
    if (d.twin_[h] == kNoHalfedge) {
      ++num_boundary_halfedges;
      if (d.boundary_flag_[v]) throw Error(ErrorCode::NotADisc, "boundary pinched at vertex " + std::to_string(ids[v]));
      d.boundary_flag_[v] = true;
      d.outgoing_[v] = h;
    } else if (d.outgoing_[v] == kNoHalfedge) {
      d.outgoing_[v] = h;
    }
  }
  if (num_boundary_halfedges == 0) throw Error(ErrorCode::NotADisc, "closed surface without boundary");

  d.rotation_.assign(nv, {});
  for (VertexId v = 0; v < nv; ++v) {
    auto& ring = d.rotation_[v];
    const HalfedgeId start = d.outgoing_[v];
    HalfedgeId h = start;
    int visited = 0;
    while (true) {
      ring.push_back(d.target(h));
      ++visited;
      const HalfedgeId n = d.rotate_ccw(h);
      if (n == kNoHalfedge) {
        ring.push_back(d.origin(d.prev(h)));
        break;
      }
      if (n == start) break;
      h = n;
      if (visited > corner_count[v]) break;
    }
    if (visited != corner_count[v]) {
      throw Error(ErrorCode::NotADisc, "faces around vertex " + std::to_string(ids[v]) + " do not form a single fan");
    }
  }

  VertexId start = -1;
  for (VertexId v = 0; v < nv && start < 0; ++v) {
    if (d.boundary_flag_[v]) start = v;
  }
  VertexId v = start;
  do {
    d.boundary_cycle_.push_back(v);
    v = d.target(d.outgoing_[v]);
  } while (v != start && static_cast<int>(d.boundary_cycle_.size()) <= num_boundary_halfedges);
  if (static_cast<int>(d.boundary_cycle_.size()) != num_boundary_halfedges) {
    throw Error(ErrorCode::NotADisc, "boundary has more than one component");
  }

  const int euler = nv - d.num_edges_ + d.num_faces();
  if (euler != 1) throw Error(ErrorCode::NotADisc, "Euler characteristic " + std::to_string(euler) + " != 1");
  return d;
}

bool CombinatorialDisc::adjacent(VertexId u, VertexId v) const {
  const auto& ring = rotation_[check(u)];
  check(v);
  return std::find(ring.begin(), ring.end(), v) != ring.end();
}

std::optional<HalfedgeId> CombinatorialDisc::find_halfedge(VertexId from, VertexId to) const {
  const HalfedgeId start = outgoing(from);
  check(to);
  HalfedgeId h = start;
  do {
    if (target(h) == to) return h;
    h = rotate_ccw(h);
  } while (h != kNoHalfedge && h != start);
  return std::nullopt;
}

VertexProfile vertex_profile(const CombinatorialDisc& disc, VertexId v) {
  VertexProfile p;
  p.vertex = v;
  p.degree = disc.degree(v);
  p.interior = !disc.is_boundary(v);
  p.triangles = p.interior ? p.degree : p.degree - 1;
  return p;
}

TypeClassification classify_type(const CombinatorialDisc& disc) {
  TypeClassification result;
  for (VertexId v = 0; v < disc.num_vertices(); ++v) {
    if (disc.is_boundary(v) || disc.degree(v) == 6) continue;
    if (!result.regular()) {
      throw Error(ErrorCode::MultipleIrregular, "interior vertices " + std::to_string(result.vertex) + " and " +
                                                    std::to_string(v) + " both have degree != 6");
    }
    result = {TypeClassification::Kind::Irregular, v, disc.degree(v)};
  }
  return result;
}

std::vector<int> bfs_distances(const CombinatorialDisc& disc, std::span<const VertexId> sources) {
  std::vector<int> dist(disc.num_vertices(), -1);
  std::deque<VertexId> queue;
  for (VertexId s : sources) {
    disc.degree(s);  // range check
    if (dist[s] < 0) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (VertexId u : disc.neighbors(v)) {
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    }
  }
  return dist;
}

int graph_distance(const CombinatorialDisc& disc, VertexId a, VertexId b) {
  disc.degree(b);
  const VertexId src[] = {a};
  return bfs_distances(disc, src)[b];
}

std::vector<VertexId> corners(const CombinatorialDisc& disc) {
  std::vector<VertexId> out;
  for (VertexId v : disc.boundary_cycle()) {
    if (disc.degree(v) == 2) out.push_back(v);
  }
  return out;
}

BoundaryWord boundary_word(const CombinatorialDisc& disc) {
  BoundaryWord word;
  word.reserve(disc.boundary_cycle().size());
  for (VertexId v : disc.boundary_cycle()) word.push_back(disc.degree(v));
  return word;
}

}  // namespace tridisc
