#include "tridisc/constructor.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <functional>
#include <numeric>

#include "tridisc/developer.hpp"

namespace tridisc {

namespace {

int parse_positive(std::string_view text, std::string_view what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value < 1) {
    throw Error(ErrorCode::InvalidArgument, "bad " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

PatchSpec PatchSpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorCode::InvalidArgument, "patch spec '" + std::string(text) + "' lacks ':<size>'");
  }
  const std::string_view name = text.substr(0, colon);
  const std::string_view size = text.substr(colon + 1);
  PatchSpec spec;
  if (name == "triangle") {
    spec.shape = Shape::Triangle;
  } else if (name == "rhombus") {
    spec.shape = Shape::Rhombus;
  } else if (name == "hexagon") {
    spec.shape = Shape::Hexagon;
  } else if (name == "parallelogram") {
    spec.shape = Shape::Parallelogram;
    const auto x = size.find('x');
    if (x == std::string_view::npos) throw Error(ErrorCode::InvalidArgument, "parallelogram needs '<s1>x<s2>'");
    spec.s1 = parse_positive(size.substr(0, x), "side");
    spec.s2 = parse_positive(size.substr(x + 1), "side");
    return spec;
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown patch shape '" + std::string(name) + "'");
  }
  spec.s1 = spec.s2 = parse_positive(size, "side");
  return spec;
}

std::string PatchSpec::to_string() const {
  switch (shape) {
    case Shape::Triangle: return "triangle:" + std::to_string(s1);
    case Shape::Rhombus: return "rhombus:" + std::to_string(s1);
    case Shape::Hexagon: return "hexagon:" + std::to_string(s1);
    case Shape::Parallelogram: return "parallelogram:" + std::to_string(s1) + "x" + std::to_string(s2);
  }
  return {};
}

Patch generate_patch_with_coordinates(const PatchSpec& spec) {
  if (spec.s1 < 1 || spec.s2 < 1) throw Error(ErrorCode::InvalidArgument, "patch sides must be >= 1");
  std::function<bool(std::int64_t, std::int64_t)> inside;
  std::int64_t lo = 0, hi = 0;
  const std::int64_t s = spec.s1;
  switch (spec.shape) {
    case PatchSpec::Shape::Triangle:
      inside = [s](std::int64_t i, std::int64_t j) { return i >= 0 && j >= 0 && i + j <= s; };
      hi = s;
      break;
    case PatchSpec::Shape::Rhombus:
      inside = [s](std::int64_t i, std::int64_t j) { return i >= 0 && j >= 0 && i <= s && j <= s; };
      hi = s;
      break;
    case PatchSpec::Shape::Parallelogram: {
      const std::int64_t t = spec.s2;
      inside = [s, t](std::int64_t i, std::int64_t j) { return i >= 0 && j >= 0 && i <= s && j <= t; };
      hi = std::max(s, t);
      break;
    }
    case PatchSpec::Shape::Hexagon:
      inside = [s](std::int64_t i, std::int64_t j) {
        return std::abs(i) <= s && std::abs(j) <= s && std::abs(i + j) <= s;
      };
      lo = -s;
      hi = s;
      break;
  }

  std::vector<EisensteinPoint> points;
  for (std::int64_t j = lo; j <= hi; ++j) {
    for (std::int64_t i = lo; i <= hi; ++i) {
      if (inside(i, j)) points.emplace_back(i, j);
    }
  }
  // Row-major order: by w component, then real component.
  std::sort(points.begin(), points.end(), [](EisensteinPoint p, EisensteinPoint q) {
    return std::pair(p.b, p.a) < std::pair(q.b, q.a);
  });
  const auto id_of = [&points](EisensteinPoint p) {
    const auto it = std::lower_bound(points.begin(), points.end(), p, [](EisensteinPoint x, EisensteinPoint y) {
      return std::pair(x.b, x.a) < std::pair(y.b, y.a);
    });
    return static_cast<VertexId>(it - points.begin());
  };

  std::vector<Triangle> faces;
  // Anchors span the bounding box: a down triangle's anchor may lie outside.
  std::vector<EisensteinPoint> anchors;
  for (std::int64_t j = lo - 1; j <= hi; ++j) {
    for (std::int64_t i = lo - 1; i <= hi; ++i) anchors.emplace_back(i, j);
  }
  for (const EisensteinPoint p : anchors) {
    const EisensteinPoint r = p + EisensteinPoint{1, 0};
    const EisensteinPoint u = p + EisensteinPoint{0, 1};
    const EisensteinPoint ru = p + EisensteinPoint{1, 1};
    if (inside(p.a, p.b) && inside(r.a, r.b) && inside(u.a, u.b)) faces.push_back({id_of(p), id_of(r), id_of(u)});
    if (inside(r.a, r.b) && inside(ru.a, ru.b) && inside(u.a, u.b)) faces.push_back({id_of(r), id_of(ru), id_of(u)});
  }
  Patch patch{CombinatorialDisc::from_triangles(faces), {}};
  patch.lattice.reserve(patch.disc.num_vertices());
  for (VertexId v = 0; v < patch.disc.num_vertices(); ++v) patch.lattice.push_back(points[patch.disc.original_id(v)]);
  return patch;
}

CombinatorialDisc generate_patch(const PatchSpec& spec) { return generate_patch_with_coordinates(spec).disc; }

int corner_distance(const CombinatorialDisc& disc, VertexId v) {
  const auto cs = corners(disc);
  if (cs.empty()) return -1;
  return bfs_distances(disc, cs)[v];
}

int boundary_distance(const CombinatorialDisc& disc, VertexId v) {
  return bfs_distances(disc, disc.boundary_cycle())[v];
}

VertexId vertex_at_corner_distance(const CombinatorialDisc& disc, int d) {
  const auto cs = corners(disc);
  if (cs.empty()) throw Error(ErrorCode::NotRealizable, "base has no corner");
  const auto dist = bfs_distances(disc, cs);
  for (VertexId v = 0; v < disc.num_vertices(); ++v) {
    if (!disc.is_boundary(v) && dist[v] == d) return v;
  }
  throw Error(ErrorCode::NotRealizable, "no interior vertex at corner distance " + std::to_string(d));
}

BranchedCover branched_cover(const CombinatorialDisc& base, VertexId branch, int sheets) {
  if (sheets < 2) throw Error(ErrorCode::InvalidArgument, "a branched cover needs at least 2 sheets");
  if (base.is_boundary(branch)) {
    throw Error(ErrorCode::BranchOnBoundary, "branch vertex " + std::to_string(branch) + " lies on the boundary");
  }
  if (!classify_type(base).regular()) throw Error(ErrorCode::InvalidArgument, "cover base must be regular");

  const CutDisc cut = cut_along_path(base, shortest_path_to_boundary(base, branch));
  const int nc = cut.cut.num_vertices();
  const int total = nc * sheets;
  std::vector<int> parent(total);
  std::iota(parent.begin(), parent.end(), 0);
  const std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  const auto unite = [&](int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  };
  for (int s = 0; s < sheets; ++s) {
    const int next = (s + 1) % sheets;
    for (std::size_t i = 0; i < cut.left_path.size(); ++i) {
      unite(s * nc + cut.right_path[i], next * nc + cut.left_path[i]);
    }
  }

  std::vector<Triangle> faces;
  faces.reserve(static_cast<std::size_t>(cut.cut.num_faces()) * sheets);
  for (int s = 0; s < sheets; ++s) {
    for (const Triangle& t : cut.cut.faces()) {
      faces.push_back({find(s * nc + t[0]), find(s * nc + t[1]), find(s * nc + t[2])});
    }
  }

  BranchedCover cover{CombinatorialDisc::from_triangles(faces), {}, 0, branch};
  const int branch_rep = find(cut.cone_vertex);
  cover.projection.resize(cover.disc.num_vertices());
  for (VertexId v = 0; v < cover.disc.num_vertices(); ++v) {
    const int rep = cover.disc.original_id(v);
    cover.projection[v] = cut.to_base[rep % nc];
    if (rep == branch_rep) cover.branch_vertex = v;
  }
  return cover;
}

BranchedCover branched_cover(const CoverSpec& spec) {
  const CombinatorialDisc base = generate_patch(spec.base);
  const VertexId branch = std::visit(
      [&base](const auto& sel) -> VertexId {
        using T = std::decay_t<decltype(sel)>;
        if constexpr (std::is_same_v<T, BranchAtVertex>) {
          return sel.vertex;
        } else {
          return vertex_at_corner_distance(base, sel.distance);
        }
      },
      spec.branch);
  return branched_cover(base, branch, spec.sheets);
}

std::pair<BranchedCover, BranchedCover> counterexample_pair(const PatchSpec& base, int d1, int d2, int sheets) {
  if (d1 == d2) throw Error(ErrorCode::InvalidArgument, "corner distances must differ");
  return {branched_cover({base, BranchAtCornerDistance{d1}, sheets}),
          branched_cover({base, BranchAtCornerDistance{d2}, sheets})};
}

}  // namespace tridisc
