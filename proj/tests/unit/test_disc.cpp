#include <doctest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "tridisc/constructor.hpp"
#include "tridisc/disc.hpp"

using namespace tridisc;
using tridisc::testing::error_of;

namespace {

std::optional<ErrorCode> build_error(std::vector<Triangle> faces) {
  return error_of([&] { CombinatorialDisc::from_triangles(faces); });
}

}  // namespace

TEST_CASE("single triangle") {
  const auto d = testing::single_triangle();
  CHECK(d.num_vertices() == 3);
  CHECK(d.num_edges() == 3);
  CHECK(d.num_faces() == 1);
  CHECK(d.num_interior_vertices() == 0);
  CHECK(boundary_word(d) == BoundaryWord{2, 2, 2});
  CHECK(corners(d) == std::vector<VertexId>{0, 1, 2});
  CHECK(classify_type(d).regular());
}

TEST_CASE("hexagon fan") {
  const auto d = testing::hexagon_fan();
  CHECK(d.num_vertices() == 7);
  CHECK(d.num_edges() == 12);
  CHECK(d.num_faces() == 6);
  CHECK_FALSE(d.is_boundary(0));
  CHECK(d.degree(0) == 6);
  CHECK(boundary_word(d) == BoundaryWord{3, 3, 3, 3, 3, 3});
  CHECK(corners(d).empty());
  CHECK(classify_type(d).regular());
  CHECK(std::vector<VertexId>(d.boundary_cycle().begin(), d.boundary_cycle().end()) ==
        std::vector<VertexId>{1, 2, 3, 4, 5, 6});
}

TEST_CASE("wheel W_5") {
  const auto d = testing::wheel(5);
  CHECK(d.num_vertices() == 6);
  CHECK(d.num_edges() == 10);
  const TypeClassification t = classify_type(d);
  CHECK(t.kind == TypeClassification::Kind::Irregular);
  CHECK(t.vertex == 0);
  CHECK(t.valence == 5);
  CHECK(boundary_word(d) == BoundaryWord{3, 3, 3, 3, 3});
}

TEST_CASE("corner after gluing an ear onto W_5") {
  const auto w5 = testing::wheel(5);
  std::vector<Triangle> f(w5.faces().begin(), w5.faces().end());
  f.push_back({2, 1, 6});
  const auto d = CombinatorialDisc::from_triangles(f);
  CHECK(corners(d) == std::vector<VertexId>{6});
  CHECK(d.degree(1) == 4);
  CHECK(d.degree(2) == 4);
  CHECK(boundary_word(d) == BoundaryWord{4, 2, 4, 3, 3, 3});
}

TEST_CASE("rotation order around vertices") {
  const auto d = testing::wheel(5);
  const auto hub = d.neighbors(0);
  CHECK(std::vector<VertexId>(hub.begin(), hub.end()).size() == 5);
  // Counterclockwise: each consecutive pair bounds a face (0, a, b).
  for (std::size_t i = 0; i < hub.size(); ++i) {
    const auto h = d.find_halfedge(0, hub[i]);
    REQUIRE(h.has_value());
    CHECK(d.target(d.next(*h)) == hub[(i + 1) % hub.size()]);
  }
  // Boundary vertex: from the next boundary vertex round to the previous one.
  const auto b = d.neighbors(1);
  CHECK(std::vector<VertexId>(b.begin(), b.end()) == std::vector<VertexId>{2, 0, 5});
}

TEST_CASE("half-edge structure") {
  const auto d = testing::hexagon_fan();
  int boundary = 0;
  for (HalfedgeId h = 0; h < d.num_halfedges(); ++h) {
    CHECK(d.next(d.next(d.next(h))) == h);
    CHECK(d.prev(d.next(h)) == h);
    if (d.twin(h) == kNoHalfedge) {
      ++boundary;
      continue;
    }
    CHECK(d.twin(d.twin(h)) == h);
    CHECK(d.origin(d.twin(h)) == d.target(h));
  }
  CHECK(boundary == 6);
  CHECK_FALSE(d.find_halfedge(1, 4).has_value());
  CHECK(d.adjacent(1, 2));
  CHECK_FALSE(d.adjacent(1, 3));
}

TEST_CASE("vertex profile") {
  const auto d = testing::wheel(5);
  const VertexProfile c = vertex_profile(d, 0);
  CHECK(c.interior);
  CHECK(c.degree == 5);
  const VertexProfile b = vertex_profile(d, 3);
  CHECK_FALSE(b.interior);
  CHECK(b.degree == 3);
  CHECK(b.triangles == 2);
}

TEST_CASE("ids are compacted in order") {
  const std::vector<Triangle> f{{10, 30, 20}};
  const auto d = CombinatorialDisc::from_triangles(f);
  CHECK(d.num_vertices() == 3);
  CHECK(d.original_id(0) == 10);
  CHECK(d.original_id(1) == 20);
  CHECK(d.original_id(2) == 30);
  CHECK(d.faces()[0] == Triangle{0, 2, 1});
}

TEST_CASE("rejected inputs") {
  CHECK(build_error({}) == ErrorCode::EmptyInput);
  CHECK(build_error({{0, 1, 2}, {0, 1, 2}}) == ErrorCode::NonManifoldEdge);
  CHECK(build_error({{0, 0, 1}}) == ErrorCode::DegenerateTriangle);
  CHECK(build_error({{0, 1, -2}}) == ErrorCode::InvalidArgument);
  CHECK(build_error({{0, 1, 2}, {1, 0, 3}, {0, 1, 4}}) == ErrorCode::NonManifoldEdge);
  CHECK(build_error({{0, 1, 2}, {0, 1, 3}}) == ErrorCode::InconsistentOrientation);
  CHECK(build_error({{0, 1, 2}, {3, 4, 5}}) == ErrorCode::NotConnected);
  // Two triangles touching at one vertex.
  CHECK(build_error({{0, 1, 2}, {0, 3, 4}}) == ErrorCode::NotADisc);
  // Annulus around a triangular hole.
  CHECK(build_error({{0, 1, 4}, {0, 4, 3}, {1, 2, 5}, {1, 5, 4}, {2, 0, 3}, {2, 3, 5}}) == ErrorCode::NotADisc);
  // Octahedron: closed.
  CHECK(build_error({{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 1}, {5, 2, 1}, {5, 3, 2}, {5, 4, 3}, {5, 1, 4}}) ==
        ErrorCode::NotADisc);
}

TEST_CASE("classification rejects two irregular vertices") {
  // Flipping an edge at the centre of hexagon(2) leaves degrees 5, 5, 7, 7.
  const auto patch = generate_patch(PatchSpec::parse("hexagon:2"));
  std::vector<Triangle> f(patch.faces().begin(), patch.faces().end());
  const VertexId centre = [&] {
    for (VertexId v = 0; v < patch.num_vertices(); ++v)
      if (!patch.is_boundary(v) && patch.degree(v) == 6 && std::ranges::all_of(patch.neighbors(v), [&](VertexId u) {
            return !patch.is_boundary(u);
          }))
        return v;
    return VertexId{-1};
  }();
  REQUIRE(centre >= 0);
  const VertexId a = patch.neighbors(centre)[0];
  const auto h = *patch.find_halfedge(centre, a);
  const VertexId left = patch.target(patch.next(h));
  const VertexId right = patch.target(patch.next(patch.twin(h)));
  std::erase_if(f, [&](const Triangle& t) {
    return std::ranges::count(t, centre) && std::ranges::count(t, a);
  });
  f.push_back({left, centre, right});
  f.push_back({right, a, left});
  const auto d = CombinatorialDisc::from_triangles(f);
  CHECK(d.degree(centre) == 5);
  CHECK(error_of([&] { classify_type(d); }) == ErrorCode::MultipleIrregular);
}

TEST_CASE("graph distance") {
  const auto d = testing::hexagon_fan();
  CHECK(graph_distance(d, 3, 3) == 0);
  CHECK(graph_distance(d, 1, 2) == 1);
  CHECK(graph_distance(d, 1, 4) == 2);
  CHECK(error_of([&] { graph_distance(d, 0, 7); }) == ErrorCode::UnknownVertex);
  CHECK(error_of([&] { graph_distance(d, -1, 0); }) == ErrorCode::UnknownVertex);
}

TEST_CASE("face order and triple rotation do not change the built disc") {
  const auto d = generate_patch(PatchSpec::parse("rhombus:3"));
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Triangle> f(d.faces().begin(), d.faces().end());
    for (Triangle& t : f) std::rotate(t.begin(), t.begin() + rng() % 3, t.end());
    std::shuffle(f.begin(), f.end(), rng);
    CHECK(CombinatorialDisc::from_triangles(f) == d);
  }
}

TEST_CASE("counting identities on generated discs") {
  for (const char* spec : {"triangle:1", "triangle:4", "rhombus:3", "hexagon:2", "parallelogram:4x2"}) {
    const CombinatorialDisc base = generate_patch(PatchSpec::parse(spec));
    std::vector<CombinatorialDisc> discs{base};
    for (int k = 2; k <= 3; ++k) {
      for (VertexId v = 0; v < base.num_vertices(); ++v)
        if (!base.is_boundary(v)) discs.push_back(branched_cover(base, v, k).disc);
    }
    for (const auto& d : discs) {
      CAPTURE(spec);
      CHECK(d.num_vertices() - d.num_edges() + d.num_faces() == 1);
      int degree_sum = 0;
      for (VertexId v = 0; v < d.num_vertices(); ++v) degree_sum += d.degree(v);
      CHECK(degree_sum == 2 * d.num_edges());
      const int boundary_edges = d.num_boundary_vertices();
      CHECK(3 * d.num_faces() == 2 * (d.num_edges() - boundary_edges) + boundary_edges);
      CHECK(static_cast<int>(boundary_word(d).size()) == boundary_edges);
      for (VertexId v : d.boundary_cycle()) CHECK(d.degree(v) >= 2);
      for (VertexId v = 0; v < d.num_vertices(); ++v)
        if (!d.is_boundary(v)) CHECK(d.degree(v) >= 3);
    }
  }
}
