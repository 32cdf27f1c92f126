#include "fixtures.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace tridisc::testing {

CombinatorialDisc single_triangle() {
  const std::vector<Triangle> f{{0, 1, 2}};
  return CombinatorialDisc::from_triangles(f);
}

CombinatorialDisc hexagon_fan() { return wheel(6); }

CombinatorialDisc wheel(int n) {
  std::vector<Triangle> f;
  for (int i = 1; i <= n; ++i) f.push_back({0, i, i % n + 1});
  return CombinatorialDisc::from_triangles(f);
}

std::vector<Triangle> shuffled_faces(const CombinatorialDisc& disc, std::uint64_t seed,
                                     std::vector<VertexId>* perm_out) {
  std::mt19937_64 rng(seed);
  std::vector<VertexId> perm(disc.num_vertices());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Triangle> faces;
  for (const Triangle& t : disc.faces()) {
    Triangle u{perm[t[0]], perm[t[1]], perm[t[2]]};
    std::rotate(u.begin(), u.begin() + rng() % 3, u.end());
    faces.push_back(u);
  }
  std::shuffle(faces.begin(), faces.end(), rng);
  if (perm_out) *perm_out = perm;
  return faces;
}

CombinatorialDisc with_start_shifted(const CombinatorialDisc& disc, int shift) {
  const auto cycle = disc.boundary_cycle();
  const int q = static_cast<int>(cycle.size());
  // The new start gets id 0; everything else keeps its relative order.
  const VertexId start = cycle[((shift % q) + q) % q];
  std::vector<Triangle> faces;
  for (const Triangle& t : disc.faces()) {
    Triangle u{};
    for (int i = 0; i < 3; ++i) u[i] = t[i] == start ? 0 : t[i] + 1;
    faces.push_back(u);
  }
  return CombinatorialDisc::from_triangles(faces);
}

CombinatorialDisc mirrored(const CombinatorialDisc& disc) {
  std::vector<Triangle> faces;
  for (const Triangle& t : disc.faces()) faces.push_back({t[0], t[2], t[1]});
  return CombinatorialDisc::from_triangles(faces);
}

}  // namespace tridisc::testing
