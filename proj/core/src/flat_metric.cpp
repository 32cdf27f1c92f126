#include "tridisc/flat_metric.hpp"

#include <string>

namespace tridisc {

ConeData cone_data(const CombinatorialDisc& disc, VertexId v) {
  ConeData c;
  c.vertex = v;
  c.interior = !disc.is_boundary(v);
  const int deg = disc.degree(v);
  if (c.interior) {
    c.wedges = deg;
    c.defect = 6 - c.wedges;
    c.order = Rational(c.wedges, 6) - 1;
  } else {
    c.wedges = deg - 1;
    c.defect = 3 - c.wedges;
    c.order = Rational(c.wedges, 6) - Rational(1, 2);
  }
  return c;
}

Divisor divisor(const CombinatorialDisc& disc) {
  Divisor d;
  for (VertexId v = 0; v < disc.num_vertices(); ++v) {
    const ConeData c = cone_data(disc, v);
    if (!c.singular()) continue;
    d.terms.push_back({v, c.order});
    d.degree += c.order;
  }
  return d;
}

WeightedEuler weighted_euler(const CombinatorialDisc& disc) {
  WeightedEuler e;
  e.chi_weighted = e.chi_top + divisor(disc).degree;
  return e;
}

std::int64_t check_gauss_bonnet(const CombinatorialDisc& disc) {
  std::int64_t total = 0;
  for (VertexId v = 0; v < disc.num_vertices(); ++v) {
    total += disc.is_boundary(v) ? 4 - disc.degree(v) : 6 - disc.degree(v);
  }
  return total - 6;
}

int irregular_valence_from_boundary(const BoundaryWord& word) {
  if (word.empty()) throw Error(ErrorCode::InvalidArgument, "empty boundary word");
  int n = 0;
  for (int deg : word) {
    if (deg < 2) throw Error(ErrorCode::InvalidArgument, "boundary degree " + std::to_string(deg) + " < 2");
    n += 4 - deg;
  }
  if (n <= 0) throw Error(ErrorCode::Infeasible, "boundary forces valence " + std::to_string(n) + " <= 0");
  return n;
}

}  // namespace tridisc
