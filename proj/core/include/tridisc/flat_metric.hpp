#pragma once

#include <cstdint>
#include <vector>

#include <boost/rational.hpp>

#include "tridisc/disc.hpp"

namespace tridisc {

using Rational = boost::rational<std::int64_t>;

/// Cone data of a vertex under the equilateral metric (every edge has
/// length 1). Angles are counted in wedges of pi/3.
///
///   interior: wedges = degree,     defect = 6 - wedges, order = wedges/6 - 1
///   boundary: wedges = degree - 1, defect = 3 - wedges, order = wedges/6 - 1/2
///
/// so angle = 2*pi*(order + 1) inside and 2*pi*(order + 1/2) on the boundary.
struct ConeData {
  VertexId vertex = 0;
  bool interior = false;
  int wedges = 0;
  int defect = 0;
  Rational order;

  bool singular() const { return order.numerator() != 0; }
};

ConeData cone_data(const CombinatorialDisc& disc, VertexId v);

struct DivisorTerm {
  VertexId vertex = 0;
  Rational order;
  bool operator==(const DivisorTerm&) const = default;
};

/// Formal sum of the singular vertices weighted by their orders.
struct Divisor {
  std::vector<DivisorTerm> terms;  // ascending vertex id
  Rational degree;
};

Divisor divisor(const CombinatorialDisc& disc);

struct WeightedEuler {
  int chi_top = 1;
  Rational chi_weighted;  // chi_top + divisor degree
};

WeightedEuler weighted_euler(const CombinatorialDisc& disc);

/// Discrete Gauss-Bonnet residual in wedge units:
///   sum_interior (6 - deg) + sum_boundary (4 - deg) - 6.
/// Zero for every valid disc; anything else means a corrupted structure.
std::int64_t check_gauss_bonnet(const CombinatorialDisc& disc);

/// The only valence a unique irregular interior vertex can have for this
/// boundary word: n = sum (4 - deg). Six means only regular fillings.
/// Throws Infeasible when n <= 0.
int irregular_valence_from_boundary(const BoundaryWord& word);

}  // namespace tridisc
