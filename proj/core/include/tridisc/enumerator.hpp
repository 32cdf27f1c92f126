#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tridisc/disc.hpp"
#include "tridisc/isomorphism.hpp"

namespace tridisc {

/// Search statistics and outcome flags of one filling enumeration.
struct FillingResult {
  std::vector<CombinatorialDisc> discs;  // pairwise non-isomorphic (rotate-start), sorted by code
  std::vector<CanonicalCode> codes;      // rotate-start codes, parallel to discs
  /// Number of distinct labelled fillings, i.e. classes with the marked
  /// boundary start fixed.
  int fix_start_count = 0;
  /// False when some branch needed more than `cap` triangles.
  bool complete = true;
  /// Exact face count forced by the boundary, when the search got that far.
  std::optional<int> forced_faces;
  std::int64_t nodes = 0;
};

/// Enumerates every triangulated disc whose boundary degrees read `word`
/// (from the marked start, counterclockwise), whose interior vertices all
/// have degree 6 except exactly one of degree `n` (none when n is empty or
/// 6), with at most `cap` faces.
///
/// The search fills the unfilled region from its frontier. At each step it
/// takes the frontier vertex with the fewest remaining edges and branches on
/// the third vertex of the triangle over its outgoing frontier edge: the
/// previous frontier vertex (ear), another frontier vertex (chord, splitting
/// the region), or a new interior vertex. Each region is developed exactly
/// into the lattice; its face count then follows from the shoelace area of
/// the developed frontier (closed up through the cone point when the region
/// holds the irregular vertex), which prunes both impossible branches and
/// branches beyond the cap.
///
/// Throws InfeasibleByGaussBonnet when sum (4 - deg) != n (6 when regular).
FillingResult enumerate_fillings(const BoundaryWord& word, std::optional<int> n, int cap);

struct UniquenessReport {
  BoundaryWord word;
  std::optional<int> n;
  int cap = 0;
  int count = 0;  // rotate-start classes
  int fix_start_count = 0;
  bool complete = true;
  /// True when the uniqueness claim applies (n not a multiple of 6).
  bool theorem_applies = false;
  /// Complete search, claim applies, and more than one filling was found.
  bool falsified = false;
  std::optional<int> forced_faces;
  std::vector<CombinatorialDisc> discs;
};

UniquenessReport verify_uniqueness(const BoundaryWord& word, std::optional<int> n, int cap);

struct SweepOptions {
  int min_length = 3;
  int max_length = 9;
  std::vector<int> entries{2, 3, 4, 5};
  int cap = 30;
  int threads = 1;
  /// Keep only words whose forced valence is not a multiple of 6.
  bool theorem_words_only = true;
};

/// Words of the given lengths over `entries`, one per rotation class (the
/// lexicographically smallest rotation), passing the Gauss-Bonnet precheck.
std::vector<BoundaryWord> sweep_words(const SweepOptions& options);

/// verify_uniqueness over every word of sweep_words; results in word order.
std::vector<UniquenessReport> sweep_uniqueness(const SweepOptions& options);

}  // namespace tridisc
