#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "tridisc/constructor.hpp"
#include "tridisc/enumerator.hpp"
#include "tridisc/flat_metric.hpp"

using namespace tridisc;
using tridisc::testing::error_of;

namespace {

bool rotation_of(const BoundaryWord& a, const BoundaryWord& b) {
  if (a.size() != b.size()) return false;
  BoundaryWord twice = b;
  twice.insert(twice.end(), b.begin(), b.end());
  return std::search(twice.begin(), twice.end(), a.begin(), a.end()) != twice.end();
}

std::optional<int> valence_arg(const BoundaryWord& w) {
  const int n = irregular_valence_from_boundary(w);
  return n == 6 ? std::nullopt : std::optional<int>(n);
}

}  // namespace

TEST_CASE("W_5 is the only filling of (3,3,3,3,3)") {
  const FillingResult r = enumerate_fillings({3, 3, 3, 3, 3}, 5, 10);
  CHECK(r.complete);
  REQUIRE(r.discs.size() == 1);
  CHECK(r.fix_start_count == 1);
  CHECK(r.forced_faces == 5);
  CHECK(is_isomorphic(r.discs[0], testing::wheel(5), IsoMode::RotateStart).has_value());
}

TEST_CASE("single triangle is the only filling of (2,2,2)") {
  const FillingResult r = enumerate_fillings({2, 2, 2}, std::nullopt, 5);
  CHECK(r.complete);
  REQUIRE(r.discs.size() == 1);
  CHECK(r.discs[0] == testing::single_triangle());
  // n = 6 asks for regular fillings too.
  CHECK(enumerate_fillings({2, 2, 2}, 6, 5).discs.size() == 1);
}

TEST_CASE("Gauss-Bonnet precheck") {
  CHECK(error_of([] { enumerate_fillings({3, 3, 3, 3, 3}, 7, 10); }) == ErrorCode::InfeasibleByGaussBonnet);
  CHECK(error_of([] { enumerate_fillings({3, 3, 3, 3, 3}, std::nullopt, 10); }) ==
        ErrorCode::InfeasibleByGaussBonnet);
  CHECK(error_of([] { verify_uniqueness({2, 2, 2}, 5, 10); }) == ErrorCode::InfeasibleByGaussBonnet);
  CHECK(error_of([] { enumerate_fillings({4, 4, 4}, 1, 10); }) == ErrorCode::InfeasibleByGaussBonnet);
}

TEST_CASE("argument checks") {
  CHECK(error_of([] { enumerate_fillings({3, 3, 3, 3, 3}, 5, 0); }) == ErrorCode::InvalidArgument);
  CHECK(error_of([] { enumerate_fillings({3, 3, 3, 3, 3}, 0, 10); }) == ErrorCode::InvalidArgument);
  CHECK(error_of([] { enumerate_fillings({2, 2}, std::nullopt, 10); }) == ErrorCode::InvalidArgument);
  CHECK(error_of([] { enumerate_fillings({1, 3, 4}, std::nullopt, 10); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("cap below the forced face count") {
  const FillingResult r = enumerate_fillings({3, 3, 3, 3, 3}, 5, 4);
  CHECK_FALSE(r.complete);
  CHECK(r.discs.empty());
  const UniquenessReport u = verify_uniqueness({3, 3, 3, 3, 3}, 5, 4);
  CHECK_FALSE(u.complete);
  CHECK_FALSE(u.falsified);
}

TEST_CASE("words without fillings") {
  // (3,3,3) forces valence 3, i.e. the tetrahedron minus a face.
  CHECK(enumerate_fillings({3, 3, 3}, 3, 10).discs.size() == 1);
  // Two adjacent corners close a triangle whose third vertex is a corner too.
  const FillingResult r = enumerate_fillings({2, 2, 4}, 4, 30);
  CHECK(r.complete);
  CHECK(r.discs.empty());
}

TEST_CASE("verify_uniqueness reports") {
  const UniquenessReport r = verify_uniqueness({3, 3, 3, 3, 3}, 5, 10);
  CHECK(r.count == 1);
  CHECK(r.complete);
  CHECK(r.theorem_applies);
  CHECK_FALSE(r.falsified);
  CHECK(r.n == 5);

  const UniquenessReport reg = verify_uniqueness({3, 3, 3, 3, 3, 3}, std::nullopt, 10);
  CHECK_FALSE(reg.theorem_applies);
  CHECK(reg.count == 1);
}

TEST_CASE("doubled boundary of rhombus(3) has several n = 12 fillings") {
  const auto base = generate_patch(PatchSpec::parse("rhombus:3"));
  BoundaryWord word = boundary_word(base);
  const BoundaryWord once = word;
  word.insert(word.end(), once.begin(), once.end());
  const UniquenessReport r = verify_uniqueness(word, 12, 36);
  CHECK(r.complete);
  CHECK(r.forced_faces == 36);
  CHECK(r.count >= 2);
  CHECK_FALSE(r.theorem_applies);
  CHECK_FALSE(r.falsified);
  // Both branched covers are among them.
  std::set<CanonicalCode> found;
  for (const auto& d : r.discs) found.insert(canonical_code(d, IsoMode::RotateStart));
  for (VertexId v = 0; v < base.num_vertices(); ++v) {
    if (base.is_boundary(v)) continue;
    CHECK(found.count(canonical_code(branched_cover(base, v, 2).disc, IsoMode::RotateStart)) == 1);
  }
}

TEST_CASE("emitted discs are sound") {
  int checked = 0;
  SweepOptions opts;
  opts.max_length = 7;
  opts.theorem_words_only = false;
  for (const BoundaryWord& w : sweep_words(opts)) {
    const auto n = valence_arg(w);
    const FillingResult r = enumerate_fillings(w, n, 20);
    REQUIRE(r.codes.size() == r.discs.size());
    CHECK(std::is_sorted(r.codes.begin(), r.codes.end()));
    CHECK(std::adjacent_find(r.codes.begin(), r.codes.end()) == r.codes.end());
    CHECK(r.fix_start_count >= static_cast<int>(r.discs.size()));
    for (std::size_t i = 0; i < r.discs.size(); ++i) {
      const auto& d = r.discs[i];
      CAPTURE(w);
      CHECK(rotation_of(boundary_word(d), w));
      const TypeClassification t = classify_type(d);
      CHECK(t.valence == n.value_or(6));
      CHECK(check_gauss_bonnet(d) == 0);
      CHECK(d.num_faces() <= 20);
      CHECK(r.forced_faces == d.num_faces());
      CHECK(canonical_code(d, IsoMode::RotateStart) == r.codes[i]);
      ++checked;
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("matches the generate-and-test oracle on small words") {
  const int max_q = 7, cap = 10;
  const auto oracle = testing::all_small_fillings(max_q, cap);
  std::set<BoundaryWord> words;
  for (const auto& [key, discs] : oracle) words.insert(key.word);
  SweepOptions opts;
  opts.max_length = max_q;
  opts.theorem_words_only = false;
  for (const BoundaryWord& w : sweep_words(opts)) words.insert(w);
  int compared = 0;
  for (const BoundaryWord& w : words) {
    if (std::ranges::any_of(w, [](int x) { return x < 2; })) continue;
    int n = 0;
    for (int x : w) n += 4 - x;
    for (int valence = 1; valence <= 12; ++valence) {
      const auto it = oracle.find({w, valence});
      const std::size_t expected_fix = it == oracle.end() ? 0 : it->second.size();
      if (valence != n) {
        CHECK(expected_fix == 0);
        continue;
      }
      const FillingResult r = enumerate_fillings(w, valence == 6 ? std::nullopt : std::optional<int>(valence), cap);
      CAPTURE(w);
      CHECK(static_cast<std::size_t>(r.fix_start_count) == expected_fix);
      std::set<CanonicalCode> want;
      if (it != oracle.end())
        for (const auto& [code, d] : it->second) want.insert(canonical_code(d, IsoMode::RotateStart));
      CHECK(std::set<CanonicalCode>(r.codes.begin(), r.codes.end()) == want);
      ++compared;
    }
  }
  CHECK(compared > 100);
}

TEST_CASE("sweep words") {
  SweepOptions opts;
  opts.min_length = 3;
  opts.max_length = 4;
  opts.entries = {2, 3, 4, 5};
  const auto words = sweep_words(opts);
  // Independent count: rotation classes of length 3-4 over {2..5} with
  // forced valence positive and not a multiple of 6.
  std::set<BoundaryWord> reps;
  for (int len = 3; len <= 4; ++len) {
    BoundaryWord w(len, 2);
    while (true) {
      int n = 0;
      for (int x : w) n += 4 - x;
      if (n > 0 && n % 6 != 0) {
        BoundaryWord best = w;
        for (int r = 1; r < len; ++r) {
          BoundaryWord rot(w.begin() + r, w.end());
          rot.insert(rot.end(), w.begin(), w.begin() + r);
          best = std::min(best, rot);
        }
        reps.insert(best);
      }
      int i = len - 1;
      while (i >= 0 && w[i] == 5) w[i--] = 2;
      if (i < 0) break;
      ++w[i];
    }
  }
  CHECK(std::set<BoundaryWord>(words.begin(), words.end()) == reps);
  CHECK(words.size() == reps.size());
  CHECK(std::is_sorted(words.begin(), words.end(), [](const BoundaryWord& a, const BoundaryWord& b) {
    return a.size() < b.size() || (a.size() == b.size() && a < b);
  }));
}

TEST_CASE("sweep is independent of the thread count") {
  SweepOptions opts;
  opts.max_length = 7;
  opts.threads = 1;
  const auto one = sweep_uniqueness(opts);
  opts.threads = 4;
  const auto four = sweep_uniqueness(opts);
  REQUIRE(one.size() == four.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].word == four[i].word);
    CHECK(one[i].count == four[i].count);
    CHECK(one[i].complete == four[i].complete);
    CHECK(one[i].falsified == false);
  }
}

TEST_CASE("enumeration is deterministic") {
  const BoundaryWord w{3, 3, 4, 3, 3, 4, 3};
  const auto a = enumerate_fillings(w, valence_arg(w), 25);
  const auto b = enumerate_fillings(w, valence_arg(w), 25);
  CHECK(a.codes == b.codes);
  REQUIRE(a.discs.size() == b.discs.size());
  for (std::size_t i = 0; i < a.discs.size(); ++i) CHECK(a.discs[i] == b.discs[i]);
}
