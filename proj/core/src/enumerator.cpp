#include "tridisc/enumerator.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <string>
#include <thread>

#include "tridisc/eisenstein.hpp"
#include "tridisc/flat_metric.hpp"

namespace tridisc {

namespace {

int mod6(int k) { return ((k % 6) + 6) % 6; }

/// One unfilled region: a counterclockwise frontier cycle with the number
/// of edges each frontier vertex still has to receive inside this region.
struct FillingRegion {
  std::vector<VertexId> verts;
  std::vector<int> budget;
  bool holds_irregular = false;
  int faces = 0;  // exact number of faces still needed
};

/// Exact face count of a region, or nullopt when no filling exists.
///
/// The frontier is developed from slot 0 using the angle (1 + budget) pi/3
/// at each vertex. A regular region must close up; a region holding a cone
/// of valence n closes up to the rotation w^n about the cone point, which
/// is then recovered exactly. The face count is the shoelace area.
std::optional<int> region_faces(const FillingRegion& r, int n) {
  const std::size_t m = r.verts.size();
  if (m < 3) return std::nullopt;
  std::int64_t area = 0;
  EisensteinPoint pos{0, 0}, dir{1, 0};
  int turning = 0;
  for (std::size_t i = 1; i <= m; ++i) {
    const EisensteinPoint next = pos + dir;
    area += pos.cross(next);
    pos = next;
    const int t = 2 - r.budget[i % m];
    turning += t;
    dir = dir.rotated(t);
  }
  const int cone = r.holds_irregular ? n : 6;
  if (mod6(turning - cone) != 0) return std::nullopt;
  if (mod6(cone) == 0) {
    if (pos != EisensteinPoint{0, 0}) return std::nullopt;
  } else {
    // p2 - c = w^n (p1 - c) with p1 = 0, p2 = pos.
    const auto apex = (-pos).divided_by(EisensteinPoint::omega_pow(cone) - EisensteinPoint{1, 0});
    if (!apex) return std::nullopt;
    area += pos.cross(*apex);
  }
  // Faces = m - 2 + 2 * (interior vertices).
  const std::int64_t twice_interior = area - static_cast<std::int64_t>(m) + 2;
  if (twice_interior < (r.holds_irregular ? 2 : 0) || twice_interior % 2 != 0) return std::nullopt;
  return static_cast<int>(area);
}

class FillingSearch {
 public:
  FillingSearch(const BoundaryWord& word, std::optional<int> n, int cap) : word_(word), cap_(cap) {
    const int forced = irregular_valence_from_boundary_checked(word);
    irregular_ = n.has_value() && *n != 6;
    n_ = irregular_ ? *n : 6;
    if (forced != n_) {
      throw Error(ErrorCode::InfeasibleByGaussBonnet,
                  "boundary forces valence " + std::to_string(forced) + ", requested " + std::to_string(n_));
    }
  }

  FillingResult run() {
    const int q = static_cast<int>(word_.size());
    FillingRegion root;
    root.holds_irregular = irregular_;
    for (int i = 0; i < q; ++i) {
      root.verts.push_back(i);
      root.budget.push_back(word_[i] - 2);
    }
    const auto faces = region_faces(root, n_);
    if (!faces) return std::move(result_);
    result_.forced_faces = *faces;
    if (*faces > cap_) {
      result_.complete = false;
      return std::move(result_);
    }
    root.faces = *faces;
    max_vertices_ = q + (*faces - q + 2) / 2;
    adjacency_.assign(static_cast<std::size_t>(max_vertices_) * max_vertices_, 0);
    for (int i = 0; i < q; ++i) set_edge(i, (i + 1) % q, true);
    num_vertices_ = q;
    regions_.push_back(std::move(root));
    dfs();

    for (auto& [code, disc] : found_) {
      result_.codes.push_back(code);
      result_.discs.push_back(std::move(disc));
    }
    result_.fix_start_count = static_cast<int>(fixed_codes_.size());
    return std::move(result_);
  }

 private:
  static int irregular_valence_from_boundary_checked(const BoundaryWord& word) {
    if (word.size() < 3) throw Error(ErrorCode::InvalidArgument, "boundary word needs at least 3 entries");
    int n = 0;
    for (int d : word) {
      if (d < 2) throw Error(ErrorCode::InvalidArgument, "boundary degree " + std::to_string(d) + " < 2");
      n += 4 - d;
    }
    return n;
  }

  bool edge(VertexId u, VertexId v) const { return adjacency_[static_cast<std::size_t>(u) * max_vertices_ + v] != 0; }
  void set_edge(VertexId u, VertexId v, bool on) {
    adjacency_[static_cast<std::size_t>(u) * max_vertices_ + v] = on;
    adjacency_[static_cast<std::size_t>(v) * max_vertices_ + u] = on;
  }

  void emit() {
    const CombinatorialDisc disc = CombinatorialDisc::from_triangles(faces_);
    fixed_codes_.insert(canonical_code(disc, IsoMode::FixStart));
    found_.try_emplace(canonical_code(disc, IsoMode::RotateStart), disc);
  }

  // Replaces the top region by `replacement` (in push order), recurses and
  // restores.
  void descend(std::vector<FillingRegion> replacement, const Triangle& face) {
    FillingRegion saved = std::move(regions_.back());
    regions_.pop_back();
    for (auto& r : replacement) regions_.push_back(std::move(r));
    faces_.push_back(face);
    dfs();
    faces_.pop_back();
    regions_.resize(regions_.size() - replacement.size());
    regions_.push_back(std::move(saved));
  }

  bool settle(FillingRegion& r, int expected) const {
    const auto f = region_faces(r, n_);
    if (!f || *f != expected) return false;
    r.faces = *f;
    return true;
  }

  void dfs() {
    ++result_.nodes;
    if (regions_.empty()) {
      emit();
      return;
    }
    const FillingRegion& a = regions_.back();
    const int m = static_cast<int>(a.verts.size());
    const int i = static_cast<int>(std::min_element(a.budget.begin(), a.budget.end()) - a.budget.begin());
    const int ir = (i + 1) % m, il = (i + m - 1) % m;
    const VertexId x = a.verts[i], r = a.verts[ir], l = a.verts[il];
    const int ex = a.budget[i], er = a.budget[ir], el = a.budget[il];

    if (ex == 0) {
      // x keeps its degree: the only triangle over x->r is the ear (l, x, r).
      if (m == 3) {
        if (el == 0 && er == 0) descend({}, {x, r, l});
        return;
      }
      if (el < 1 || er < 1 || edge(l, r)) return;
      FillingRegion next;
      next.holds_irregular = a.holds_irregular;
      for (int k = 0; k < m; ++k) {
        if (k == i) continue;
        next.verts.push_back(a.verts[k]);
        next.budget.push_back(a.budget[k] - (k == il || k == ir ? 1 : 0));
      }
      if (!settle(next, a.faces - 1)) return;
      set_edge(l, r, true);
      descend({std::move(next)}, {x, r, l});
      set_edge(l, r, false);
      return;
    }
    // With ex >= 1 every other budget is >= 1 too, so r cannot be an ear.
    if (er < 1) return;

    if (m >= 5) try_chords(i);
    try_spawn(i, false);
    if (regions_.back().holds_irregular && n_ >= 3) try_spawn(i, true);
  }

  // Developed frontier positions in the frame x = 0, r = 1, walking forward
  // (through r) and backward (through l).
  void frontier_positions(const FillingRegion& a, int i, std::vector<EisensteinPoint>& fwd,
                          std::vector<EisensteinPoint>& bwd) const {
    const int m = static_cast<int>(a.verts.size());
    fwd.assign(m, {});
    bwd.assign(m, {});
    EisensteinPoint pos{1, 0}, dir{1, 0};
    fwd[(i + 1) % m] = pos;
    for (int k = 2; k < m; ++k) {
      dir = dir.rotated(2 - a.budget[(i + k - 1) % m]);
      pos += dir;
      fwd[(i + k) % m] = pos;
    }
    // From x the heading to l is the heading to r turned by the angle at x.
    EisensteinPoint prev{0, 0};
    EisensteinPoint back_dir = EisensteinPoint{1, 0}.rotated(1 + a.budget[i]);
    pos = back_dir;
    for (int k = 1; k < m; ++k) {
      const int slot = (i - k + m) % m;
      bwd[slot] = pos;
      const EisensteinPoint to_prev = prev - pos;
      prev = pos;
      pos = pos + to_prev.rotated(1 + a.budget[slot]);
    }
  }

  void try_chords(int i) {
    const FillingRegion a = regions_.back();
    const int m = static_cast<int>(a.verts.size());
    const VertexId x = a.verts[i];
    const int ir = (i + 1) % m;
    const VertexId r = a.verts[ir];
    std::vector<EisensteinPoint> fwd, bwd;
    frontier_positions(a, i, fwd, bwd);
    const EisensteinPoint apex = EisensteinPoint::omega();

    // w ranges over slots i+3 .. i-2 (forward offsets 3 .. m-2).
    for (int off = 3; off <= m - 2; ++off) {
      const int j = (i + off) % m;
      const VertexId w = a.verts[j];
      const int ew = a.budget[j];
      if (ew < 2 || edge(x, w) || edge(r, w)) continue;

      // Sub-region 1: r .. w (forward). Sub-region 2: w .. l, x.
      for (int option = 0; option < (a.holds_irregular ? 2 : 1); ++option) {
        const bool first_holds = a.holds_irregular && option == 0;
        const bool second_holds = a.holds_irregular && option == 1;
        // A regular side must close up around the new triangle (x, r, w).
        if (!first_holds && fwd[j] != apex) continue;
        if (!second_holds && bwd[j] != apex) continue;

        FillingRegion r1, r2;
        r1.holds_irregular = first_holds;
        r2.holds_irregular = second_holds;
        int sum1 = 0;
        for (int k = 1; k < off; ++k) {
          const int s = (i + k) % m;
          r1.verts.push_back(a.verts[s]);
          r1.budget.push_back(a.budget[s] - (s == ir ? 1 : 0));
          sum1 += r1.budget.back();
        }
        const int size1 = off;
        const int e1 = 2 * size1 - (first_holds ? n_ : 6) - sum1;
        const int e2 = ew - 2 - e1;
        if (e1 < 0 || e2 < 0) continue;
        r1.verts.push_back(w);
        r1.budget.push_back(e1);
        r2.verts.push_back(w);
        r2.budget.push_back(e2);
        for (int k = off + 1; k <= m; ++k) {
          const int s = (i + k) % m;
          r2.verts.push_back(a.verts[s]);
          r2.budget.push_back(a.budget[s] - (s == i ? 1 : 0));
        }
        const auto f1 = region_faces(r1, n_);
        const auto f2 = region_faces(r2, n_);
        if (!f1 || !f2 || *f1 + *f2 + 1 != a.faces) continue;
        r1.faces = *f1;
        r2.faces = *f2;
        set_edge(x, w, true);
        set_edge(r, w, true);
        descend({std::move(r2), std::move(r1)}, {x, r, w});
        set_edge(x, w, false);
        set_edge(r, w, false);
      }
    }
  }

  void try_spawn(int i, bool irregular) {
    const FillingRegion& a = regions_.back();
    if (num_vertices_ >= max_vertices_) return;
    const int m = static_cast<int>(a.verts.size());
    const VertexId x = a.verts[i];
    const VertexId r = a.verts[(i + 1) % m];
    const VertexId y = num_vertices_;
    FillingRegion next;
    next.holds_irregular = a.holds_irregular && !irregular;
    for (int k = 0; k < m; ++k) {
      next.verts.push_back(a.verts[k]);
      next.budget.push_back(a.budget[k] - (k == i || k == (i + 1) % m ? 1 : 0));
      if (k == i) {
        next.verts.push_back(y);
        next.budget.push_back((irregular ? n_ : 6) - 2);
      }
    }
    if (!settle(next, a.faces - 1)) return;
    ++num_vertices_;
    set_edge(x, y, true);
    set_edge(r, y, true);
    descend({std::move(next)}, {x, r, y});
    set_edge(x, y, false);
    set_edge(r, y, false);
    --num_vertices_;
  }

  BoundaryWord word_;
  int cap_;
  bool irregular_ = false;
  int n_ = 6;
  int max_vertices_ = 0;
  int num_vertices_ = 0;
  std::vector<char> adjacency_;
  std::vector<FillingRegion> regions_;
  std::vector<Triangle> faces_;
  std::map<CanonicalCode, CombinatorialDisc> found_;
  std::set<CanonicalCode> fixed_codes_;
  FillingResult result_;
};

}  // namespace

FillingResult enumerate_fillings(const BoundaryWord& word, std::optional<int> n, int cap) {
  if (cap < 1) throw Error(ErrorCode::InvalidArgument, "cap must be >= 1");
  if (n && *n < 1) throw Error(ErrorCode::InvalidArgument, "valence must be >= 1");
  return FillingSearch(word, n, cap).run();
}

UniquenessReport verify_uniqueness(const BoundaryWord& word, std::optional<int> n, int cap) {
  FillingResult res = enumerate_fillings(word, n, cap);
  UniquenessReport rep;
  rep.word = word;
  rep.n = n;
  rep.cap = cap;
  rep.count = static_cast<int>(res.discs.size());
  rep.fix_start_count = res.fix_start_count;
  rep.complete = res.complete;
  rep.forced_faces = res.forced_faces;
  rep.theorem_applies = n.has_value() && mod6(*n) != 0;
  rep.falsified = rep.theorem_applies && rep.complete && (rep.count > 1 || rep.fix_start_count > 1);
  rep.discs = std::move(res.discs);
  return rep;
}

std::vector<BoundaryWord> sweep_words(const SweepOptions& options) {
  std::vector<int> entries = options.entries;
  std::sort(entries.begin(), entries.end());
  entries.erase(std::unique(entries.begin(), entries.end()), entries.end());
  if (entries.empty()) throw Error(ErrorCode::InvalidArgument, "no word entries");
  std::vector<BoundaryWord> out;
  const int base = static_cast<int>(entries.size());
  for (int len = std::max(3, options.min_length); len <= options.max_length; ++len) {
    std::vector<int> digits(len, 0);
    while (true) {
      BoundaryWord w(len);
      for (int k = 0; k < len; ++k) w[k] = entries[digits[k]];
      bool minimal = true;
      for (int s = 1; s < len && minimal; ++s) {
        for (int k = 0; k < len; ++k) {
          const int a = w[(s + k) % len], b = w[k];
          if (a != b) {
            minimal = a > b;
            break;
          }
        }
      }
      int n = 0;
      for (int d : w) n += 4 - d;
      if (minimal && n > 0 && (!options.theorem_words_only || mod6(n) != 0)) out.push_back(std::move(w));
      int k = len - 1;
      while (k >= 0 && ++digits[k] == base) digits[k--] = 0;
      if (k < 0) break;
    }
  }
  return out;
}

std::vector<UniquenessReport> sweep_uniqueness(const SweepOptions& options) {
  const auto words = sweep_words(options);
  std::vector<UniquenessReport> reports(words.size());
  std::atomic<std::size_t> cursor{0};
  const auto worker = [&] {
    for (std::size_t k = cursor++; k < words.size(); k = cursor++) {
      int n = 0;
      for (int d : words[k]) n += 4 - d;
      reports[k] = verify_uniqueness(words[k], n, options.cap);
    }
  };
  const int threads = std::max(1, options.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return reports;
}

}  // namespace tridisc
