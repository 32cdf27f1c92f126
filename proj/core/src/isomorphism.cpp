#include "tridisc/isomorphism.hpp"

#include <algorithm>

namespace tridisc {

std::string_view to_string(IsoMode mode) {
  switch (mode) {
    case IsoMode::FixStart: return "fix-start";
    case IsoMode::RotateStart: return "rotate-start";
    case IsoMode::AllowReflection: return "allow-reflection";
  }
  return "unknown";
}

IsoMode parse_iso_mode(std::string_view text) {
  if (text == "fix-start") return IsoMode::FixStart;
  if (text == "rotate-start") return IsoMode::RotateStart;
  if (text == "allow-reflection") return IsoMode::AllowReflection;
  throw Error(ErrorCode::InvalidArgument, "unknown isomorphism mode '" + std::string(text) + "'");
}

std::string CanonicalCode::to_string() const {
  std::string out(tridisc::to_string(mode));
  out += ':';
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(words[i]);
  }
  return out;
}

namespace {

struct Traversal {
  std::vector<std::int32_t> words;
  std::vector<VertexId> label;  // vertex -> BFS label
  bool mirrored = false;
};

// Returns false (and leaves `out` partial) as soon as the encoding exceeds
// `bound`, which lets the caller skip roots that cannot win.
bool traverse(const CombinatorialDisc& disc, VertexId root, bool mirrored,
              const std::vector<std::int32_t>* bound, Traversal& out) {
  const int nv = disc.num_vertices();
  out.words.clear();
  out.words.reserve(2 + 2 * nv + 2 * disc.num_edges());
  out.label.assign(nv, -1);
  out.mirrored = mirrored;
  std::vector<VertexId> entry(nv, -1);
  std::vector<VertexId> order;
  order.reserve(nv);

  bool tied = bound != nullptr;
  const auto emit = [&](std::int32_t w) {
    const std::size_t i = out.words.size();
    out.words.push_back(w);
    if (tied) {
      if (w > (*bound)[i]) return false;
      if (w < (*bound)[i]) tied = false;
    }
    return true;
  };

  if (!emit(nv) || !emit(disc.num_faces())) return false;
  out.label[root] = 0;
  order.push_back(root);
  std::vector<VertexId> ring;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const VertexId v = order[head];
    const auto nbrs = disc.neighbors(v);
    ring.assign(nbrs.begin(), nbrs.end());
    if (mirrored) std::reverse(ring.begin(), ring.end());
    const bool boundary = disc.is_boundary(v);
    if (!boundary && entry[v] >= 0) {
      std::rotate(ring.begin(), std::find(ring.begin(), ring.end(), entry[v]), ring.end());
    }
    if (!emit(boundary ? 1 : 0) || !emit(static_cast<std::int32_t>(ring.size()))) return false;
    for (VertexId u : ring) {
      if (out.label[u] < 0) {
        out.label[u] = static_cast<VertexId>(order.size());
        entry[u] = v;
        order.push_back(u);
      }
      if (!emit(out.label[u])) return false;
    }
  }
  return true;
}

Traversal best_traversal(const CombinatorialDisc& disc, IsoMode mode) {
  std::vector<VertexId> roots;
  if (mode == IsoMode::FixStart) {
    roots.push_back(disc.boundary_cycle().front());
  } else {
    roots.assign(disc.boundary_cycle().begin(), disc.boundary_cycle().end());
  }
  Traversal best, scratch;
  bool have = false;
  for (int pass = 0; pass < (mode == IsoMode::AllowReflection ? 2 : 1); ++pass) {
    for (VertexId r : roots) {
      if (!traverse(disc, r, pass == 1, have ? &best.words : nullptr, scratch)) continue;
      if (!have || scratch.words < best.words) {
        std::swap(best, scratch);
        have = true;
      }
    }
  }
  return best;
}

}  // namespace

CanonicalCode canonical_code(const CombinatorialDisc& disc, IsoMode mode) {
  return {mode, best_traversal(disc, mode).words};
}

std::optional<IsoWitness> is_isomorphic(const CombinatorialDisc& d1, const CombinatorialDisc& d2, IsoMode mode) {
  if (d1.num_vertices() != d2.num_vertices() || d1.num_faces() != d2.num_faces()) return std::nullopt;
  const Traversal t1 = best_traversal(d1, mode);
  const Traversal t2 = best_traversal(d2, mode);
  if (t1.words != t2.words) return std::nullopt;
  std::vector<VertexId> inverse2(d2.num_vertices());
  for (VertexId v = 0; v < d2.num_vertices(); ++v) inverse2[t2.label[v]] = v;
  IsoWitness w;
  w.reverses_orientation = t1.mirrored != t2.mirrored;
  w.mapping.resize(d1.num_vertices());
  for (VertexId v = 0; v < d1.num_vertices(); ++v) w.mapping[v] = inverse2[t1.label[v]];
  return w;
}

bool verify_witness(const CombinatorialDisc& d1, const CombinatorialDisc& d2, const IsoWitness& witness) {
  const int nv = d1.num_vertices();
  if (nv != d2.num_vertices() || static_cast<int>(witness.mapping.size()) != nv) return false;
  std::vector<bool> hit(nv, false);
  for (VertexId m : witness.mapping) {
    if (m < 0 || m >= nv || hit[m]) return false;
    hit[m] = true;
  }
  for (VertexId v = 0; v < nv; ++v) {
    const VertexId mv = witness.mapping[v];
    if (d1.degree(v) != d2.degree(mv) || d1.is_boundary(v) != d2.is_boundary(mv)) return false;
    const auto r1 = d1.neighbors(v);
    std::vector<VertexId> r2(d2.neighbors(mv).begin(), d2.neighbors(mv).end());
    if (witness.reverses_orientation) std::reverse(r2.begin(), r2.end());
    const std::size_t deg = r1.size();
    // Successor of dart v->r1[i] must map to successor of the image dart.
    for (std::size_t i = 0; i < deg; ++i) {
      const auto it = std::find(r2.begin(), r2.end(), witness.mapping[r1[i]]);
      if (it == r2.end()) return false;
      const std::size_t j = static_cast<std::size_t>(it - r2.begin());
      if (d1.is_boundary(v)) {
        if (i != j) return false;
      } else if (witness.mapping[r1[(i + 1) % deg]] != r2[(j + 1) % deg]) {
        return false;
      }
    }
  }
  return true;
}

int distance_invariant(const CombinatorialDisc& disc) {
  const TypeClassification type = classify_type(disc);
  if (type.regular()) throw Error(ErrorCode::NotIrregular, "disc has no irregular vertex");
  const auto cs = corners(disc);
  if (cs.empty()) throw Error(ErrorCode::NoCorners, "no boundary vertex of degree 2");
  return bfs_distances(disc, cs)[type.vertex];
}

}  // namespace tridisc
