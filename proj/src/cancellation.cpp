#include <algorithm>
#include <functional>

#include "smallcancel/cancellation.hpp"
#include "smallcancel/parallel.hpp"

namespace smallcancel {

namespace {

EdgeEnd out_end(const Letter& l) { return {l.edge, !l.forward}; }

// Boundary of the corner's face read from the corner, leaving v along `node`.
std::vector<Letter> corner_reading(const TwoComplex& X, const Corner& c, const EdgeEnd& node) {
  const auto& w = X.face(c.face).boundary;
  const std::size_t n = w.size();
  if (out_end(w[c.position]) == node) return w.reading(c.position, true);
  return w.reading((c.position + n - 1) % n, false);
}

std::string tuple_text(const TwoComplex& X, const std::vector<Index>& faces) {
  std::string s = "(";
  for (std::size_t i = 0; i < faces.size(); ++i) s += (i ? ", " : "") + X.face(faces[i]).id;
  return s + ")";
}

}  // namespace

bool corners_cancel(const TwoComplex& X, const LinkGraph& link, Index a1, Index a2, Index node) {
  const auto& c1 = link.arcs[a1].corner;
  const auto& c2 = link.arcs[a2].corner;
  if (c1.face != c2.face) return false;
  const EdgeEnd& e = link.nodes[node];
  return corner_reading(X, c1, e) == corner_reading(X, c2, e);
}

WalkSearch shortest_reduced_walk(const TwoComplex& X, const LinkGraph& link, std::size_t min_len,
                                 std::size_t max_len, std::size_t budget) {
  const Index N = static_cast<Index>(link.nodes.size());
  const Index A = static_cast<Index>(link.arcs.size());
  std::vector<std::vector<std::pair<Index, Index>>> adj(N);  // (arc, other node)
  for (Index a = 0; a < A; ++a) {
    const auto& arc = link.arcs[a];
    adj[arc.a].push_back({a, arc.b});
    if (arc.b != arc.a) adj[arc.b].push_back({a, arc.a});
  }
  // cancel[(a1 * A + a2) * 2 + side]: side selects which end of a2 is shared
  std::vector<signed char> memo(static_cast<std::size_t>(A) * A * 2, -1);
  auto cancels = [&](Index a1, Index a2, Index node) {
    std::size_t key = (static_cast<std::size_t>(a1) * A + a2) * 2 + (link.arcs[a2].a == node ? 0 : 1);
    if (memo[key] < 0) memo[key] = corners_cancel(X, link, a1, a2, node) ? 1 : 0;
    return memo[key] == 1;
  };

  WalkSearch result;
  std::size_t steps = 0;
  std::vector<Index> arcs, nodes;
  std::function<bool(std::size_t)> extend = [&](std::size_t length) -> bool {
    if (++steps > budget) {
      result.exhausted = true;
      return false;
    }
    Index u = nodes.back();
    for (auto [a, w] : adj[u]) {
      if (!arcs.empty() && cancels(arcs.back(), a, u)) continue;
      if (arcs.size() + 1 == length) {
        if (w != nodes.front() || cancels(a, arcs.front(), w)) continue;
        arcs.push_back(a);
        return true;
      }
      arcs.push_back(a);
      nodes.push_back(w);
      if (extend(length)) return true;
      if (result.exhausted) return false;
      nodes.pop_back();
      arcs.pop_back();
    }
    return false;
  };

  for (std::size_t length = std::max<std::size_t>(min_len, 1); length <= max_len; ++length) {
    for (Index s = 0; s < N; ++s) {
      arcs.clear();
      nodes = {s};
      if (extend(length)) {
        result.walk = LinkWalk{link.vertex, arcs, nodes};
        return result;
      }
      if (result.exhausted) return result;
    }
  }
  return result;
}

CheckReport check_condition_T(const TwoComplex& X, int q) {
  const std::size_t V = X.vertex_count();
  std::vector<std::string> bad(V), unsure(V);
  if (q > 3) {
    parallel_for(V, [&](std::size_t v) {
      auto link = link_of(X, static_cast<Index>(v));
      auto found = shortest_reduced_walk(X, link, 3, static_cast<std::size_t>(q - 1));
      const std::string head = "vertex " + X.vertex_id(link.vertex) + ": ";
      if (found.walk) {
        std::string text = head + "reduced link cycle of length " + std::to_string(found.walk->arcs.size()) +
                           " through faces";
        for (Index a : found.walk->arcs) text += " " + X.face(link.arcs[a].corner.face).id;
        bad[v] = std::move(text);
      } else if (found.exhausted) {
        unsure[v] = head + "link walk search budget exhausted";
      }
    });
  }
  std::vector<std::string> violations, ambiguous;
  for (std::size_t v = 0; v < V; ++v) {
    if (!bad[v].empty()) violations.push_back(std::move(bad[v]));
    if (!unsure[v].empty()) ambiguous.push_back(std::move(unsure[v]));
  }
  return CheckReport::from_witnesses(std::move(violations), std::move(ambiguous));
}

std::vector<std::vector<Index>> intersecting_tuples(const TwoComplex& X, std::size_t max_size) {
  const Index F = static_cast<Index>(X.face_count());
  std::vector<std::vector<Index>> higher(F);  // neighbours with larger index
  for (Index f = 0; f < F; ++f) {
    std::vector<Index> around;
    for (Index v : X.face_vertices(f))
      for (Index g : X.vertex_faces(v))
        if (g > f) around.push_back(g);
    std::sort(around.begin(), around.end());
    around.erase(std::unique(around.begin(), around.end()), around.end());
    higher[f] = std::move(around);
  }
  std::vector<std::vector<Index>> out;
  std::vector<Index> clique;
  std::function<void(const std::vector<Index>&)> grow = [&](const std::vector<Index>& candidates) {
    for (Index g : candidates) {
      clique.push_back(g);
      if (clique.size() >= 2) out.push_back(clique);
      if (clique.size() < max_size) {
        std::vector<Index> next;
        std::set_intersection(candidates.begin(), candidates.end(), higher[g].begin(), higher[g].end(),
                              std::back_inserter(next));
        grow(next);
      }
      clique.pop_back();
    }
  };
  for (Index f = 0; f < F; ++f) {
    clique = {f};
    if (max_size >= 2) grow(higher[f]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::optional<CheckReport> helly_precondition(const TwoComplex& X, HellyMode mode) {
  if (mode == HellyMode::C6) {
    auto c = check_condition_C(X, 6);
    if (!c.holds()) return CheckReport::error("precondition: C(6) does not hold");
  } else {
    if (!check_condition_C(X, 4).holds()) return CheckReport::error("precondition: C(4) does not hold");
    if (!check_condition_T(X, 4).holds()) return CheckReport::error("precondition: T(4) does not hold");
  }
  return std::nullopt;
}

}  // namespace

CheckReport check_helly(const TwoComplex& X, HellyMode mode) {
  if (auto pre = helly_precondition(X, mode)) return *pre;
  std::vector<std::string> bad;
  for (const auto& t : intersecting_tuples(X, 4)) {
    auto common = intersect_faces(X, t);
    if (common.empty()) {
      bad.push_back("tuple " + tuple_text(X, t) + ": empty common intersection");
    } else if (mode == HellyMode::C6 && !is_vertex_or_path(X, common)) {
      bad.push_back("tuple " + tuple_text(X, t) + ": common intersection is neither a vertex nor a piece");
    }
  }
  return CheckReport::from_witnesses(std::move(bad));
}

CheckReport check_strong_helly(const TwoComplex& X, HellyMode mode) {
  if (auto pre = helly_precondition(X, mode)) return *pre;
  std::vector<std::string> bad;
  for (const auto& t : intersecting_tuples(X, 3)) {
    if (t.size() != 3) continue;
    if (mode == HellyMode::C6 && intersect_faces(X, t).edges.empty()) continue;
    bool ok = false;
    for (int c = 0; c < 3 && !ok; ++c) {
      auto pair = intersect(closed_face(X, t[(c + 1) % 3]), closed_face(X, t[(c + 2) % 3]));
      ok = pair.subset_of(closed_face(X, t[c]));
    }
    if (!ok) bad.push_back("triple " + tuple_text(X, t) + ": no pairwise intersection lies in the third cell");
  }
  return CheckReport::from_witnesses(std::move(bad));
}

CheckReport check_piece_length_bound(const TwoComplex& X, int q) {
  if (q < 5) return CheckReport::error("precondition: q must be at least 5");
  auto t = check_condition_T(X, q);
  if (!t.holds()) return CheckReport::error("precondition: T(" + std::to_string(q) + ") does not hold");
  std::vector<std::string> bad;
  const PieceSet pieces = enumerate_pieces(X);
  for (const auto& p : pieces.maximal()) {
    if (p.path.size() <= 1) continue;
    std::string text = "piece of length " + std::to_string(p.path.size()) + ":";
    for (const auto& l : p.path) text += std::string(" ") + (l.forward ? "+" : "-") + X.edge(l.edge).id;
    bad.push_back(std::move(text));
  }
  return CheckReport::from_witnesses(std::move(bad));
}

}  // namespace smallcancel
