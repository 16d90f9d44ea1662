#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "smallcancel/cancellation.hpp"
#include "smallcancel/duals.hpp"
#include "smallcancel/io.hpp"
#include "smallcancel/parallel.hpp"

namespace smallcancel {

namespace {

void require_dual_preconditions(const TwoComplex& X) {
  auto r = validate_complex(X, true);
  if (!r.holds()) {
    const std::string& w = r.witnesses.front();
    auto colon = w.find(':');
    throw ValidationError(w.substr(5, colon - 5), w.substr(colon + 2));
  }
  for (Index e = 0; e < X.edge_count(); ++e)
    if (X.edge_faces(e).empty()) throw ValidationError(X.edge(e).id, "edge lies in no face");
}

std::string names_text(const std::vector<std::string>& names) {
  std::string s;
  for (const auto& n : names) s += (s.empty() ? "" : " ") + n;
  return s;
}

}  // namespace

SimplicialComplex build_nerve(const TwoComplex& X) {
  require_dual_preconditions(X);
  SimplicialComplex K;
  const Index F = static_cast<Index>(X.face_count());
  for (Index f = 0; f < F; ++f) K.add_vertex(X.face(f).id);

  // Above four faces, Helly-type flagness lets cliques stand in for intersections.
  bool flag_completion = false;
  bool helly_known = false;

  std::vector<std::vector<Index>> higher(F);
  for (Index f = 0; f < F; ++f) {
    for (Index v : X.face_vertices(f))
      for (Index g : X.vertex_faces(v))
        if (g > f) higher[f].push_back(g);
    std::sort(higher[f].begin(), higher[f].end());
    higher[f].erase(std::unique(higher[f].begin(), higher[f].end()), higher[f].end());
  }

  std::vector<Index> clique;
  std::function<void(const std::vector<Index>&, const CellSet&)> grow = [&](const std::vector<Index>& candidates,
                                                                           const CellSet& common) {
    bool extended = false;
    for (Index g : candidates) {
      CellSet next_common = common;
      if (clique.size() + 1 > 4) {
        if (!helly_known) {
          flag_completion = check_helly(X, HellyMode::C6).holds();
          helly_known = true;
        }
      }
      if (clique.size() + 1 <= 4 || !flag_completion) {
        next_common = intersect(common, closed_face(X, g));
        if (next_common.empty()) continue;
      }
      extended = true;
      clique.push_back(g);
      std::vector<Index> next;
      std::set_intersection(candidates.begin(), candidates.end(), higher[g].begin(), higher[g].end(),
                            std::back_inserter(next));
      grow(next, next_common);
      clique.pop_back();
    }
    if (!extended && clique.size() > 1) K.add_simplex(clique);
  };
  for (Index f = 0; f < F; ++f) {
    clique = {f};
    grow(higher[f], closed_face(X, f));
  }
  return K;
}

std::string quad_vertex_name(const std::string& vertex_id) { return "V." + vertex_id; }
std::string quad_face_name(const std::string& face_id) { return "F." + face_id; }

SquareComplex quadrize(const TwoComplex& X) {
  require_dual_preconditions(X);
  SquareComplex Y;
  const Index V = static_cast<Index>(X.vertex_count());
  for (Index v = 0; v < V; ++v) Y.add_vertex(quad_vertex_name(X.vertex_id(v)), 0);
  for (Index f = 0; f < X.face_count(); ++f) Y.add_vertex(quad_face_name(X.face(f).id), 2);
  std::map<std::pair<Index, Index>, Index> incidence;  // (vertex, face) -> edge
  for (Index f = 0; f < X.face_count(); ++f)
    for (Index v : X.face_vertices(f))
      incidence[{v, f}] = Y.add_edge("i." + X.vertex_id(v) + "." + X.face(f).id, v, V + f);

  for (Index f1 = 0; f1 < X.face_count(); ++f1) {
    std::set<Index> later;
    for (Index v : X.face_vertices(f1))
      for (Index g : X.vertex_faces(v))
        if (g > f1) later.insert(g);
    for (Index f2 : later) {
      std::vector<Index> shared;
      const auto& a = X.face_vertices(f1);
      const auto& b = X.face_vertices(f2);
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(shared));
      for (std::size_t i = 0; i < shared.size(); ++i)
        for (std::size_t j = i + 1; j < shared.size(); ++j) {
          Index v1 = shared[i], v2 = shared[j];
          std::array<Index, 4> vs{v1, V + f1, v2, V + f2};
          std::array<Index, 4> es{incidence.at({v1, f1}), incidence.at({v2, f1}), incidence.at({v2, f2}),
                                  incidence.at({v1, f2})};
          Y.add_square("q." + X.face(f1).id + "." + X.face(f2).id + "." + X.vertex_id(v1) + "." + X.vertex_id(v2),
                       vs, es);
        }
    }
  }
  return Y;
}

CheckReport check_k_large(const SimplicialComplex& K, int k) {
  Graph G = K.one_skeleton();
  const Index N = static_cast<Index>(G.size());
  std::vector<std::string> bad;
  auto names_of = [&](const std::vector<Index>& vs) {
    std::vector<std::string> names;
    for (Index v : vs) names.push_back(G.name(v));
    return names_text(names);
  };

  // Flagness: report minimal cliques that are not simplices.
  std::vector<Index> clique;
  std::function<void(const std::vector<Index>&)> grow = [&](const std::vector<Index>& candidates) {
    for (Index w : candidates) {
      clique.push_back(w);
      if (!K.contains(clique)) {
        bad.push_back("non-flag clique {" + names_of(clique) + "}");
      } else {
        std::vector<Index> next;
        for (Index u : candidates)
          if (u > w && G.adjacent(u, w)) next.push_back(u);
        grow(next);
      }
      clique.pop_back();
    }
  };
  for (Index v = 0; v < N; ++v) {
    clique = {v};
    std::vector<Index> up;
    for (Index u : G.neighbours(v))
      if (u > v) up.push_back(u);
    grow(up);
  }

  // Induced cycles of length 4..k-1, rooted at their smallest vertex.
  std::vector<Index> path;
  std::vector<bool> on_path(N, false);
  std::function<void()> walk = [&]() {
    const Index s = path.front();
    const Index u = path.back();
    for (Index w : G.neighbours(u)) {
      if (w <= s || on_path[w]) continue;
      bool chord = false;
      for (std::size_t i = 1; i + 1 < path.size() && !chord; ++i) chord = G.adjacent(w, path[i]);
      if (chord) continue;
      if (path.size() >= 2 && G.adjacent(w, s)) {
        if (path.size() + 1 >= 4 && path[1] < w) {
          auto cycle = path;
          cycle.push_back(w);
          bad.push_back("cycle without diagonal: " + names_of(cycle));
        }
        continue;
      }
      if (static_cast<int>(path.size()) + 1 >= k - 1) continue;
      on_path[w] = true;
      path.push_back(w);
      walk();
      path.pop_back();
      on_path[w] = false;
    }
  };
  if (k > 4) {
    for (Index s = 0; s < N; ++s) {
      path = {s};
      on_path[s] = true;
      walk();
      on_path[s] = false;
    }
  }
  return CheckReport::from_witnesses(std::move(bad));
}

CheckReport check_systolic_links(const SimplicialComplex& K, const std::vector<Index>& only) {
  std::vector<Index> targets = only;
  if (targets.empty())
    for (Index v = 0; v < K.vertex_count(); ++v) targets.push_back(v);
  std::vector<CheckReport> per(targets.size());
  parallel_for(targets.size(), [&](std::size_t i) { per[i] = check_k_large(K.link(targets[i]), 6); });
  CheckReport total;
  for (std::size_t i = 0; i < targets.size(); ++i)
    if (!per[i].holds()) total.absorb(per[i], "vertex " + K.name(targets[i]) + ": ");
  return total;
}

namespace {

using EdgeKey = std::array<Index, 4>;

EdgeKey edge_key(const SquareComplex::Square& s) {
  EdgeKey k = s.edges;
  std::sort(k.begin(), k.end());
  return k;
}

// Orders an edge set into a simple cycle; empty result when it is not one.
// Returns vertices h0..h(n-1) and edges e0..e(n-1) with e_i joining h_i, h_{i+1}.
std::pair<std::vector<Index>, std::vector<Index>> simple_cycle(const SquareComplex& Y, const std::vector<Index>& edges) {
  std::map<Index, std::vector<Index>> at;
  for (Index e : edges) {
    const auto& rec = Y.edges()[e];
    if (rec.a == rec.b) return {};
    at[rec.a].push_back(e);
    at[rec.b].push_back(e);
  }
  if (at.size() != edges.size()) return {};
  for (const auto& [v, es] : at)
    if (es.size() != 2) return {};
  std::vector<Index> hs, es;
  Index start = at.begin()->first;
  Index v = start;
  Index prev_edge = at[start][1];
  do {
    Index e = at[v][0] == prev_edge ? at[v][1] : at[v][0];
    hs.push_back(v);
    es.push_back(e);
    const auto& rec = Y.edges()[e];
    v = rec.a == v ? rec.b : rec.a;
    prev_edge = e;
  } while (v != start && hs.size() <= edges.size());
  if (hs.size() != edges.size()) return {};
  return {hs, es};
}

}  // namespace

CheckReport check_quadric_conditions(const SquareComplex& Y) {
  const auto& squares = Y.squares();
  const auto& edges = Y.edges();
  const Index S = static_cast<Index>(squares.size());
  std::vector<std::string> bad;
  auto vname = [&](Index v) { return Y.name(v); };

  std::set<EdgeKey> filled;
  for (const auto& s : squares) filled.insert(edge_key(s));

  // (A)
  for (const auto& s : squares) {
    std::set<Index> vs(s.vertices.begin(), s.vertices.end());
    std::set<Index> es(s.edges.begin(), s.edges.end());
    bool sides_ok = true;
    for (int i = 0; i < 4; ++i) {
      const auto& e = edges[s.edges[i]];
      Index a = s.vertices[i], b = s.vertices[(i + 1) % 4];
      if (!((e.a == a && e.b == b) || (e.a == b && e.b == a))) sides_ok = false;
    }
    if (vs.size() != 4 || es.size() != 4 || !sides_ok)
      bad.push_back("(A) square " + s.id + ": boundary is not an embedded 4-cycle");
  }

  std::vector<std::vector<Index>> on_edge(edges.size());
  for (Index i = 0; i < S; ++i)
    for (Index e : std::set<Index>(squares[i].edges.begin(), squares[i].edges.end())) on_edge[e].push_back(i);
  std::vector<std::set<Index>> adjacent(S);
  for (const auto& list : on_edge)
    for (Index a : list)
      for (Index b : list)
        if (a != b) adjacent[a].insert(b);

  auto once_used = [&](const std::vector<Index>& group) {
    std::map<Index, int> count;
    for (Index i : group)
      for (Index e : squares[i].edges) ++count[e];
    std::vector<Index> out;
    bool odd_multiple = false;
    for (auto [e, c] : count) {
      if (c == 1) out.push_back(e);
      if (c > 2) odd_multiple = true;
    }
    return std::make_pair(out, odd_multiple);
  };

  // (B) and (C)
  for (Index i = 0; i < S; ++i) {
    for (Index j : adjacent[i]) {
      if (j <= i) continue;
      EdgeKey ki = edge_key(squares[i]), kj = edge_key(squares[j]);
      std::vector<Index> common;
      std::set_intersection(ki.begin(), ki.end(), kj.begin(), kj.end(), std::back_inserter(common));
      if (common.size() >= 3 && ki != kj)
        bad.push_back("(B) squares " + squares[i].id + ", " + squares[j].id +
                      ": share " + std::to_string(common.size()) + " edges but have different boundaries");
      auto [boundary, multiple] = once_used({i, j});
      if (multiple || boundary.size() != 4) continue;
      auto [hs, es] = simple_cycle(Y, boundary);
      if (hs.empty()) continue;
      EdgeKey want{boundary[0], boundary[1], boundary[2], boundary[3]};
      std::sort(want.begin(), want.end());
      if (!filled.count(want)) {
        std::vector<std::string> names;
        for (Index h : hs) names.push_back(vname(h));
        bad.push_back("(C) squares " + squares[i].id + ", " + squares[j].id + ": boundary 4-cycle " +
                      names_text(names) + " bounds no square");
      }
    }
  }

  // (D)
  std::set<std::array<Index, 3>> triples;
  for (Index i = 0; i < S; ++i)
    for (Index j : adjacent[i]) {
      if (j <= i) continue;
      std::set<Index> third(adjacent[i].begin(), adjacent[i].end());
      third.insert(adjacent[j].begin(), adjacent[j].end());
      for (Index k : third) {
        if (k == i || k == j) continue;
        std::array<Index, 3> t{i, j, k};
        std::sort(t.begin(), t.end());
        triples.insert(t);
      }
    }
  for (const auto& t : triples) {
    auto [boundary, multiple] = once_used({t[0], t[1], t[2]});
    if (multiple || boundary.size() != 6) continue;
    auto [hs, es] = simple_cycle(Y, boundary);
    if (hs.empty()) continue;
    bool divided = false;
    for (int i = 0; i < 3 && !divided; ++i) {
      Index a = hs[i], b = hs[i + 3];
      for (Index d = 0; d < edges.size() && !divided; ++d) {
        const auto& rec = edges[d];
        if (!((rec.a == a && rec.b == b) || (rec.a == b && rec.b == a))) continue;
        EdgeKey left{es[i], es[i + 1], es[i + 2], d};
        EdgeKey right{es[i + 3], es[(i + 4) % 6], es[(i + 5) % 6], d};
        std::sort(left.begin(), left.end());
        std::sort(right.begin(), right.end());
        divided = filled.count(left) && filled.count(right);
      }
    }
    if (!divided) {
      std::vector<std::string> names;
      for (Index h : hs) names.push_back(vname(h));
      bad.push_back("(D) squares " + squares[t[0]].id + ", " + squares[t[1]].id + ", " + squares[t[2]].id +
                    ": boundary 6-cycle " + names_text(names) + " has no dividing diagonal");
    }
  }
  return CheckReport::from_witnesses(std::move(bad));
}

}  // namespace smallcancel
