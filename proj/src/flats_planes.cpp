#include <algorithm>
#include <map>
#include <set>
#include <variant>

#include "smallcancel/cancellation.hpp"
#include "smallcancel/flats.hpp"
#include "smallcancel/io.hpp"
#include "smallcancel/parallel.hpp"

namespace smallcancel {

namespace {

std::string join(const TwoComplex& X, const std::vector<Index>& faces) {
  std::string out;
  for (Index f : faces) {
    if (!out.empty()) out += ", ";
    out += X.face(f).id;
  }
  return out;
}

// Faces of E at depth >= margin, or an error message.
std::variant<std::vector<Index>, std::string> checked_faces(const TwoComplex& X, const Subcomplex& E, int margin,
                                                            DepthMode mode) {
  if (margin < 0) return std::string("margin must be non-negative");
  if (E.faces().empty()) return std::string("empty subcomplex");
  auto depth = face_depths(X, E, mode);
  std::vector<Index> out;
  for (Index f : E.faces())
    if (depth[f] >= margin) out.push_back(f);
  if (out.empty()) return std::string("margin larger than patch: no face has depth " + std::to_string(margin));
  return out;
}

bool covers_boundary(const TwoComplex& X, Index f, const std::vector<Index>& others) {
  CellSet cover;
  for (Index g : others) {
    auto c = intersect(closed_face(X, f), closed_face(X, g));
    cover.vertices.insert(cover.vertices.end(), c.vertices.begin(), c.vertices.end());
    cover.edges.insert(cover.edges.end(), c.edges.begin(), c.edges.end());
  }
  std::sort(cover.vertices.begin(), cover.vertices.end());
  cover.vertices.erase(std::unique(cover.vertices.begin(), cover.vertices.end()), cover.vertices.end());
  std::sort(cover.edges.begin(), cover.edges.end());
  cover.edges.erase(std::unique(cover.edges.begin(), cover.edges.end()), cover.edges.end());
  return closed_face(X, f).subset_of(cover);
}

FlatCertificate make_certificate(FlatKind kind, const TwoComplex& Ec, int margin, const std::vector<Index>& checked,
                                 const std::vector<std::vector<Index>>& neighbours,
                                 std::vector<std::pair<std::string, std::string>> classes) {
  FlatCertificate c;
  c.kind = kind;
  c.margin = margin;
  for (const auto& f : Ec.faces()) c.faces.push_back(f.id);
  c.subcomplex = serialize(Ec);
  for (std::size_t k = 0; k < checked.size(); ++k) {
    std::vector<std::string> ns;
    for (Index g : neighbours[k]) ns.push_back(Ec.face(g).id);
    c.neighbours.emplace_back(Ec.face(checked[k]).id, std::move(ns));
  }
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  c.vertex_classes = std::move(classes);
  return c;
}

// Common driver for the two flat-plane checkers, which judge E as a complex in
// its own right. The per-face callback returns witnesses and fills classes.
template <class PerFace>
FlatResult run_plane_check(FlatKind kind, const TwoComplex& X, const Subcomplex& E, int margin, PerFace per_face) {
  auto chosen = checked_faces(X, E, margin, DepthMode::Subcomplex);
  if (auto* msg = std::get_if<std::string>(&chosen)) return {std::nullopt, CheckReport::error(*msg)};
  TwoComplex Ec = E.to_complex();
  Subcomplex whole = Subcomplex::whole(Ec);
  std::vector<Index> checked;
  for (Index f : std::get<std::vector<Index>>(chosen)) checked.push_back(Ec.face_index(X.face(f).id));

  std::vector<std::vector<Index>> neighbours(checked.size());
  std::vector<std::vector<std::string>> witnesses(checked.size());
  std::vector<std::vector<std::pair<std::string, std::string>>> classes(checked.size());
  parallel_for(checked.size(), [&](std::size_t k) {
    neighbours[k] = cyclic_neighbours(Ec, whole, checked[k]);
    witnesses[k] = per_face(Ec, checked[k], neighbours[k], classes[k]);
  });

  std::vector<std::string> all;
  std::vector<std::pair<std::string, std::string>> all_classes;
  for (std::size_t k = 0; k < checked.size(); ++k) {
    all.insert(all.end(), witnesses[k].begin(), witnesses[k].end());
    all_classes.insert(all_classes.end(), classes[k].begin(), classes[k].end());
  }
  if (!all.empty()) return {std::nullopt, CheckReport::from_witnesses(std::move(all))};
  return {make_certificate(kind, Ec, margin, checked, neighbours, std::move(all_classes)), CheckReport::holding()};
}

std::vector<std::string> c6_face(const TwoComplex& X, Index f, const std::vector<Index>& ns,
                                 std::vector<std::pair<std::string, std::string>>& classes) {
  std::vector<std::string> out;
  const std::string head = "face " + X.face(f).id + ": ";
  if (ns.size() != 6) out.push_back(head + "condition (1): meets " + std::to_string(ns.size()) + " faces, expected 6");
  if (!covers_boundary(X, f, ns)) out.push_back(head + "condition (1): neighbours do not cover the boundary");
  bool pair_bad = false, triple_bad = false;
  for (std::size_t i = 0; i < ns.size() && !pair_bad; ++i)
    for (std::size_t j = i + 1; j < ns.size() && !pair_bad; ++j) {
      auto c = intersect_faces(X, {f, ns[i], ns[j]});
      if (!c.edges.empty() || c.vertices.size() > 1) {
        out.push_back(head + "condition (2): intersection with " + join(X, {ns[i], ns[j]}) +
                      " is more than a vertex");
        pair_bad = true;
      }
    }
  for (std::size_t i = 0; i < ns.size() && !triple_bad; ++i)
    for (std::size_t j = i + 1; j < ns.size() && !triple_bad; ++j)
      for (std::size_t k = j + 1; k < ns.size() && !triple_bad; ++k)
        if (!intersect_faces(X, {f, ns[i], ns[j], ns[k]}).empty()) {
          out.push_back(head + "condition (3): " + join(X, {ns[i], ns[j], ns[k]}) + " meet the face in a common cell");
          triple_bad = true;
        }
  for (Index v : X.face_vertices(f)) classes.emplace_back(X.vertex_id(v), "valence" + std::to_string(X.valence(v)));
  return out;
}

using FacePairSet = std::set<std::set<Index>>;

// Faces of the arcs in each parallel class, when the link is exactly two
// embedded 2-cycles.
std::optional<FacePairSet> two_bigons(const TwoComplex& X, Index v) {
  auto L = link_of(X, v);
  std::map<std::pair<Index, Index>, std::vector<Index>> groups;
  for (const auto& a : L.arcs) {
    if (a.a == a.b) return std::nullopt;
    groups[{std::min(a.a, a.b), std::max(a.a, a.b)}].push_back(a.corner.face);
  }
  if (L.arcs.size() != 4 || groups.size() != 2) return std::nullopt;
  FacePairSet out;
  for (const auto& [key, faces] : groups) {
    if (faces.size() != 2) return std::nullopt;
    out.insert(std::set<Index>(faces.begin(), faces.end()));
  }
  return out;
}

bool is_four_cycle(const TwoComplex& X, Index v, const std::set<Index>& faces) {
  auto L = link_of(X, v);
  if (L.nodes.size() != 4 || L.arcs.size() != 4) return false;
  std::vector<int> degree(4, 0);
  std::set<Index> arc_faces;
  std::vector<std::vector<Index>> adj(4);
  for (const auto& a : L.arcs) {
    if (a.a == a.b) return false;
    ++degree[a.a];
    ++degree[a.b];
    adj[a.a].push_back(a.b);
    adj[a.b].push_back(a.a);
    arc_faces.insert(a.corner.face);
  }
  for (int d : degree)
    if (d != 2) return false;
  // connected and without a doubled arc
  std::vector<bool> seen(4, false);
  std::vector<Index> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Index n = stack.back();
    stack.pop_back();
    for (Index m : adj[n])
      if (!seen[m]) {
        seen[m] = true;
        ++reached;
        stack.push_back(m);
      }
  }
  return reached == 4 && arc_faces == faces;
}

std::vector<std::string> quasi_face(const TwoComplex& X, Index f, const std::vector<Index>& ns,
                                    std::vector<std::pair<std::string, std::string>>& classes) {
  std::vector<std::string> out;
  const std::string head = "face " + X.face(f).id + ": ";
  if (ns.size() != 8) {
    out.push_back(head + "condition (1): meets " + std::to_string(ns.size()) + " faces, expected 8");
    return out;
  }
  // Fk for k = 1..8, read cyclically, with the edge neighbours at odd k.
  std::optional<std::size_t> offset;
  for (std::size_t o : {0u, 1u}) {
    std::vector<Index> odd{ns[o], ns[o + 2], ns[o + 4], ns[o + 6]};
    if (covers_boundary(X, f, odd)) {
      offset = o;
      break;
    }
  }
  if (!offset) {
    out.push_back(head + "condition (2): no alternate neighbours cover the boundary");
    return out;
  }
  auto F = [&](int k) { return ns[(*offset + static_cast<std::size_t>((k - 1 + 8) % 8)) % 8]; };
  const CellSet cf = closed_face(X, f);

  for (int k = 2; k <= 8; k += 2) {
    if (intersect(cf, closed_face(X, F(k))) != intersect(closed_face(X, F(k - 1)), closed_face(X, F(k + 1))))
      out.push_back(head + "condition (3): trace of " + X.face(F(k)).id + " differs from " +
                    join(X, {F(k - 1), F(k + 1)}) + " intersection");
  }
  bool quad_bad = false;
  for (int i = 1; i <= 8 && !quad_bad; ++i)
    for (int j = i + 1; j <= 8 && !quad_bad; ++j)
      for (int k = j + 1; k <= 8 && !quad_bad; ++k)
        for (int l = k + 1; l <= 8 && !quad_bad; ++l)
          if (!intersect_faces(X, {f, F(i), F(j), F(k), F(l)}).empty()) {
            out.push_back(head + "condition (4): " + join(X, {F(i), F(j), F(k), F(l)}) +
                          " meet the face in a common cell");
            quad_bad = true;
          }

  for (Index v : X.face_vertices(f)) {
    const std::size_t d = X.valence(v);
    const std::string vname = X.vertex_id(v);
    if (d <= 2) {
      classes.emplace_back(vname, "degree" + std::to_string(d));
      continue;
    }
    bool ok = false;
    std::string label;
    for (int k = 2; k <= 8 && !ok; k += 2) {
      auto trace = intersect(cf, closed_face(X, F(k)));
      if (d == 4) {
        if (trace.edges.empty() && trace.vertices == std::vector<Index>{v} &&
            is_four_cycle(X, v, {f, F(k - 1), F(k), F(k + 1)})) {
          ok = true;
          label = "degree4";
        }
      } else if (d == 3) {
        if (trace.edges.size() != 1 || trace.vertices.size() != 2) continue;
        if (!std::binary_search(trace.vertices.begin(), trace.vertices.end(), v)) continue;
        Index w = trace.vertices[0] == v ? trace.vertices[1] : trace.vertices[0];
        if (X.valence(w) != 3) continue;
        auto lv = two_bigons(X, v);
        auto lw = two_bigons(X, w);
        if (!lv || !lw) continue;
        FacePairSet one{{f, F(k - 1)}, {F(k), F(k + 1)}};
        FacePairSet two{{f, F(k + 1)}, {F(k), F(k - 1)}};
        if ((*lv == one && *lw == two) || (*lv == two && *lw == one)) {
          ok = true;
          label = "degree3:" + X.vertex_id(w);
        }
      }
    }
    if (ok) {
      classes.emplace_back(vname, label);
    } else {
      out.push_back(head + "condition (5): vertex " + vname + " of degree " + std::to_string(d) +
                    " does not match the allowed local pictures");
    }
  }
  return out;
}

}  // namespace

FlatResult check_flat_plane_c6(const TwoComplex& X, const Subcomplex& E, int margin) {
  return run_plane_check(FlatKind::HexagonalFlatPlane, X, E, margin, c6_face);
}

FlatResult check_quasi_flat_plane(const TwoComplex& X, const Subcomplex& E, int margin) {
  return run_plane_check(FlatKind::QuasiFlatPlane, X, E, margin, quasi_face);
}

FlatResult check_flat_c3t6(const TwoComplex& X, const Subcomplex& E, int margin) {
  if (!check_condition_C(X, 3).holds()) return {std::nullopt, CheckReport::error("precondition: C(3) does not hold")};
  if (!check_condition_T(X, 6).holds()) return {std::nullopt, CheckReport::error("precondition: T(6) does not hold")};
  auto chosen = checked_faces(X, E, margin, DepthMode::Ambient);
  if (auto* msg = std::get_if<std::string>(&chosen)) return {std::nullopt, CheckReport::error(*msg)};
  const auto& checked = std::get<std::vector<Index>>(chosen);
  PieceSet pieces = enumerate_pieces(X);

  std::vector<std::string> witnesses;
  std::set<Index> margin_vertices;
  for (Index f : checked) {
    const std::string head = "face " + X.face(f).id + ": ";
    const auto& word = X.face(f).boundary;
    if (word.size() != 3) witnesses.push_back(head + "not a triangle");
    for (Index p = 0; p < word.size(); ++p) {
      Index e = word[p].edge;
      std::size_t in_e = 0;
      for (Index g : X.edge_faces(e)) in_e += E.contains_face(g);
      if (in_e != 2)
        witnesses.push_back(head + "edge " + X.edge(e).id + " lies in " + std::to_string(in_e) +
                            " faces of the subcomplex");
      if (pieces.reach(f, p) < 1) witnesses.push_back(head + "edge " + X.edge(e).id + " is not a piece");
    }
    for (Index v : X.face_vertices(f)) margin_vertices.insert(v);
  }
  std::vector<std::pair<std::string, std::string>> classes;
  for (Index v : margin_vertices) {
    bool interior = true;
    for (Index g : X.vertex_faces(v))
      for (Index e : X.face_edges(g))
        if ((X.edge(e).from == v || X.edge(e).to == v) && X.edge_faces(e).size() < 2) interior = false;
    if (!interior) continue;
    const auto& star = X.vertex_faces(v);
    std::size_t in_e = std::count_if(star.begin(), star.end(), [&](Index g) { return E.contains_face(g); });
    if (star.size() != 6 || in_e != star.size())
      witnesses.push_back("vertex " + X.vertex_id(v) + ": lies in " + std::to_string(star.size()) + " faces, " +
                          std::to_string(in_e) + " of them in the subcomplex");
    else
      classes.emplace_back(X.vertex_id(v), "six-triangles");
  }

  // 1-skeleton distances between margin vertices, inside E and inside X
  Graph gx, ge;
  for (const auto& v : X.vertices()) {
    gx.add_vertex(v);
    ge.add_vertex(v);
  }
  for (const auto& e : X.edges()) gx.add_edge(e.from, e.to);
  for (Index e : E.edges()) ge.add_edge(X.edge(e).from, X.edge(e).to);
  std::vector<Index> mv(margin_vertices.begin(), margin_vertices.end());
  std::vector<std::vector<std::string>> per(mv.size());
  parallel_for(mv.size(), [&](std::size_t k) {
    auto dx = gx.distances_from(mv[k]);
    auto de = ge.distances_from(mv[k]);
    for (std::size_t l = k + 1; l < mv.size(); ++l)
      if (dx[mv[l]] != de[mv[l]])
        per[k].push_back("vertices " + X.vertex_id(mv[k]) + ", " + X.vertex_id(mv[l]) + ": distance " +
                         std::to_string(de[mv[l]]) + " in the subcomplex, " + std::to_string(dx[mv[l]]) +
                         " in the complex");
  });
  for (auto& w : per) witnesses.insert(witnesses.end(), w.begin(), w.end());
  if (!witnesses.empty()) return {std::nullopt, CheckReport::from_witnesses(std::move(witnesses))};

  TwoComplex Ec = E.to_complex();
  Subcomplex whole = Subcomplex::whole(Ec);
  std::vector<Index> local;
  std::vector<std::vector<Index>> neighbours;
  for (Index f : checked) {
    local.push_back(Ec.face_index(X.face(f).id));
    neighbours.push_back(cyclic_neighbours(Ec, whole, local.back()));
  }
  return {make_certificate(FlatKind::Triangular, Ec, margin, local, neighbours, std::move(classes)),
          CheckReport::holding()};
}

FlatResult check_flat(FlatKind kind, const TwoComplex& X, const Subcomplex& E, int margin) {
  switch (kind) {
    case FlatKind::Triangular:
      return check_flat_c3t6(X, E, margin);
    case FlatKind::HexagonalFlatPlane:
      return check_flat_plane_c6(X, E, margin);
    case FlatKind::QuasiFlatPlane:
      return check_quasi_flat_plane(X, E, margin);
  }
  return {std::nullopt, CheckReport::error("unknown flat kind")};
}

FlatResult reverify(const FlatCertificate& c) {
  TwoComplex Ec = load_complex(c.subcomplex);
  return check_flat(c.kind, Ec, Subcomplex::whole(Ec), c.margin);
}

CheckReport check_flat_embedding(const TwoComplex& X, const FlatCertificate& cert, int margin) {
  std::vector<Index> faces;
  for (const auto& id : cert.faces) {
    auto f = X.find_face(id);
    if (!f) return CheckReport::error("certificate face " + id + " is not in the complex");
    faces.push_back(*f);
  }
  Subcomplex E(X, faces);
  auto chosen = checked_faces(X, E, margin, DepthMode::Ambient);
  if (auto* msg = std::get_if<std::string>(&chosen)) return CheckReport::error(*msg);
  const auto& checked = std::get<std::vector<Index>>(chosen);

  Graph gx = gallery_graph(X);
  Graph ge = gallery_graph(E);
  std::vector<Index> local(X.face_count(), 0);
  for (std::size_t k = 0; k < E.faces().size(); ++k) local[E.faces()[k]] = static_cast<Index>(k);
  std::vector<std::vector<std::string>> per(checked.size());
  parallel_for(checked.size(), [&](std::size_t k) {
    auto dx = gx.distances_from(checked[k]);
    auto de = ge.distances_from(local[checked[k]]);
    for (std::size_t l = k + 1; l < checked.size(); ++l) {
      int a = de[local[checked[l]]], b = dx[checked[l]];
      if (a != b)
        per[k].push_back("faces " + X.face(checked[k]).id + ", " + X.face(checked[l]).id + ": gallery distance " +
                         (a < 0 ? std::string("infinite") : std::to_string(a)) + " in the subcomplex, " +
                         std::to_string(b) + " in the complex");
    }
  });
  std::vector<std::string> witnesses;
  for (auto& w : per) witnesses.insert(witnesses.end(), w.begin(), w.end());
  return CheckReport::from_witnesses(std::move(witnesses));
}

std::vector<std::pair<std::string, FlatResult>> search_flat_planes(const TwoComplex& X, int margin) {
  Subcomplex all = Subcomplex::whole(X);
  auto depth = face_depths(X, all, DepthMode::Ambient);
  std::vector<std::pair<std::string, FlatResult>> out;
  for (Index f = 0; f < X.face_count(); ++f) {
    if (depth[f] < margin) continue;
    out.emplace_back(X.face(f).id, check_flat_plane_c6(X, gallery_ball(X, f, margin), margin));
  }
  return out;
}

}  // namespace smallcancel
