// Acceptance suite: one PASS/FAIL line per criterion.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "smallcancel/cancellation.hpp"
#include "smallcancel/duals.hpp"
#include "smallcancel/flats.hpp"
#include "smallcancel/generators.hpp"
#include "smallcancel/io.hpp"

using namespace smallcancel;

namespace {

TwoComplex patch(Family f, int r) {
  if (f == Family::PaperExample) return generate_paper_example(r).complex;
  if (f == Family::QuasiFlatPlane) return generate_quasi_flat_plane(r, [](int, int) { return true; }).complex;
  return generate_tiling(f, r).complex;
}

const std::vector<Family> kFamilies{Family::Triangular, Family::Square, Family::Hexagonal, Family::QuasiFlatPlane,
                                    Family::PaperExample};

struct Check {
  std::ostringstream notes;
  bool ok = true;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes << "  - " << what << '\n';
    }
  }
};

bool well_formed(const CheckReport& r) {
  if (r.verdict == Verdict::Holds) return r.witnesses.empty();
  if (r.witnesses.empty()) return false;
  for (const auto& w : r.witnesses)
    if (w.rfind("face ", 0) != 0 && w.rfind("vertex ", 0) != 0) return false;
  return true;
}

void verdict_is(Check& c, const std::string& label, const CheckReport& r, Verdict want) {
  c.expect(r.verdict == want, label + ": got " + std::string(to_string(r.verdict)));
  c.expect(well_formed(r), label + ": malformed witnesses");
}

void criterion1(Check& c) {
  auto tri = patch(Family::Triangular, 4);
  verdict_is(c, "triangular C(3)", check_condition_C(tri, 3), Verdict::Holds);
  verdict_is(c, "triangular T(6)", check_condition_T(tri, 6), Verdict::Holds);
  verdict_is(c, "triangular C(4)", check_condition_C(tri, 4), Verdict::Violated);
  for (Family f : {Family::Square, Family::PaperExample}) {
    auto X = patch(f, 4);
    std::string n(to_string(f));
    verdict_is(c, n + " C(4)", check_condition_C(X, 4), Verdict::Holds);
    verdict_is(c, n + " T(4)", check_condition_T(X, 4), Verdict::Holds);
    verdict_is(c, n + " T(5)", check_condition_T(X, 5), Verdict::Violated);
  }
  verdict_is(c, "hexagonal C(6)", check_condition_C(patch(Family::Hexagonal, 4), 6), Verdict::Holds);
}

void criterion2(Check& c) {
  int tested = 0;
  std::vector<TwoComplex> candidates;
  for (Family f : kFamilies) candidates.push_back(patch(f, 4));
  candidates.push_back(quotient_by_lattice(Family::Triangular, 3, 3).complex);
  candidates.push_back(quotient_by_lattice(Family::Triangular, 4, 5).complex);
  for (const auto& X : candidates) {
    if (!check_condition_T(X, 6).holds()) continue;
    ++tested;
    auto pieces = enumerate_pieces(X);
    bool all_one = !pieces.maximal().empty();
    for (const auto& p : pieces.maximal()) all_one = all_one && p.path.size() == 1;
    c.expect(all_one, X.name() + ": some maximal piece has length other than 1");
    c.expect(oracle::longest_piece(X) == 1, X.name() + ": exhaustive enumeration finds a longer piece");
  }
  c.expect(tested >= 2, "fewer than two T(6) patches were examined");
}

void criterion3(Check& c) {
  for (Family f : kFamilies) {
    auto X = patch(f, 3);
    std::string n(to_string(f));
    bool c6 = check_condition_C(X, 6).holds();
    bool c4t4 = check_condition_C(X, 4).holds() && check_condition_T(X, 4).holds();
    if (!c6 && !c4t4) {
      c.expect(check_helly(X, HellyMode::C6).verdict == Verdict::Error, n + ": precondition not reported");
      continue;
    }
    HellyMode mode = c6 ? HellyMode::C6 : HellyMode::C4T4;
    c.expect(check_helly(X, mode).holds(), n + ": Helly violations");
    c.expect(check_strong_helly(X, mode).holds(), n + ": strong Helly violations");
  }
  // exactly one common vertex for every pairwise-intersecting hexagon triple
  auto hex = patch(Family::Hexagonal, 3);
  auto d = oracle::gallery_matrix(hex);
  const Index m = static_cast<Index>(hex.face_count());
  std::size_t triples = 0;
  for (Index a = 0; a < m; ++a)
    for (Index b = a + 1; b < m; ++b)
      for (Index e = b + 1; e < m; ++e)
        if (d[a][b] == 1 && d[a][e] == 1 && d[b][e] == 1) {
          ++triples;
          c.expect(oracle::common_vertices(hex, {a, b, e}).size() == 1,
                   "hexagonal triple " + hex.face(a).id + "," + hex.face(b).id + "," + hex.face(e).id);
        }
  c.expect(triples > 0, "no hexagonal triples found");
}

SquareComplex violator(char which) {
  SquareComplex Y;
  auto v = [&](const char* n) { return Y.add_vertex(n); };
  if (which == 'B') {
    Index a = v("a"), b = v("b"), cc = v("c"), d = v("d");
    Index ab = Y.add_edge("ab", a, b), bc = Y.add_edge("bc", b, cc), cd = Y.add_edge("cd", cc, d);
    Index da1 = Y.add_edge("da1", d, a), da2 = Y.add_edge("da2", d, a);
    Y.add_square("s1", {a, b, cc, d}, {ab, bc, cd, da1});
    Y.add_square("s2", {a, b, cc, d}, {ab, bc, cd, da2});
  } else if (which == 'C') {
    Index a = v("a"), b = v("b"), cc = v("c"), d = v("d"), e = v("e");
    Y.add_edge("ab", a, b);
    Y.add_edge("bc", b, cc);
    Y.add_edge("cd", cc, d);
    Y.add_edge("da", d, a);
    Y.add_edge("ce", cc, e);
    Y.add_edge("ea", e, a);
    Y.add_square("s1", {a, b, cc, d});
    Y.add_square("s2", {a, b, cc, e});
  } else {
    Index o = v("o"), a = v("a"), b = v("b"), cc = v("c"), x = v("x"), y = v("y"), z = v("z");
    for (auto [p, q] : {std::pair{o, a}, {o, b}, {o, cc}, {a, x}, {x, b}, {b, y}, {y, cc}, {cc, z}, {z, a}})
      Y.add_edge(Y.name(p) + Y.name(q), p, q);
    Y.add_square("s1", {o, a, x, b});
    Y.add_square("s2", {o, b, y, cc});
    Y.add_square("s3", {o, cc, z, a});
  }
  return Y;
}

void criterion4(Check& c) {
  auto hex = patch(Family::Hexagonal, 4);
  auto K = build_nerve(hex);
  auto depth = face_depths(hex, Subcomplex::whole(hex), DepthMode::Ambient);
  std::vector<Index> interior;
  for (Index f = 0; f < hex.face_count(); ++f)
    if (depth[f] >= 1) interior.push_back(*K.find(hex.face(f).id));
  c.expect(!interior.empty(), "no interior nerve vertices");
  c.expect(check_systolic_links(K, interior).holds(), "nerve links at interior vertices are not 6-large");
  c.expect(check_k_large(K, 4).holds(), "nerve is not flag");
  for (Family f : {Family::Square, Family::PaperExample})
    c.expect(check_quadric_conditions(quadrize(patch(f, 3))).holds(),
             std::string(to_string(f)) + " quadrization fails the quadric conditions");
  for (char which : {'B', 'C', 'D'}) {
    auto r = check_quadric_conditions(violator(which));
    std::string label = std::string("(") + which + ")";
    bool labelled = r.verdict == Verdict::Violated && !r.witnesses.empty();
    for (const auto& w : r.witnesses) labelled = labelled && w.rfind(label, 0) == 0;
    c.expect(labelled, label + "-violator not flagged with its label alone");
  }
}

std::vector<Index> deep_faces(const TwoComplex& X, int margin) {
  auto depth = face_depths(X, Subcomplex::whole(X), DepthMode::Ambient);
  std::vector<Index> out;
  for (Index f = 0; f < X.face_count(); ++f)
    if (depth[f] >= margin) out.push_back(f);
  return out;
}

void criterion5(Check& c) {
  {
    auto X = patch(Family::Hexagonal, 4);
    Graph G = build_nerve(X).one_skeleton();
    auto faces = deep_faces(X, 2);
    std::size_t mismatches = 0;
    for (Index a : faces) {
      auto dn = G.distances_from(*G.find(X.face(a).id));
      for (Index b : faces)
        if (gallery_distance(X, a, b) != dn[*G.find(X.face(b).id)]) ++mismatches;
    }
    c.expect(mismatches == 0, "hexagonal: " + std::to_string(mismatches) + " nerve distance mismatches");
  }
  for (Family f : {Family::Square, Family::PaperExample}) {
    auto X = patch(f, 4);
    Graph G = quadrize(X).one_skeleton();
    auto faces = deep_faces(X, 2);
    std::size_t mismatches = 0;
    for (Index a : faces) {
      auto dq = G.distances_from(*G.find(quad_face_name(X.face(a).id)));
      for (Index b : faces)
        if (2 * gallery_distance(X, a, b) != dq[*G.find(quad_face_name(X.face(b).id))]) ++mismatches;
    }
    c.expect(mismatches == 0,
             std::string(to_string(f)) + ": " + std::to_string(mismatches) + " quadrization distance mismatches");
  }
}

void criterion6(Check& c) {
  auto run = [&](Family f, FlatKind k, Verdict want) {
    auto X = patch(f, 4);
    auto r = check_flat(k, X, Subcomplex::whole(X), 2);
    c.expect(r.report.verdict == want, std::string(to_string(k)) + " on " + std::string(to_string(f)) + ": got " +
                                           std::string(to_string(r.report.verdict)));
    c.expect(r.certificate.has_value() == (want == Verdict::Holds), "certificate presence mismatch");
  };
  run(Family::Hexagonal, FlatKind::HexagonalFlatPlane, Verdict::Holds);
  run(Family::Triangular, FlatKind::HexagonalFlatPlane, Verdict::Violated);
  run(Family::PaperExample, FlatKind::HexagonalFlatPlane, Verdict::Violated);
  run(Family::PaperExample, FlatKind::QuasiFlatPlane, Verdict::Holds);
  run(Family::Square, FlatKind::QuasiFlatPlane, Verdict::Holds);
  run(Family::Hexagonal, FlatKind::QuasiFlatPlane, Verdict::Violated);
  run(Family::Triangular, FlatKind::Triangular, Verdict::Holds);
}

void criterion7(Check& c) {
  auto X = patch(Family::PaperExample, 4);
  auto found = search_flat_planes(X, 2);
  c.expect(!found.empty(), "certificate search examined no faces");
  for (const auto& [face, r] : found) c.expect(!r.report.holds(), "ball around " + face + " passes the C(6) check");
  Graph Y = quadrize(X).one_skeleton();
  auto r = check_dual_flat(Y, pattern_coordinates(Y, DualPattern::Square), DualPattern::Square, 2);
  c.expect(r.holds(), "square-pattern dual flat check: " + std::string(to_string(r.verdict)));
}

std::vector<std::array<std::string, 3>> valid_seeds(const TwoComplex& X, NumberingRule rule, std::size_t want) {
  std::vector<std::array<std::string, 3>> out;
  for (Index c0 : deep_faces(X, 2))
    for (const auto& c1 : X.faces())
      for (const auto& c2 : X.faces()) {
        if (out.size() >= want) return out;
        std::array<std::string, 3> s{X.face(c0).id, c1.id, c2.id};
        try {
          numbering(X, rule, s, 4);
          out.push_back(s);
        } catch (const NumberingError&) {
        }
      }
  return out;
}

void criterion8(Check& c) {
  struct Case {
    Family family;
    NumberingRule rule;
  };
  for (Case k : {Case{Family::Hexagonal, NumberingRule::C6}, Case{Family::Square, NumberingRule::Quasi},
                 Case{Family::QuasiFlatPlane, NumberingRule::Quasi}, Case{Family::PaperExample, NumberingRule::Quasi}}) {
    auto X = patch(k.family, 4);
    auto seeds = valid_seeds(X, k.rule, 5);
    std::string n(to_string(k.family));
    c.expect(seeds.size() == 5, n + ": fewer than 5 valid seeds");
    for (const auto& s : seeds) {
      auto first = numbering(X, k.rule, s, 20).cells;
      auto second = numbering(X, k.rule, s, 20).cells;
      c.expect(first == second, n + ": numbering differs between runs");
      c.expect(std::set<std::string>(first.begin(), first.end()).size() == first.size(), n + ": not injective");
    }
  }
  auto P = patch(Family::PaperExample, 4);
  auto Q = patch(Family::QuasiFlatPlane, 4);
  std::array<std::string, 3> seed{"f_0_0", "f_1_0", "f_0_1"};
  auto phi = numbering(P, NumberingRule::Quasi, seed, 25).cells;
  auto psi = numbering(Q, NumberingRule::Quasi, seed, 25).cells;
  c.expect(phi.size() == 25 && psi.size() == 25, "numbering stopped before 25 cells");
  std::size_t bad = 0;
  for (std::size_t i = 0; i < std::min(phi.size(), psi.size()); ++i)
    for (std::size_t j = 0; j < std::min(phi.size(), psi.size()); ++j)
      if (i != j && faces_meet(P, P.face_index(phi[i]), P.face_index(phi[j])) !=
                        faces_meet(Q, Q.face_index(psi[i]), Q.face_index(psi[j])))
        ++bad;
  c.expect(bad == 0, std::to_string(bad) + " intersection-pattern mismatches between the two numberings");
}

void criterion9(Check& c) {
  auto run = [&](Family f, std::vector<std::pair<int, int>> shifts) {
    auto X = patch(f, 5);
    auto base = check_quasi_flat_plane(X, gallery_ball(X, X.face_index("f_0_0"), 3), 2);
    c.expect(base.certificate.has_value(), std::string(to_string(f)) + ": no base certificate");
    if (!base.certificate) return;
    for (auto [dx, dy] : shifts) {
      std::string label = std::string(to_string(f)) + " shift (" + std::to_string(dx) + "," + std::to_string(dy) + ")";
      try {
        auto moved = translate_subcomplex(X, *base.certificate, dx, dy);
        c.expect(moved.report.holds() && moved.certificate, label + " does not re-verify");
        if (moved.certificate) c.expect(reverify(*moved.certificate).report.holds(), label + " reload fails");
      } catch (const OutOfPatch& e) {
        c.expect(false, label + ": " + e.what());
      }
    }
  };
  run(Family::PaperExample, {{2, 0}, {0, 2}});
  run(Family::Square, {{1, 0}, {0, 1}});
}

void criterion10(Check& c) {
  std::vector<TwoComplex> all;
  for (Family f : kFamilies)
    for (int r = 1; r <= 4; ++r) all.push_back(patch(f, r));
  std::vector<TwoComplex> tori;
  for (auto [f, m, n] : {std::tuple{Family::Square, 3, 3}, {Family::Square, 4, 5}, {Family::Triangular, 3, 3},
                         {Family::Triangular, 5, 4}, {Family::PaperExample, 4, 4}, {Family::PaperExample, 6, 4}}) {
    tori.push_back(quotient_by_lattice(f, m, n).complex);
    all.push_back(tori.back());
  }
  for (const auto& X : all) {
    std::string once = serialize(X);
    std::string twice = serialize(load_complex(once));
    c.expect(once == twice, X.name() + ": serialization is not stable");
  }
  for (const auto& T : tori) {
    long chi = static_cast<long>(T.vertex_count()) - static_cast<long>(T.edge_count()) +
               static_cast<long>(T.face_count());
    c.expect(chi == 0, T.name() + ": Euler characteristic " + std::to_string(chi));
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"small cancellation verdicts on radius-4 patches", criterion1},
      {"pieces of T(6) patches have length 1 (exhaustive cross-check)", criterion2},
      {"Helly scans over radius-3 patches", criterion3},
      {"nerve and quadrization correctness, condition violators", criterion4},
      {"gallery distance matches dual distances", criterion5},
      {"flat detection matrix", criterion6},
      {"counterexample: no C(6) flat plane, square dual flat holds", criterion7},
      {"numbering determinism and intersection pattern", criterion8},
      {"translated certificates re-verify", criterion9},
      {"serialization round trip and torus Euler characteristic", criterion10},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.expect(secs < 60.0, "took longer than 60 s");
    std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " ("
              << secs << " s)\n"
              << c.notes.str();
    failures += !c.ok;
  }
  return failures == 0 ? 0 : 1;
}
