#include <catch_amalgamated.hpp>

#include <set>

#include "oracles.hpp"
#include "smallcancel/duals.hpp"
#include "smallcancel/flats.hpp"
#include "smallcancel/generators.hpp"
#include "smallcancel/io.hpp"

using namespace smallcancel;

namespace {

bool any_witness(const CheckReport& r, const std::string& needle) {
  for (const auto& w : r.witnesses)
    if (w.find(needle) != std::string::npos) return true;
  return false;
}

// Adds a face whose boundary is the outer boundary of the given faces (a disc).
TwoComplex glue_over(const TwoComplex& X, const std::vector<std::string>& faces, const std::string& id) {
  std::map<Index, int> uses;
  for (const auto& f : faces)
    for (Index e : X.face_edges(X.face_index(f))) ++uses[e];
  std::vector<Index> rim;
  for (auto [e, n] : uses)
    if (n == 1) rim.push_back(e);
  // walk the rim as a closed path
  ComplexDescription d = X.describe();
  ComplexDescription::FaceSpec g{id, {}};
  std::set<Index> left(rim.begin(), rim.end());
  Index at = X.edge(rim.front()).from;
  while (!left.empty()) {
    bool moved = false;
    for (Index e : left) {
      const auto& E = X.edge(e);
      if (E.from == at || E.to == at) {
        g.word.push_back({E.id, E.from == at});
        at = E.from == at ? E.to : E.from;
        left.erase(e);
        moved = true;
        break;
      }
    }
    REQUIRE(moved);
  }
  d.faces.push_back(g);
  return TwoComplex::build(d);
}

}  // namespace

TEST_CASE("gallery distance uses hops") {
  auto X = generate_tiling(Family::Square, 3).complex;
  CHECK(gallery_distance(X, "f_0_0", "f_0_0") == 0);
  CHECK(gallery_distance(X, "f_0_0", "f_1_0") == 1);
  CHECK(gallery_distance(X, "f_0_0", "f_2_2") == 2);
  auto d = oracle::gallery_matrix(X);
  for (Index a = 0; a < X.face_count(); a += 3)
    for (Index b = 0; b < X.face_count(); ++b) CHECK(gallery_distance(X, a, b) == d[a][b]);
  auto two = load_complex("complex two\nvertex a\nvertex b\nvertex c\nvertex d\nedge x a b\nedge y b a\n"
                          "edge z c d\nedge w d c\nface f +x +y\nface g +z +w\n");
  CHECK_THROWS_AS(gallery_distance(two, "f", "g"), std::invalid_argument);
  CHECK(gallery_graph(X).size() == X.face_count());
}

TEST_CASE("depths") {
  auto X = generate_tiling(Family::Square, 3).complex;
  auto all = Subcomplex::whole(X);
  auto ambient = face_depths(X, all, DepthMode::Ambient);
  CHECK(ambient[X.face_index("f_0_0")] == 3);
  CHECK(ambient[X.face_index("f_3_0")] == 0);
  auto ball = gallery_ball(X, X.face_index("f_0_0"), 1);
  auto inner = face_depths(X, ball, DepthMode::Subcomplex);
  CHECK(inner[X.face_index("f_0_0")] == 1);
  CHECK(inner[X.face_index("f_1_1")] == 0);
  CHECK(inner[X.face_index("f_3_3")] == -1);
  auto torus = quotient_by_lattice(Family::Square, 3, 3).complex;
  CHECK(face_depths(torus, Subcomplex::whole(torus), DepthMode::Ambient)[0] == kUnbounded);
}

TEST_CASE("cyclic neighbour order goes around the face") {
  for (auto X : {generate_tiling(Family::Hexagonal, 2).complex, generate_paper_example(2).complex,
                 generate_quasi_flat_plane(2, [](int, int) { return true; }).complex}) {
    INFO(X.name());
    auto all = Subcomplex::whole(X);
    Index f = X.face_index(X.name().rfind("hexagonal", 0) == 0 ? "h_0_0" : "f_0_0");
    auto ns = cyclic_neighbours(X, all, f);
    for (std::size_t i = 0; i < ns.size(); ++i) CHECK(faces_meet(X, ns[i], ns[(i + 1) % ns.size()]));
    CHECK(std::set<Index>(ns.begin(), ns.end()).size() == ns.size());
  }
}

TEST_CASE("hexagonal flat planes") {
  auto X = generate_tiling(Family::Hexagonal, 4).complex;
  auto r = check_flat_plane_c6(X, Subcomplex::whole(X), 2);
  REQUIRE(r.report.holds());
  REQUIRE(r.certificate);
  CHECK(r.certificate->kind == FlatKind::HexagonalFlatPlane);
  for (const auto& [face, ns] : r.certificate->neighbours) CHECK(ns.size() == 6);
  CHECK(parse_certificate(serialize(*r.certificate)) == *r.certificate);
  CHECK(reverify(*r.certificate).report.holds());
  CHECK(check_flat_embedding(X, *r.certificate, 2).holds());

  auto tri = generate_tiling(Family::Triangular, 4).complex;
  auto t = check_flat_plane_c6(tri, Subcomplex::whole(tri), 2);
  CHECK(t.report.verdict == Verdict::Violated);
  CHECK(any_witness(t.report, "condition (1): meets 12 faces"));
  auto paper = generate_paper_example(4).complex;
  auto p = check_flat_plane_c6(paper, Subcomplex::whole(paper), 2);
  CHECK(any_witness(p.report, "meets 8 faces"));
  CHECK_FALSE(p.certificate);

  auto big = check_flat_plane_c6(X, Subcomplex::whole(X), 9);
  CHECK(big.report.verdict == Verdict::Error);
  CHECK(big.report.witnesses.front().find("margin larger than patch") == 0);
}

TEST_CASE("quasi-flat planes") {
  for (auto X : {generate_paper_example(4).complex, generate_tiling(Family::Square, 4).complex,
                 generate_quasi_flat_plane(4, [](int, int) { return true; }).complex}) {
    INFO(X.name());
    auto r = check_quasi_flat_plane(X, Subcomplex::whole(X), 2);
    REQUIRE(r.report.holds());
    for (const auto& [face, ns] : r.certificate->neighbours) CHECK(ns.size() == 8);
    CHECK(reverify(*r.certificate).report.holds());
    CHECK(check_flat_embedding(X, *r.certificate, 2).holds());
  }
  auto paper = generate_paper_example(4).complex;
  auto cert = *check_quasi_flat_plane(paper, Subcomplex::whole(paper), 2).certificate;
  std::set<std::string> labels;
  for (const auto& [v, cls] : cert.vertex_classes) labels.insert(cls.substr(0, 7));
  CHECK(labels.count("degree4"));
  CHECK(labels.count("degree3"));

  auto small = generate_paper_example(2).complex;
  CHECK(check_quasi_flat_plane(small, Subcomplex::whole(small), 1).report.holds());

  auto hex = generate_tiling(Family::Hexagonal, 4).complex;
  auto h = check_quasi_flat_plane(hex, Subcomplex::whole(hex), 2);
  CHECK(h.report.verdict == Verdict::Violated);
  CHECK(any_witness(h.report, "condition (1)"));
}

TEST_CASE("triangular flats under C(3)-T(6)") {
  auto X = generate_tiling(Family::Triangular, 4).complex;
  auto r = check_flat_c3t6(X, Subcomplex::whole(X), 2);
  REQUIRE(r.report.holds());
  CHECK(reverify(*r.certificate).report.holds());

  // drop one triangle at the centre vertex
  Index centre = X.vertex_index("v_0_0");
  Index missing = X.vertex_faces(centre).front();
  std::vector<Index> keep;
  for (Index f = 0; f < X.face_count(); ++f)
    if (f != missing) keep.push_back(f);
  auto holed = check_flat_c3t6(X, Subcomplex(X, keep), 2);
  CHECK(holed.report.verdict == Verdict::Violated);
  CHECK(any_witness(holed.report, "vertex v_0_0: lies in 6 faces, 5 of them in the subcomplex"));

  // a two-triangle fan on a new vertex w joins v_-2_0 and v_2_0 in two steps
  ComplexDescription d = X.describe();
  d.vertices.push_back("w");
  d.edges.push_back({"s1", "v_-2_0", "w"});
  d.edges.push_back({"s2", "w", "v_2_0"});
  d.edges.push_back({"s3", "w", "v_0_2"});
  d.edges.push_back({"s4", "v_0_2", "v_-2_0"});
  d.edges.push_back({"s5", "v_2_0", "v_0_2"});
  d.faces.push_back({"fan_a", {{"s1", true}, {"s3", true}, {"s4", true}}});
  d.faces.push_back({"fan_b", {{"s2", true}, {"s5", true}, {"s3", false}}});
  TwoComplex Y = TwoComplex::build(d);
  REQUIRE(validate_complex(Y, true).holds());
  std::vector<std::string> patch_faces;
  for (const auto& f : X.faces()) patch_faces.push_back(f.id);
  auto fan = check_flat_c3t6(Y, Subcomplex::from_ids(Y, patch_faces), 1);
  CHECK(fan.report.verdict == Verdict::Violated);
  CHECK(any_witness(fan.report, "vertices v_-2_0, v_2_0: distance 4 in the subcomplex, 2 in the complex"));

  auto sq = generate_tiling(Family::Square, 2).complex;
  CHECK(check_flat_c3t6(sq, Subcomplex::whole(sq), 1).report.verdict == Verdict::Error);
}

TEST_CASE("flat embedding detects an outside shortcut") {
  auto X = generate_tiling(Family::Hexagonal, 4).complex;
  auto cert = *check_flat_plane_c6(X, Subcomplex::whole(X), 2).certificate;
  CHECK(check_flat_embedding(X, cert, 2).holds());
  // a face spanning a row of three hexagons brings their far neighbours together
  auto Y = glue_over(X, {"h_-1_0", "h_0_0", "h_1_0"}, "shortcut");
  auto r = check_flat_embedding(Y, cert, 2);
  CHECK(r.verdict == Verdict::Violated);
  CHECK(any_witness(r, "faces h_-2_0, h_2_0: gallery distance 4 in the subcomplex, 2 in the complex"));

  FlatCertificate bogus = cert;
  bogus.faces.push_back("h_99_99");
  CHECK(check_flat_embedding(X, bogus, 2).verdict == Verdict::Error);
}

TEST_CASE("certificate search") {
  auto hex = generate_tiling(Family::Hexagonal, 4).complex;
  auto found = search_flat_planes(hex, 2);
  REQUIRE_FALSE(found.empty());
  for (const auto& [face, r] : found) CHECK(r.report.holds());
  auto paper = generate_paper_example(4).complex;
  for (const auto& [face, r] : search_flat_planes(paper, 2)) CHECK_FALSE(r.report.holds());
}

TEST_CASE("dual flats") {
  auto hex = generate_tiling(Family::Hexagonal, 4).complex;
  Graph nerve = build_nerve(hex).one_skeleton();
  auto tri_coords = pattern_coordinates(nerve, DualPattern::Triangular);
  CHECK(tri_coords.size() == hex.face_count());
  CHECK(check_dual_flat(nerve, tri_coords, DualPattern::Triangular, 2).holds());
  // agrees with the face-level checker on the same patch
  CHECK(check_flat_plane_c6(hex, Subcomplex::whole(hex), 2).report.holds());

  auto paper = generate_paper_example(4).complex;
  Graph quad = quadrize(paper).one_skeleton();
  auto sq_coords = pattern_coordinates(quad, DualPattern::Square);
  CHECK(check_dual_flat(quad, sq_coords, DualPattern::Square, 2).holds());

  auto square = generate_tiling(Family::Square, 3).complex;
  Graph sq_quad = quadrize(square).one_skeleton();
  auto coords = pattern_coordinates(sq_quad, DualPattern::Square);
  CHECK(check_dual_flat(sq_quad, coords, DualPattern::Square, 1).holds());
  auto holed = coords;
  holed.erase("V.v_0_0");
  auto e = check_dual_flat(sq_quad, holed, DualPattern::Square, 1);
  CHECK(e.verdict == Verdict::Error);
  CHECK(e.witnesses.front().find("not pattern-shaped") != std::string::npos);
  auto skewed = coords;
  std::swap(skewed["V.v_0_0"], skewed["V.v_1_1"]);
  CHECK(check_dual_flat(sq_quad, skewed, DualPattern::Square, 1).verdict == Verdict::Error);

  CHECK(pattern_distance(DualPattern::Triangular, {0, 0}, {2, -1}) == 2);
  CHECK(pattern_distance(DualPattern::Triangular, {0, 0}, {1, 1}) == 2);
  CHECK(pattern_distance(DualPattern::Square, {0, 0}, {2, -1}) == 3);
}

TEST_CASE("certificate parsing rejects malformed input") {
  CHECK_THROWS_AS(parse_certificate("margin 2\n"), ParseError);
  CHECK_THROWS_AS(parse_certificate("certificate quasi-flat-plane\nsubcomplex\ncomplex x\n"), ParseError);
  CHECK_THROWS_AS(parse_certificate("certificate round\n"), ParseError);
  CHECK_THROWS_AS(parse_certificate("certificate triangular\nneighbours f g h\n"), ParseError);
}
