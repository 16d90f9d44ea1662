#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "smallcancel/complex.hpp"
#include "smallcancel/duals.hpp"
#include "smallcancel/report.hpp"

namespace smallcancel {

/// Faces of X joined when their closures meet. Vertex i is face i of X.
Graph gallery_graph(const TwoComplex& X);
/// Same, restricted to the faces of E; vertex k is E.faces()[k].
Graph gallery_graph(const Subcomplex& E);

/// Hop count (cells in a shortest gallery minus one). Throws
/// std::invalid_argument when the faces lie in different components.
int gallery_distance(const TwoComplex& X, Index a, Index b);
int gallery_distance(const TwoComplex& X, std::string_view a, std::string_view b);

/// Ambient: gallery distance in X to the nearest face carrying a free edge
/// (an edge in fewer than two faces). Subcomplex: distance inside E to the
/// nearest face of E that carries a free edge or meets a face outside E.
enum class DepthMode { Ambient, Subcomplex };

constexpr int kUnbounded = 1 << 29;

/// Depth per face of X (indexed like X); -1 for faces outside E.
std::vector<int> face_depths(const TwoComplex& X, const Subcomplex& E, DepthMode mode);

/// Neighbours of face f inside E in cyclic order around the boundary of f.
std::vector<Index> cyclic_neighbours(const TwoComplex& X, const Subcomplex& E, Index f);

enum class FlatKind { Triangular, HexagonalFlatPlane, QuasiFlatPlane };
std::string_view to_string(FlatKind k);
FlatKind flat_kind_from_string(std::string_view s);

struct FlatCertificate {
  FlatKind kind = FlatKind::HexagonalFlatPlane;
  int margin = 0;
  std::vector<std::string> faces;  // sorted face ids of the subcomplex
  std::string subcomplex;          // the subcomplex in complex-file form
  /// Checked faces with their neighbours in cyclic order.
  std::vector<std::pair<std::string, std::vector<std::string>>> neighbours;
  /// Vertex classifications, e.g. "valence3", "degree4", "degree3:<partner>".
  std::vector<std::pair<std::string, std::string>> vertex_classes;

  friend bool operator==(const FlatCertificate&, const FlatCertificate&) = default;
};

std::string serialize(const FlatCertificate& c);
FlatCertificate parse_certificate(std::string_view text);

struct FlatResult {
  std::optional<FlatCertificate> certificate;
  CheckReport report;
};

FlatResult check_flat_plane_c6(const TwoComplex& X, const Subcomplex& E, int margin);
FlatResult check_quasi_flat_plane(const TwoComplex& X, const Subcomplex& E, int margin);
FlatResult check_flat_c3t6(const TwoComplex& X, const Subcomplex& E, int margin);
FlatResult check_flat(FlatKind kind, const TwoComplex& X, const Subcomplex& E, int margin);

/// Re-runs the certificate's checker on its own subcomplex.
FlatResult reverify(const FlatCertificate& c);

/// Gallery distances inside the certificate's subcomplex agree with those in X
/// for face pairs whose ambient depth is at least `margin`.
CheckReport check_flat_embedding(const TwoComplex& X, const FlatCertificate& cert, int margin);

/// Faces within gallery distance r of `center`.
Subcomplex gallery_ball(const TwoComplex& X, Index center, int radius);

/// For every face of ambient depth >= margin, tests the gallery ball of radius
/// `margin` around it as a candidate hexagonal flat plane.
std::vector<std::pair<std::string, FlatResult>> search_flat_planes(const TwoComplex& X, int margin);

enum class NumberingRule { C6, Quasi };

class NumberingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Numbering {
  std::vector<std::string> cells;  // phi(0), phi(1), ...
  std::array<std::string, 3> seed;
  bool stopped_at_boundary = false;
};

/// Extends (C0, C1, C2) by the inductive rule until N cells are placed or the
/// rule needs a face at the patch boundary. Throws NumberingError on an invalid
/// seed or when the next cell is not unique.
Numbering numbering(const TwoComplex& X, NumberingRule rule, const std::array<std::string, 3>& seed, std::size_t N);

/// Faces C in A_i (faces meeting C_i) whose trace on C_i is not covered by the
/// intersection of any two other members of A_i.
std::vector<Index> primed_neighbours(const TwoComplex& X, Index i);

enum class DualPattern { Triangular, Square };

/// Lattice coordinates for dual vertices named after generated cells: nerve
/// vertex h_i_j -> (i, j); quadrization F.f_a_b -> (a+b+1, b-a) and
/// V.v_i_j (or level-0 V.v_i_j_0) -> (i+j, j-i).
std::map<std::string, std::pair<int, int>> pattern_coordinates(const Graph& Y, DualPattern pattern);

int pattern_distance(DualPattern pattern, std::pair<int, int> a, std::pair<int, int> b);

/// S (vertex name -> lattice point) must induce exactly the pattern edges and
/// be convex along lattice lines; otherwise an Error report. Holds iff every
/// pair of S-vertices at lattice depth >= margin has Y-distance equal to the
/// pattern distance.
CheckReport check_dual_flat(const Graph& Y, const std::map<std::string, std::pair<int, int>>& S, DualPattern pattern,
                            int margin);

}  // namespace smallcancel
