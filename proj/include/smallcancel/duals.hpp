#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "smallcancel/complex.hpp"
#include "smallcancel/report.hpp"

namespace smallcancel {

/// Simple undirected graph on named vertices.
class Graph {
 public:
  Index add_vertex(std::string name);
  void add_edge(Index a, Index b);  // ignores loops and repeats
  bool adjacent(Index a, Index b) const;

  std::size_t size() const { return names_.size(); }
  const std::string& name(Index v) const { return names_[v]; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<Index>& neighbours(Index v) const { return adj_[v]; }  // sorted
  std::optional<Index> find(std::string_view name) const;

  /// Single-source BFS distances; unreachable vertices get -1.
  std::vector<int> distances_from(Index source) const;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<Index>> adj_;
};

/// Shortest edge-path length. Throws std::invalid_argument for a disconnected pair.
int graph_distance(const Graph& G, Index a, Index b);
int graph_distance(const Graph& G, std::string_view a, std::string_view b);

/// Finite simplicial complex stored as the full downward-closed simplex set.
class SimplicialComplex {
 public:
  using Simplex = std::vector<Index>;  // sorted vertex indices

  Index add_vertex(std::string name);
  /// Adds the simplex and all its faces.
  void add_simplex(Simplex s);
  bool contains(const Simplex& s) const { return simplices_.count(s) > 0; }

  std::size_t vertex_count() const { return names_.size(); }
  const std::string& name(Index v) const { return names_[v]; }
  std::optional<Index> find(std::string_view name) const;
  const std::set<Simplex>& simplices() const { return simplices_; }
  std::vector<Simplex> maximal_simplices() const;
  int dimension() const;

  Graph one_skeleton() const;
  /// Link of v, with vertex names inherited from this complex.
  SimplicialComplex link(Index v) const;

 private:
  std::vector<std::string> names_;
  std::set<Simplex> simplices_;
};

/// Square complex over a graph that may carry parallel edges.
class SquareComplex {
 public:
  struct EdgeRec {
    std::string id;
    Index a = 0;
    Index b = 0;
  };
  struct Square {
    std::string id;
    std::array<Index, 4> vertices{};
    std::array<Index, 4> edges{};  // edges[i] joins vertices[i] and vertices[i+1]
  };

  /// Vertex class: 0 for vertices of X, 2 for faces of X, -1 when unclassed.
  Index add_vertex(std::string name, int cls = -1);
  Index add_edge(std::string id, Index a, Index b);
  /// Adds a square over existing edges. Throws if some consecutive pair has no edge.
  void add_square(std::string id, const std::array<Index, 4>& vertices);
  void add_square(std::string id, const std::array<Index, 4>& vertices, const std::array<Index, 4>& edges);

  std::size_t vertex_count() const { return names_.size(); }
  const std::string& name(Index v) const { return names_[v]; }
  int vertex_class(Index v) const { return classes_[v]; }
  std::optional<Index> find(std::string_view name) const;
  const std::vector<EdgeRec>& edges() const { return edges_; }
  const std::vector<Square>& squares() const { return squares_; }

  Graph one_skeleton() const;

 private:
  std::optional<Index> edge_between(Index a, Index b) const;

  std::vector<std::string> names_;
  std::vector<int> classes_;
  std::vector<EdgeRec> edges_;
  std::vector<Square> squares_;
};

using DualComplex = std::variant<SimplicialComplex, SquareComplex>;
Graph one_skeleton(const DualComplex& Y);

/// Vertices are the faces of X; a set of faces spans a simplex iff the closed
/// faces share a point. Requires embedded faces and no free edges.
SimplicialComplex build_nerve(const TwoComplex& X);

/// Vertex names used by quadrize for cells of X.
std::string quad_vertex_name(const std::string& vertex_id);
std::string quad_face_name(const std::string& face_id);

/// Bipartite incidence graph of vertices and faces of X with every embedded
/// 4-cycle filled by a square.
SquareComplex quadrize(const TwoComplex& X);

CheckReport check_k_large(const SimplicialComplex& K, int k);
/// Links of the given vertices (all when `only` is empty) must be 6-large.
CheckReport check_systolic_links(const SimplicialComplex& K, const std::vector<Index>& only = {});
/// Conditions (A)-(D); every witness starts with its condition label.
CheckReport check_quadric_conditions(const SquareComplex& Y);

std::string serialize(const SimplicialComplex& K, std::string_view name = "nerve");
std::string serialize(const SquareComplex& Y, std::string_view name = "quadrization");
SimplicialComplex parse_simplicial(std::string_view text);
SquareComplex parse_square_complex(std::string_view text);

}  // namespace smallcancel
