#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace smallcancel {

using Index = std::uint32_t;

/// Thrown when a complex references undeclared cells or repeats an identifier.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string cell, const std::string& what)
      : std::runtime_error(cell.empty() ? what : cell + ": " + what), cell_(std::move(cell)) {}

  const std::string& cell() const noexcept { return cell_; }

 private:
  std::string cell_;
};

/// One directed traversal of an edge inside a boundary word.
struct Letter {
  Index edge = 0;
  bool forward = true;

  Letter reversed() const { return {edge, !forward}; }
  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Cyclic word of directed edges attached along the boundary of a 2-cell.
class BoundaryWord {
 public:
  BoundaryWord() = default;
  explicit BoundaryWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::size_t size() const { return letters_.size(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const { return letters_; }

  /// Letter at cyclic position i (negative values wrap).
  const Letter& at_cyclic(long long i) const;

  /// Reads the whole cycle starting at `start`, going forward or backward.
  /// Backward reading reverses each letter, so the result is again a path in X.
  std::vector<Letter> reading(std::size_t start, bool forward) const;

  BoundaryWord rotated(std::size_t k) const;
  BoundaryWord reversed() const;

  /// Equality up to cyclic rotation and full reversal.
  bool equivalent(const BoundaryWord& other) const;

  friend bool operator==(const BoundaryWord&, const BoundaryWord&) = default;

 private:
  std::vector<Letter> letters_;
};

struct Edge {
  std::string id;
  Index from = 0;
  Index to = 0;
};

struct Face {
  std::string id;
  BoundaryWord boundary;
};

/// Plain-identifier description of a complex, used to build a TwoComplex.
struct ComplexDescription {
  struct EdgeSpec {
    std::string id;
    std::string from;
    std::string to;
  };
  struct LetterSpec {
    std::string edge;
    bool forward = true;
  };
  struct FaceSpec {
    std::string id;
    std::vector<LetterSpec> word;
  };

  std::string name = "unnamed";
  std::vector<std::string> vertices;
  std::vector<EdgeSpec> edges;
  std::vector<FaceSpec> faces;
};

/// Combinatorial 2-complex. Cells are kept sorted by identifier, so indices are
/// canonical. Immutable after construction.
class TwoComplex {
 public:
  TwoComplex() = default;

  /// Resolves identifiers and sorts cells. Throws ValidationError on unknown
  /// references, duplicate identifiers or empty boundary words. Closedness and
  /// immersion are not enforced here; see validate_complex().
  static TwoComplex build(const ComplexDescription& description);

  ComplexDescription describe() const;

  const std::string& name() const { return name_; }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t face_count() const { return faces_.size(); }

  const std::string& vertex_id(Index v) const { return vertices_[v]; }
  const Edge& edge(Index e) const { return edges_[e]; }
  const Face& face(Index f) const { return faces_[f]; }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Face>& faces() const { return faces_; }

  std::optional<Index> find_vertex(std::string_view id) const;
  std::optional<Index> find_edge(std::string_view id) const;
  std::optional<Index> find_face(std::string_view id) const;

  Index vertex_index(std::string_view id) const;  // throws std::out_of_range
  Index face_index(std::string_view id) const;    // throws std::out_of_range

  Index letter_start(const Letter& l) const { return l.forward ? edges_[l.edge].from : edges_[l.edge].to; }
  Index letter_end(const Letter& l) const { return l.forward ? edges_[l.edge].to : edges_[l.edge].from; }

  /// Vertex sequence of a face: entry p is the start vertex of letter p.
  const std::vector<Index>& face_vertex_cycle(Index f) const { return face_cycle_[f]; }
  /// Sorted, de-duplicated vertices / edges on the boundary of a face.
  const std::vector<Index>& face_vertices(Index f) const { return face_vertices_[f]; }
  const std::vector<Index>& face_edges(Index f) const { return face_edges_[f]; }

  /// Sorted faces whose boundary contains the vertex / edge.
  const std::vector<Index>& vertex_faces(Index v) const { return vertex_faces_[v]; }
  const std::vector<Index>& edge_faces(Index e) const { return edge_faces_[e]; }

  /// Number of edge ends at v (a loop counts twice).
  std::size_t valence(Index v) const { return valence_[v]; }

 private:
  void index();

  std::string name_;
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<Face> faces_;

  std::vector<std::vector<Index>> face_cycle_;
  std::vector<std::vector<Index>> face_vertices_;
  std::vector<std::vector<Index>> face_edges_;
  std::vector<std::vector<Index>> vertex_faces_;
  std::vector<std::vector<Index>> edge_faces_;
  std::vector<std::size_t> valence_;
};

/// Closed cells as sets of vertices and edges; used for all intersection tests.
struct CellSet {
  std::vector<Index> vertices;  // sorted
  std::vector<Index> edges;     // sorted

  bool empty() const { return vertices.empty() && edges.empty(); }
  bool subset_of(const CellSet& other) const;
  friend bool operator==(const CellSet&, const CellSet&) = default;
};

CellSet closed_face(const TwoComplex& X, Index f);
CellSet intersect(const CellSet& a, const CellSet& b);
CellSet intersect_faces(const TwoComplex& X, const std::vector<Index>& faces);
bool faces_meet(const TwoComplex& X, Index a, Index b);

/// True iff the cell set is a single vertex or a connected edge path.
bool is_vertex_or_path(const TwoComplex& X, const CellSet& s);

/// Subcomplex given by a set of faces together with their closures.
class Subcomplex {
 public:
  Subcomplex(const TwoComplex& parent, std::vector<Index> faces);
  static Subcomplex whole(const TwoComplex& parent);
  static Subcomplex from_ids(const TwoComplex& parent, const std::vector<std::string>& face_ids);

  const TwoComplex& parent() const { return *parent_; }
  const std::vector<Index>& faces() const { return faces_; }
  const std::vector<Index>& edges() const { return edges_; }
  const std::vector<Index>& vertices() const { return vertices_; }
  bool contains_face(Index f) const { return member_[f]; }

  std::vector<std::string> face_ids() const;

  /// The subcomplex as a standalone complex (same identifiers).
  TwoComplex to_complex() const;

 private:
  const TwoComplex* parent_;
  std::vector<Index> faces_;
  std::vector<Index> edges_;
  std::vector<Index> vertices_;
  std::vector<bool> member_;
};

/// One end of an edge at a vertex; `head` selects the `to` end.
struct EdgeEnd {
  Index edge = 0;
  bool head = false;
  friend bool operator==(const EdgeEnd&, const EdgeEnd&) = default;
  friend auto operator<=>(const EdgeEnd&, const EdgeEnd&) = default;
};

/// Corner of face `face` between letters position-1 and position.
struct Corner {
  Index face = 0;
  Index position = 0;
  friend bool operator==(const Corner&, const Corner&) = default;
};

struct LinkGraph {
  struct Arc {
    Index a = 0;  // node indices
    Index b = 0;
    Corner corner;
  };

  Index vertex = 0;
  std::vector<EdgeEnd> nodes;
  std::vector<Arc> arcs;

  std::size_t valence() const { return nodes.size(); }
};

LinkGraph link_of(const TwoComplex& X, Index v);
LinkGraph link_of(const TwoComplex& X, std::string_view vertex_id);

}  // namespace smallcancel
