#pragma once

#include <optional>
#include <string>
#include <vector>

#include "smallcancel/complex.hpp"
#include "smallcancel/report.hpp"

namespace smallcancel {

/// Contiguous subword of a cyclic boundary word. A backward occurrence reads
/// positions start, start-1, ... with every letter reversed.
struct PieceOccurrence {
  Index face = 0;
  Index start = 0;
  Index length = 0;
  bool forward = true;
  friend bool operator==(const PieceOccurrence&, const PieceOccurrence&) = default;
};

struct Piece {
  std::vector<Letter> path;
  /// Pairwise inequivalent occurrences, each reading exactly `path`.
  std::vector<PieceOccurrence> occurrences;
};

/// Maximal pieces of a complex, plus per-position reach tables used for covers.
class PieceSet {
 public:
  const std::vector<Piece>& maximal() const { return maximal_; }
  bool empty() const { return maximal_.empty(); }

  /// Length of the longest piece read forward from letter `position` of `face`
  /// (0 when that letter lies in no piece). Capped at the boundary length.
  Index reach(Index face, Index position) const { return reach_[face][position]; }

  std::size_t longest() const;

 private:
  friend PieceSet enumerate_pieces(const TwoComplex& X);
  std::vector<Piece> maximal_;
  std::vector<std::vector<Index>> reach_;
};

/// Occurrences of a path in two cells are equivalent iff the full boundary
/// readings anchored at the occurrences coincide; the path is a piece iff it
/// has two inequivalent occurrences.
PieceSet enumerate_pieces(const TwoComplex& X);

/// Sequence of letters read from a face at an occurrence.
std::vector<Letter> occurrence_path(const TwoComplex& X, const PieceOccurrence& occ);

struct PieceCover {
  Index face = 0;
  std::vector<Index> breakpoints;  // start positions of the segments
  std::size_t count() const { return breakpoints.size(); }
};

/// Minimum partition of the face boundary into pieces, or nullopt (no cover)
/// when some boundary letter lies in no piece.
std::optional<PieceCover> min_piece_cover(const TwoComplex& X, const PieceSet& pieces, Index face);
std::optional<PieceCover> min_piece_cover(const TwoComplex& X, Index face);

CheckReport check_condition_C(const TwoComplex& X, int p);
CheckReport check_condition_C(const TwoComplex& X, const PieceSet& pieces, int p);

/// Closed walk in a vertex link: arcs[k] runs from nodes[k] to nodes[k+1]
/// (indices mod length). It is reduced when no two consecutive corners are
/// identified by a symmetry of a single face across their shared edge, which
/// makes it the link of an internal vertex of a reduced disc diagram.
struct LinkWalk {
  Index vertex = 0;
  std::vector<Index> arcs;
  std::vector<Index> nodes;
};

struct WalkSearch {
  std::optional<LinkWalk> walk;
  bool exhausted = false;  // step budget ran out before the search finished
};

/// True iff the corners of arcs a1 and a2 (both at link node `node`) come from
/// one face and a reflection of that face carries one onto the other.
bool corners_cancel(const TwoComplex& X, const LinkGraph& link, Index a1, Index a2, Index node);

/// Shortest reduced closed walk with min_len <= length <= max_len.
WalkSearch shortest_reduced_walk(const TwoComplex& X, const LinkGraph& link, std::size_t min_len,
                                 std::size_t max_len, std::size_t budget = 2'000'000);

/// Violated when some link carries a reduced closed walk of length 3..q-1;
/// Inconclusive when the search budget runs out first.
CheckReport check_condition_T(const TwoComplex& X, int q);

enum class HellyMode { C6, C4T4 };

/// Scans pairwise-intersecting face tuples of size up to 4.
CheckReport check_helly(const TwoComplex& X, HellyMode mode);
CheckReport check_strong_helly(const TwoComplex& X, HellyMode mode);

/// Every maximal piece has length 1, given q >= 5 and T(q).
CheckReport check_piece_length_bound(const TwoComplex& X, int q);

/// Cliques of the face intersection graph with 2..max_size members, sorted.
std::vector<std::vector<Index>> intersecting_tuples(const TwoComplex& X, std::size_t max_size);

}  // namespace smallcancel
