#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "smallcancel/cancellation.hpp"

namespace smallcancel {

namespace {

// An occurrence position without a length; length is the current level.
struct Anchor {
  Index face;
  Index start;
  bool forward;
};

std::vector<Letter> prefix(const TwoComplex& X, const Anchor& a, Index length) {
  const auto& w = X.face(a.face).boundary;
  std::vector<Letter> out;
  out.reserve(length);
  for (Index t = 0; t < length; ++t) {
    long long pos = a.forward ? static_cast<long long>(a.start) + t : static_cast<long long>(a.start) - t;
    const Letter& l = w.at_cyclic(pos);
    out.push_back(a.forward ? l : l.reversed());
  }
  return out;
}

std::vector<Letter> reversed_path(std::vector<Letter> p) {
  std::reverse(p.begin(), p.end());
  for (auto& l : p) l = l.reversed();
  return p;
}

}  // namespace

std::vector<Letter> occurrence_path(const TwoComplex& X, const PieceOccurrence& occ) {
  return prefix(X, {occ.face, occ.start, occ.forward}, occ.length);
}

std::size_t PieceSet::longest() const {
  std::size_t best = 0;
  for (const auto& p : maximal_) best = std::max(best, p.path.size());
  return best;
}

PieceSet enumerate_pieces(const TwoComplex& X) {
  PieceSet result;
  const Index F = static_cast<Index>(X.face_count());
  result.reach_.resize(F);
  for (Index f = 0; f < F; ++f) result.reach_[f].assign(X.face(f).boundary.size(), 0);

  // Full anchored readings decide equivalence of occurrences.
  std::vector<std::vector<std::vector<Letter>>> sig_fwd(F), sig_bwd(F);
  std::vector<Anchor> live;
  for (Index f = 0; f < F; ++f) {
    const auto& w = X.face(f).boundary;
    for (Index s = 0; s < w.size(); ++s) {
      sig_fwd[f].push_back(w.reading(s, true));
      sig_bwd[f].push_back(w.reading(s, false));
      live.push_back({f, s, true});
      live.push_back({f, s, false});
    }
  }
  auto signature = [&](const Anchor& a) -> const std::vector<Letter>& {
    return a.forward ? sig_fwd[a.face][a.start] : sig_bwd[a.face][a.start];
  };

  // groups[L] maps each piece of length L to its occurrences.
  std::vector<std::map<std::vector<Letter>, std::vector<Anchor>>> groups(1);
  for (Index L = 1; !live.empty(); ++L) {
    std::map<std::vector<Letter>, std::vector<Anchor>> by_path;
    for (const auto& a : live) {
      if (L > X.face(a.face).boundary.size()) continue;
      by_path[prefix(X, a, L)].push_back(a);
    }
    std::map<std::vector<Letter>, std::vector<Anchor>> pieces;
    live.clear();
    for (auto& [path, occs] : by_path) {
      std::set<std::vector<Letter>> distinct;
      for (const auto& a : occs) distinct.insert(signature(a));
      if (distinct.size() < 2) continue;
      for (const auto& a : occs) {
        live.push_back(a);
        if (a.forward) result.reach_[a.face][a.start] = L;
      }
      pieces.emplace(path, std::move(occs));
    }
    groups.push_back(std::move(pieces));
  }

  // A forward piece occurrence is maximal when it extends neither way.
  std::set<std::pair<Index, std::vector<Letter>>> listed;
  for (Index f = 0; f < F; ++f) {
    const auto& reach = result.reach_[f];
    const Index n = static_cast<Index>(reach.size());
    for (Index p = 0; p < n; ++p) {
      Index L = reach[p];
      if (L == 0) continue;
      if (L < n && reach[(p + n - 1) % n] == L + 1) continue;
      auto path = prefix(X, {f, p, true}, L);
      auto rev = reversed_path(path);
      const auto& key = std::min(path, rev);
      if (!listed.insert({L, key}).second) continue;
      Piece piece;
      piece.path = key;
      std::set<std::vector<Letter>> seen;
      for (const auto& a : groups[L].at(key)) {
        if (!seen.insert(signature(a)).second) continue;
        piece.occurrences.push_back({a.face, a.start, L, a.forward});
      }
      result.maximal_.push_back(std::move(piece));
    }
  }
  return result;
}

std::optional<PieceCover> min_piece_cover(const TwoComplex& X, const PieceSet& pieces, Index face) {
  if (face >= X.face_count()) throw std::out_of_range("face index out of range");
  const Index n = static_cast<Index>(X.face(face).boundary.size());
  for (Index p = 0; p < n; ++p)
    if (pieces.reach(face, p) == 0) return std::nullopt;

  PieceCover best;
  best.face = face;
  for (Index s = 0; s < n; ++s) {
    std::vector<Index> cuts;
    Index covered = 0;
    while (covered < n) {
      Index pos = (s + covered) % n;
      cuts.push_back(pos);
      covered += std::min<Index>(pieces.reach(face, pos), n - covered);
      if (!best.breakpoints.empty() && cuts.size() >= best.breakpoints.size()) break;
    }
    if (covered >= n && (best.breakpoints.empty() || cuts.size() < best.breakpoints.size())) {
      std::sort(cuts.begin(), cuts.end());
      best.breakpoints = std::move(cuts);
    }
  }
  return best;
}

std::optional<PieceCover> min_piece_cover(const TwoComplex& X, Index face) {
  return min_piece_cover(X, enumerate_pieces(X), face);
}

namespace {

std::string letter_text(const TwoComplex& X, const Letter& l) {
  return (l.forward ? "+" : "-") + X.edge(l.edge).id;
}

}  // namespace

CheckReport check_condition_C(const TwoComplex& X, const PieceSet& pieces, int p) {
  std::vector<std::string> bad;
  for (Index f = 0; f < X.face_count(); ++f) {
    auto cover = min_piece_cover(X, pieces, f);
    if (!cover || static_cast<long long>(cover->count()) >= p) continue;
    const auto& w = X.face(f).boundary;
    std::string text = "face " + X.face(f).id + ": concatenation of " + std::to_string(cover->count()) + " pieces";
    const auto& cuts = cover->breakpoints;
    for (std::size_t k = 0; k < cuts.size(); ++k) {
      Index end = k + 1 < cuts.size() ? cuts[k + 1] : cuts[0] + static_cast<Index>(w.size());
      text += k == 0 ? " [" : " | ";
      for (Index pos = cuts[k]; pos < end; ++pos) {
        if (pos != cuts[k]) text += ' ';
        text += letter_text(X, w.at_cyclic(pos));
      }
    }
    text += "]";
    bad.push_back(std::move(text));
  }
  return CheckReport::from_witnesses(std::move(bad));
}

CheckReport check_condition_C(const TwoComplex& X, int p) { return check_condition_C(X, enumerate_pieces(X), p); }

}  // namespace smallcancel
