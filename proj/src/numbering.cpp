#include <algorithm>
#include <deque>
#include <set>

#include "smallcancel/flats.hpp"

namespace smallcancel {

namespace {

std::vector<Index> meeting(const TwoComplex& X, Index f) {
  std::vector<Index> out;
  for (Index v : X.face_vertices(f))
    for (Index g : X.vertex_faces(v))
      if (g != f) out.push_back(g);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Index> set_and(const std::vector<Index>& a, const std::vector<Index>& b) {
  std::vector<Index> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

class Rule {
 public:
  Rule(const TwoComplex& X, NumberingRule rule) : X_(X), rule_(rule) {}

  const std::vector<Index>& A(Index f) {
    auto it = a_.find(f);
    if (it == a_.end()) it = a_.emplace(f, meeting(X_, f)).first;
    return it->second;
  }

  const std::vector<Index>& primed(Index f) {
    auto it = primed_.find(f);
    if (it == primed_.end()) it = primed_.emplace(f, primed_neighbours(X_, f)).first;
    return it->second;
  }

  // Cells the rule distributes around C_i.
  const std::vector<Index>& around(Index f) { return rule_ == NumberingRule::C6 ? A(f) : primed(f); }

  // Candidates for the next cell given (C_i, C_j).
  std::vector<Index> candidates(Index ci, Index cj) {
    if (rule_ == NumberingRule::Quasi) return set_and(primed(ci), A(cj));
    std::vector<Index> out;
    CellSet base = intersect(closed_face(X_, ci), closed_face(X_, cj));
    for (Index c : A(ci)) {
      if (c == cj) continue;
      if (!intersect(base, closed_face(X_, c)).empty()) out.push_back(c);
    }
    return out;
  }

 private:
  const TwoComplex& X_;
  NumberingRule rule_;
  std::map<Index, std::vector<Index>> a_;
  std::map<Index, std::vector<Index>> primed_;
};

std::string names(const TwoComplex& X, const std::vector<Index>& faces) {
  std::string out;
  for (Index f : faces) out += (out.empty() ? "" : ", ") + X.face(f).id;
  return out;
}

}  // namespace

std::vector<Index> primed_neighbours(const TwoComplex& X, Index i) {
  auto A = meeting(X, i);
  const CellSet ci = closed_face(X, i);
  std::vector<Index> out;
  for (Index c : A) {
    CellSet trace = intersect(ci, closed_face(X, c));
    bool covered = false;
    for (std::size_t a = 0; a < A.size() && !covered; ++a) {
      if (A[a] == c) continue;
      for (std::size_t b = a; b < A.size() && !covered; ++b) {
        if (A[b] == c) continue;
        if (trace.subset_of(intersect(closed_face(X, A[a]), closed_face(X, A[b])))) covered = true;
      }
    }
    if (!covered) out.push_back(c);
  }
  return out;
}

Numbering numbering(const TwoComplex& X, NumberingRule rule, const std::array<std::string, 3>& seed, std::size_t N) {
  std::array<Index, 3> s{};
  for (int k = 0; k < 3; ++k) {
    auto f = X.find_face(seed[k]);
    if (!f) throw NumberingError("seed face " + seed[k] + " does not exist");
    s[k] = *f;
  }
  Subcomplex all = Subcomplex::whole(X);
  auto depth = face_depths(X, all, DepthMode::Ambient);
  if (depth[s[0]] < 1) throw NumberingError("seed face " + seed[0] + " lies on the patch boundary");

  Rule R(X, rule);
  const auto& first = R.around(s[0]);
  if (!std::binary_search(first.begin(), first.end(), s[1]))
    throw NumberingError("invalid seed: " + seed[1] + " is not an admissible neighbour of " + seed[0]);
  auto pair = R.candidates(s[0], s[1]);
  if (!std::binary_search(pair.begin(), pair.end(), s[2]))
    throw NumberingError("invalid seed: " + seed[2] + " is not admissible next to " + seed[0] + " and " + seed[1]);
  if (pair.size() != 2)
    throw NumberingError("invalid seed: expected two cells next to " + seed[0] + " and " + seed[1] + ", found " +
                         std::to_string(pair.size()));
  Index third = pair[0] == s[2] ? pair[1] : pair[0];

  Numbering out;
  out.seed = seed;
  std::vector<Index> order{s[0], s[1], s[2], third};
  std::set<Index> placed(order.begin(), order.end());
  if (placed.size() != 4) throw NumberingError("invalid seed: cells are not distinct");

  auto fully_placed = [&](const std::vector<Index>& cells) {
    return std::all_of(cells.begin(), cells.end(), [&](Index c) { return placed.count(c) > 0; });
  };

  while (order.size() < N) {
    std::size_t i = 0;
    while (i < order.size() && fully_placed(R.around(order[i]))) ++i;
    if (i == order.size()) {
      // every face is numbered; a patch with boundary ends there, a closed complex simply runs out
      if (placed.size() == X.face_count()) {
        out.stopped_at_boundary = std::any_of(depth.begin(), depth.end(), [](int d) { return d == 0; });
        break;
      }
      throw NumberingError("rule stalls: every placed cell is surrounded");
    }
    if (depth[order[i]] < 1) {
      out.stopped_at_boundary = true;
      break;
    }
    bool extended = false;
    for (std::size_t j = i + 1; j < order.size() && !extended; ++j) {
      auto cand = R.candidates(order[i], order[j]);
      std::vector<Index> open;
      for (Index c : cand)
        if (!placed.count(c)) open.push_back(c);
      if (open.empty()) continue;
      if (open.size() > 1)
        throw NumberingError("ambiguous step " + std::to_string(order.size()) + ": candidates " + names(X, open));
      order.push_back(open[0]);
      placed.insert(open[0]);
      extended = true;
    }
    if (!extended)
      throw NumberingError("rule stalls at step " + std::to_string(order.size()) + " around " +
                           X.face(order[i]).id);
  }
  if (order.size() > N) order.resize(N);
  for (Index f : order) out.cells.push_back(X.face(f).id);
  return out;
}

}  // namespace smallcancel
