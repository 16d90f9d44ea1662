#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace oracle {

using smallcancel::Letter;

namespace {

std::vector<Letter> read(const TwoComplex& X, Index f, std::size_t start, bool forward) {
  const auto& w = X.face(f).boundary.letters();
  const std::size_t n = w.size();
  std::vector<Letter> out;
  for (std::size_t k = 0; k < n; ++k) {
    if (forward) {
      out.push_back(w[(start + k) % n]);
    } else {
      const Letter& l = w[(start + n - k) % n];
      out.push_back({l.edge, !l.forward});
    }
  }
  return out;
}

}  // namespace

bool is_piece(const TwoComplex& X, const std::vector<Letter>& path) {
  std::set<std::vector<Letter>> readings;
  for (Index f = 0; f < X.face_count(); ++f) {
    const std::size_t n = X.face(f).boundary.size();
    if (path.size() > n) continue;
    for (std::size_t s = 0; s < n; ++s)
      for (bool fwd : {true, false}) {
        auto r = read(X, f, s, fwd);
        if (std::equal(path.begin(), path.end(), r.begin())) readings.insert(r);
      }
  }
  return readings.size() >= 2;
}

std::size_t longest_piece(const TwoComplex& X) {
  std::size_t best = 0;
  for (Index f = 0; f < X.face_count(); ++f) {
    const std::size_t n = X.face(f).boundary.size();
    for (std::size_t s = 0; s < n; ++s) {
      auto r = read(X, f, s, true);
      for (std::size_t len = best + 1; len <= n; ++len) {
        std::vector<Letter> path(r.begin(), r.begin() + static_cast<long>(len));
        if (!is_piece(X, path)) break;
        best = len;
      }
    }
  }
  return best;
}

std::optional<int> min_cover(const TwoComplex& X, Index f) {
  const auto& w = X.face(f).boundary.letters();
  const std::size_t n = w.size();
  std::map<std::pair<std::size_t, std::size_t>, bool> memo;
  auto segment_is_piece = [&](std::size_t s, std::size_t len) {
    auto key = std::make_pair(s, len);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::vector<Letter> path;
    for (std::size_t k = 0; k < len; ++k) path.push_back(w[(s + k) % n]);
    return memo[key] = is_piece(X, path);
  };
  std::optional<int> best;
  for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
    std::vector<std::size_t> cuts;
    for (std::size_t k = 0; k < n; ++k)
      if (mask >> k & 1UL) cuts.push_back(k);
    const int count = static_cast<int>(cuts.size());
    if (best && count >= *best) continue;
    bool ok = true;
    for (std::size_t c = 0; c < cuts.size() && ok; ++c) {
      std::size_t s = cuts[c];
      std::size_t e = c + 1 < cuts.size() ? cuts[c + 1] : cuts[0] + n;
      ok = segment_is_piece(s, e - s);
    }
    if (ok) best = count;
  }
  return best;
}

std::vector<std::vector<int>> gallery_matrix(const TwoComplex& X) {
  const std::size_t m = X.face_count();
  std::vector<std::set<Index>> verts(m);
  for (Index f = 0; f < m; ++f)
    for (const Letter& l : X.face(f).boundary.letters()) {
      verts[f].insert(X.edge(l.edge).from);
      verts[f].insert(X.edge(l.edge).to);
    }
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(m, std::vector<int>(m, inf));
  for (Index a = 0; a < m; ++a)
    for (Index b = 0; b < m; ++b) {
      if (a == b) {
        d[a][b] = 0;
        continue;
      }
      for (Index v : verts[a])
        if (verts[b].count(v)) {
          d[a][b] = 1;
          break;
        }
    }
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto& row : d)
    for (int& x : row)
      if (x >= inf) x = -1;
  return d;
}

std::vector<Index> common_vertices(const TwoComplex& X, const std::vector<Index>& faces) {
  std::vector<Index> out;
  for (Index v = 0; v < X.vertex_count(); ++v) {
    bool all = true;
    for (Index f : faces) {
      bool has = false;
      for (const Letter& l : X.face(f).boundary.letters())
        if (X.edge(l.edge).from == v || X.edge(l.edge).to == v) has = true;
      all = all && has;
    }
    if (all) out.push_back(v);
  }
  return out;
}

}  // namespace oracle
