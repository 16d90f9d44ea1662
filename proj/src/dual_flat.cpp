#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>

#include "smallcancel/flats.hpp"
#include "smallcancel/generators.hpp"

namespace smallcancel {

namespace {

using Point = std::pair<int, int>;

std::vector<Point> steps(DualPattern p) {
  if (p == DualPattern::Square) return {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  return {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, -1}, {-1, 1}};
}

// Directions of lattice lines, one per opposite pair.
std::vector<Point> line_directions(DualPattern p) {
  if (p == DualPattern::Square) return {{1, 0}, {0, 1}};
  return {{1, 0}, {0, 1}, {1, -1}};
}

bool lattice_adjacent(DualPattern p, Point a, Point b) {
  for (auto [dx, dy] : steps(p))
    if (a.first + dx == b.first && a.second + dy == b.second) return true;
  return false;
}

std::string show(Point p) { return "(" + std::to_string(p.first) + ", " + std::to_string(p.second) + ")"; }

}  // namespace

std::map<std::string, std::pair<int, int>> pattern_coordinates(const Graph& Y, DualPattern pattern) {
  std::map<std::string, Point> out;
  for (const auto& name : Y.names()) {
    if (pattern == DualPattern::Triangular) {
      if (name.rfind("h_", 0) != 0) continue;
      auto c = identifier_coordinates(name);
      if (c) out[name] = *c;
      continue;
    }
    if (name.rfind("F.f_", 0) == 0) {
      auto c = identifier_coordinates(name.substr(2));
      if (c) out[name] = {c->first + c->second + 1, c->second - c->first};
    } else if (name.rfind("V.v_", 0) == 0) {
      std::string id = name.substr(2);
      // expanded corners carry a level; only level 0 represents the corner
      auto last = id.rfind('_');
      std::size_t fields = std::count(id.begin(), id.end(), '_');
      if (fields == 3) {
        if (id.substr(last + 1) != "0") continue;
      } else if (fields != 2) {
        continue;
      }
      auto c = identifier_coordinates(id);
      if (c) out[name] = {c->first + c->second, c->second - c->first};
    }
  }
  return out;
}

int pattern_distance(DualPattern pattern, std::pair<int, int> a, std::pair<int, int> b) {
  int dx = b.first - a.first, dy = b.second - a.second;
  if (pattern == DualPattern::Square) return std::abs(dx) + std::abs(dy);
  if ((dx >= 0) == (dy >= 0)) return std::abs(dx) + std::abs(dy);
  return std::max(std::abs(dx), std::abs(dy));
}

CheckReport check_dual_flat(const Graph& Y, const std::map<std::string, std::pair<int, int>>& S, DualPattern pattern,
                            int margin) {
  if (S.empty()) return CheckReport::error("empty vertex set");
  if (margin < 0) return CheckReport::error("margin must be non-negative");
  std::vector<Index> ids;
  std::vector<Point> pts;
  std::map<Point, std::size_t> at;
  for (const auto& [name, p] : S) {
    auto v = Y.find(name);
    if (!v) return CheckReport::error("vertex " + name + " is not in the complex");
    if (at.count(p)) return CheckReport::error("two vertices share the lattice point " + show(p));
    at[p] = ids.size();
    ids.push_back(*v);
    pts.push_back(p);
  }
  for (std::size_t a = 0; a < ids.size(); ++a)
    for (std::size_t b = a + 1; b < ids.size(); ++b)
      if (Y.adjacent(ids[a], ids[b]) != lattice_adjacent(pattern, pts[a], pts[b]))
        return CheckReport::error("vertex set is not pattern-shaped: " + Y.name(ids[a]) + " and " + Y.name(ids[b]) +
                                  " disagree with the pattern");
  // every lattice line meets S in an interval
  for (auto [dx, dy] : line_directions(pattern)) {
    std::map<int, std::vector<int>> lines;
    for (const auto& p : pts) lines[p.first * dy - p.second * dx].push_back(p.first * dx + p.second * dy);
    const int unit = dx * dx + dy * dy;
    for (auto& [key, pos] : lines) {
      std::sort(pos.begin(), pos.end());
      for (std::size_t k = 1; k < pos.size(); ++k)
        if (pos[k] - pos[k - 1] != unit)
          return CheckReport::error("vertex set is not pattern-shaped: a lattice line meets it in a gap");
    }
  }

  // lattice depth: steps inside S to a point missing some pattern neighbour
  std::vector<int> depth(pts.size(), -1);
  std::deque<std::size_t> queue;
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (auto [dx, dy] : steps(pattern))
      if (!at.count({pts[a].first + dx, pts[a].second + dy})) {
        depth[a] = 0;
        queue.push_back(a);
        break;
      }
  while (!queue.empty()) {
    std::size_t a = queue.front();
    queue.pop_front();
    for (auto [dx, dy] : steps(pattern)) {
      auto it = at.find({pts[a].first + dx, pts[a].second + dy});
      if (it == at.end() || depth[it->second] >= 0) continue;
      depth[it->second] = depth[a] + 1;
      queue.push_back(it->second);
    }
  }
  std::vector<std::size_t> inner;
  for (std::size_t a = 0; a < pts.size(); ++a)
    if (depth[a] < 0 || depth[a] >= margin) inner.push_back(a);
  if (inner.empty()) return CheckReport::error("margin larger than patch");

  std::vector<std::string> witnesses;
  for (std::size_t k = 0; k < inner.size(); ++k) {
    auto d = Y.distances_from(ids[inner[k]]);
    for (std::size_t l = k + 1; l < inner.size(); ++l) {
      std::size_t a = inner[k], b = inner[l];
      int expected = pattern_distance(pattern, pts[a], pts[b]);
      if (d[ids[b]] != expected)
        witnesses.push_back("vertices " + Y.name(ids[a]) + ", " + Y.name(ids[b]) + ": distance " +
                            std::to_string(d[ids[b]]) + ", pattern distance " + std::to_string(expected));
    }
  }
  return CheckReport::from_witnesses(std::move(witnesses));
}

}  // namespace smallcancel
