#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

#include "smallcancel/flats.hpp"
#include "smallcancel/io.hpp"

namespace smallcancel {

namespace {

std::vector<Index> meeting_faces(const TwoComplex& X, Index f) {
  std::vector<Index> out;
  for (Index v : X.face_vertices(f))
    for (Index g : X.vertex_faces(v))
      if (g != f) out.push_back(g);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool has_free_edge(const TwoComplex& X, Index f) {
  for (Index e : X.face_edges(f))
    if (X.edge_faces(e).size() < 2) return true;
  return false;
}

// Multi-source BFS over faces accepted by `inside`.
template <class Inside>
std::vector<int> bfs_depth(const TwoComplex& X, const std::vector<Index>& sources, Inside inside) {
  std::vector<int> dist(X.face_count(), -1);
  std::deque<Index> queue;
  for (Index s : sources) {
    dist[s] = 0;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    Index f = queue.front();
    queue.pop_front();
    for (Index g : meeting_faces(X, f)) {
      if (!inside(g) || dist[g] >= 0) continue;
      dist[g] = dist[f] + 1;
      queue.push_back(g);
    }
  }
  return dist;
}

}  // namespace

Graph gallery_graph(const TwoComplex& X) {
  Graph G;
  for (const auto& f : X.faces()) G.add_vertex(f.id);
  for (Index f = 0; f < X.face_count(); ++f)
    for (Index g : meeting_faces(X, f))
      if (f < g) G.add_edge(f, g);
  return G;
}

Graph gallery_graph(const Subcomplex& E) {
  const TwoComplex& X = E.parent();
  Graph G;
  std::vector<Index> local(X.face_count(), 0);
  for (Index f : E.faces()) local[f] = G.add_vertex(X.face(f).id);
  for (Index f : E.faces())
    for (Index g : meeting_faces(X, f))
      if (f < g && E.contains_face(g)) G.add_edge(local[f], local[g]);
  return G;
}

int gallery_distance(const TwoComplex& X, Index a, Index b) {
  auto dist = bfs_depth(X, {a}, [](Index) { return true; });
  if (dist[b] < 0)
    throw std::invalid_argument("faces " + X.face(a).id + " and " + X.face(b).id + " are not connected");
  return dist[b];
}

int gallery_distance(const TwoComplex& X, std::string_view a, std::string_view b) {
  return gallery_distance(X, X.face_index(a), X.face_index(b));
}

std::vector<int> face_depths(const TwoComplex& X, const Subcomplex& E, DepthMode mode) {
  std::vector<Index> sources;
  std::vector<int> dist;
  if (mode == DepthMode::Ambient) {
    for (Index f = 0; f < X.face_count(); ++f)
      if (has_free_edge(X, f)) sources.push_back(f);
    dist = bfs_depth(X, sources, [](Index) { return true; });
  } else {
    for (Index f : E.faces()) {
      bool boundary = has_free_edge(X, f);
      if (!boundary)
        for (Index g : meeting_faces(X, f))
          if (!E.contains_face(g)) {
            boundary = true;
            break;
          }
      if (boundary) sources.push_back(f);
    }
    dist = bfs_depth(X, sources, [&](Index g) { return E.contains_face(g); });
  }
  std::vector<int> out(X.face_count(), -1);
  for (Index f : E.faces()) out[f] = dist[f] < 0 ? kUnbounded : dist[f];
  return out;
}

std::vector<Index> cyclic_neighbours(const TwoComplex& X, const Subcomplex& E, Index f) {
  // Slot 2p is the start vertex of letter p, slot 2p+1 its edge. Each neighbour
  // occupies an arc of slots; neighbours are ordered by where that arc starts,
  // and a shorter arc first when two arcs start together (a corner neighbour
  // precedes the edge neighbour that follows it).
  const auto& word = X.face(f).boundary;
  const std::size_t n = word.size();
  const std::size_t slots = 2 * n;
  struct Entry {
    std::size_t start;
    std::size_t length;
    Index face;
  };
  std::vector<Entry> entries;
  for (Index g : meeting_faces(X, f)) {
    if (!E.contains_face(g)) continue;
    const auto& gv = X.face_vertices(g);
    const auto& ge = X.face_edges(g);
    std::vector<bool> present(slots);
    for (std::size_t p = 0; p < n; ++p) {
      present[2 * p] = std::binary_search(gv.begin(), gv.end(), X.letter_start(word[p]));
      present[2 * p + 1] = std::binary_search(ge.begin(), ge.end(), word[p].edge);
    }
    std::size_t count = std::count(present.begin(), present.end(), true);
    std::size_t start = 0;
    if (count < slots) {
      for (std::size_t s = 0; s < slots; ++s)
        if (present[s] && !present[(s + slots - 1) % slots]) {
          start = s;
          break;
        }
    }
    std::size_t length = 0;
    while (length < slots && present[(start + length) % slots]) ++length;
    entries.push_back({start, length, g});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.start != b.start) return a.start < b.start;
    if (a.length != b.length) return a.length < b.length;
    return a.face < b.face;
  });
  std::vector<Index> out;
  for (const auto& e : entries) out.push_back(e.face);
  return out;
}

Subcomplex gallery_ball(const TwoComplex& X, Index center, int radius) {
  auto dist = bfs_depth(X, {center}, [](Index) { return true; });
  std::vector<Index> faces;
  for (Index f = 0; f < X.face_count(); ++f)
    if (dist[f] >= 0 && dist[f] <= radius) faces.push_back(f);
  return Subcomplex(X, std::move(faces));
}

std::string_view to_string(FlatKind k) {
  switch (k) {
    case FlatKind::Triangular:
      return "triangular";
    case FlatKind::HexagonalFlatPlane:
      return "hexagonal-flat-plane";
    case FlatKind::QuasiFlatPlane:
      return "quasi-flat-plane";
  }
  return "?";
}

FlatKind flat_kind_from_string(std::string_view s) {
  for (FlatKind k : {FlatKind::Triangular, FlatKind::HexagonalFlatPlane, FlatKind::QuasiFlatPlane})
    if (to_string(k) == s) return k;
  throw std::invalid_argument("unknown flat kind: " + std::string(s));
}

std::string serialize(const FlatCertificate& c) {
  std::ostringstream out;
  out << "certificate " << to_string(c.kind) << '\n';
  out << "margin " << c.margin << '\n';
  out << "faces";
  for (const auto& f : c.faces) out << ' ' << f;
  out << '\n';
  for (const auto& [face, ns] : c.neighbours) {
    out << "neighbours " << face << " :";
    for (const auto& g : ns) out << ' ' << g;
    out << '\n';
  }
  for (const auto& [v, cls] : c.vertex_classes) out << "class " << v << ' ' << cls << '\n';
  out << "subcomplex\n" << c.subcomplex << "end\n";
  return out.str();
}

FlatCertificate parse_certificate(std::string_view text) {
  FlatCertificate c;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  bool seen_header = false;
  bool in_subcomplex = false;
  bool closed = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (in_subcomplex) {
      if (line == "end") {
        in_subcomplex = false;
        closed = true;
      } else {
        c.subcomplex += line + '\n';
      }
      continue;
    }
    std::istringstream words(line);
    std::string key;
    if (!(words >> key)) continue;
    try {
      if (key == "certificate") {
        std::string kind;
        words >> kind;
        c.kind = flat_kind_from_string(kind);
        seen_header = true;
      } else if (key == "margin") {
        if (!(words >> c.margin)) throw ParseError(lineno, "margin needs an integer");
      } else if (key == "faces") {
        for (std::string id; words >> id;) c.faces.push_back(id);
      } else if (key == "neighbours") {
        std::string face, colon;
        words >> face >> colon;
        if (colon != ":") throw ParseError(lineno, "expected ':' after face id");
        std::vector<std::string> ns;
        for (std::string id; words >> id;) ns.push_back(id);
        c.neighbours.emplace_back(face, std::move(ns));
      } else if (key == "class") {
        std::string v, cls;
        if (!(words >> v >> cls)) throw ParseError(lineno, "class needs a vertex and a label");
        c.vertex_classes.emplace_back(v, cls);
      } else if (key == "subcomplex") {
        in_subcomplex = true;
      } else {
        throw ParseError(lineno, "unknown certificate keyword '" + key + "'");
      }
    } catch (const std::invalid_argument& e) {
      throw ParseError(lineno, e.what());
    }
  }
  if (!seen_header) throw ParseError(1, "missing certificate header");
  if (!closed) throw ParseError(lineno, "unterminated subcomplex block");
  return c;
}

}  // namespace smallcancel
