#include <algorithm>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "smallcancel/duals.hpp"
#include "smallcancel/io.hpp"

namespace smallcancel {

Index Graph::add_vertex(std::string name) {
  names_.push_back(std::move(name));
  adj_.emplace_back();
  return static_cast<Index>(names_.size() - 1);
}

void Graph::add_edge(Index a, Index b) {
  if (a == b || adjacent(a, b)) return;
  adj_[a].insert(std::lower_bound(adj_[a].begin(), adj_[a].end(), b), b);
  adj_[b].insert(std::lower_bound(adj_[b].begin(), adj_[b].end(), a), a);
}

bool Graph::adjacent(Index a, Index b) const { return std::binary_search(adj_[a].begin(), adj_[a].end(), b); }

std::optional<Index> Graph::find(std::string_view name) const {
  for (Index v = 0; v < names_.size(); ++v)
    if (names_[v] == name) return v;
  return std::nullopt;
}

std::vector<int> Graph::distances_from(Index source) const {
  std::vector<int> dist(size(), -1);
  std::queue<Index> queue;
  dist[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    Index u = queue.front();
    queue.pop();
    for (Index w : adj_[u])
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push(w);
      }
  }
  return dist;
}

int graph_distance(const Graph& G, Index a, Index b) {
  if (a >= G.size() || b >= G.size()) throw std::out_of_range("vertex index out of range");
  int d = G.distances_from(a)[b];
  if (d < 0) throw std::invalid_argument("vertices " + G.name(a) + " and " + G.name(b) + " are disconnected");
  return d;
}

int graph_distance(const Graph& G, std::string_view a, std::string_view b) {
  auto ia = G.find(a), ib = G.find(b);
  if (!ia) throw std::out_of_range("unknown vertex '" + std::string(a) + "'");
  if (!ib) throw std::out_of_range("unknown vertex '" + std::string(b) + "'");
  return graph_distance(G, *ia, *ib);
}

Index SimplicialComplex::add_vertex(std::string name) {
  names_.push_back(std::move(name));
  Index v = static_cast<Index>(names_.size() - 1);
  simplices_.insert({v});
  return v;
}

void SimplicialComplex::add_simplex(Simplex s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (s.empty() || simplices_.count(s)) return;
  for (Index v : s)
    if (v >= names_.size()) throw std::out_of_range("simplex references unknown vertex");
  const std::size_t n = s.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    Simplex face;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) face.push_back(s[i]);
    simplices_.insert(std::move(face));
  }
}

std::optional<Index> SimplicialComplex::find(std::string_view name) const {
  for (Index v = 0; v < names_.size(); ++v)
    if (names_[v] == name) return v;
  return std::nullopt;
}

std::vector<SimplicialComplex::Simplex> SimplicialComplex::maximal_simplices() const {
  std::vector<Simplex> out;
  for (const auto& s : simplices_) {
    bool maximal = true;
    for (Index v = 0; v < names_.size() && maximal; ++v) {
      if (std::binary_search(s.begin(), s.end(), v)) continue;
      Simplex bigger = s;
      bigger.insert(std::lower_bound(bigger.begin(), bigger.end(), v), v);
      if (simplices_.count(bigger)) maximal = false;
    }
    if (maximal) out.push_back(s);
  }
  return out;
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (const auto& s : simplices_) d = std::max(d, static_cast<int>(s.size()) - 1);
  return d;
}

Graph SimplicialComplex::one_skeleton() const {
  Graph G;
  for (const auto& n : names_) G.add_vertex(n);
  for (const auto& s : simplices_)
    if (s.size() == 2) G.add_edge(s[0], s[1]);
  return G;
}

SimplicialComplex SimplicialComplex::link(Index v) const {
  SimplicialComplex L;
  std::map<Index, Index> local;
  std::vector<Simplex> rest;
  for (const auto& s : simplices_) {
    if (s.size() < 2 || !std::binary_search(s.begin(), s.end(), v)) continue;
    Simplex r;
    for (Index u : s)
      if (u != v) r.push_back(u);
    rest.push_back(std::move(r));
  }
  for (const auto& r : rest)
    for (Index u : r)
      if (!local.count(u)) local[u] = 0;
  for (auto& [u, idx] : local) idx = L.add_vertex(names_[u]);
  for (const auto& r : rest) {
    Simplex mapped;
    for (Index u : r) mapped.push_back(local[u]);
    L.simplices_.insert(mapped);  // r ranges over a downward-closed family already
  }
  return L;
}

Index SquareComplex::add_vertex(std::string name, int cls) {
  names_.push_back(std::move(name));
  classes_.push_back(cls);
  return static_cast<Index>(names_.size() - 1);
}

Index SquareComplex::add_edge(std::string id, Index a, Index b) {
  if (a >= names_.size() || b >= names_.size()) throw std::out_of_range("edge references unknown vertex");
  edges_.push_back({std::move(id), a, b});
  return static_cast<Index>(edges_.size() - 1);
}

std::optional<Index> SquareComplex::edge_between(Index a, Index b) const {
  for (Index e = 0; e < edges_.size(); ++e)
    if ((edges_[e].a == a && edges_[e].b == b) || (edges_[e].a == b && edges_[e].b == a)) return e;
  return std::nullopt;
}

void SquareComplex::add_square(std::string id, const std::array<Index, 4>& vertices) {
  std::array<Index, 4> edges{};
  for (int i = 0; i < 4; ++i) {
    auto e = edge_between(vertices[i], vertices[(i + 1) % 4]);
    if (!e) throw std::invalid_argument("square " + id + " has a side without an edge");
    edges[i] = *e;
  }
  add_square(std::move(id), vertices, edges);
}

void SquareComplex::add_square(std::string id, const std::array<Index, 4>& vertices,
                               const std::array<Index, 4>& edges) {
  squares_.push_back({std::move(id), vertices, edges});
}

std::optional<Index> SquareComplex::find(std::string_view name) const {
  for (Index v = 0; v < names_.size(); ++v)
    if (names_[v] == name) return v;
  return std::nullopt;
}

Graph SquareComplex::one_skeleton() const {
  Graph G;
  for (const auto& n : names_) G.add_vertex(n);
  for (const auto& e : edges_) G.add_edge(e.a, e.b);
  return G;
}

Graph one_skeleton(const DualComplex& Y) {
  return std::visit([](const auto& K) { return K.one_skeleton(); }, Y);
}

// ---- serialization ----

std::string serialize(const SimplicialComplex& K, std::string_view name) {
  std::ostringstream out;
  out << "simplicial " << name << '\n';
  std::vector<std::string> vertices;
  for (Index v = 0; v < K.vertex_count(); ++v) vertices.push_back(K.name(v));
  std::sort(vertices.begin(), vertices.end());
  for (const auto& v : vertices) out << "vertex " << v << '\n';
  std::vector<std::vector<std::string>> tops;
  for (const auto& s : K.maximal_simplices()) {
    if (s.size() < 2) continue;
    std::vector<std::string> names;
    for (Index v : s) names.push_back(K.name(v));
    std::sort(names.begin(), names.end());
    tops.push_back(std::move(names));
  }
  std::sort(tops.begin(), tops.end());
  for (std::size_t i = 0; i < tops.size(); ++i) {
    out << "simplex s" << i;
    for (const auto& n : tops[i]) out << ' ' << n;
    out << '\n';
  }
  return out.str();
}

std::string serialize(const SquareComplex& Y, std::string_view name) {
  std::ostringstream out;
  out << "squarecomplex " << name << '\n';
  std::vector<Index> order(Y.vertex_count());
  for (Index v = 0; v < order.size(); ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](Index a, Index b) { return Y.name(a) < Y.name(b); });
  for (Index v : order) out << "vertex " << Y.name(v) << ' ' << Y.vertex_class(v) << '\n';
  auto edges = Y.edges();
  std::sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  for (const auto& e : edges) out << "edge " << e.id << ' ' << Y.name(e.a) << ' ' << Y.name(e.b) << '\n';
  auto squares = Y.squares();
  std::sort(squares.begin(), squares.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  for (const auto& s : squares) {
    out << "square " << s.id;
    for (Index v : s.vertices) out << ' ' << Y.name(v);
    out << " :";
    for (Index e : s.edges) out << ' ' << Y.edges()[e].id;
    out << '\n';
  }
  return out.str();
}

namespace {

std::vector<std::vector<std::string>> token_lines(std::string_view text, std::string_view header) {
  std::vector<std::vector<std::string>> lines;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  bool seen_header = false;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream words(raw);
    std::vector<std::string> toks;
    for (std::string t; words >> t;) toks.push_back(t);
    if (toks.empty()) continue;
    if (!seen_header) {
      if (toks[0] != header || toks.size() != 2)
        throw ParseError(lineno, "expected '" + std::string(header) + " <name>' header");
      seen_header = true;
      continue;
    }
    toks.push_back(std::to_string(lineno));  // trailing line number for messages
    lines.push_back(std::move(toks));
  }
  if (!seen_header) throw ParseError(lineno, "missing '" + std::string(header) + "' header");
  return lines;
}

std::size_t line_of(const std::vector<std::string>& toks) { return std::stoul(toks.back()); }

}  // namespace

SimplicialComplex parse_simplicial(std::string_view text) {
  SimplicialComplex K;
  std::map<std::string, Index> index;
  for (const auto& toks : token_lines(text, "simplicial")) {
    const std::size_t n = toks.size() - 1;
    if (toks[0] == "vertex" && n == 2) {
      if (index.count(toks[1])) throw ParseError(line_of(toks), "duplicate vertex '" + toks[1] + "'");
      index[toks[1]] = K.add_vertex(toks[1]);
    } else if (toks[0] == "simplex" && n >= 3) {
      SimplicialComplex::Simplex s;
      for (std::size_t i = 2; i < n; ++i) {
        auto it = index.find(toks[i]);
        if (it == index.end()) throw ParseError(line_of(toks), "unknown vertex '" + toks[i] + "'");
        s.push_back(it->second);
      }
      K.add_simplex(std::move(s));
    } else {
      throw ParseError(line_of(toks), "unexpected line starting with '" + toks[0] + "'");
    }
  }
  return K;
}

SquareComplex parse_square_complex(std::string_view text) {
  SquareComplex Y;
  std::map<std::string, Index> vindex, eindex;
  for (const auto& toks : token_lines(text, "squarecomplex")) {
    const std::size_t n = toks.size() - 1;
    auto vertex = [&](const std::string& name) {
      auto it = vindex.find(name);
      if (it == vindex.end()) throw ParseError(line_of(toks), "unknown vertex '" + name + "'");
      return it->second;
    };
    if (toks[0] == "vertex" && (n == 2 || n == 3)) {
      vindex[toks[1]] = Y.add_vertex(toks[1], n == 3 ? std::stoi(toks[2]) : -1);
    } else if (toks[0] == "edge" && n == 4) {
      eindex[toks[1]] = Y.add_edge(toks[1], vertex(toks[2]), vertex(toks[3]));
    } else if (toks[0] == "square" && (n == 6 || (n == 11 && toks[6] == ":"))) {
      std::array<Index, 4> vs{};
      for (int i = 0; i < 4; ++i) vs[i] = vertex(toks[2 + i]);
      if (n == 6) {
        Y.add_square(toks[1], vs);
      } else {
        std::array<Index, 4> es{};
        for (int i = 0; i < 4; ++i) {
          auto it = eindex.find(toks[7 + i]);
          if (it == eindex.end()) throw ParseError(line_of(toks), "unknown edge '" + toks[7 + i] + "'");
          es[i] = it->second;
        }
        Y.add_square(toks[1], vs, es);
      }
    } else {
      throw ParseError(line_of(toks), "unexpected line starting with '" + toks[0] + "'");
    }
  }
  return Y;
}

}  // namespace smallcancel
