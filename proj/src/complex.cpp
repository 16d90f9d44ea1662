#include "smallcancel/complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace smallcancel {

const Letter& BoundaryWord::at_cyclic(long long i) const {
  const auto n = static_cast<long long>(letters_.size());
  return letters_[static_cast<std::size_t>(((i % n) + n) % n)];
}

std::vector<Letter> BoundaryWord::reading(std::size_t start, bool forward) const {
  const std::size_t n = letters_.size();
  std::vector<Letter> out;
  out.reserve(n);
  for (std::size_t t = 0; t < n; ++t) {
    if (forward) {
      out.push_back(letters_[(start + t) % n]);
    } else {
      out.push_back(letters_[(start + n - t % n) % n].reversed());
    }
  }
  return out;
}

BoundaryWord BoundaryWord::rotated(std::size_t k) const {
  if (letters_.empty()) return *this;
  return BoundaryWord(reading(k % letters_.size(), true));
}

BoundaryWord BoundaryWord::reversed() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (auto& l : out) l = l.reversed();
  return BoundaryWord(std::move(out));
}

bool BoundaryWord::equivalent(const BoundaryWord& other) const {
  if (size() != other.size()) return false;
  if (letters_.empty()) return true;
  for (std::size_t k = 0; k < size(); ++k) {
    if (other.reading(k, true) == letters_) return true;
    if (other.reading(k, false) == letters_) return true;
  }
  return false;
}

namespace {

template <typename T, typename Key>
std::vector<Index> sort_permutation(const std::vector<T>& items, Key key) {
  std::vector<Index> perm(items.size());
  std::iota(perm.begin(), perm.end(), Index{0});
  std::sort(perm.begin(), perm.end(), [&](Index a, Index b) { return key(items[a]) < key(items[b]); });
  return perm;
}

void sort_unique(std::vector<Index>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

TwoComplex TwoComplex::build(const ComplexDescription& d) {
  TwoComplex X;
  X.name_ = d.name.empty() ? "unnamed" : d.name;

  X.vertices_ = d.vertices;
  std::sort(X.vertices_.begin(), X.vertices_.end());
  for (std::size_t i = 1; i < X.vertices_.size(); ++i) {
    if (X.vertices_[i] == X.vertices_[i - 1]) throw ValidationError(X.vertices_[i], "duplicate vertex");
  }

  auto vperm = sort_permutation(d.edges, [](const auto& e) -> const std::string& { return e.id; });
  X.edges_.reserve(d.edges.size());
  for (Index k : vperm) {
    const auto& spec = d.edges[k];
    if (!X.edges_.empty() && X.edges_.back().id == spec.id) throw ValidationError(spec.id, "duplicate edge");
    auto from = X.find_vertex(spec.from);
    auto to = X.find_vertex(spec.to);
    if (!from) throw ValidationError(spec.id, "unknown endpoint vertex '" + spec.from + "'");
    if (!to) throw ValidationError(spec.id, "unknown endpoint vertex '" + spec.to + "'");
    X.edges_.push_back({spec.id, *from, *to});
  }

  auto fperm = sort_permutation(d.faces, [](const auto& f) -> const std::string& { return f.id; });
  X.faces_.reserve(d.faces.size());
  for (Index k : fperm) {
    const auto& spec = d.faces[k];
    if (!X.faces_.empty() && X.faces_.back().id == spec.id) throw ValidationError(spec.id, "duplicate face");
    if (spec.word.empty()) throw ValidationError(spec.id, "empty boundary word");
    std::vector<Letter> letters;
    letters.reserve(spec.word.size());
    for (const auto& l : spec.word) {
      auto e = X.find_edge(l.edge);
      if (!e) throw ValidationError(spec.id, "unknown edge '" + l.edge + "' in boundary word");
      letters.push_back({*e, l.forward});
    }
    X.faces_.push_back({spec.id, BoundaryWord(std::move(letters))});
  }

  X.index();
  return X;
}

void TwoComplex::index() {
  const std::size_t nf = faces_.size();
  face_cycle_.assign(nf, {});
  face_vertices_.assign(nf, {});
  face_edges_.assign(nf, {});
  vertex_faces_.assign(vertices_.size(), {});
  edge_faces_.assign(edges_.size(), {});
  valence_.assign(vertices_.size(), 0);

  for (const auto& e : edges_) {
    ++valence_[e.from];
    ++valence_[e.to];
  }
  for (Index f = 0; f < nf; ++f) {
    for (const auto& l : faces_[f].boundary.letters()) {
      face_cycle_[f].push_back(letter_start(l));
      face_edges_[f].push_back(l.edge);
    }
    face_vertices_[f] = face_cycle_[f];
    sort_unique(face_vertices_[f]);
    sort_unique(face_edges_[f]);
    for (Index v : face_vertices_[f]) vertex_faces_[v].push_back(f);
    for (Index e : face_edges_[f]) edge_faces_[e].push_back(f);
  }
}

ComplexDescription TwoComplex::describe() const {
  ComplexDescription d;
  d.name = name_;
  d.vertices = vertices_;
  for (const auto& e : edges_) d.edges.push_back({e.id, vertices_[e.from], vertices_[e.to]});
  for (const auto& f : faces_) {
    ComplexDescription::FaceSpec spec{f.id, {}};
    for (const auto& l : f.boundary.letters()) spec.word.push_back({edges_[l.edge].id, l.forward});
    d.faces.push_back(std::move(spec));
  }
  return d;
}

namespace {

template <typename T, typename Proj>
std::optional<Index> lookup(const std::vector<T>& items, std::string_view id, Proj proj) {
  auto it = std::lower_bound(items.begin(), items.end(), id,
                             [&](const T& item, std::string_view key) { return proj(item) < key; });
  if (it == items.end() || proj(*it) != id) return std::nullopt;
  return static_cast<Index>(it - items.begin());
}

}  // namespace

std::optional<Index> TwoComplex::find_vertex(std::string_view id) const {
  return lookup(vertices_, id, [](const std::string& s) -> std::string_view { return s; });
}

std::optional<Index> TwoComplex::find_edge(std::string_view id) const {
  return lookup(edges_, id, [](const Edge& e) -> std::string_view { return e.id; });
}

std::optional<Index> TwoComplex::find_face(std::string_view id) const {
  return lookup(faces_, id, [](const Face& f) -> std::string_view { return f.id; });
}

Index TwoComplex::vertex_index(std::string_view id) const {
  auto v = find_vertex(id);
  if (!v) throw std::out_of_range("unknown vertex '" + std::string(id) + "'");
  return *v;
}

Index TwoComplex::face_index(std::string_view id) const {
  auto f = find_face(id);
  if (!f) throw std::out_of_range("unknown face '" + std::string(id) + "'");
  return *f;
}

// ---------------------------------------------------------------------------
// Cell sets

bool CellSet::subset_of(const CellSet& other) const {
  return std::includes(other.vertices.begin(), other.vertices.end(), vertices.begin(), vertices.end()) &&
         std::includes(other.edges.begin(), other.edges.end(), edges.begin(), edges.end());
}

CellSet closed_face(const TwoComplex& X, Index f) { return {X.face_vertices(f), X.face_edges(f)}; }

CellSet intersect(const CellSet& a, const CellSet& b) {
  CellSet out;
  std::set_intersection(a.vertices.begin(), a.vertices.end(), b.vertices.begin(), b.vertices.end(),
                        std::back_inserter(out.vertices));
  std::set_intersection(a.edges.begin(), a.edges.end(), b.edges.begin(), b.edges.end(),
                        std::back_inserter(out.edges));
  return out;
}

CellSet intersect_faces(const TwoComplex& X, const std::vector<Index>& faces) {
  if (faces.empty()) return {};
  CellSet acc = closed_face(X, faces.front());
  for (std::size_t i = 1; i < faces.size() && !acc.empty(); ++i) acc = intersect(acc, closed_face(X, faces[i]));
  return acc;
}

bool faces_meet(const TwoComplex& X, Index a, Index b) {
  const auto& va = X.face_vertices(a);
  const auto& vb = X.face_vertices(b);
  auto i = va.begin();
  auto j = vb.begin();
  while (i != va.end() && j != vb.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i; else ++j;
  }
  return false;
}

bool is_vertex_or_path(const TwoComplex& X, const CellSet& s) {
  if (s.edges.empty()) return s.vertices.size() == 1;
  if (s.edges.size() + 1 != s.vertices.size()) return false;
  std::map<Index, std::vector<Index>> adj;
  for (Index v : s.vertices) adj[v];
  for (Index e : s.edges) {
    const auto& edge = X.edge(e);
    if (edge.from == edge.to) return false;
    adj[edge.from].push_back(edge.to);
    adj[edge.to].push_back(edge.from);
  }
  for (const auto& [v, nbrs] : adj) {
    if (nbrs.size() > 2) return false;
  }
  // connected + |E| = |V| - 1 => tree; max degree 2 => path
  std::vector<Index> stack{s.vertices.front()};
  std::map<Index, bool> seen{{s.vertices.front(), true}};
  while (!stack.empty()) {
    Index v = stack.back();
    stack.pop_back();
    for (Index w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return std::all_of(s.vertices.begin(), s.vertices.end(), [&](Index v) { return seen[v]; });
}

// ---------------------------------------------------------------------------
// Subcomplex

Subcomplex::Subcomplex(const TwoComplex& parent, std::vector<Index> faces)
    : parent_(&parent), faces_(std::move(faces)), member_(parent.face_count(), false) {
  sort_unique(faces_);
  for (Index f : faces_) {
    member_.at(f) = true;
    const auto& fe = parent.face_edges(f);
    const auto& fv = parent.face_vertices(f);
    edges_.insert(edges_.end(), fe.begin(), fe.end());
    vertices_.insert(vertices_.end(), fv.begin(), fv.end());
  }
  sort_unique(edges_);
  for (Index e : edges_) {
    vertices_.push_back(parent.edge(e).from);
    vertices_.push_back(parent.edge(e).to);
  }
  sort_unique(vertices_);
}

Subcomplex Subcomplex::whole(const TwoComplex& parent) {
  std::vector<Index> all(parent.face_count());
  std::iota(all.begin(), all.end(), Index{0});
  return Subcomplex(parent, std::move(all));
}

Subcomplex Subcomplex::from_ids(const TwoComplex& parent, const std::vector<std::string>& face_ids) {
  std::vector<Index> faces;
  faces.reserve(face_ids.size());
  for (const auto& id : face_ids) faces.push_back(parent.face_index(id));
  return Subcomplex(parent, std::move(faces));
}

std::vector<std::string> Subcomplex::face_ids() const {
  std::vector<std::string> out;
  for (Index f : faces_) out.push_back(parent_->face(f).id);
  return out;
}

TwoComplex Subcomplex::to_complex() const {
  const TwoComplex& X = *parent_;
  ComplexDescription d;
  d.name = X.name();
  for (Index v : vertices_) d.vertices.push_back(X.vertex_id(v));
  for (Index e : edges_) {
    const auto& edge = X.edge(e);
    d.edges.push_back({edge.id, X.vertex_id(edge.from), X.vertex_id(edge.to)});
  }
  for (Index f : faces_) {
    ComplexDescription::FaceSpec spec{X.face(f).id, {}};
    for (const auto& l : X.face(f).boundary.letters()) spec.word.push_back({X.edge(l.edge).id, l.forward});
    d.faces.push_back(std::move(spec));
  }
  return TwoComplex::build(d);
}

// ---------------------------------------------------------------------------
// Links

LinkGraph link_of(const TwoComplex& X, Index v) {
  if (v >= X.vertex_count()) throw std::out_of_range("vertex index out of range");
  LinkGraph g;
  g.vertex = v;
  std::map<EdgeEnd, Index> node_of;
  for (Index e = 0; e < X.edge_count(); ++e) {
    const auto& edge = X.edge(e);
    if (edge.from == v) {
      node_of[{e, false}] = static_cast<Index>(g.nodes.size());
      g.nodes.push_back({e, false});
    }
    if (edge.to == v) {
      node_of[{e, true}] = static_cast<Index>(g.nodes.size());
      g.nodes.push_back({e, true});
    }
  }
  for (Index f : X.vertex_faces(v)) {
    const auto& word = X.face(f).boundary;
    const auto n = static_cast<long long>(word.size());
    for (long long p = 0; p < n; ++p) {
      const Letter& in = word.at_cyclic(p - 1);
      const Letter& out = word[static_cast<std::size_t>(p)];
      if (X.letter_start(out) != v || X.letter_end(in) != v) continue;
      // `in` arrives at v through its end; `out` leaves v through its start.
      EdgeEnd a{in.edge, in.forward};
      EdgeEnd b{out.edge, !out.forward};
      g.arcs.push_back({node_of.at(a), node_of.at(b), Corner{f, static_cast<Index>(p)}});
    }
  }
  return g;
}

LinkGraph link_of(const TwoComplex& X, std::string_view vertex_id) {
  auto v = X.find_vertex(vertex_id);
  if (!v) throw std::out_of_range("unknown vertex '" + std::string(vertex_id) + "'");
  return link_of(X, *v);
}

}  // namespace smallcancel
