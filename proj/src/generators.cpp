#include "smallcancel/generators.hpp"

#include <array>
#include <charconv>
#include <map>
#include <memory>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

#include "smallcancel/io.hpp"

namespace smallcancel {

std::string_view to_string(Family f) {
  switch (f) {
    case Family::Triangular: return "triangular";
    case Family::Square: return "square";
    case Family::Hexagonal: return "hexagonal";
    case Family::QuasiFlatPlane: return "quasi-flat-plane";
    case Family::PaperExample: return "paper-example";
  }
  return "square";
}

Family family_from_string(std::string_view s) {
  for (Family f : {Family::Triangular, Family::Square, Family::Hexagonal, Family::QuasiFlatPlane, Family::PaperExample})
    if (to_string(f) == s) return f;
  throw std::invalid_argument("unknown family '" + std::string(s) + "'");
}

bool paper_example_keep(int i, int j) { return i % 2 == 0 && j % 2 == 0; }

namespace {

// (type, i, j, level) for faces, vertices and edges of an infinite tiling.
using Cell = std::array<int, 4>;

struct Use {
  Cell edge;
  Cell from;  // endpoints of the edge itself, not of the traversal
  Cell to;
  bool forward;
};

std::string coords(int i, int j) { return std::to_string(i) + "_" + std::to_string(j); }

class Tiling {
 public:
  virtual ~Tiling() = default;
  virtual Cell base() const = 0;
  virtual std::string face_id(const Cell& f) const = 0;
  virtual std::string vertex_id(const Cell& v) const = 0;
  virtual std::string edge_id(const Cell& e) const {
    return std::string(1, static_cast<char>(e[0])) + "_" + coords(e[1], e[2]);
  }
  virtual std::vector<Use> boundary(const Cell& f) const = 0;
  virtual std::vector<Cell> faces_at(const Cell& v) const = 0;
  /// Faces of one fundamental domain of the period lattice.
  virtual std::vector<Cell> domain_faces(int m, int n) const = 0;
};

class SquareTiling : public Tiling {
 public:
  Cell base() const override { return {0, 0, 0, 0}; }
  std::string face_id(const Cell& f) const override { return "f_" + coords(f[1], f[2]); }
  std::string vertex_id(const Cell& v) const override { return "v_" + coords(v[1], v[2]); }
  static Use x(int k, int l, bool fwd) { return {{'x', k, l, 0}, {0, k, l, 0}, {0, k + 1, l, 0}, fwd}; }
  static Use y(int k, int l, bool fwd) { return {{'y', k, l, 0}, {0, k, l, 0}, {0, k, l + 1, 0}, fwd}; }
  std::vector<Use> boundary(const Cell& f) const override {
    int a = f[1], b = f[2];
    return {x(a, b, true), y(a + 1, b, true), x(a, b + 1, false), y(a, b, false)};
  }
  std::vector<Cell> faces_at(const Cell& v) const override {
    int i = v[1], j = v[2];
    return {{0, i - 1, j - 1, 0}, {0, i, j - 1, 0}, {0, i - 1, j, 0}, {0, i, j, 0}};
  }
  std::vector<Cell> domain_faces(int m, int n) const override {
    std::vector<Cell> out;
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < n; ++b) out.push_back({0, a, b, 0});
    return out;
  }
};

class TriangularTiling : public Tiling {
 public:
  Cell base() const override { return {'U', 0, 0, 0}; }
  std::string face_id(const Cell& f) const override {
    return std::string("f_") + static_cast<char>(f[0]) + "_" + coords(f[1], f[2]);
  }
  std::string vertex_id(const Cell& v) const override { return "v_" + coords(v[1], v[2]); }
  static Use a(int k, int l, bool fwd) { return {{'a', k, l, 0}, {0, k, l, 0}, {0, k + 1, l, 0}, fwd}; }
  static Use b(int k, int l, bool fwd) { return {{'b', k, l, 0}, {0, k, l, 0}, {0, k, l + 1, 0}, fwd}; }
  static Use c(int k, int l, bool fwd) { return {{'c', k, l, 0}, {0, k + 1, l, 0}, {0, k, l + 1, 0}, fwd}; }
  std::vector<Use> boundary(const Cell& f) const override {
    int i = f[1], j = f[2];
    if (f[0] == 'U') return {a(i, j, true), c(i, j, true), b(i, j, false)};
    return {b(i + 1, j, true), a(i, j + 1, false), c(i, j, false)};
  }
  std::vector<Cell> faces_at(const Cell& v) const override {
    int i = v[1], j = v[2];
    return {{'U', i, j, 0},     {'D', i - 1, j, 0}, {'U', i - 1, j, 0},
            {'D', i - 1, j - 1, 0}, {'U', i, j - 1, 0}, {'D', i, j - 1, 0}};
  }
  std::vector<Cell> domain_faces(int m, int n) const override {
    std::vector<Cell> out;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) {
        out.push_back({'U', i, j, 0});
        out.push_back({'D', i, j, 0});
      }
    return out;
  }
};

// Dual of the triangular tiling: hexagon (i,j) sits on lattice point (i,j) and
// its corners are the six triangles around that point.
class HexagonalTiling : public Tiling {
 public:
  Cell base() const override { return {0, 0, 0, 0}; }
  std::string face_id(const Cell& f) const override { return "h_" + coords(f[1], f[2]); }
  std::string vertex_id(const Cell& v) const override {
    return std::string("v_") + static_cast<char>(v[0]) + "_" + coords(v[1], v[2]);
  }
  // Each hexagon edge crosses one triangle edge and runs from its U side to its D side.
  static Use a(int k, int l, bool fwd) { return {{'a', k, l, 0}, {'U', k, l, 0}, {'D', k, l - 1, 0}, fwd}; }
  static Use b(int k, int l, bool fwd) { return {{'b', k, l, 0}, {'U', k, l, 0}, {'D', k - 1, l, 0}, fwd}; }
  static Use c(int k, int l, bool fwd) { return {{'c', k, l, 0}, {'U', k, l, 0}, {'D', k, l, 0}, fwd}; }
  std::vector<Use> boundary(const Cell& f) const override {
    int i = f[1], j = f[2];
    return {b(i, j, true),      c(i - 1, j, false), a(i - 1, j, true),
            b(i, j - 1, false), c(i, j - 1, true),  a(i, j, false)};
  }
  std::vector<Cell> faces_at(const Cell& v) const override {
    int k = v[1], l = v[2];
    if (v[0] == 'U') return {{0, k, l, 0}, {0, k + 1, l, 0}, {0, k, l + 1, 0}};
    return {{0, k + 1, l, 0}, {0, k + 1, l + 1, 0}, {0, k, l + 1, 0}};
  }
  std::vector<Cell> domain_faces(int m, int n) const override {
    std::vector<Cell> out;
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < n; ++b) out.push_back({0, a, b, 0});
    return out;
  }
};

// Two copies of the square grid joined by vertical edges z; octagons fill the
// cycles. Vertical edges where keep is false are collapsed (level -1).
class QuasiTiling : public Tiling {
 public:
  explicit QuasiTiling(KeepRule keep) : keep_(std::move(keep)) {}
  Cell base() const override { return {0, 0, 0, 0}; }
  std::string face_id(const Cell& f) const override { return "f_" + coords(f[1], f[2]); }
  std::string vertex_id(const Cell& v) const override {
    if (v[3] < 0) return "v_" + coords(v[1], v[2]);
    return "v_" + coords(v[1], v[2]) + "_" + std::to_string(v[3]);
  }
  std::vector<Use> boundary(const Cell& f) const override {
    int a = f[1], b = f[2];
    std::vector<Use> all = {x(a, b, true),      z(a + 1, b, true),      y(a + 1, b, true),  z(a + 1, b + 1, false),
                            x(a, b + 1, false), z(a, b + 1, true),      y(a, b, false),     z(a, b, false)};
    std::vector<Use> out;
    for (const auto& u : all)
      if (u.edge[0] != 'z' || kept(u.edge[1], u.edge[2])) out.push_back(u);
    return out;
  }
  std::vector<Cell> faces_at(const Cell& v) const override {
    int i = v[1], j = v[2];
    return {{0, i - 1, j - 1, 0}, {0, i, j - 1, 0}, {0, i - 1, j, 0}, {0, i, j, 0}};
  }
  std::vector<Cell> domain_faces(int m, int n) const override {
    std::vector<Cell> out;
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < n; ++b) out.push_back({0, a, b, 0});
    return out;
  }

 private:
  bool kept(int i, int j) const { return keep_ && keep_(i, j); }
  Cell vtx(int i, int j, int level) const { return {0, i, j, kept(i, j) ? level : -1}; }
  Use x(int k, int l, bool fwd) const { return {{'x', k, l, 0}, vtx(k, l, 0), vtx(k + 1, l, 0), fwd}; }
  Use y(int k, int l, bool fwd) const { return {{'y', k, l, 0}, vtx(k, l, 1), vtx(k, l + 1, 1), fwd}; }
  Use z(int k, int l, bool fwd) const { return {{'z', k, l, 0}, vtx(k, l, 0), vtx(k, l, 1), fwd}; }

  KeepRule keep_;
};

using Reducer = std::function<Cell(Cell)>;

ComplexDescription describe_faces(const Tiling& T, const std::vector<Cell>& faces, const Reducer& R,
                                  const std::string& name) {
  ComplexDescription d;
  d.name = name;
  std::set<std::string> vertices;
  std::map<std::string, std::pair<std::string, std::string>> edges;
  std::set<std::string> face_ids;
  for (const auto& f : faces) {
    ComplexDescription::FaceSpec spec;
    spec.id = T.face_id(R(f));
    if (!face_ids.insert(spec.id).second) continue;
    for (const auto& u : T.boundary(f)) {
      std::string e = T.edge_id(R(u.edge));
      std::string from = T.vertex_id(R(u.from));
      std::string to = T.vertex_id(R(u.to));
      auto [it, fresh] = edges.emplace(e, std::make_pair(from, to));
      if (!fresh && it->second != std::make_pair(from, to))
        throw std::invalid_argument("edge " + e + " acquires two different endpoint pairs");
      vertices.insert(from);
      vertices.insert(to);
      spec.word.push_back({e, u.forward});
    }
    d.faces.push_back(std::move(spec));
  }
  d.vertices.assign(vertices.begin(), vertices.end());
  for (const auto& [id, ends] : edges) d.edges.push_back({id, ends.first, ends.second});
  return d;
}

std::vector<Cell> gallery_ball(const Tiling& T, int radius) {
  std::map<Cell, int> dist;
  std::queue<Cell> queue;
  dist[T.base()] = 0;
  queue.push(T.base());
  std::vector<Cell> out;
  while (!queue.empty()) {
    Cell f = queue.front();
    queue.pop();
    out.push_back(f);
    int d = dist[f];
    if (d == radius) continue;
    for (const auto& u : T.boundary(f))
      for (const Cell& v : {u.from, u.to})
        for (const Cell& g : T.faces_at(v))
          if (dist.emplace(g, d + 1).second) queue.push(g);
  }
  return out;
}

std::unique_ptr<Tiling> make_tiling(Family family, const KeepRule& keep) {
  switch (family) {
    case Family::Triangular: return std::make_unique<TriangularTiling>();
    case Family::Square: return std::make_unique<SquareTiling>();
    case Family::Hexagonal: return std::make_unique<HexagonalTiling>();
    case Family::QuasiFlatPlane: return std::make_unique<QuasiTiling>(keep);
    case Family::PaperExample: return std::make_unique<QuasiTiling>(paper_example_keep);
  }
  throw std::invalid_argument("unknown family");
}

std::vector<std::string> family_assertions(Family family) {
  switch (family) {
    case Family::Triangular: return {"C(3)", "T(6)"};
    case Family::Square:
    case Family::PaperExample: return {"C(4)", "T(4)"};
    case Family::Hexagonal: return {"C(6)"};
    case Family::QuasiFlatPlane: return {};
  }
  return {};
}

std::string family_name(Family family) {
  std::string s(to_string(family));
  for (auto& c : s)
    if (c == '-') c = '_';
  return s;
}

}  // namespace

Patch generate(const PatchSpec& spec) {
  if (spec.radius < 1) throw std::invalid_argument("radius must be at least 1");
  auto tiling = make_tiling(spec.family, spec.keep);
  auto faces = gallery_ball(*tiling, spec.radius);
  Patch p;
  p.spec = spec;
  p.base_face = tiling->face_id(tiling->base());
  p.complex = TwoComplex::build(describe_faces(*tiling, faces, [](Cell c) { return c; },
                                               family_name(spec.family) + "_r" + std::to_string(spec.radius)));
  p.assertions = {"simply-connected"};
  for (auto& a : family_assertions(spec.family)) p.assertions.push_back(a);
  return p;
}

Patch generate_tiling(Family family, int radius) {
  if (family == Family::QuasiFlatPlane || family == Family::PaperExample)
    throw std::invalid_argument("generate_tiling expects triangular, square or hexagonal");
  return generate({family, radius, {}});
}

Patch generate_quasi_flat_plane(int radius, const KeepRule& keep) {
  return generate({Family::QuasiFlatPlane, radius, keep});
}

Patch generate_paper_example(int radius) { return generate({Family::PaperExample, radius, paper_example_keep}); }

Patch quotient_by_lattice(Family family, int m, int n) {
  if (family != Family::Square && family != Family::Triangular && family != Family::PaperExample)
    throw std::invalid_argument("quotients are available for square, triangular and paper-example");
  if (m < 3 || n < 3) throw std::invalid_argument("periods too small: both periods must be at least 3");
  if (family == Family::PaperExample && (m % 2 || n % 2))
    throw std::invalid_argument("paper-example periods must be even to preserve the collapse pattern");
  auto tiling = make_tiling(family, {});
  auto mod = [](int a, int p) { return ((a % p) + p) % p; };
  Reducer R = [&](Cell c) {
    c[1] = mod(c[1], m);
    c[2] = mod(c[2], n);
    return c;
  };
  Patch p;
  p.spec = {family, 0, family == Family::PaperExample ? KeepRule(paper_example_keep) : KeepRule{}};
  p.periods = std::make_pair(m, n);
  p.base_face = tiling->face_id(tiling->base());
  p.complex = TwoComplex::build(describe_faces(*tiling, tiling->domain_faces(m, n), R,
                                               family_name(family) + "_q" + std::to_string(m) + "x" +
                                                   std::to_string(n)));
  auto check = validate_complex(p.complex, true);
  if (!check.holds()) throw std::invalid_argument("periods too small: " + check.witnesses.front());
  p.assertions = {"torus"};
  for (auto& a : family_assertions(family)) p.assertions.push_back(a);
  return p;
}

TwoComplex contract_edges(const TwoComplex& X, const std::vector<std::string>& edges,
                          const std::function<std::string(const std::vector<std::string>&)>& naming) {
  const std::size_t V = X.vertex_count();
  std::vector<Index> parent(V);
  std::iota(parent.begin(), parent.end(), Index{0});
  std::function<Index(Index)> find = [&](Index v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
  std::vector<bool> dropped(X.edge_count(), false);
  for (const auto& id : edges) {
    auto e = X.find_edge(id);
    if (!e) throw std::out_of_range("unknown edge '" + id + "'");
    dropped[*e] = true;
    parent[find(X.edge(*e).from)] = find(X.edge(*e).to);
  }
  std::map<Index, std::vector<std::string>> classes;
  for (Index v = 0; v < V; ++v) classes[find(v)].push_back(X.vertex_id(v));
  std::map<Index, std::string> new_id;
  for (auto& [root, members] : classes) {
    std::sort(members.begin(), members.end());
    new_id[root] = naming && members.size() > 1 ? naming(members) : members.front();
  }

  ComplexDescription d;
  d.name = X.name();
  for (const auto& [root, id] : new_id) d.vertices.push_back(id);
  for (Index e = 0; e < X.edge_count(); ++e) {
    if (dropped[e]) continue;
    d.edges.push_back({X.edge(e).id, new_id[find(X.edge(e).from)], new_id[find(X.edge(e).to)]});
  }
  for (const auto& f : X.faces()) {
    ComplexDescription::FaceSpec spec{f.id, {}};
    for (const auto& l : f.boundary.letters())
      if (!dropped[l.edge]) spec.word.push_back({X.edge(l.edge).id, l.forward});
    if (spec.word.empty()) throw ValidationError(f.id, "boundary collapses to a point");
    d.faces.push_back(std::move(spec));
  }
  return TwoComplex::build(d);
}

namespace {

bool parse_int(const std::string& s, int& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

std::vector<std::string> split(const std::string& id) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (true) {
    auto us = id.find('_', pos);
    parts.push_back(id.substr(pos, us == std::string::npos ? std::string::npos : us - pos));
    if (us == std::string::npos) break;
    pos = us + 1;
  }
  return parts;
}

}  // namespace

std::string shift_identifier(const std::string& id, int dx, int dy) {
  auto parts = split(id);
  int seen = 0;
  for (auto& p : parts) {
    int value;
    if (seen < 2 && parse_int(p, value)) {
      p = std::to_string(value + (seen == 0 ? dx : dy));
      ++seen;
    }
  }
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "_" : "") + parts[i];
  return out;
}

std::optional<std::pair<int, int>> identifier_coordinates(const std::string& id) {
  std::vector<int> found;
  for (const auto& p : split(id)) {
    int value;
    if (found.size() < 2 && parse_int(p, value)) found.push_back(value);
  }
  if (found.size() < 2) return std::nullopt;
  return std::make_pair(found[0], found[1]);
}

}  // namespace smallcancel
