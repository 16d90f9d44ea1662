#include "smallcancel/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace smallcancel {

bool is_identifier(std::string_view token) {
  if (token.empty()) return false;
  return std::all_of(token.begin(), token.end(), [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_' || c == '.' ||
           c == '-';
  });
}

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::string_view strip_comment(std::string_view line) {
  auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

void require_identifier(std::size_t line, const std::string& tok) {
  if (!is_identifier(tok)) throw ParseError(line, "invalid identifier '" + tok + "'");
}

}  // namespace

ComplexDescription parse_complex(std::string_view text) {
  ComplexDescription d;
  bool have_header = false;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;

    auto toks = tokenize(strip_comment(raw));
    if (toks.empty()) continue;
    const std::string& kw = toks[0];
    if (!have_header) {
      if (kw != "complex" || toks.size() != 2) throw ParseError(lineno, "expected 'complex <name>' header");
      require_identifier(lineno, toks[1]);
      d.name = toks[1];
      have_header = true;
      continue;
    }
    if (kw == "vertex") {
      if (toks.size() != 2) throw ParseError(lineno, "expected 'vertex <id>'");
      require_identifier(lineno, toks[1]);
      d.vertices.push_back(toks[1]);
    } else if (kw == "edge") {
      if (toks.size() != 4) throw ParseError(lineno, "expected 'edge <id> <v_from> <v_to>'");
      for (std::size_t i = 1; i < 4; ++i) require_identifier(lineno, toks[i]);
      d.edges.push_back({toks[1], toks[2], toks[3]});
    } else if (kw == "face") {
      if (toks.size() < 3) throw ParseError(lineno, "expected 'face <id> <+-edge ...>'");
      require_identifier(lineno, toks[1]);
      ComplexDescription::FaceSpec spec{toks[1], {}};
      for (std::size_t i = 2; i < toks.size(); ++i) {
        const auto& t = toks[i];
        if (t.size() < 2 || (t[0] != '+' && t[0] != '-'))
          throw ParseError(lineno, "boundary letter '" + t + "' must start with + or -");
        std::string edge = t.substr(1);
        require_identifier(lineno, edge);
        spec.word.push_back({edge, t[0] == '+'});
      }
      d.faces.push_back(std::move(spec));
    } else if (kw == "complex") {
      throw ParseError(lineno, "duplicate 'complex' header");
    } else {
      throw ParseError(lineno, "unknown keyword '" + kw + "'");
    }
  }
  if (!have_header) throw ParseError(lineno, "missing 'complex <name>' header");
  return d;
}

CheckReport validate_complex(const TwoComplex& X, bool require_embedded) {
  std::vector<std::string> bad;
  for (Index f = 0; f < X.face_count(); ++f) {
    const auto& face = X.face(f);
    const auto& w = face.boundary;
    const auto n = static_cast<long long>(w.size());
    bool closed = true;
    bool immersed = true;
    for (long long p = 0; p < n; ++p) {
      const Letter& a = w.at_cyclic(p);
      const Letter& b = w.at_cyclic(p + 1);
      if (X.letter_end(a) != X.letter_start(b)) closed = false;
      if (b == a.reversed()) immersed = false;
    }
    if (!closed) bad.push_back("face " + face.id + ": boundary word is not a closed path");
    if (!immersed) bad.push_back("face " + face.id + ": boundary word is not an immersion (letter followed by its reversal)");
    if (require_embedded && closed) {
      auto cycle = X.face_vertex_cycle(f);
      std::sort(cycle.begin(), cycle.end());
      if (std::adjacent_find(cycle.begin(), cycle.end()) != cycle.end())
        bad.push_back("face " + face.id + ": boundary is not embedded (revisits a vertex)");
    }
  }
  return CheckReport::from_witnesses(std::move(bad));
}

TwoComplex load_complex(std::string_view text) {
  TwoComplex X = TwoComplex::build(parse_complex(text));
  CheckReport r = validate_complex(X, false);
  if (!r.holds()) {
    const std::string& w = r.witnesses.front();
    // witness format: "face <id>: <reason>"
    auto colon = w.find(':');
    std::string cell = w.substr(5, colon - 5);
    throw ValidationError(cell, w.substr(colon + 2));
  }
  return X;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

TwoComplex load_complex_file(const std::string& path) { return load_complex(read_file(path)); }

std::string serialize(const TwoComplex& X) {
  std::string out = "complex " + X.name() + "\n";
  for (const auto& v : X.vertices()) out += "vertex " + v + "\n";
  for (const auto& e : X.edges()) out += "edge " + e.id + " " + X.vertex_id(e.from) + " " + X.vertex_id(e.to) + "\n";
  for (const auto& f : X.faces()) {
    out += "face " + f.id;
    for (const auto& l : f.boundary.letters()) {
      out += ' ';
      out += l.forward ? '+' : '-';
      out += X.edge(l.edge).id;
    }
    out += '\n';
  }
  return out;
}

}  // namespace smallcancel
