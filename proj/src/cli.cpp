#include "smallcancel/cli.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <functional>
#include <json.hpp>
#include <sstream>

#include "smallcancel/cancellation.hpp"
#include "smallcancel/duals.hpp"
#include "smallcancel/flats.hpp"
#include "smallcancel/generators.hpp"
#include "smallcancel/io.hpp"

namespace smallcancel {

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

namespace {

struct Context {
  std::string command;
  std::string format = "text";
  std::string out_path;
  std::ostream* out;
  std::ostream* err;
};

void emit(const Context& ctx, const std::string& text) {
  if (ctx.out_path.empty())
    *ctx.out << text;
  else
    write_file(ctx.out_path, text);
}

std::string render(const Context& ctx, const CheckReport& r) {
  return ctx.format == "json" ? render_json(r) + "\n" : render_text(r);
}

// Runs a report-producing step, turning input errors into Error reports.
int report_step(Context& ctx, const std::string& input_path, const std::function<CheckReport()>& body,
                bool to_out_path = true) {
  auto start = std::chrono::steady_clock::now();
  CheckReport r;
  try {
    r = body();
  } catch (const ValidationError& e) {
    r = CheckReport::error(e.cell().empty() ? std::string(e.what()) : e.cell() + ": " + e.what());
  } catch (const std::exception& e) {
    r = CheckReport::error(e.what());
  }
  r.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  r.command = ctx.command;
  if (!input_path.empty()) {
    try {
      r.input_sha256 = sha256_hex(read_file(input_path));
    } catch (const std::exception&) {
    }
  }
  if (to_out_path)
    emit(ctx, render(ctx, r));
  else
    *ctx.out << render(ctx, r);
  return exit_status(r.verdict);
}

DualComplex load_dual(const std::string& path, const std::string& kind) {
  std::string text = read_file(path);
  std::istringstream in(text);
  std::string first;
  in >> first;
  if (first == "simplicial") return parse_simplicial(text);
  if (first == "squarecomplex") return parse_square_complex(text);
  TwoComplex X = load_complex(text);
  if (kind == "quadric") return quadrize(X);
  return build_nerve(X);
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

// Deepest face (smallest id on ties) and the smallest admissible continuation.
std::array<std::string, 3> default_seed(const TwoComplex& X, NumberingRule rule) {
  auto depth = face_depths(X, Subcomplex::whole(X), DepthMode::Ambient);
  Index c0 = 0;
  for (Index f = 0; f < X.face_count(); ++f)
    if (depth[f] > depth[c0]) c0 = f;
  for (const auto& c1 : X.faces()) {
    for (const auto& c2 : X.faces()) {
      std::array<std::string, 3> seed{X.face(c0).id, c1.id, c2.id};
      if (c1.id == seed[0] || c2.id == seed[0] || c1.id == c2.id) continue;
      try {
        numbering(X, rule, seed, 4);
        return seed;
      } catch (const NumberingError&) {
      }
    }
  }
  throw NumberingError("no valid seed around " + X.face(c0).id);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx;
  ctx.out = &out;
  ctx.err = &err;
  ctx.command = "smallcancel";
  for (const auto& a : args) ctx.command += " " + a;

  CLI::App app{"Small cancellation complexes: checks, duals and flats", "smallcancel"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", ctx.format, "Report format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", ctx.out_path, "Write output to this file");
  };

  std::string input, family = "square", cond, kind, metric = "gallery", dual_kind = "nerve", rule_name, seed,
              faces, mode, cert_path, a_name, b_name;
  int radius = 2, p = 4, q = 4, k = 6, margin = 2, count = 25, m = 3, n = 3, dx = 0, dy = 0;
  bool embedded = false;

  auto* gen = app.add_subcommand("generate", "Generate a patch of a tiling family");
  gen->add_option("--family", family, "triangular|square|hexagonal|quasi-flat-plane|paper-example")->required();
  gen->add_option("--radius", radius, "Gallery radius")->check(CLI::NonNegativeNumber);
  add_common(gen);

  auto* val = app.add_subcommand("validate", "Validate a complex file");
  val->add_flag("--embedded", embedded, "Also require embedded boundary words");
  val->add_option("file", input)->required();
  add_common(val);

  auto* chk = app.add_subcommand("check", "Check a small cancellation condition");
  chk->add_option("--cond", cond, "C|T|helly|strong-helly|piece-length")
      ->required()
      ->check(CLI::IsMember({"C", "T", "helly", "strong-helly", "piece-length"}));
  chk->add_option("--p", p, "p for C(p)");
  chk->add_option("--q", q, "q for T(q) and the piece-length bound");
  chk->add_option("--mode", mode, "Helly preconditions: c6|c4t4 (default: c6 if C(6) holds)")
      ->check(CLI::IsMember({"c6", "c4t4"}));
  chk->add_option("file", input)->required();
  add_common(chk);

  auto* dual = app.add_subcommand("dual", "Build the nerve or the quadrization");
  dual->add_option("--kind", kind, "nerve|quadrization")->required()->check(CLI::IsMember({"nerve", "quadrization"}));
  dual->add_option("file", input)->required();
  add_common(dual);

  auto* cdual = app.add_subcommand("check-dual", "Check a dual complex (or the dual of a complex)");
  cdual->add_option("--kind", kind, "systolic|quadric|k-large")
      ->required()
      ->check(CLI::IsMember({"systolic", "quadric", "k-large"}));
  cdual->add_option("--k", k, "k for k-large");
  cdual->add_option("file", input)->required();
  add_common(cdual);

  auto* flat = app.add_subcommand("detect-flat", "Check a subcomplex for a flat plane");
  flat->add_option("--kind", kind, "c6-plane|quasi|c3t6")->required()->check(CLI::IsMember({"c6-plane", "quasi", "c3t6"}));
  flat->add_option("--margin", margin, "Interior depth")->check(CLI::NonNegativeNumber);
  flat->add_option("--faces", faces, "Comma-separated face ids of the subcomplex (default: all)");
  flat->add_option("file", input)->required();
  add_common(flat);

  auto* num = app.add_subcommand("numbering", "Number faces by the inductive rule");
  num->add_option("--rule", rule_name, "c6|quasi")->required()->check(CLI::IsMember({"c6", "quasi"}));
  num->add_option("--seed", seed, "C0,C1,C2 (default: deepest face, smallest admissible ids)");
  num->add_option("--count", count, "Number of cells")->check(CLI::PositiveNumber);
  num->add_option("file", input)->required();
  add_common(num);

  auto* dist = app.add_subcommand("distance", "Distance between two cells");
  dist->add_option("--metric", metric, "gallery|skeleton|dual")->check(CLI::IsMember({"gallery", "skeleton", "dual"}));
  dist->add_option("--dual", dual_kind, "nerve|quadrization")->check(CLI::IsMember({"nerve", "quadrization"}));
  dist->add_option("file", input)->required();
  dist->add_option("a", a_name)->required();
  dist->add_option("b", b_name)->required();
  add_common(dist);

  auto* quot = app.add_subcommand("quotient", "Torus quotient of a tiling by a lattice");
  quot->add_option("--family", family, "Tiling family")->required();
  quot->add_option("--m", m, "First period");
  quot->add_option("--n", n, "Second period");
  add_common(quot);

  auto* trans = app.add_subcommand("translate", "Translate a flat certificate and re-verify it");
  trans->add_option("--dx", dx);
  trans->add_option("--dy", dy);
  trans->add_option("file", input)->required();
  trans->add_option("certificate", cert_path)->required();
  add_common(trans);

  auto* rep = app.add_subcommand("report", "Re-render a saved report");
  rep->add_option("file", input)->required();
  add_common(rep);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help("", CLI::AppFormatMode::All);
    return 3;
  }

  // Commands that produce artifacts rather than reports.
  auto artifact = [&](const std::function<std::string()>& body) {
    try {
      emit(ctx, body());
      return 0;
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return 3;
    }
  };

  if (gen->parsed()) {
    return artifact([&] {
      Family f = family_from_string(family);
      if (f == Family::PaperExample) return serialize(generate_paper_example(radius).complex);
      if (f == Family::QuasiFlatPlane) return serialize(generate_quasi_flat_plane(radius, [](int, int) { return true; }).complex);
      return serialize(generate_tiling(f, radius).complex);
    });
  }
  if (quot->parsed()) {
    return artifact([&] { return serialize(quotient_by_lattice(family_from_string(family), m, n).complex); });
  }
  if (dual->parsed()) {
    return artifact([&] {
      TwoComplex X = load_complex_file(input);
      return kind == "nerve" ? serialize(build_nerve(X), X.name() + "_nerve")
                             : serialize(quadrize(X), X.name() + "_quadrization");
    });
  }
  if (val->parsed()) {
    return report_step(ctx, input, [&] {
      auto d = parse_complex(read_file(input));
      return validate_complex(TwoComplex::build(d), embedded);
    });
  }
  if (chk->parsed()) {
    return report_step(ctx, input, [&]() -> CheckReport {
      TwoComplex X = load_complex_file(input);
      if (cond == "C") return check_condition_C(X, p);
      if (cond == "T") return check_condition_T(X, q);
      if (cond == "piece-length") return check_piece_length_bound(X, q);
      HellyMode hm = HellyMode::C6;
      if (mode == "c4t4" || (mode.empty() && !check_condition_C(X, 6).holds())) hm = HellyMode::C4T4;
      return cond == "helly" ? check_helly(X, hm) : check_strong_helly(X, hm);
    });
  }
  if (cdual->parsed()) {
    return report_step(ctx, input, [&]() -> CheckReport {
      DualComplex Y = load_dual(input, kind);
      if (kind == "quadric") {
        if (!std::holds_alternative<SquareComplex>(Y)) return CheckReport::error("quadric check needs a square complex");
        return check_quadric_conditions(std::get<SquareComplex>(Y));
      }
      if (!std::holds_alternative<SimplicialComplex>(Y))
        return CheckReport::error("this check needs a simplicial complex");
      const auto& K = std::get<SimplicialComplex>(Y);
      return kind == "systolic" ? check_systolic_links(K) : check_k_large(K, k);
    });
  }
  if (flat->parsed()) {
    std::optional<FlatCertificate> cert;
    std::string cert_out = ctx.out_path;
    ctx.out_path.clear();
    int status = report_step(ctx, input, [&] {
      TwoComplex X = load_complex_file(input);
      Subcomplex E = faces.empty() ? Subcomplex::whole(X) : Subcomplex::from_ids(X, split_commas(faces));
      FlatKind fk = kind == "c6-plane" ? FlatKind::HexagonalFlatPlane
                    : kind == "quasi"  ? FlatKind::QuasiFlatPlane
                                       : FlatKind::Triangular;
      auto result = check_flat(fk, X, E, margin);
      cert = result.certificate;
      return result.report;
    });
    if (cert) {
      if (cert_out.empty()) {
        if (ctx.format == "text") out << serialize(*cert);
      } else {
        write_file(cert_out, serialize(*cert));
      }
    }
    return status;
  }
  if (num->parsed()) {
    try {
      TwoComplex X = load_complex_file(input);
      NumberingRule rule = rule_name == "c6" ? NumberingRule::C6 : NumberingRule::Quasi;
      std::array<std::string, 3> s;
      if (seed.empty()) {
        s = default_seed(X, rule);
      } else {
        auto parts = split_commas(seed);
        if (parts.size() != 3) throw NumberingError("--seed needs three comma-separated face ids");
        s = {parts[0], parts[1], parts[2]};
      }
      Numbering N = numbering(X, rule, s, static_cast<std::size_t>(count));
      std::string text;
      if (ctx.format == "json") {
        nlohmann::json j;
        j["seed"] = N.seed;
        j["cells"] = N.cells;
        j["stopped_at_boundary"] = N.stopped_at_boundary;
        j["command"] = ctx.command;
        text = j.dump(2) + "\n";
      } else {
        text = "seed: " + s[0] + " " + s[1] + " " + s[2] + "\n";
        for (std::size_t i = 0; i < N.cells.size(); ++i) text += std::to_string(i) + " " + N.cells[i] + "\n";
        if (N.stopped_at_boundary) text += "stopped at patch boundary\n";
      }
      emit(ctx, text);
      return 0;
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return 3;
    }
  }
  if (dist->parsed()) {
    try {
      TwoComplex X = load_complex_file(input);
      int d = 0;
      if (metric == "gallery") {
        d = gallery_distance(X, a_name, b_name);
      } else if (metric == "skeleton") {
        Graph G;
        for (const auto& v : X.vertices()) G.add_vertex(v);
        for (const auto& e : X.edges()) G.add_edge(e.from, e.to);
        d = graph_distance(G, a_name, b_name);
      } else {
        Graph G = dual_kind == "nerve" ? build_nerve(X).one_skeleton() : quadrize(X).one_skeleton();
        auto resolve = [&](const std::string& name) {
          if (G.find(name)) return name;
          if (G.find(quad_face_name(name))) return quad_face_name(name);
          return quad_vertex_name(name);
        };
        d = graph_distance(G, resolve(a_name), resolve(b_name));
      }
      if (ctx.format == "json")
        emit(ctx, nlohmann::json{{"distance", d}, {"metric", metric}, {"command", ctx.command}}.dump() + "\n");
      else
        emit(ctx, std::to_string(d) + "\n");
      return 0;
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return 3;
    }
  }
  if (trans->parsed()) {
    std::optional<FlatCertificate> cert;
    std::string cert_out = ctx.out_path;
    ctx.out_path.clear();
    int status = report_step(ctx, input, [&] {
      TwoComplex X = load_complex_file(input);
      auto result = translate_subcomplex(X, parse_certificate(read_file(cert_path)), dx, dy);
      cert = result.certificate;
      return result.report;
    });
    if (cert && !cert_out.empty()) write_file(cert_out, serialize(*cert));
    return status;
  }
  if (rep->parsed()) {
    try {
      std::string text = read_file(input);
      auto first = text.find_first_not_of(" \t\r\n");
      CheckReport r = first != std::string::npos && text[first] == '{' ? parse_report_json(text) : parse_report_text(text);
      emit(ctx, render(ctx, r));
      return exit_status(r.verdict);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return 3;
    }
  }
  err << app.help();
  return 3;
}

}  // namespace smallcancel
