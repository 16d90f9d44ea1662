#include <catch_amalgamated.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "smallcancel/cli.hpp"

namespace fs = std::filesystem;
using smallcancel::run;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("smallcancel_cli_" + std::to_string(std::rand()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("generate then check") {
  TempDir dir;
  const auto sq = dir / "sq.cx";
  REQUIRE(call({"generate", "--family", "square", "--radius", "3", "--out", sq}).code == 0);
  REQUIRE(fs::exists(sq));

  auto c = call({"check", "--cond", "C", "--p", "4", sq});
  CHECK(c.code == 0);
  CHECK(c.out.find("verdict: Holds") != std::string::npos);
  CHECK(c.out.find("input_sha256: " + smallcancel::sha256_hex(slurp(sq))) != std::string::npos);

  auto t = call({"check", "--cond", "T", "--q", "5", sq});
  CHECK(t.code == 1);
  CHECK(t.out.find("reduced link cycle of length 4") != std::string::npos);

  auto v = call({"validate", "--embedded", sq});
  CHECK(v.code == 0);
}

TEST_CASE("text and json reports carry the same fields") {
  TempDir dir;
  const auto hex = dir / "hex.cx";
  REQUIRE(call({"generate", "--family", "hexagonal", "--radius", "2", "--out", hex}).code == 0);
  auto text = call({"check", "--cond", "T", "--q", "4", hex});
  auto json = call({"check", "--cond", "T", "--q", "4", "--format", "json", hex});
  REQUIRE(json.code == text.code);
  auto j = nlohmann::json::parse(json.out);
  CHECK(text.out.find("verdict: " + j["verdict"].get<std::string>()) != std::string::npos);
  for (const auto& w : j["witnesses"]) CHECK(text.out.find("witness: " + w.get<std::string>()) != std::string::npos);
  CHECK(j.contains("input_sha256"));

  const auto saved = dir / "saved.json";
  REQUIRE(call({"check", "--cond", "C", "--p", "6", "--format", "json", "--out", saved, hex}).code == 0);
  auto again = call({"report", saved});
  CHECK(again.code == 0);
  CHECK(again.out.find("verdict: Holds") != std::string::npos);
}

TEST_CASE("detect-flat writes a certificate that translate accepts") {
  TempDir dir;
  const auto paper = dir / "paper.cx";
  const auto cert = dir / "paper.cert";
  REQUIRE(call({"generate", "--family", "paper-example", "--radius", "2", "--out", paper}).code == 0);
  auto r = call({"detect-flat", "--kind", "quasi", "--margin", "1", "--out", cert, paper});
  CHECK(r.code == 0);
  CHECK(slurp(cert).rfind("certificate quasi-flat-plane", 0) == 0);
  CHECK(call({"detect-flat", "--kind", "c6-plane", "--margin", "1", paper}).code == 1);

  const auto big = dir / "big.cx";
  const auto big_cert = dir / "big.cert";
  REQUIRE(call({"generate", "--family", "paper-example", "--radius", "5", "--out", big}).code == 0);
  std::string faces;
  for (int i = -3; i <= 3; ++i)
    for (int j = -3; j <= 3; ++j) faces += (faces.empty() ? "" : ",") + ("f_" + std::to_string(i) + "_" + std::to_string(j));
  REQUIRE(call({"detect-flat", "--kind", "quasi", "--margin", "2", "--faces", faces, "--out", big_cert, big}).code == 0);
  CHECK(call({"translate", "--dx", "2", "--dy", "0", big, big_cert}).code == 0);
  auto off = call({"translate", "--dx", "9", big, big_cert});
  CHECK(off.code == 3);
  CHECK(off.out.find("outside the patch") != std::string::npos);
}

TEST_CASE("numbering, distance and quotient") {
  TempDir dir;
  const auto sq = dir / "sq.cx";
  REQUIRE(call({"generate", "--family", "square", "--radius", "3", "--out", sq}).code == 0);
  auto n = call({"numbering", "--rule", "quasi", "--count", "5", "--seed", "f_0_0,f_1_0,f_0_1", sq});
  CHECK(n.code == 0);
  CHECK(n.out.find("0 f_0_0\n1 f_1_0\n2 f_0_1\n") != std::string::npos);
  CHECK(call({"numbering", "--rule", "quasi", "--seed", "f_0_0,f_1_1,f_0_1", sq}).code == 3);

  CHECK(call({"distance", sq, "f_0_0", "f_2_2"}).out == "2\n");
  auto dq = call({"distance", "--metric", "dual", "--dual", "quadrization", "--format", "json", sq, "f_0_0", "f_2_2"});
  CHECK(nlohmann::json::parse(dq.out)["distance"] == 4);

  auto q = call({"quotient", "--family", "square", "--m", "3", "--n", "3"});
  CHECK(q.code == 0);
  CHECK(q.out.rfind("complex square_q3x3", 0) == 0);
}

TEST_CASE("usage errors exit 3 with the grammar") {
  auto none = call({});
  CHECK(none.code == 3);
  CHECK(none.err.find("Subcommands:") != std::string::npos);
  auto bad = call({"check", "--cond", "X", "nowhere.cx"});
  CHECK(bad.code == 3);
  auto missing = call({"check", "--cond", "C", "--p", "4", "/nonexistent/file.cx"});
  CHECK(missing.code == 3);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("the installed binary behaves like run()") {
  TempDir dir;
  const std::string bin = SMALLCANCEL_CLI_PATH;
  const auto tri = dir / "tri.cx";
  CHECK(std::system((bin + " generate --family triangular --radius 2 --out " + tri).c_str()) == 0);
  int status = std::system((bin + " check --cond T --q 6 " + tri + " > /dev/null").c_str());
  CHECK(WEXITSTATUS(status) == 0);
  status = std::system((bin + " check --cond C --p 4 " + tri + " > /dev/null").c_str());
  CHECK(WEXITSTATUS(status) == 1);
  status = std::system((bin + " frobnicate 2> /dev/null").c_str());
  CHECK(WEXITSTATUS(status) == 3);
}
