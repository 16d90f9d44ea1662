#include <catch_amalgamated.hpp>

#include "smallcancel/generators.hpp"
#include "smallcancel/io.hpp"
#include "smallcancel/report.hpp"

using namespace smallcancel;

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_AS(load_complex("vertex a\n"), ParseError);
  try {
    load_complex("complex x\nvertex a\nbogus line\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(load_complex("complex x\nvertex a b\n"), ParseError);
  CHECK_THROWS_AS(load_complex("complex x\nvertex a\nvertex b\nedge e a b\nface f e\n"), ParseError);
}

TEST_CASE("validation finds open and folded boundary words") {
  const char* open = "complex x\nvertex a\nvertex b\nvertex c\nedge e a b\nedge g b c\nface f +e +g\n";
  auto r = validate_complex(TwoComplex::build(parse_complex(open)), false);
  REQUIRE(r.verdict == Verdict::Violated);
  CHECK(r.witnesses.front().find("face f: boundary word is not a closed path") == 0);
  CHECK_THROWS_AS(load_complex(open), ValidationError);

  const char* folded = "complex x\nvertex a\nvertex b\nedge e a b\nface f +e -e\n";
  auto s = validate_complex(TwoComplex::build(parse_complex(folded)), false);
  REQUIRE(s.verdict == Verdict::Violated);
  CHECK(s.witnesses.front().find("immersion") != std::string::npos);
}

TEST_CASE("embeddedness is optional") {
  // a figure-eight boundary revisits its middle vertex
  const char* eight =
      "complex x\nvertex m\nvertex a\nvertex b\nedge e1 m a\nedge e2 a m\nedge e3 m b\nedge e4 b m\n"
      "face f +e1 +e2 +e3 +e4\n";
  auto X = TwoComplex::build(parse_complex(eight));
  CHECK(validate_complex(X, false).holds());
  CHECK(validate_complex(X, true).verdict == Verdict::Violated);
}

TEST_CASE("serialize and load round trip") {
  for (auto X : {generate_tiling(Family::Hexagonal, 2).complex, generate_paper_example(2).complex,
                 quotient_by_lattice(Family::Square, 3, 4).complex}) {
    std::string once = serialize(X);
    CHECK(serialize(load_complex(once)) == once);
  }
}

TEST_CASE("reports render to text and json with the same content") {
  CheckReport r = CheckReport::from_witnesses({"face f: something", "vertex v: other"});
  r.command = "smallcancel check";
  r.input_sha256 = "abc";
  r.timing_ms = 1.5;
  CheckReport j = parse_report_json(render_json(r));
  CheckReport t = parse_report_text(render_text(r));
  CHECK(j.verdict == Verdict::Violated);
  CHECK(j.witnesses == r.witnesses);
  CHECK(t.witnesses == r.witnesses);
  CHECK(j.command == t.command);
  CHECK(j.input_sha256 == t.input_sha256);
  CHECK(exit_status(Verdict::Holds) == 0);
  CHECK(exit_status(Verdict::Violated) == 1);
  CHECK(exit_status(Verdict::Inconclusive) == 2);
  CHECK(exit_status(Verdict::Error) == 3);
}

TEST_CASE("absorb keeps the worse verdict") {
  CheckReport r = CheckReport::holding();
  r.absorb(CheckReport::from_witnesses({"x"}), "A: ");
  CHECK(r.verdict == Verdict::Violated);
  CHECK(r.witnesses == std::vector<std::string>{"A: x"});
  r.absorb(CheckReport::error("boom"));
  CHECK(r.verdict == Verdict::Error);
  CHECK(r.witnesses.size() == 1);
}
