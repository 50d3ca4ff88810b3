#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "support.hpp"

using namespace testing;

namespace {

ParseError parse_error_of(std::string_view text) {
  try {
    dsl::parse(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("no parse error for: " << text);
  return ParseError(0, 0, "");
}

}  // namespace

TEST_CASE("parses the six element fixture") {
  const dsl::Document doc = fixture("m6.dmp");
  REQUIRE(doc.algebras.size() == 1);
  const auto& d = doc.algebras[0];
  CHECK(d.name == "m6");
  CHECK(d.elements == std::vector<std::string>{"0", "a", "b", "c", "d", "1"});
  CHECK(d.order.size() == 8);
  REQUIRE(d.neg.has_value());
  CHECK(d.neg->size() == 3);
  CHECK_FALSE(d.g.has_value());
  const AlgebraPtr a = dsl::to_algebra(d);
  CHECK(a->size() == 6);
  CHECK(a->label(a->neg(*a->poset().find("a"))) == "d");
}

TEST_CASE("chains, comments and CRLF") {
  const std::string text =
      "# leading comment\r\n"
      "poset c3   # trailing comment\r\n"
      "elements 0 m 1\r\n"
      "order 0 < m < 1\r\n"
      "neg 0:1 m:m\r\n"
      "\r\n"
      "frame two\r\n"
      "points t1 t2\r\n"
      "rel t1 -> t2 ; t2 -> t2\r\n";
  const dsl::Document doc = dsl::parse(text);
  REQUIRE(doc.algebras.size() == 1);
  CHECK(doc.algebras[0].order == std::vector<NamePair>{{"0", "m"}, {"m", "1"}});
  REQUIRE(doc.frames.size() == 1);
  const Frame f = dsl::to_frame(doc.frames[0]);
  CHECK(f.size() == 2);
  CHECK(f.relation().pairs() == std::vector<std::pair<Element, Element>>{{0, 1}, {1, 1}});
}

TEST_CASE("operators and structures") {
  const TenseStructure s = fixture_structure("chain3_semi.dmp");
  CHECK(s.G().is_total());
  CHECK(s.algebra().label(s.G()(1)) == "0");
  const TenseStructure bare = dsl::to_structure(fixture("m6.dmp").algebras[0]);
  CHECK(bare.G().domain_size() == 0);
  CHECK(bare.H().domain_size() == 0);
  const TenseStructure partial = fixture_structure("chain3_partial.dmp");
  CHECK(partial.H().domain_size() == 2);
}

TEST_CASE("parse errors carry positions") {
  SUBCASE("empty input") {
    const ParseError e = parse_error_of("# nothing here\n\n");
    CHECK(e.line() == 1);
    CHECK(e.column() == 1);
  }
  SUBCASE("unknown element") {
    const ParseError e = parse_error_of("poset p\nelements 0 1\norder 0 < x\n");
    CHECK(e.line() == 3);
    CHECK(e.column() == 11);
    CHECK(std::string(e.what()).find("unknown element 'x'") != std::string::npos);
  }
  SUBCASE("shipped fixture") {
    const ParseError e = parse_error_of(fixture_text("parse_error.dmp"));
    CHECK(e.line() == 4);
    CHECK(e.column() == 11);
  }
  SUBCASE("orphan line") {
    const ParseError e = parse_error_of("elements 0 1\n");
    CHECK(std::string(e.what()).find("must follow a 'poset' line") != std::string::npos);
    const ParseError r = parse_error_of("poset p\nelements 0 1\nrel 0 -> 1\n");
    CHECK(r.line() == 3);
  }
  SUBCASE("duplicates") {
    parse_error_of("poset p\nelements 0 0\n");
    parse_error_of("poset p\nelements 0\nposet p\nelements 0\n");
    parse_error_of("frame f\npoints t t\n");
    parse_error_of("poset p\nelements 0 1\nop G 0:0 0:1\n");
  }
  SUBCASE("bad tokens") {
    const ParseError e = parse_error_of("poset p\nelements 0 1\norder 0 <= 1\n");
    CHECK(e.line() == 3);
    parse_error_of("poset p\nelements 0 1\nop K 0:0\n");
    parse_error_of("poset p\nelements 0 1\nneg 0 1\n");
    parse_error_of("poset p\nelements 0 1\nwobble 0\n");
    parse_error_of("frame f\npoints a b\nrel a > b\n");
    parse_error_of("poset p q\n");
  }
}

TEST_CASE("semantic errors are not parse errors") {
  const dsl::Document bad = fixture("m6_badneg.dmp");
  CHECK_THROWS_AS(dsl::to_algebra(bad.algebras[0]), DeMorganError);
  const dsl::Document noneg = dsl::parse("poset p\nelements 0 1\norder 0 < 1\n");
  CHECK_THROWS_AS(dsl::to_algebra(noneg.algebras[0]), Error);
  const dsl::Document cyc = dsl::parse("poset p\nelements 0 a 1\norder 0 < a < 1 ; a < 0\nneg 0:1 a:a\n");
  try {
    dsl::to_poset(cyc.algebras[0]);
    FAIL("cycle accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kAntisymmetryViolation);
  }
}

TEST_CASE("printing the shipped fixtures round trips") {
  for (const char* name : {"m6.dmp", "m6_id.dmp", "m6_badneg.dmp", "m2_id.dmp", "chain3_semi.dmp",
                           "chain3_partial.dmp", "frame_swap.dmp", "frame_nonserial.dmp"}) {
    INFO(name);
    const dsl::Document doc = fixture(name);
    CHECK(dsl::parse(dsl::print(doc)) == doc);
  }
}

TEST_CASE("printed text has the documented shape") {
  const std::string text = dsl::print(fixture("chain3_semi.dmp"));
  CHECK(text ==
        "poset chain3\n"
        "elements 0 m 1\n"
        "order 0 < m ; m < 1\n"
        "neg 0:1 m:m\n"
        "op G 0:0 m:0 1:1\n"
        "op H 0:0 m:m 1:1\n");
}

TEST_CASE("200 random documents round trip") {
  Generator gen(GeneratorConfig{.seed = 41, .max_size = 8});
  for (int i = 0; i < 200; ++i) {
    const dsl::Document doc = random_document(gen);
    const std::string text = dsl::print(doc);
    INFO(text);
    REQUIRE(dsl::parse(text) == doc);
    CHECK(dsl::print(dsl::parse(text)) == text);
  }
}

TEST_CASE("declarations rebuild the same algebra") {
  for (const auto& a : random_algebras_for_tests()) {
    const dsl::AlgebraDecl d = dsl::from_algebra("x", *a);
    CHECK(*dsl::to_algebra(d) == *a);
  }
}
