// Copyright (c) ctlspec contributors.
// SPDX-License-Identifier: Apache-2.0

#include "ctlspec/parser.hpp"

#include <string>

#include "doctest.h"
#include "fixtures.hpp"

using namespace ctlspec;
using namespace ctlspec::testing;

TEST_CASE("relators normalize to nonpositivity form") {
  CHECK(to_string(pc("x1 <= 3")) == "-3 + X1 <= 0");
  CHECK(to_string(pc("x1 < 3")) == "-3 + X1 < 0");
  CHECK(to_string(pc("x1 >= 3")) == "3 - X1 <= 0");
  CHECK(to_string(pc("x1 > 3")) == "3 - X1 < 0");
  CHECK(to_string(pc("2*x1 + 3 <= x2 - 1")) == "4 + 2*X1 - X2 <= 0");
}

TEST_CASE("equations expand to two inequations") {
  Constraint c = pc("x2 = x1 + 1");
  CHECK(c.size() == 2);
  CHECK(equivalent(c, pc("x2 - x1 - 1 <= 0, x1 + 1 - x2 <= 0")));
}

TEST_CASE("rational coefficients clear to integers") {
  CHECK(to_string(pc("1/2*x1 <= 1/3")) == "-2 + 3*X1 <= 0");
  CHECK(to_string(pc("x1 + 2/4*x2 >= 0")) == "-2*X1 - X2 <= 0");
}

TEST_CASE("signs, repetitions and true") {
  CHECK(to_string(pc("-x1 + x1 <= 1")) == "true");
  CHECK(pc("true").is_true());
  CHECK(pc("0 < 1").is_true());
  CHECK(pc("1 < 0").is_false());
  CHECK(to_string(pc("- x1 + 2 <= 0")) == "2 - X1 <= 0");
  // The '*' in a coefficient factor is optional.
  CHECK(to_string(pc("2 x1 <= 1")) == "-1 + 2*X1 <= 0");
}

TEST_CASE("constraint parse errors carry positions") {
  CHECK_THROWS_AS(pc("x9 <= 0"), ParseError);
  CHECK_THROWS_AS(pc("x1 <== 0"), ParseError);
  CHECK_THROWS_AS(pc("x1 <= 0 ;"), ParseError);
  CHECK_THROWS_AS(pc("x1 <= 1/0"), ParseError);
  try {
    pc("x1 <= 0, bogus <= 0");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 1);
    CHECK(e.column == 10);
  }
}

TEST_CASE("full system specification") {
  SystemSpec spec = parse_spec(
      "// counters from the worked example\n"
      "system counters;\n"
      "vars x1, x2;\n"
      "init x1 <= 0, x2 = 0;\n"
      "trans t1: x1 >= 1, x1' = x1, x2' = x2 - 1;\n"
      "trans t2: x1 <= 2, x1' = x1, x2' = x2 + 1;\n"
      "elem negative: x2 < 0;\n"
      "prop not(eu(true, negative));\n");
  CHECK(spec.name == "counters");
  REQUIRE(spec.schema.names == std::vector<std::string>{"x1", "x2"});
  REQUIRE(spec.inits.size() == 1);
  CHECK(equivalent(spec.inits[0], pc("x1 <= 0, x2 <= 0, -x2 <= 0")));
  REQUIRE(spec.transitions.size() == 2);
  CHECK(spec.transitions[0].name == "t1");
  // Primed variables land after the state block: x1' -> 2, x2' -> 3.
  CHECK(equivalent(spec.transitions[0].relation,
                   pc("1 - x1 <= 0, x3 - x1 = 0, x4 - x2 + 1 = 0")));
  CHECK(equivalent(spec.transitions[1].relation,
                   pc("x1 - 2 <= 0, x3 - x1 = 0, x4 - x2 - 1 = 0")));
  REQUIRE(spec.elems.size() == 1);
  CHECK(spec.elems[0].name == "negative");
  CHECK(equivalent(spec.elems[0].cond, pc("x2 < 0")));
  CHECK(to_string(spec.property) == "not(eu(true,negative))");
}

TEST_CASE("multiple init sections conjoin as alternatives") {
  SystemSpec spec = parse_spec(
      "system s; vars x1;\n"
      "init x1 = 0;\n"
      "init x1 = 5;\n"
      "trans t: x1' = x1 + 1;\n"
      "prop ef(true);\n");
  REQUIRE(spec.inits.size() == 2);
  CHECK(equivalent(spec.inits[1], pc("x1 = 5")));
}

TEST_CASE("spec parse errors") {
  CHECK_THROWS_AS(parse_spec(""), ParseError);
  CHECK_THROWS_AS(parse_spec("system s; vars x1, x1; init x1 = 0; "
                             "trans t: x1' = x1; prop true;"),
                  ParseError);
  CHECK_THROWS_AS(parse_spec("system s; vars x1; trans t: x1' = x1; "
                             "prop true;"),
                  ParseError);
  CHECK_THROWS_AS(parse_spec("system s; vars x1; init x1 = 0; prop true;"),
                  ParseError);
  CHECK_THROWS_AS(parse_spec("system s; vars x1; init x1 = 0; "
                             "trans t: x1' = x1; prop maybe(true);"),
                  ParseError);
  CHECK_THROWS_AS(parse_spec("system s; vars x1; init x1 = 0; "
                             "trans t: x1' = x1; prop true; extra"),
                  ParseError);
  // Primed variables are transition-local.
  CHECK_THROWS_AS(parse_spec("system s; vars x1; init x1' = 0; "
                             "trans t: x1' = x1; prop true;"),
                  ParseError);
}

TEST_CASE("ctl grammar inside prop") {
  SystemSpec spec = parse_spec(
      "system s; vars x1; init x1 = 0; trans t: x1' = x1;\n"
      "elem p: x1 <= 0;\n"
      "elem q: x1 >= 0;\n"
      "prop and(not(ex(p)), eu(af(q), eg(ef(true))));\n");
  CHECK(to_string(spec.property) ==
        "and(not(ex(p)),eu(af(q),eg(ef(true))))");
}

TEST_CASE("missing file reports a parse error") {
  CHECK_THROWS_AS(parse_spec_file("/nonexistent/path.spec"), ParseError);
}
