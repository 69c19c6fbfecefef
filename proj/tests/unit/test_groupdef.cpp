#include <catch2/catch_amalgamated.hpp>

#include "psik/catalog.hpp"
#include "psik/groupdef.hpp"
#include "psik/psi.hpp"

using namespace psik;

TEST_CASE("parse a cyclic definition", "[groupdef]") {
  const auto defs = parse_group_defs("group C6\nkind cyclic\nn 6\nend\n");
  REQUIRE(defs.size() == 1);
  CHECK(defs[0].name == "C6");
  CHECK(defs[0].kind == GroupDef::Kind::Cyclic);
  CHECK(defs[0].n == 6);

  const auto groups = build_group_defs(defs);
  REQUIRE(groups.size() == 1);
  CHECK(groups[0].order() == 6);
  CHECK(groups[0].name() == "C6");
}

TEST_CASE("semidirect document builds the order-78 group", "[groupdef]") {
  const std::string doc =
      "# Z13 : Z6 via x -> 4x\n"
      "group Z13\n"
      "kind cyclic\n"
      "n 13\n"
      "end\n"
      "group Z6\n"
      "kind cyclic\n"
      "n 6\n"
      "end\n"
      "group F\n"
      "kind semidirect\n"
      "normal Z13\n"
      "acting Z6\n"
      "actgens 1\n"
      "act 1 0 4 8 12 3 7 11 2 6 10 1 5 9\n"
      "end\n";
  const auto groups = load_groups_document(doc);
  REQUIRE(groups.size() == 3);
  CHECK(groups[2].order() == 78);
  CHECK(order_spectrum(groups[2]).counts == order_spectrum(catalog("Z13:Z6")).counts);
}

TEST_CASE("perm and product and table kinds", "[groupdef]") {
  const std::string doc =
      "group S3\n"
      "kind perm\n"
      "degree 3\n"
      "gen 1 0 2\n"
      "gen 1 2 0\n"
      "end\n"
      "group Z5\n"
      "kind cyclic\n"
      "n 5\n"
      "end\n"
      "group P\n"
      "kind product\n"
      "factors S3 Z5\n"
      "end\n"
      "group T\n"
      "kind table\n"
      "row 0 1\n"
      "row 1 0\n"
      "end\n";
  const auto groups = load_groups_document(doc);
  REQUIRE(groups.size() == 4);
  CHECK(groups[0].order() == 6);
  CHECK(groups[2].order() == 30);
  CHECK(groups[3].order() == 2);
}

TEST_CASE("located parse errors", "[groupdef]") {
  auto line_of = [](const std::string& doc) {
    try {
      parse_group_defs(doc);
    } catch (const ParseError& e) {
      return e.line;
    }
    return -1;
  };

  CHECK(line_of("group A\nkind cyclic\nn 6\nend\ngroup A\nkind cyclic\nn 2\nend\n") == 5);
  CHECK(line_of("junk\n") == 1);
  CHECK(line_of("group A\nkind nosuch\n") == 2);
  CHECK(line_of("group A\nkind cyclic\nn six\nend\n") == 3);
  CHECK(line_of("group A\nkind cyclic\nn 6\n") == 3);   // missing end
  CHECK(line_of("group P\nkind product\nfactors Zx Zy\nend\n") == 3);  // unresolved
  CHECK(line_of("group A\nkind cyclic\nn 6\nend\nend\n") == 5);
  CHECK(line_of("group A\nn 6\nend\n") == 3);  // no kind

  // Constructor preconditions surface with the definition's line.
  const std::string bad_action =
      "group Z5\nkind cyclic\nn 5\nend\n"
      "group Z2\nkind cyclic\nn 2\nend\n"
      "group X\nkind semidirect\nnormal Z5\nacting Z2\nactgens 1\nact 1 1 2 3 4 0\nend\n";
  try {
    load_groups_document(bad_action);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 9);  // the "group X" header
    CHECK(std::string(e.what()).find("automorphism") != std::string::npos);
  }
}

TEST_CASE("parsing is total on mangled documents", "[groupdef][property]") {
  const std::string base =
      "group A\nkind cyclic\nn 6\nend\ngroup B\nkind table\nrow 0 1\nrow 1 0\nend\n";
  // Truncations and single-character corruptions either parse or throw
  // ParseError; nothing else may escape.
  for (std::size_t cut = 0; cut <= base.size(); ++cut) {
    try {
      parse_group_defs(base.substr(0, cut));
    } catch (const ParseError&) {
    }
  }
  for (std::size_t i = 0; i < base.size(); ++i) {
    std::string mangled = base;
    mangled[i] = '!';
    try {
      parse_group_defs(mangled);
    } catch (const ParseError&) {
    }
  }
  SUCCEED("no unexpected exception types");
}

TEST_CASE("table round-trip preserves the Cayley table", "[groupdef][property]") {
  for (const char* name : {"A5", "S3", "V4", "Z13:Z6", "H1"}) {
    const FiniteGroup g = catalog(name);
    const auto groups = load_groups_document(serialize_table_def(g));
    REQUIRE(groups.size() == 1);
    CHECK(groups[0] == g);
  }
}

TEST_CASE("definitions honor the build cap", "[groupdef]") {
  BuildLimits tight;
  tight.max_order = 10;
  CHECK_THROWS_AS(load_groups_document("group big\nkind cyclic\nn 50\nend\n", tight),
                  ParseError);
}
