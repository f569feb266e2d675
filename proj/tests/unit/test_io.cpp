#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bsym/error.hpp"
#include "bsym/io.hpp"

using namespace bsym;
using bsym::io::json;

TEST_CASE("rationals and matrices round trip") {
  const auto r = Rational::parse("-7/3");
  CHECK(io::to_json(r) == "-7/3");
  CHECK(io::rational_from_json(io::to_json(r)) == r);
  CHECK(io::rational_from_json(json(4)) == Rational(4));
  CHECK_THROWS_AS(io::rational_from_json(json(1.5)), ParseError);

  const auto m = RationalMatrix::from_rows({{1, Rational::parse("1/2")}, {0, -3}});
  CHECK(io::matrix_from_json(io::to_json(m)) == m);
  CHECK_THROWS_AS(io::matrix_from_json(json::array()), ParseError);
  CHECK_THROWS_AS(io::matrix_from_json(json::parse(R"([["1","2"],["3"]])")), PreconditionError);
}

TEST_CASE("polytope documents") {
  const auto doc = json::parse(R"({"vertices": [["0","0"],["1","0"],["0","1"]]})");
  const auto pts = io::polytope_vertices_from_json(doc);
  const auto p = facet_enumeration(pts);
  const auto out = io::polytope_to_json(p);
  CHECK(out["convention"] == "normal.x <= offset");
  CHECK(out["facets"].size() == 3);
  CHECK(out["dimension"] == 2);
  CHECK(out["facets"][0]["vertices"].is_array());
  CHECK(io::polytope_vertices_from_json(out) == pts);
  CHECK_THROWS_AS(io::polytope_vertices_from_json(json::object()), ParseError);
}

TEST_CASE("matrix group documents") {
  const auto doc = io::read_json_file(BSYM_DATA_DIR "/c6_paper.json");
  const auto entry = io::matrix_group_from_json(doc);
  CHECK(entry.name == "c6-paper");
  REQUIRE(entry.generators.size() == 1);
  CHECK(entry.generators[0] == c6_birkhoff_generator());
  CHECK(entry.group_order == std::optional<std::size_t>(6));
  CHECK(build_catalog_entry(entry).order() == 6);

  const auto again = io::matrix_group_from_json(io::matrix_group_to_json(entry));
  CHECK(again.generators == entry.generators);

  CHECK_THROWS_AS(io::matrix_group_from_json(json::parse(R"({"dim": 2})")), ParseError);
  CHECK_THROWS_AS(io::matrix_group_from_json(json::parse(R"({"dim": 3, "generators": [[["1","0"],["0","1"]]]})")),
                  ParseError);
}

TEST_CASE("alpha files") {
  const auto p = io::parse_alpha_text("# identity of B_3 swapped\n1\n0\n2\n\n3\n4\n5\n");
  CHECK(p == Permutation({1, 0, 2, 3, 4, 5}));
  CHECK_THROWS_AS(io::parse_alpha_text("0\n0\n"), ParseError);
  CHECK_THROWS_AS(io::parse_alpha_text("0\nx\n"), ParseError);
  CHECK_THROWS_AS(io::parse_alpha_text("0 1\n"), ParseError);
}

TEST_CASE("files") {
  CHECK_THROWS_AS(io::read_file("/nonexistent/file"), PreconditionError);
  CHECK(io::images_json(Permutation({2, 0, 1})) == json::parse("[2,0,1]"));
}
