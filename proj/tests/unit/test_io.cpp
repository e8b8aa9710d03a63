#include <vector>

#include "betti/generators.hpp"
#include "betti/hochster.hpp"
#include "betti/io.hpp"
#include "doctest.h"

using namespace betti;

TEST_CASE("complex JSON round trip") {
  const std::vector<SimplicialComplex> samples{
      cross_polytope_boundary(3), stacked_cross_polytopal(3, 4, GluingPlan::random(7)), stacked_sphere(4, 9),
      clique_complex_multipartite(std::vector<int>{3, 3, 2}), cone_join(8, 3), point_set(3)};
  for (const auto& c : samples) {
    const auto text = write_complex_json(c);
    const auto doc = parse_complex_json(text);
    CHECK(doc.complex == c);
    CHECK(write_complex_json(doc.complex) == text);
    CHECK(doc.meta.is_null());
  }
  const auto doc = parse_complex_json(write_complex_json(cycle(4), {{"family", "cycle"}, {"seed", 3}}));
  CHECK(doc.meta["seed"] == 3);

  const auto a = parse_complex_json(R"({"n": 3, "facets": [[1, 2], [0, 1], [2, 0]]})").complex;
  const auto b = parse_complex_json(R"({"n": 3, "facets": [[0, 2], [2, 1], [1, 0]], "coloring": null})").complex;
  CHECK(write_complex_json(a) == write_complex_json(b));
  CHECK(write_complex_json(a) == "{\n  \"n\": 3,\n  \"coloring\": null,\n  \"facets\": [\n    [0, 1],\n    [0, 2],\n"
                                 "    [1, 2]\n  ]\n}\n");
}

TEST_CASE("complex JSON errors") {
  CHECK_THROWS_AS(parse_complex_json("{\"n\": 3, \"facets\": [[0, 1]"), ParseError);
  CHECK_THROWS_AS(parse_complex_json("[1, 2]"), ParseError);
  CHECK_THROWS_AS(parse_complex_json(R"({"facets": [[0]]})"), ParseError);
  CHECK_THROWS_AS(parse_complex_json(R"({"n": 2, "facets": [[0, 2]]})"), ParseError);
  CHECK_THROWS_AS(parse_complex_json(R"({"n": 2, "facets": [["a"]]})"), ParseError);
  CHECK_THROWS_AS(parse_complex_json(R"({"n": 4, "facets": [[0, 1], [2, 3]], "coloring": [0, 0, 1, 1]})"), ParseError);
  CHECK_THROWS_AS(read_complex_file("/nonexistent/complex.json"), ParseError);
}

TEST_CASE("Betti CSV round trip") {
  const auto table = graded_betti(stacked_cross_polytopal(3, 3, GluingPlan::path()), {.threads = 1});
  CHECK(parse_betti_csv(table.to_csv(), 9, 3, Field::gf2()) == table);
  CHECK_THROWS_AS(parse_betti_csv("i,j\n", 9, 3, Field::gf2()), ParseError);
  CHECK_THROWS_AS(parse_betti_csv("i,j,beta\n1;1;2\n", 9, 3, Field::gf2()), ParseError);
  CHECK_THROWS_AS(parse_betti_csv("i,j,beta\n1,7,2\n", 9, 3, Field::gf2()), ParseError);
}
