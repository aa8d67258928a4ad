#include <doctest.h>

#include <cmath>

#include "csgamma/problem.hpp"

using namespace csgamma;

TEST_CASE("parse a complete real problem file") {
  ProblemFile pf = ProblemFile::parse_text(R"({
    "space": {"dim": 2, "field": "real"},
    "measure": {"weights": [1.0, 2.0]},
    "vectors": {"x": [1, 0], "y": [3, -4]},
    "subspaces": {"diag": [[1, 1]]},
    "cones": {"quad": {"parts": [[[1, 0], [0, 1]]]}}
  })");
  CHECK(pf.space().dim() == 2);
  CHECK(pf.space().field() == Field::real);
  REQUIRE(pf.measure().has_value());
  CHECK(pf.measure()->weight(1) == 2.0);
  CHECK(pf.has_vector("x"));
  CHECK(!pf.has_vector("z"));
  CHECK(pf.vector("y")[1].real() == -4.0);
  CHECK(pf.subspace("diag").k() == 1);
  CHECK(pf.cone("quad").parts().size() == 1);
  CHECK(!pf.cones_embedded());
  CHECK_THROWS_AS(pf.vector("missing"), std::invalid_argument);
  CHECK_THROWS_AS(pf.subspace("missing"), std::invalid_argument);
  CHECK_THROWS_AS(pf.cone("diag"), std::invalid_argument);  // subspace name, not a cone
}

TEST_CASE("complex entries as [re, im] pairs") {
  ProblemFile pf = ProblemFile::parse_text(R"({
    "space": {"dim": 2, "field": "complex"},
    "vectors": {"x": [[0, 1], 2]}
  })");
  CHECK(pf.vector("x")[0] == Complex(0.0, 1.0));
  CHECK(pf.vector("x")[1] == Complex(2.0, 0.0));
}

TEST_CASE("gram matrices are validated on load") {
  CHECK_NOTHROW(ProblemFile::parse_text(R"({
    "space": {"dim": 2, "field": "real", "gram": [[2, 1], [1, 2]]}
  })"));
  CHECK_THROWS_AS(ProblemFile::parse_text(R"({
    "space": {"dim": 2, "field": "real", "gram": [[1, 2], [2, 1]]}
  })"),
                  ParseError);  // indefinite
}

TEST_CASE("complex cones load through the real embedding") {
  ProblemFile pf = ProblemFile::parse_text(R"({
    "space": {"dim": 1, "field": "complex"},
    "cones": {"c": {"parts": [[[[1, 1]]]]}}
  })");
  CHECK(pf.cones_embedded());
  CHECK(pf.cone_space().dim() == 2);
  CHECK(pf.cone_space().field() == Field::real);
  UnionCone c = pf.cone("c");
  // generator 1 + i becomes (1, 1) in the embedding
  Vector g = c.parts().front().unit_generator(0);
  CHECK(std::abs(g[0].real() - 1.0 / std::sqrt(2.0)) < 1e-14);
  CHECK(std::abs(g[1].real() - 1.0 / std::sqrt(2.0)) < 1e-14);
}

TEST_CASE("malformed files raise parse errors") {
  CHECK_THROWS_AS(ProblemFile::parse_text("not json"), ParseError);
  CHECK_THROWS_AS(ProblemFile::parse_text("[]"), ParseError);
  CHECK_THROWS_AS(ProblemFile::parse_text("{}"), ParseError);  // no space
  CHECK_THROWS_AS(ProblemFile::parse_text(R"({"space": {"dim": 0}})"), ParseError);
  CHECK_THROWS_AS(ProblemFile::parse_text(R"({"space": {"dim": 2, "field": "quaternion"}})"),
                  ParseError);
  // wrong lengths
  CHECK_THROWS_AS(ProblemFile::parse_text(R"({
    "space": {"dim": 2}, "vectors": {"x": [1, 2, 3]}
  })"),
                  ParseError);
  CHECK_THROWS_AS(ProblemFile::parse_text(R"({
    "space": {"dim": 2}, "measure": {"weights": [1]}
  })"),
                  ParseError);
  // NaN cannot be written in JSON; the literal fails to parse
  CHECK_THROWS_AS(ProblemFile::parse_text(R"({
    "space": {"dim": 1}, "vectors": {"x": [NaN]}
  })"),
                  ParseError);
  // overflow to infinity is caught by the finiteness check
  CHECK_THROWS_AS(ProblemFile::parse_text(R"({
    "space": {"dim": 1}, "vectors": {"x": [1e999]}
  })"),
                  ParseError);
  // complex entry in a real space
  CHECK_THROWS_AS(ProblemFile::parse_text(R"({
    "space": {"dim": 1, "field": "real"}, "vectors": {"x": [[1, 2]]}
  })"),
                  ParseError);
  // nonpositive weights
  CHECK_THROWS_AS(ProblemFile::parse_text(R"({
    "space": {"dim": 1}, "measure": {"weights": [-1]}
  })"),
                  ParseError);
  CHECK_THROWS_AS(ProblemFile::parse_file("/nonexistent/path.json"), ParseError);
}
