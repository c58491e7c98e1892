#include <doctest.h>

#include <string>

#include "polyform/json_io.hpp"

using namespace polyform;

namespace {

ErrorCode multiset_error(const std::string& text) {
  try {
    parse_multiset(text);
  } catch (const Error& e) {
    return e.code();
  }
  throw std::logic_error("parse unexpectedly succeeded");
}

}  // namespace

TEST_CASE("multiset wire format round trip") {
  PolygonMultiset m = parse_multiset(R"({"polygons": {"3": 4, "4": 1}})");
  CHECK(m.counts == std::map<Int, Int>{{3, 4}, {4, 1}});
  CHECK(canonical_json(m).dump() == R"({"polygons":{"3":4,"4":1}})");

  // keys are numeric, so distinct spellings of one degree accumulate
  PolygonMultiset padded = parse_multiset(R"({"polygons": {"4": 2, "04": 3}})");
  CHECK(padded.counts == std::map<Int, Int>{{4, 5}});
}

TEST_CASE("multiset parse failures carry the parse error code") {
  CHECK(multiset_error("not json at all") == ErrorCode::ParseError);
  CHECK(multiset_error(R"({"faces": {"3": 4}})") == ErrorCode::ParseError);
  CHECK(multiset_error(R"({"polygons": []})") == ErrorCode::ParseError);
  CHECK(multiset_error(R"({"polygons": {"three": 4}})") ==
        ErrorCode::ParseError);
  CHECK(multiset_error(R"({"polygons": {"3": 1.5}})") == ErrorCode::ParseError);
  CHECK(multiset_error(R"({"polygons": {"3x": 4}})") == ErrorCode::ParseError);
  // structurally valid but semantically bad inputs get domain codes
  CHECK(multiset_error(R"({"polygons": {}})") == ErrorCode::EmptyMultiset);
  CHECK(multiset_error(R"({"polygons": {"2": 4}})") ==
        ErrorCode::DegreeBelowThree);
  CHECK(multiset_error(R"({"polygons": {"3": 0}})") ==
        ErrorCode::NonPositiveCount);
}

TEST_CASE("complex wire format") {
  TetComplex c = complex_from_json(nlohmann::json::parse(
      R"({"vertices": 5, "tets": [[0,1,2,3],[4,2,1,0]]})"));
  CHECK(c.vertex_count == 5);
  REQUIRE(c.tets.size() == 2);
  // validation sorts each tetrahedron
  CHECK(c.tets[1] == std::array<Int, 4>{0, 1, 2, 4});
  CHECK(!c.boundary_vertex_flags.has_value());

  TetComplex flagged = complex_from_json(nlohmann::json::parse(
      R"({"vertices": 4, "tets": [[0,1,2,3]],
          "boundary_vertex_flags": [true,true,true,true]})"));
  REQUIRE(flagged.boundary_vertex_flags.has_value());
  CHECK(flagged.boundary_vertex_flags->size() == 4);
}

TEST_CASE("complex parse failures") {
  auto bad = [](const char* text) {
    try {
      complex_from_json(nlohmann::json::parse(text));
    } catch (const Error& e) {
      return e.code();
    }
    throw std::logic_error("parse unexpectedly succeeded");
  };
  CHECK(bad(R"({"tets": [[0,1,2,3]]})") == ErrorCode::ParseError);
  CHECK(bad(R"({"vertices": 4, "tets": [[0,1,2]]})") == ErrorCode::ParseError);
  CHECK(bad(R"({"vertices": 4, "tets": [[0,1,2,"x"]]})") ==
        ErrorCode::ParseError);
  CHECK(bad(R"({"vertices": 4, "tets": [[0,1,2,3]],
               "boundary_vertex_flags": [1,1,1,1]})") == ErrorCode::ParseError);
  CHECK(bad(R"({"vertices": 6, "tets": [[0,1,2,3]]})") ==
        ErrorCode::InvalidComplex);
}
