#include <doctest.h>

#include "polyform/external.hpp"

using namespace polyform;

TEST_CASE("least edge count, independent oracle") {
  // smallest E with 2E >= 3V, found by counting up
  auto oracle = [](Int v) {
    Int e = 0;
    while (2 * e < 3 * v) ++e;
    return e;
  };
  CHECK(e_min(4) == 6);
  CHECK(e_min(5) == 8);
  CHECK(e_min(8) == 12);
  CHECK(e_min(9) == 14);
  for (Int v = 4; v <= 200; ++v) CHECK(e_min(v) == oracle(v));
  CHECK_THROWS_AS(e_min(3), Error);
}

TEST_CASE("external profile of reference shapes") {
  ExternalProfile cube = external_profile(8, 6);
  CHECK(cube.edge_count == 12);
  CHECK(cube.face_count == 6);
  CHECK(cube.angle_units == 12);
  CHECK(cube.triangulated_faces == 12);
  CHECK(cube.fullness == 36);

  ExternalProfile tet = external_profile(4, 0);
  CHECK(tet.edge_count == 6);
  CHECK(tet.face_count == 4);
  CHECK(tet.angle_units == 4);

  ExternalProfile dodeca = external_profile(20, 24);
  CHECK(dodeca.edge_count == 30);
  CHECK(dodeca.face_count == 12);

  CHECK_THROWS_AS(external_profile(8, -1), Error);
  CHECK_THROWS_AS(external_profile(8, 7), Error);
  CHECK_THROWS_AS(external_profile(3, 0), Error);
}

TEST_CASE("bounds at fixed vertex count") {
  ExternalBounds b8 = external_bounds(8);
  CHECK(b8.e_min == 12);
  CHECK(b8.e_max == 18);
  CHECK(b8.f_min == 6);
  CHECK(b8.f_max == 12);
  CHECK(b8.s_max == 6);
  CHECK(b8.combo_count == 7);

  CHECK(external_bounds(5).s_max == 1);
  CHECK(external_bounds(5).combo_count == 2);
  CHECK(external_bounds(7).s_max == 4);

  for (Int v = 4; v <= 200; ++v) {
    ExternalBounds b = external_bounds(v);
    if (v % 2 == 0) {
      CHECK(b.s_max == 3 * v / 2 - 6);
      CHECK(b.f_min == v / 2 + 2);
    } else {
      CHECK(b.s_max == (3 * v - 13) / 2);
      CHECK(b.f_min == (v + 5) / 2);
    }
    CHECK(b.combo_count == b.s_max + 1);
    // endpoints attained
    CHECK(external_profile(v, 0).edge_count == b.e_max);
    CHECK(external_profile(v, b.s_max).edge_count == b.e_min);
    CHECK(external_profile(v, b.s_max).face_count == b.f_min);
  }
}

TEST_CASE("flatness series walks from flattest to simplicial") {
  auto six = flatness_series(6);
  REQUIRE(six.size() == 4);
  CHECK(six[0] == FlatnessStep{3, 9, 5});
  CHECK(six[1] == FlatnessStep{2, 10, 6});
  CHECK(six[2] == FlatnessStep{1, 11, 7});
  CHECK(six[3] == FlatnessStep{0, 12, 8});

  auto four = flatness_series(4);
  REQUIRE(four.size() == 1);
  CHECK(four[0] == FlatnessStep{0, 6, 4});

  auto seven = flatness_series(7);
  REQUIRE(seven.size() == 5);
  CHECK(seven.back() == FlatnessStep{0, 15, 10});

  for (Int v = 4; v <= 60; ++v) {
    auto series = flatness_series(v);
    ExternalBounds b = external_bounds(v);
    REQUIRE(static_cast<Int>(series.size()) == b.combo_count);
    for (const FlatnessStep& step : series) {
      ExternalProfile p = external_profile(v, step.flatness);
      CHECK(step.edge_count == p.edge_count);
      CHECK(step.face_count == p.face_count);
    }
  }
}

TEST_CASE("fullness bounds are the profile endpoints") {
  FullnessBounds m8 = m_bounds(8);
  CHECK(m8.m_min == 36);
  CHECK(m8.m_max == 60);
  FullnessBounds m5 = m_bounds(5);
  CHECK(m5.m_min == 26);
  CHECK(m5.m_max == 30);
  // tetrahedron admits exactly one shape
  CHECK(m_bounds(4).m_min == m_bounds(4).m_max);

  for (Int v = 4; v <= 200; ++v) {
    FullnessBounds mb = m_bounds(v);
    Int s_max = external_bounds(v).s_max;
    CHECK(mb.m_max == external_profile(v, 0).fullness);
    CHECK(mb.m_min == external_profile(v, s_max).fullness);
  }
}
