#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pursuit/error.hpp"
#include "pursuit/geometry.hpp"
#include "pursuit/verify.hpp"

using namespace pursuit;
using namespace pursuit::geometry;

namespace {

Polygon polygon(std::initializer_list<std::pair<int, int>> pts) {
  Polygon p;
  for (auto [x, y] : pts) p.vertices.push_back({Rational(x), Rational(y)});
  return p;
}

int missing_pairs(const Graph& g) {
  const int n = g.order();
  return n * (n - 1) / 2 - static_cast<int>(g.size());
}

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(format_rational(Rational(-6, 4)) == "-3/2");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
}

TEST_CASE("orientation and segment predicates") {
  const Point a{0, 0}, b{2, 0}, c{1, 1}, d{1, -1};
  CHECK(orientation(a, b, c) == 1);
  CHECK(orientation(a, b, d) == -1);
  CHECK(orientation(a, b, Point{4, 0}) == 0);
  CHECK(segments_cross_properly(a, b, c, d));
  CHECK(segments_intersect(a, b, Point{2, 0}, Point{3, 3}));
  CHECK_FALSE(segments_cross_properly(a, b, Point{2, 0}, Point{3, 3}));
  CHECK(on_segment(a, b, Point{1, 0}));
}

TEST_CASE("simple polygon validation") {
  CHECK_FALSE(validate_simple_polygon(polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}})).has_value());
  const auto bowtie = validate_simple_polygon(polygon({{0, 0}, {2, 2}, {2, 0}, {0, 2}}));
  REQUIRE(bowtie.has_value());
  CHECK(bowtie->first == 0);
  CHECK(bowtie->second == 2);
  CHECK(validate_simple_polygon(polygon({{0, 0}, {1, 0}, {1, 0}, {0, 1}})).has_value());
  CHECK_THROWS_AS(validate_simple_polygon(polygon({{0, 0}, {1, 0}})), Error);
}

TEST_CASE("visibility of convex polygons is complete") {
  for (int n = 3; n <= 9; ++n) {
    const Graph g = visibility_graph(verify::convex_polygon(n));
    CHECK(g.size() == static_cast<std::size_t>(n * (n - 1) / 2));
  }
  const Graph hex = visibility_graph(polygon({{0, 0}, {2, 0}, {3, 1}, {2, 2}, {0, 2}, {-1, 1}}));
  CHECK(missing_pairs(hex) == 0);
}

TEST_CASE("L-shaped hexagon") {
  const Polygon l = polygon({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}});
  const Graph g = visibility_graph(l);
  CHECK(g == oracle::visibility_graph(l));
  CHECK(missing_pairs(g) == 3);
  CHECK_FALSE(g.adjacent(1, 4));
  CHECK_FALSE(g.adjacent(2, 4));
  CHECK_FALSE(g.adjacent(2, 5));
  // The diagonal through the reflex corner only touches the boundary.
  CHECK(g.adjacent(1, 5));
  for (int i = 0; i < 6; ++i) CHECK(g.adjacent(i, (i + 1) % 6));
}

TEST_CASE("sight lines grazing reflex corners") {
  const Polygon p = polygon({{0, 0}, {4, 0}, {4, 2}, {2, 2}, {2, 4}, {0, 4}});
  CHECK(visibility_graph(p) == oracle::visibility_graph(p));
  const Polygon comb = polygon({{0, 0}, {6, 0}, {6, 3}, {5, 3}, {4, 1}, {3, 3}, {2, 1}, {1, 3}, {0, 3}});
  CHECK(visibility_graph(comb) == oracle::visibility_graph(comb));
}

TEST_CASE("invalid polygons are rejected") {
  try {
    visibility_graph(polygon({{0, 0}, {2, 2}, {2, 0}, {0, 2}}));
    FAIL("bowtie accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidPolygon);
  }
}

TEST_CASE("random star polygons match the reference") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const int n = 4 + static_cast<int>(seed % 9);
    const Polygon p = verify::random_star_polygon(n, seed);
    REQUIRE_FALSE(validate_simple_polygon(p).has_value());
    CHECK(visibility_graph(p) == oracle::visibility_graph(p));
  }
}

TEST_CASE("point location") {
  const Polygon sq = polygon({{0, 0}, {2, 0}, {2, 2}, {0, 2}});
  CHECK(locate(sq, Point{1, 1}) == Location::Inside);
  CHECK(locate(sq, Point{2, 1}) == Location::Boundary);
  CHECK(locate(sq, Point{3, 1}) == Location::Outside);
}
