#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

#include "pursuit/graph.hpp"

namespace pursuit::geometry {

/// Exact rational; always normalised (positive denominator, lowest terms).
using Rational = boost::multiprecision::cpp_rational;

struct Point {
  Rational x, y;
  friend bool operator==(const Point&, const Point&) = default;
};

Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& r);

/// Sign of the cross product (b - a) x (c - a): +1 left turn, -1 right, 0 collinear.
int orientation(const Point& a, const Point& b, const Point& c);
/// p lies on the closed segment ab.
bool on_segment(const Point& a, const Point& b, const Point& p);
/// Closed segments ab and cd share at least one point.
bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d);
/// Interiors cross at a single point interior to both segments.
bool segments_cross_properly(const Point& a, const Point& b, const Point& c, const Point& d);

struct Polygon {
  std::vector<Point> vertices;  // closing edge implied
  int size() const { return static_cast<int>(vertices.size()); }
  const Point& at(int i) const {
    const int n = size();
    return vertices[static_cast<std::size_t>(((i % n) + n) % n)];
  }
};

struct PolygonViolation {
  std::string reason;
  int first = -1;   // edge index (edge i joins vertex i and i+1) or vertex index
  int second = -1;
};

/// Empty optional when the chain is simple. Throws TooFewVertices.
std::optional<PolygonViolation> validate_simple_polygon(const Polygon& p);

enum class Location { Inside, Boundary, Outside };
Location locate(const Polygon& p, const Point& q);

/// Closed segment v_i v_j lies in the closed polygon.
bool vertices_see_each_other(const Polygon& p, int i, int j);

/// Throws InvalidPolygon when the chain is not simple.
Graph visibility_graph(const Polygon& p);

}  // namespace pursuit::geometry
