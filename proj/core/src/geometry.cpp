#include "pursuit/geometry.hpp"

#include <algorithm>

#include "pursuit/error.hpp"

namespace pursuit::geometry {

Rational parse_rational(const std::string& text) {
  try {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(boost::multiprecision::cpp_int(text));
    boost::multiprecision::cpp_int num(text.substr(0, slash));
    boost::multiprecision::cpp_int den(text.substr(slash + 1));
    if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + text + "'");
    return Rational(num, den);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "bad rational '" + text + "'");
  }
}

std::string format_rational(const Rational& r) {
  auto num = boost::multiprecision::numerator(r);
  auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

int orientation(const Point& a, const Point& b, const Point& c) {
  Rational cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return cross > 0 ? 1 : (cross < 0 ? -1 : 0);
}

bool on_segment(const Point& a, const Point& b, const Point& p) {
  if (orientation(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
  int o1 = orientation(a, b, c), o2 = orientation(a, b, d);
  int o3 = orientation(c, d, a), o4 = orientation(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return on_segment(a, b, c) || on_segment(a, b, d) || on_segment(c, d, a) || on_segment(c, d, b);
}

bool segments_cross_properly(const Point& a, const Point& b, const Point& c, const Point& d) {
  return orientation(a, b, c) * orientation(a, b, d) < 0 && orientation(c, d, a) * orientation(c, d, b) < 0;
}

std::optional<PolygonViolation> validate_simple_polygon(const Polygon& p) {
  const int n = p.size();
  if (n < 3) throw Error(ErrorCode::TooFewVertices, "polygon needs at least 3 vertices");
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (p.at(i) == p.at(j)) return PolygonViolation{"repeated vertex", i, j};
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Point &a = p.at(i), &b = p.at(i + 1), &c = p.at(j), &d = p.at(j + 1);
      const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (!adjacent) {
        if (segments_intersect(a, b, c, d)) return PolygonViolation{"edges intersect", i, j};
        continue;
      }
      // Adjacent edges share one endpoint; they may not overlap beyond it.
      const Point& shared = (j == i + 1) ? b : a;
      const Point& far_i = (j == i + 1) ? a : b;
      const Point& far_j = (j == i + 1) ? d : c;
      if (orientation(shared, far_i, far_j) == 0) {
        bool overlap = on_segment(shared, far_i, far_j) || on_segment(shared, far_j, far_i);
        if (overlap) return PolygonViolation{"adjacent edges overlap", i, j};
      }
    }
  }
  return std::nullopt;
}

Location locate(const Polygon& p, const Point& q) {
  const int n = p.size();
  for (int i = 0; i < n; ++i) {
    if (on_segment(p.at(i), p.at(i + 1), q)) return Location::Boundary;
  }
  // Crossing number with a rightward ray; half-open rule on y.
  bool inside = false;
  for (int i = 0; i < n; ++i) {
    const Point &a = p.at(i), &b = p.at(i + 1);
    if ((a.y > q.y) != (b.y > q.y)) {
      Rational x_at = a.x + (q.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (x_at > q.x) inside = !inside;
    }
  }
  return inside ? Location::Inside : Location::Outside;
}

bool vertices_see_each_other(const Polygon& p, int i, int j) {
  const int n = p.size();
  if (i == j) return true;
  if ((i + 1) % n == j || (j + 1) % n == i) return true;
  const Point &a = p.at(i), &b = p.at(j);
  for (int e = 0; e < n; ++e) {
    if (segments_cross_properly(a, b, p.at(e), p.at(e + 1))) return false;
  }
  // Boundary contacts along ab are polygon vertices on the segment; between
  // consecutive contacts the open piece is wholly inside, outside, or on an edge.
  std::vector<Rational> params{Rational(0), Rational(1)};
  const bool use_x = a.x != b.x;
  for (int k = 0; k < n; ++k) {
    if (k == i || k == j) continue;
    const Point& v = p.at(k);
    if (on_segment(a, b, v)) params.push_back(use_x ? (v.x - a.x) / (b.x - a.x) : (v.y - a.y) / (b.y - a.y));
  }
  std::sort(params.begin(), params.end());
  for (std::size_t k = 0; k + 1 < params.size(); ++k) {
    Rational t = (params[k] + params[k + 1]) / 2;
    Point mid{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
    if (locate(p, mid) == Location::Outside) return false;
  }
  return true;
}

Graph visibility_graph(const Polygon& p) {
  if (auto violation = validate_simple_polygon(p)) {
    throw Error(ErrorCode::InvalidPolygon, violation->reason + " (" + std::to_string(violation->first) + ", " +
                                               std::to_string(violation->second) + ")");
  }
  EdgeList edges;
  for (int i = 0; i < p.size(); ++i) {
    for (int j = i + 1; j < p.size(); ++j) {
      if (vertices_see_each_other(p, i, j)) edges.emplace_back(i, j);
    }
  }
  return Graph(p.size(), edges);
}

}  // namespace pursuit::geometry
