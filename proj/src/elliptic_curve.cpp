#include "fibecc/elliptic_curve.hpp"

#include <string>

#include "fibecc/errors.hpp"
#include "text_util.hpp"

namespace fibecc {
namespace {

std::uint64_t rhs_of(const CurveParams& c, std::uint64_t x) {
  const auto p = c.p();
  const auto x3 = mul_mod(mul_mod(x, x, p), x, p);
  return add_mod(add_mod(x3, mul_mod(c.a(), x, p), p), c.b(), p);
}

void require_on_curve(const CurveParams& c, const Point& pt) {
  if (!is_on_curve(c, pt)) {
    throw PointNotOnCurve(format_point(pt) + " is not on " + format_curve(c));
  }
}

// Group law without membership checks.
Point add_unchecked(const CurveParams& c, const Point& P, const Point& Q) {
  if (P.is_infinity()) return Q;
  if (Q.is_infinity()) return P;
  const auto p = c.p();
  if (P.x() == Q.x() && add_mod(P.y(), Q.y(), p) == 0) return Point::infinity();

  std::uint64_t slope;
  if (P.x() == Q.x()) {
    const auto num = add_mod(mul_mod(3, mul_mod(P.x(), P.x(), p), p), c.a(), p);
    slope = mul_mod(num, mod_inverse(static_cast<std::int64_t>(add_mod(P.y(), P.y(), p)), p), p);
  } else {
    const auto num = sub_mod(Q.y(), P.y(), p);
    const auto den = sub_mod(Q.x(), P.x(), p);
    slope = mul_mod(num, mod_inverse(static_cast<std::int64_t>(den), p), p);
  }
  const auto x3 = sub_mod(sub_mod(mul_mod(slope, slope, p), P.x(), p), Q.x(), p);
  const auto y3 = sub_mod(mul_mod(slope, sub_mod(P.x(), x3, p), p), P.y(), p);
  return {x3, y3};
}

}  // namespace

CurveParams::CurveParams(std::uint64_t p, std::uint64_t a, std::uint64_t b)
    : p_(p), a_(a % p), b_(b % p) {
  const auto a3 = mul_mod(mul_mod(a_, a_, p), a_, p);
  const auto disc = add_mod(mul_mod(4, a3, p), mul_mod(27, mul_mod(b_, b_, p), p), p);
  if (disc == 0) {
    throw SingularCurve("4a^3 + 27b^2 = 0 for " + format_curve(*this));
  }
}

CurveParams validate_curve(std::uint64_t p, std::uint64_t a, std::uint64_t b) {
  return {p, a, b};
}

std::strong_ordering operator<=>(const Point& lhs, const Point& rhs) {
  if (lhs.is_infinity() || rhs.is_infinity()) {
    return lhs.is_infinity() <=> rhs.is_infinity();
  }
  if (auto c = lhs.x() <=> rhs.x(); c != 0) return c;
  return lhs.y() <=> rhs.y();
}

bool is_on_curve(const CurveParams& curve, const Point& point) {
  if (point.is_infinity()) return true;
  const auto p = curve.p();
  if (point.x() >= p || point.y() >= p) return false;
  return mul_mod(point.y(), point.y(), p) == rhs_of(curve, point.x());
}

Point negate(const CurveParams& curve, const Point& point) {
  if (point.is_infinity()) return point;
  return {point.x(), point.y() == 0 ? 0 : curve.p() - point.y()};
}

Point add(const CurveParams& curve, const Point& lhs, const Point& rhs) {
  require_on_curve(curve, lhs);
  require_on_curve(curve, rhs);
  return add_unchecked(curve, lhs, rhs);
}

Point scalar_mul(const CurveParams& curve, std::uint64_t multiple, const Point& point) {
  require_on_curve(curve, point);
  Point result;
  Point addend = point;
  while (multiple != 0) {
    if (multiple & 1U) result = add_unchecked(curve, result, addend);
    multiple >>= 1U;
    if (multiple != 0) addend = add_unchecked(curve, addend, addend);
  }
  return result;
}

std::vector<Point> enumerate_points(const CurveParams& curve, std::uint64_t limit) {
  const auto p = curve.p();
  if (p > limit) {
    throw CurveTooLarge("p=" + std::to_string(p) + " exceeds enumeration limit " +
                        std::to_string(limit));
  }
  // Table of square roots: roots[v] lists every y with y^2 = v.
  std::vector<std::vector<std::uint64_t>> roots(p);
  for (std::uint64_t y = 0; y < p; ++y) roots[mul_mod(y, y, p)].push_back(y);

  std::vector<Point> points;
  for (std::uint64_t x = 0; x < p; ++x) {
    for (const auto y : roots[rhs_of(curve, x)]) points.emplace_back(x, y);
  }
  points.push_back(Point::infinity());
  return points;
}

std::uint64_t order_of_point(const CurveParams& curve, const Point& point) {
  require_on_curve(curve, point);
  std::uint64_t order = 1;
  for (Point acc = point; !acc.is_infinity(); acc = add_unchecked(curve, acc, point)) ++order;
  return order;
}

std::string format_point(const Point& point) {
  if (point.is_infinity()) return "O";
  return "(" + std::to_string(point.x()) + "," + std::to_string(point.y()) + ")";
}

Point parse_point(std::string_view text) {
  text = detail::trim(text);
  if (text == "O") return Point::infinity();
  if (text.size() < 5 || text.front() != '(' || text.back() != ')') {
    throw ParseError("malformed point '" + std::string(text) + "'");
  }
  const auto parts = detail::split(text.substr(1, text.size() - 2), ',');
  if (parts.size() != 2) throw ParseError("malformed point '" + std::string(text) + "'");
  return {detail::parse_int<std::uint64_t>(parts[0]), detail::parse_int<std::uint64_t>(parts[1])};
}

std::string format_curve(const CurveParams& curve) {
  return "p=" + std::to_string(curve.p()) + " a=" + std::to_string(curve.a()) +
         " b=" + std::to_string(curve.b());
}

}  // namespace fibecc
