#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fibecc/finite_field.hpp"

namespace fibecc {

/// Short Weierstrass curve y^2 = x^3 + ax + b over F_p with a nonzero
/// discriminant.
class CurveParams {
 public:
  /// Throws NotPrime or SingularCurve.
  CurveParams(std::uint64_t p, std::uint64_t a, std::uint64_t b);

  const PrimeModulus& modulus() const noexcept { return p_; }
  std::uint64_t p() const noexcept { return p_.value(); }
  std::uint64_t a() const noexcept { return a_; }
  std::uint64_t b() const noexcept { return b_; }

  friend bool operator==(const CurveParams&, const CurveParams&) = default;

 private:
  PrimeModulus p_;
  std::uint64_t a_;
  std::uint64_t b_;
};

/// validate_curve: same as the constructor, named for call sites that read
/// better as a check.
CurveParams validate_curve(std::uint64_t p, std::uint64_t a, std::uint64_t b);

/// Either the point at infinity O or an affine (x, y).
///
/// Ordering is by (x, y) with O after every affine point.
class Point {
 public:
  /// Default-constructed points are O.
  Point() = default;
  Point(std::uint64_t x, std::uint64_t y) : xy_(Coords{x, y}) {}

  static Point infinity() { return Point{}; }

  bool is_infinity() const noexcept { return !xy_.has_value(); }
  std::uint64_t x() const { return xy_.value().x; }
  std::uint64_t y() const { return xy_.value().y; }

  friend bool operator==(const Point&, const Point&) = default;
  friend std::strong_ordering operator<=>(const Point& lhs, const Point& rhs);

 private:
  struct Coords {
    std::uint64_t x;
    std::uint64_t y;
    friend bool operator==(const Coords&, const Coords&) = default;
  };
  std::optional<Coords> xy_;
};

bool is_on_curve(const CurveParams& curve, const Point& point);

Point negate(const CurveParams& curve, const Point& point);

/// Chord-and-tangent addition. Throws PointNotOnCurve for off-curve inputs.
Point add(const CurveParams& curve, const Point& lhs, const Point& rhs);

/// multiple * point by double-and-add.
Point scalar_mul(const CurveParams& curve, std::uint64_t multiple, const Point& point);

inline constexpr std::uint64_t kDefaultEnumerationLimit = 10'000;

/// Every point of the curve, affine points ascending by (x, y), then O.
/// Throws CurveTooLarge when p exceeds `limit`.
std::vector<Point> enumerate_points(const CurveParams& curve,
                                    std::uint64_t limit = kDefaultEnumerationLimit);

/// Least m >= 1 with m * point = O.
std::uint64_t order_of_point(const CurveParams& curve, const Point& point);

// Text forms: "O" or "(x,y)"; curves as "p=<int> a=<int> b=<int>".
std::string format_point(const Point& point);
Point parse_point(std::string_view text);
std::string format_curve(const CurveParams& curve);

}  // namespace fibecc
