#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "fibecc/elliptic_curve.hpp"
#include "fibecc/errors.hpp"
#include "oracles.hpp"

using namespace fibecc;

namespace {

const CurveParams kPaper{47, 3, 41};

// Every nonsingular curve over the odd primes up to max_p.
std::vector<CurveParams> small_curves(std::uint64_t max_p) {
  std::vector<CurveParams> curves;
  for (std::uint64_t p = 3; p <= max_p; ++p) {
    if (!is_prime(p)) continue;
    for (std::uint64_t a = 0; a < p; ++a)
      for (std::uint64_t b = 0; b < p; ++b) {
        try {
          curves.emplace_back(p, a, b);
        } catch (const SingularCurve&) {
        }
      }
  }
  return curves;
}

}  // namespace

TEST(EllipticCurve, Validate) {
  EXPECT_NO_THROW(validate_curve(47, 3, 41));
  EXPECT_THROW(validate_curve(5, 0, 0), SingularCurve);
  EXPECT_NO_THROW(validate_curve(7, 1, 1));
  EXPECT_EQ((4 + 27) % 7, 3);
  EXPECT_THROW(validate_curve(49, 1, 1), NotPrime);
}

TEST(EllipticCurve, Membership) {
  EXPECT_TRUE(is_on_curve(kPaper, Point(2, 14)));
  EXPECT_TRUE(is_on_curve(kPaper, Point::infinity()));
  EXPECT_FALSE(is_on_curve(kPaper, Point(0, 0)));
  EXPECT_FALSE(is_on_curve(kPaper, Point(2 + 47, 14)));
}

TEST(EllipticCurve, Negate) {
  EXPECT_EQ(negate(kPaper, Point(45, 11)), Point(45, 36));
  EXPECT_EQ(negate(kPaper, Point::infinity()), Point::infinity());
  for (const auto& P : enumerate_points(kPaper)) EXPECT_EQ(negate(kPaper, negate(kPaper, P)), P);
}

TEST(EllipticCurve, AddBasics) {
  const Point P(2, 14);
  EXPECT_EQ(add(kPaper, P, Point::infinity()), P);
  EXPECT_EQ(add(kPaper, Point(45, 11), Point(45, 36)), Point::infinity());
  Point acc = P;
  for (int i = 1; i < 8; ++i) acc = add(kPaper, acc, P);
  EXPECT_EQ(acc, Point(45, 11));
  EXPECT_THROW(add(kPaper, Point(0, 0), P), PointNotOnCurve);
}

TEST(EllipticCurve, ScalarMul) {
  EXPECT_EQ(scalar_mul(kPaper, 8, Point(2, 14)), Point(45, 11));
  EXPECT_EQ(scalar_mul(kPaper, 1, Point(10, 15)), Point(10, 15));
  EXPECT_EQ(scalar_mul(kPaper, 0, Point(10, 15)), Point::infinity());
  EXPECT_EQ(scalar_mul(kPaper, 47, Point(2, 14)), Point::infinity());
}

TEST(EllipticCurve, ScalarMulMatchesIteratedAdd) {
  for (const auto& P : enumerate_points(kPaper)) {
    Point acc;
    for (std::uint64_t m = 0; m <= 100; ++m) {
      ASSERT_EQ(scalar_mul(kPaper, m, P), acc);
      acc = add(kPaper, acc, P);
    }
  }
}

TEST(EllipticCurve, EnumerationPaperCurve) {
  const auto points = enumerate_points(kPaper);
  ASSERT_EQ(points.size(), 47U);
  EXPECT_TRUE(points.back().is_infinity());
  EXPECT_TRUE(std::is_sorted(points.begin(), points.end()));
  EXPECT_EQ(points.front(), Point(2, 14));
}

TEST(EllipticCurve, EnumerationMatchesScan) {
  const CurveParams curve(5, 1, 1);
  const auto scanned = oracle::scan_points(5, 1, 1);
  const auto points = enumerate_points(curve);
  ASSERT_EQ(points.size(), scanned.size() + 1);
  EXPECT_EQ(points.size(), 9U);
  for (std::size_t i = 0; i < scanned.size(); ++i) {
    EXPECT_EQ(points[i], Point(scanned[i].first, scanned[i].second));
  }
}

TEST(EllipticCurve, EnumerationLimit) {
  EXPECT_THROW(enumerate_points(CurveParams(10007, 1, 1)), CurveTooLarge);
  EXPECT_NO_THROW(enumerate_points(CurveParams(10007, 1, 1), 20000));
}

TEST(EllipticCurve, HasseBound) {
  for (const auto& curve : small_curves(31)) {
    const auto count = static_cast<double>(enumerate_points(curve).size());
    EXPECT_LE(std::abs(count - (curve.p() + 1.0)), 2.0 * std::sqrt(curve.p()));
  }
}

TEST(EllipticCurve, GroupLawsExhaustiveSmall) {
  for (const auto& curve : small_curves(13)) {
    const auto points = enumerate_points(curve);
    for (const auto& P : points) {
      EXPECT_EQ(add(curve, P, Point::infinity()), P);
      EXPECT_TRUE(add(curve, P, negate(curve, P)).is_infinity());
      for (const auto& Q : points) {
        const auto sum = add(curve, P, Q);
        ASSERT_TRUE(is_on_curve(curve, sum));
        ASSERT_EQ(sum, add(curve, Q, P));
      }
    }
  }
}

TEST(EllipticCurve, AssociativitySampled) {
  std::mt19937_64 rng(11);
  const auto points = enumerate_points(kPaper);
  std::uniform_int_distribution<std::size_t> pick(0, points.size() - 1);
  for (int i = 0; i < 2000; ++i) {
    const auto &P = points[pick(rng)], &Q = points[pick(rng)], &R = points[pick(rng)];
    ASSERT_EQ(add(kPaper, add(kPaper, P, Q), R), add(kPaper, P, add(kPaper, Q, R)));
  }
}

TEST(EllipticCurve, PointOrders) {
  EXPECT_EQ(order_of_point(kPaper, Point::infinity()), 1U);
  EXPECT_EQ(order_of_point(kPaper, Point(2, 14)), 47U);
  for (const auto& curve : small_curves(13)) {
    const auto points = enumerate_points(curve);
    for (const auto& P : points) EXPECT_EQ(points.size() % order_of_point(curve, P), 0U);
  }
}

TEST(EllipticCurve, TextForm) {
  EXPECT_EQ(format_point(Point(21, 24)), "(21,24)");
  EXPECT_EQ(format_point(Point::infinity()), "O");
  EXPECT_EQ(parse_point(" (21,24) "), Point(21, 24));
  EXPECT_EQ(parse_point("O"), Point::infinity());
  EXPECT_THROW(parse_point("(21;24)"), ParseError);
  EXPECT_THROW(parse_point("21,24"), ParseError);
  EXPECT_EQ(format_curve(kPaper), "p=47 a=3 b=41");
}
