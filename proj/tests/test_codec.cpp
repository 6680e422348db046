#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "fibecc/codec.hpp"
#include "fibecc/errors.hpp"

using namespace fibecc;

TEST(Codec, PaperAlphabetEntries) {
  const auto map = paper_alphabet();
  EXPECT_EQ(map.size(), 47U);
  EXPECT_EQ(map.point_of('C'), Point(21, 24));
  EXPECT_EQ(map.point_of(','), Point::infinity());
  EXPECT_EQ(map.point_of('9'), Point(46, 32));
  EXPECT_THROW(map.point_of('?'), UnknownSymbol);
  EXPECT_THROW(map.point_of('c'), UnknownSymbol);
}

TEST(Codec, PaperAlphabetCoversCurve) {
  const auto map = paper_alphabet();
  std::set<Point> mapped;
  for (const auto& [symbol, point] : map.pairs()) mapped.insert(point);
  const auto points = enumerate_points(paper_curve());
  EXPECT_EQ(mapped, std::set<Point>(points.begin(), points.end()));
}

TEST(Codec, EncodeWorkedExample) {
  const auto map = paper_alphabet();
  const std::vector<Point> expected{{21, 24}, {43, 24}, {34, 25}, {27, 26},
                                    {33, 34}, {2, 33},  {19, 1},  {46, 32}};
  EXPECT_EQ(encode(map, "COVID-19"), expected);
  EXPECT_TRUE(encode(map, "").empty());
  EXPECT_EQ(decode(map, encode(map, "KMNE!N6L")), "KMNE!N6L");
  EXPECT_THROW(decode(map, {Point(0, 0)}), UnknownPoint);
}

TEST(Codec, BijectionBothWays) {
  const auto map = paper_alphabet();
  for (const auto& [symbol, point] : map.pairs()) {
    EXPECT_EQ(map.symbol_of(map.point_of(symbol)), symbol);
    EXPECT_EQ(map.point_of(map.symbol_of(point)), point);
  }
}

TEST(Codec, DeriveAlphabet) {
  const auto curve = paper_curve();
  EXPECT_THROW(derive_alphabet(curve, "ABC"), SizeMismatch);
  const auto charset = default_charset(47);
  const auto map = derive_alphabet(curve, charset);
  EXPECT_EQ(map.point_of(charset.back()), Point::infinity());
  EXPECT_EQ(charset.back(), ',');
  for (const char c : charset) EXPECT_EQ(map.symbol_of(map.point_of(c)), c);
  EXPECT_EQ(map.point_of('A'), Point(2, 14));  // smallest point
}

TEST(Codec, DefaultCharsetLimits) {
  EXPECT_EQ(default_charset(95).size(), 95U);
  EXPECT_THROW(default_charset(96), RangeError);
  const auto full = default_charset(95);
  EXPECT_EQ(std::set<char>(full.begin(), full.end()).size(), 95U);
}

TEST(Codec, DefaultAlphabetPicksPaperTable) {
  EXPECT_EQ(default_alphabet(paper_curve()).point_of('C'), Point(21, 24));
  EXPECT_EQ(default_alphabet(CurveParams(53, 1, 1)).size(), 58U);
}

TEST(Codec, AlphabetRejectsBadTables) {
  const CurveParams curve(5, 1, 1);  // 9 points
  EXPECT_THROW(AlphabetMap(curve, {{'a', Point(0, 0)}}), PointNotOnCurve);
  EXPECT_THROW(AlphabetMap(curve, {{'a', Point(0, 1)}, {'a', Point(0, 4)}}), SizeMismatch);
  EXPECT_THROW(AlphabetMap(curve, {{'a', Point(0, 1)}}), SizeMismatch);
}

TEST(Codec, PackWorkedExample) {
  const auto map = paper_alphabet();
  const auto blocks = pack_blocks(encode(map, "COVID-19"), 2);
  ASSERT_EQ(blocks.size(), 2U);
  EXPECT_EQ(blocks[0](0, 0), map.point_of('C'));
  EXPECT_EQ(blocks[0](1, 0), map.point_of('O'));
  EXPECT_EQ(blocks[0](0, 1), map.point_of('V'));
  EXPECT_EQ(blocks[0](1, 1), map.point_of('I'));
  EXPECT_EQ(blocks[1](0, 0), map.point_of('D'));
  EXPECT_EQ(blocks[1](1, 0), map.point_of('-'));
  EXPECT_EQ(blocks[1](0, 1), map.point_of('1'));
  EXPECT_EQ(blocks[1](1, 1), map.point_of('9'));
}

TEST(Codec, PackPadsWithInfinity) {
  const auto map = paper_alphabet();
  const auto blocks = pack_blocks(encode(map, "HELLO"), 2);
  ASSERT_EQ(blocks.size(), 2U);
  EXPECT_EQ(blocks[1](0, 0), map.point_of('O'));
  EXPECT_TRUE(blocks[1](1, 0).is_infinity());
  EXPECT_TRUE(blocks[1](0, 1).is_infinity());
  EXPECT_TRUE(blocks[1](1, 1).is_infinity());
}

TEST(Codec, PackUnpackRoundTrip) {
  const auto points = enumerate_points(paper_curve());
  for (std::size_t n = 2; n <= 4; ++n) {
    for (std::size_t len = 0; len <= 3 * n * n; ++len) {
      std::vector<Point> pts;
      for (std::size_t i = 0; i < len; ++i) pts.push_back(points[(i * 7) % points.size()]);
      const auto blocks = pack_blocks(pts, n);
      EXPECT_EQ(blocks.size(), (len + n * n - 1) / (n * n));
      EXPECT_EQ(unpack_blocks(blocks, n, len), pts);
    }
  }
  EXPECT_THROW(unpack_blocks(pack_blocks(points, 2), 2, 49), LengthOverflow);
}

TEST(Codec, AlphabetFileRoundTrip) {
  for (const auto& map : {paper_alphabet(), default_alphabet(CurveParams(53, 1, 1))}) {
    std::stringstream file;
    write_alphabet(file, map);
    const auto back = read_alphabet(file, map.curve());
    EXPECT_EQ(back.pairs(), map.pairs());
  }
  std::stringstream text("A 2 14\n, O\n");
  EXPECT_THROW(read_alphabet(text, paper_curve()), SizeMismatch);
  std::stringstream bad("A2 14\n");
  EXPECT_THROW(read_alphabet(bad, paper_curve()), ParseError);
}
