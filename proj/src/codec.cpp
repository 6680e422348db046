#include "fibecc/codec.hpp"

#include <istream>
#include <ostream>

#include "fibecc/errors.hpp"
#include "text_util.hpp"

namespace fibecc {
namespace {

std::string describe(char c) {
  return c == ' ' ? std::string("' '") : std::string("'") + c + "'";
}

}  // namespace

AlphabetMap::AlphabetMap(CurveParams curve, std::vector<std::pair<char, Point>> pairs)
    : curve_(curve), pairs_(std::move(pairs)) {
  for (const auto& [symbol, point] : pairs_) {
    if (!is_on_curve(curve_, point)) {
      throw PointNotOnCurve(format_point(point) + " mapped from " + describe(symbol));
    }
    if (!to_point_.emplace(symbol, point).second) {
      throw SizeMismatch("symbol " + describe(symbol) + " appears twice");
    }
    if (!to_symbol_.emplace(point, symbol).second) {
      throw SizeMismatch("point " + format_point(point) + " appears twice");
    }
  }
  if (curve_.p() <= kDefaultEnumerationLimit) {
    const auto total = enumerate_points(curve_).size();
    if (pairs_.size() != total) {
      throw SizeMismatch("alphabet has " + std::to_string(pairs_.size()) +
                         " entries but the curve has " + std::to_string(total) + " points");
    }
  }
}

const Point& AlphabetMap::point_of(char symbol) const {
  const auto it = to_point_.find(symbol);
  if (it == to_point_.end()) throw UnknownSymbol(describe(symbol) + " is not in the alphabet");
  return it->second;
}

char AlphabetMap::symbol_of(const Point& point) const {
  const auto it = to_symbol_.find(point);
  if (it == to_symbol_.end()) throw UnknownPoint(format_point(point) + " is not in the alphabet");
  return it->second;
}

CurveParams paper_curve() { return {47, 3, 41}; }

AlphabetMap paper_alphabet() {
  return {paper_curve(),
          {
              {'A', {2, 14}},  {'B', {28, 9}},  {'C', {21, 24}}, {'D', {33, 34}},
              {'E', {40, 10}}, {'F', {11, 29}}, {'G', {42, 29}}, {'H', {45, 11}},
              {'I', {27, 26}}, {'J', {35, 4}},  {'K', {46, 15}}, {'L', {20, 39}},
              {'M', {41, 18}}, {'N', {16, 40}}, {'O', {43, 24}}, {'P', {10, 15}},
              {'Q', {24, 42}}, {'R', {30, 23}}, {'S', {19, 46}}, {'T', {38, 15}},
              {'U', {14, 17}}, {'V', {34, 25}}, {'W', {13, 16}}, {'X', {13, 31}},
              {'Y', {34, 22}}, {'Z', {14, 30}}, {'0', {38, 32}}, {'1', {19, 1}},
              {'2', {30, 24}}, {'3', {24, 5}},  {'4', {10, 32}}, {'5', {43, 23}},
              {'6', {16, 7}},  {'7', {41, 29}}, {'8', {20, 8}},  {'9', {46, 32}},
              {'~', {35, 43}}, {'!', {27, 21}}, {'@', {45, 36}}, {'#', {42, 18}},
              {'$', {11, 18}}, {'%', {40, 37}}, {'^', {33, 13}}, {'&', {21, 23}},
              {'*', {28, 38}}, {'-', {2, 33}},  {',', Point::infinity()},
          }};
}

AlphabetMap derive_alphabet(const CurveParams& curve, std::string_view charset) {
  const auto points = enumerate_points(curve);
  if (charset.size() != points.size()) {
    throw SizeMismatch("charset has " + std::to_string(charset.size()) +
                       " characters but the curve has " + std::to_string(points.size()) +
                       " points");
  }
  std::vector<std::pair<char, Point>> pairs;
  pairs.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) pairs.emplace_back(charset[i], points[i]);
  return {curve, std::move(pairs)};
}

std::string default_charset(std::size_t size) {
  static const std::string kPool =
      "ABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789~!@#$%^&*-"
      "abcdefghijklmnopqrstuvwxyz"
      " .?:;'\"()[]{}<>/\\|_+=`";
  if (size == 0 || size > kPool.size() + 1) {
    throw RangeError("no default charset of size " + std::to_string(size) + " (max " +
                     std::to_string(kPool.size() + 1) + ")");
  }
  return kPool.substr(0, size - 1) + ',';
}

AlphabetMap default_alphabet(const CurveParams& curve) {
  if (curve == paper_curve()) return paper_alphabet();
  const auto order = enumerate_points(curve).size();
  return derive_alphabet(curve, default_charset(order));
}

std::vector<Point> encode(const AlphabetMap& map, std::string_view text) {
  std::vector<Point> points;
  points.reserve(text.size());
  for (const char c : text) points.push_back(map.point_of(c));
  return points;
}

std::string decode(const AlphabetMap& map, const std::vector<Point>& points) {
  std::string text;
  text.reserve(points.size());
  for (const auto& point : points) text.push_back(map.symbol_of(point));
  return text;
}

std::vector<PointMatrix> pack_blocks(const std::vector<Point>& points, std::size_t n) {
  if (n == 0) throw RangeError("block dimension must be positive");
  const std::size_t per_block = n * n;
  const std::size_t count = (points.size() + per_block - 1) / per_block;
  std::vector<PointMatrix> blocks(count, PointMatrix(n, n));
  for (std::size_t idx = 0; idx < points.size(); ++idx) {
    const std::size_t within = idx % per_block;
    blocks[idx / per_block](within % n, within / n) = points[idx];
  }
  return blocks;
}

std::vector<Point> unpack_blocks(const std::vector<PointMatrix>& blocks, std::size_t n,
                                 std::size_t original_length) {
  if (original_length > blocks.size() * n * n) {
    throw LengthOverflow("length " + std::to_string(original_length) + " exceeds " +
                         std::to_string(blocks.size() * n * n) + " block entries");
  }
  std::vector<Point> points;
  points.reserve(original_length);
  for (const auto& block : blocks) {
    if (block.rows() != n || block.cols() != n) {
      throw DimensionMismatch("block is not " + std::to_string(n) + "x" + std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < n; ++i) {
        if (points.size() == original_length) return points;
        points.push_back(block(i, j));
      }
    }
  }
  return points;
}

void write_alphabet(std::ostream& out, const AlphabetMap& map) {
  for (const auto& [symbol, point] : map.pairs()) {
    out << symbol << ' ';
    if (point.is_infinity()) {
      out << "O\n";
    } else {
      out << point.x() << ' ' << point.y() << '\n';
    }
  }
}

AlphabetMap read_alphabet(std::istream& in, const CurveParams& curve) {
  std::vector<std::pair<char, Point>> pairs;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.size() < 3 || line[1] != ' ') throw ParseError("malformed alphabet line '" + line + "'");
    const auto rest = detail::trim(std::string_view(line).substr(2));
    if (rest == "O") {
      pairs.emplace_back(line[0], Point::infinity());
      continue;
    }
    const auto coords = detail::split(rest, ' ');
    if (coords.size() != 2) throw ParseError("malformed alphabet line '" + line + "'");
    pairs.emplace_back(line[0], Point(detail::parse_int<std::uint64_t>(coords[0]),
                                      detail::parse_int<std::uint64_t>(coords[1])));
  }
  return {curve, std::move(pairs)};
}

}  // namespace fibecc
