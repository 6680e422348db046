#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fibecc/elliptic_curve.hpp"
#include "fibecc/matrix.hpp"

namespace fibecc {

using PointMatrix = Matrix<Point>;

/// Bijection between single-byte characters and every point of a curve.
/// Exactly one character maps to O.
class AlphabetMap {
 public:
  /// Throws SizeMismatch if the pairs are not a bijection onto the full point
  /// set, PointNotOnCurve for stray points.
  AlphabetMap(CurveParams curve, std::vector<std::pair<char, Point>> pairs);

  const CurveParams& curve() const noexcept { return curve_; }
  const std::vector<std::pair<char, Point>>& pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }

  /// Throws UnknownSymbol.
  const Point& point_of(char symbol) const;
  /// Throws UnknownPoint.
  char symbol_of(const Point& point) const;

 private:
  CurveParams curve_;
  std::vector<std::pair<char, Point>> pairs_;
  std::map<char, Point> to_point_;
  std::map<Point, char> to_symbol_;
};

/// The 47-character table for y^2 = x^3 + 3x + 41 over F_47: A-Z, 0-9,
/// ~!@#$%^&*- and ',' for O.
AlphabetMap paper_alphabet();

/// The curve the paper alphabet lives on.
CurveParams paper_curve();

/// Zips `charset` with the curve's points in enumeration order (O last).
/// Throws SizeMismatch when |charset| != group order.
AlphabetMap derive_alphabet(const CurveParams& curve, std::string_view charset);

/// `size` characters ending in ','. The first size-1 follow the paper table's
/// order, then lowercase letters and further ASCII punctuation. Throws
/// RangeError above 95.
std::string default_charset(std::size_t size);

/// The paper alphabet on the paper curve, otherwise a derived alphabet over
/// default_charset.
AlphabetMap default_alphabet(const CurveParams& curve);

std::vector<Point> encode(const AlphabetMap& map, std::string_view text);
std::string decode(const AlphabetMap& map, const std::vector<Point>& points);

/// Pads with O to a multiple of n*n and fills n x n blocks column by column.
std::vector<PointMatrix> pack_blocks(const std::vector<Point>& points, std::size_t n);

/// Column-major read of every block, truncated to original_length. Throws
/// LengthOverflow when original_length exceeds the entry count.
std::vector<Point> unpack_blocks(const std::vector<PointMatrix>& blocks, std::size_t n,
                                 std::size_t original_length);

// Alphabet file: one "<char> <x> <y>" or "<char> O" line per entry.
void write_alphabet(std::ostream& out, const AlphabetMap& map);
AlphabetMap read_alphabet(std::istream& in, const CurveParams& curve);

}  // namespace fibecc
