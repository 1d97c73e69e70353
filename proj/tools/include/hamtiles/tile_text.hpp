#ifndef HAMTILES_TILE_TEXT_HPP
#define HAMTILES_TILE_TEXT_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "hamtiles/tile.hpp"

namespace hamtiles::text {

/// Human-order binary string of a point: leftmost character is
/// coordinate 1 (the internal encoding keeps e_1 least-significant).
std::string formatPoint(Point p, int dim);

/// Parse one such string; every character must be '0' or '1'.
Point parsePoint(std::string_view s);

/// "r=<dim>;" followed by the 8 points in ascending order, comma-joined.
std::string formatTile(const Tile& t);

/// Parse a tile: an optional "r=<dim>;" header, then 8 whitespace- or
/// comma-separated binary strings of length dim (without a header, dim is
/// the length of the first string). Throws ParseError on anything else.
Tile parseTile(std::string_view text);

/// One tile per nonempty line.
std::vector<Tile> parseTileLines(std::istream& in);

} // namespace hamtiles::text

#endif
