#include "hamtiles/tile_text.hpp"

#include <istream>
#include <sstream>
#include <utility>

#include "hamtiles/errors.hpp"

namespace hamtiles::text {

std::string formatPoint(Point p, int dim) {
    std::string s(static_cast<std::size_t>(dim), '0');
    for (int i = 0; i < dim; ++i)
        if ((p >> i) & 1u)
            s[static_cast<std::size_t>(i)] = '1';
    return s;
}

Point parsePoint(std::string_view s) {
    if (s.empty() || s.size() > 63)
        throw ParseError("point: expected 1..63 binary digits");
    Point p = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            p |= Point{1} << i;
        else if (s[i] != '0')
            throw ParseError("point: characters must be '0' or '1'");
    }
    return p;
}

std::string formatTile(const Tile& t) {
    std::ostringstream os;
    os << "r=" << t.dim() << ';';
    for (int i = 0; i < Tile::kPoints; ++i) {
        if (i)
            os << ',';
        os << formatPoint(t.points()[static_cast<std::size_t>(i)], t.dim());
    }
    return os.str();
}

Tile parseTile(std::string_view textIn) {
    std::string text(textIn);
    int headerDim = 0;

    // optional "r=<dim>;" header
    std::size_t start = text.find_first_not_of(" \t\r\n");
    if (start == std::string::npos)
        throw ParseError("tile: empty input");
    if (text.compare(start, 2, "r=") == 0) {
        const std::size_t semi = text.find(';', start);
        if (semi == std::string::npos)
            throw ParseError("tile: header missing ';'");
        try {
            headerDim = std::stoi(text.substr(start + 2, semi - start - 2));
        } catch (const std::exception&) {
            throw ParseError("tile: bad dimension in header");
        }
        if (headerDim < 1 || headerDim > 63)
            throw ParseError("tile: dimension out of range");
        text = text.substr(semi + 1);
    }

    std::vector<std::string> tokens;
    std::string cur;
    for (char c : text) {
        if (c == ',' || c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            if (!cur.empty())
                tokens.push_back(std::exchange(cur, {}));
        } else {
            cur += c;
        }
    }
    if (!cur.empty())
        tokens.push_back(std::move(cur));

    if (tokens.size() != Tile::kPoints)
        throw ParseError("tile: expected exactly 8 points");
    const int dim = headerDim > 0 ? headerDim : static_cast<int>(tokens.front().size());
    std::vector<Point> pts;
    pts.reserve(Tile::kPoints);
    for (const std::string& tok : tokens) {
        if (static_cast<int>(tok.size()) != dim)
            throw ParseError("tile: point length does not match dimension");
        pts.push_back(parsePoint(tok));
    }
    try {
        return Tile(pts, dim);
    } catch (const DimensionError& e) {
        throw ParseError(std::string("tile: ") + e.what());
    }
}

std::vector<Tile> parseTileLines(std::istream& in) {
    std::vector<Tile> tiles;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r\n") == std::string::npos)
            continue;
        tiles.push_back(parseTile(line));
    }
    return tiles;
}

} // namespace hamtiles::text
