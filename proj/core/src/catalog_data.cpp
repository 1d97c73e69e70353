#include "hamtiles/catalog.hpp"

#include <sstream>

namespace hamtiles {

namespace {

// pt(1,2,4) = e1 + e2 + e4.
template <class... I>
constexpr Point pt(I... coords) {
    return (unitVector(coords) | ...);
}

// One raw listing row. `rep` is the representative's index within the
// same rank; a row with rep == its own index is a representative and
// carries no witness.
struct Raw {
    int index;
    Point s[4]; // unused slots zero
    int rep;
    const char* witness;
};

// Rank 4: S = {x, y, z}.
constexpr Raw kRank4[] = {
    {1, {pt(1, 2), pt(1, 3), pt(1, 4)}, 1, ""},
    {2, {pt(1, 2), pt(1, 3), pt(2, 3)}, 2, ""},
    {3, {pt(1, 2), pt(1, 4), pt(2, 4)}, 2, "(34)"},
    {4, {pt(2, 1), pt(2, 3), pt(2, 4)}, 1, "(12)"},
    {5, {pt(1, 3), pt(1, 4), pt(3, 4)}, 2, "(24)"},
    {6, {pt(3, 1), pt(3, 4), pt(3, 2)}, 1, "(13)"},
    {7, {pt(4, 1), pt(4, 3), pt(4, 2)}, 1, "(14)"},
    {8, {pt(3, 4), pt(3, 2), pt(2, 4)}, 2, "(143)"},
    {9, {pt(1, 2), pt(1, 3), pt(1, 2, 3)}, 9, ""},
    {10, {pt(1, 2), pt(1, 4), pt(1, 2, 4)}, 9, "(34)"},
    {11, {pt(2, 1), pt(2, 3), pt(2, 1, 3)}, 9, "(12)"},
    {12, {pt(2, 1), pt(2, 4), pt(2, 1, 4)}, 9, "(12)(34)"},
    {13, {pt(1, 3), pt(1, 4), pt(1, 3, 4)}, 9, "(24)"},
    {14, {pt(3, 1), pt(3, 4), pt(3, 1, 4)}, 9, "(13)(24)"},
    {15, {pt(3, 1), pt(3, 2), pt(3, 2, 1)}, 9, "(13)"},
    {16, {pt(4, 1), pt(4, 3), pt(4, 3, 1)}, 9, "(124)"},
    {17, {pt(4, 1), pt(4, 2), pt(4, 2, 1)}, 9, "(134)"},
    {18, {pt(3, 4), pt(3, 2), pt(3, 2, 4)}, 9, "(143)"},
    {19, {pt(4, 3), pt(4, 2), pt(4, 3, 2)}, 9, "(14)"},
    {20, {pt(2, 3), pt(2, 4), pt(2, 3, 4)}, 9, "(142)"},
    {21, {pt(1, 2), pt(1, 2, 3), pt(1, 2, 4)}, 21, ""},
    {22, {pt(1, 3), pt(1, 2, 3), pt(1, 2, 4)}, 22, ""},
    {23, {pt(2, 3), pt(2, 1, 3), pt(2, 1, 4)}, 22, "(12)"},
    {24, {pt(2, 4), pt(2, 1, 3), pt(2, 1, 4)}, 22, "(12)(34)"},
    {25, {pt(1, 2), pt(1, 2, 3), pt(1, 3, 4)}, 22, "(23)"},
    {26, {pt(1, 3), pt(1, 3, 2), pt(1, 3, 4)}, 21, "(23)"},
    {27, {pt(1, 4), pt(1, 3, 2), pt(1, 3, 4)}, 22, "(243)"},
    {28, {pt(3, 4), pt(3, 2, 1), pt(3, 4, 1)}, 22, "(1243)"},
    {29, {pt(3, 2), pt(3, 1, 2), pt(3, 1, 4)}, 22, "(123)"},
    {30, {pt(2, 1), pt(2, 3, 1), pt(2, 3, 4)}, 22, "(132)"},
    {31, {pt(3, 1), pt(3, 2, 1), pt(3, 2, 4)}, 22, "(13)"},
    {32, {pt(3, 4), pt(3, 2, 1), pt(3, 2, 4)}, 22, "(143)"},
    {33, {pt(2, 3), pt(2, 3, 1), pt(2, 3, 4)}, 21, "(13)"},
    {34, {pt(2, 4), pt(2, 3, 1), pt(2, 3, 4)}, 22, "(1432)"},
    {35, {pt(1, 2), pt(1, 4, 2), pt(1, 4, 3)}, 22, "(234)"},
    {36, {pt(1, 3), pt(1, 4, 2), pt(1, 4, 3)}, 22, "(24)"},
    {37, {pt(1, 4), pt(1, 4, 2), pt(1, 4, 3)}, 21, "(24)"},
    {38, {pt(4, 3), pt(4, 1, 2), pt(4, 1, 3)}, 22, "(124)"},
    {39, {pt(4, 2), pt(4, 1, 2), pt(4, 1, 3)}, 22, "(1234)"},
    {40, {pt(2, 1), pt(2, 4, 1), pt(2, 4, 3)}, 22, "(1342)"},
    {41, {pt(4, 1), pt(4, 2, 1), pt(4, 2, 3)}, 22, "(134)"},
    {42, {pt(4, 3), pt(4, 2, 1), pt(4, 2, 3)}, 22, "(14)"},
    {43, {pt(2, 3), pt(2, 4, 1), pt(2, 4, 3)}, 22, "(142)"},
    {44, {pt(2, 4), pt(2, 4, 1), pt(2, 4, 3)}, 21, "(14)"},
    {45, {pt(3, 1), pt(3, 4, 1), pt(3, 4, 2)}, 22, "(13)(24)"},
    {46, {pt(4, 1), pt(4, 3, 1), pt(2, 3, 4)}, 22, "(1324)"},
    {47, {pt(3, 4), pt(3, 4, 1), pt(3, 4, 2)}, 21, "(13)(24)"},
    {48, {pt(3, 2), pt(3, 4, 1), pt(3, 4, 2)}, 22, "(1423)"},
    {49, {pt(4, 2), pt(4, 3, 1), pt(4, 3, 2)}, 22, "(14)(23)"},
    {50, {pt(1, 4), pt(1, 2, 3), pt(1, 2, 4)}, 22, "(34)"},
    {51, {pt(1, 2, 3), pt(1, 2, 4), pt(1, 3, 4)}, 51, ""},
    {52, {pt(2, 1, 3), pt(2, 1, 4), pt(2, 3, 4)}, 51, "(12)"},
    {53, {pt(4, 2, 1), pt(4, 3, 1), pt(4, 3, 2)}, 51, "(14)"},
    {54, {pt(3, 2, 1), pt(3, 1, 4), pt(3, 2, 4)}, 51, "(13)"},
};

// Rank 5: S = {x, y}.
constexpr Raw kRank5[] = {
    {1, {pt(1, 2), pt(1, 3)}, 1, ""},
    {2, {pt(1, 2), pt(1, 4)}, 1, "(34)"},
    {3, {pt(1, 2), pt(1, 5)}, 1, "(35)"},
    {4, {pt(2, 1), pt(2, 3)}, 1, "(12)"},
    {5, {pt(2, 1), pt(2, 4)}, 1, "(12)(34)"},
    {6, {pt(2, 1), pt(2, 5)}, 1, "(12)(35)"},
    {7, {pt(1, 3), pt(1, 4)}, 1, "(24)"},
    {8, {pt(1, 3), pt(1, 5)}, 1, "(25)"},
    {9, {pt(3, 1), pt(3, 2)}, 1, "(13)"},
    {10, {pt(3, 1), pt(3, 4)}, 1, "(13)(24)"},
    {11, {pt(3, 1), pt(3, 5)}, 1, "(13)(25)"},
    {12, {pt(1, 4), pt(1, 5)}, 1, "(24)(35)"},
    {13, {pt(4, 1), pt(4, 2)}, 1, "(134)"},
    {14, {pt(4, 1), pt(4, 5)}, 1, "(124)(35)"},
    {15, {pt(5, 1), pt(5, 2)}, 1, "(135)"},
    {16, {pt(5, 1), pt(5, 3)}, 1, "(125)"},
    {17, {pt(5, 1), pt(5, 4)}, 1, "(125)(34)"},
    {18, {pt(2, 3), pt(2, 4)}, 1, "(142)"},
    {19, {pt(2, 3), pt(2, 5)}, 1, "(152)"},
    {20, {pt(3, 2), pt(3, 4)}, 1, "(143)"},
    {21, {pt(3, 2), pt(3, 5)}, 1, "(153)"},
    {22, {pt(2, 4), pt(2, 5)}, 1, "(142)(35)"},
    {23, {pt(4, 2), pt(4, 3)}, 1, "(14)"},
    {24, {pt(4, 2), pt(4, 5)}, 1, "(14)(35)"},
    {25, {pt(5, 2), pt(5, 3)}, 1, "(15)"},
    {26, {pt(5, 2), pt(5, 4)}, 1, "(15)(34)"},
    {27, {pt(3, 4), pt(3, 5)}, 1, "(153)(24)"},
    {28, {pt(4, 3), pt(4, 5)}, 1, "(14)(25)"},
    {29, {pt(5, 3), pt(5, 4)}, 1, "(15)(24)"},
    {30, {pt(4, 1), pt(4, 3)}, 1, "(124)"},
    {31, {pt(1, 4), pt(1, 5)}, 1, "(24)(35)"},
    {32, {pt(1, 2), pt(1, 2, 3)}, 32, ""},
    {33, {pt(4, 5), pt(1, 2, 3)}, 33, ""},
    {34, {pt(1, 2), pt(1, 2, 4)}, 32, "(34)"},
    {35, {pt(1, 4), pt(1, 2, 4)}, 32, "(234)"},
    {36, {pt(2, 4), pt(2, 4, 1)}, 32, "(134)"},
    {37, {pt(3, 5), pt(1, 2, 4)}, 33, "(34)"},
    {38, {pt(1, 2), pt(1, 2, 5)}, 32, "(35)"},
    {39, {pt(1, 5), pt(1, 5, 2)}, 32, "(235)"},
    {40, {pt(2, 5), pt(2, 5, 1)}, 32, "(135)"},
    {41, {pt(3, 4), pt(1, 2, 5)}, 33, "(35)"},
    {42, {pt(1, 3), pt(1, 3, 4)}, 32, "(243)"},
    {43, {pt(1, 4), pt(1, 4, 3)}, 32, "(234)"},
    {44, {pt(2, 5), pt(1, 3, 4)}, 33, "(243)"},
    {45, {pt(3, 4), pt(3, 4, 1)}, 32, "(13)(24)"},
    {46, {pt(1, 4), pt(1, 4, 5)}, 32, "(24)(35)"},
    {47, {pt(1, 5), pt(1, 5, 4)}, 32, "(25)(34)"},
    {48, {pt(2, 3), pt(1, 4, 5)}, 33, "(24)(35)"},
    {49, {pt(4, 5), pt(4, 5, 1)}, 32, "(134)(25)"},
    {50, {pt(1, 3), pt(1, 3, 5)}, 32, "(253)"},
    {51, {pt(1, 5), pt(1, 5, 3)}, 32, "(25)"},
    {52, {pt(2, 4), pt(1, 3, 5)}, 33, "(25)"},
    {53, {pt(3, 5), pt(3, 5, 1)}, 32, "(13)(25)"},
    {54, {pt(1, 5), pt(2, 3, 4)}, 33, "(14)"},
    {55, {pt(2, 3), pt(2, 3, 4)}, 32, "(143)"},
    {56, {pt(2, 4), pt(2, 4, 3)}, 32, "(14)"},
    {57, {pt(3, 4), pt(3, 4, 2)}, 32, "(1423)"},
    {58, {pt(1, 2), pt(3, 4, 5)}, 33, "(14)(25)"},
    {59, {pt(3, 4), pt(3, 4, 5)}, 32, "(143)(25)"},
    {60, {pt(3, 5), pt(3, 5, 4)}, 32, "(143)(25)"},
    {61, {pt(4, 5), pt(4, 5, 3)}, 32, "(14)(25)"},
    {62, {pt(1, 3), pt(2, 4, 5)}, 33, "(14)(35)"},
    {63, {pt(2, 4), pt(2, 4, 5)}, 32, "(14)(35)"},
    {64, {pt(2, 5), pt(2, 5, 4)}, 32, "(15)(34)"},
    {65, {pt(4, 5), pt(4, 5, 2)}, 32, "(14)(235)"},
    {66, {pt(1, 4), pt(2, 3, 5)}, 33, "(15)"},
    {67, {pt(2, 3), pt(2, 3, 5)}, 32, "(153)"},
    {68, {pt(2, 5), pt(2, 5, 3)}, 32, "(15)"},
    {69, {pt(3, 5), pt(3, 5, 2)}, 32, "(1523)"},
    {70, {pt(1, 3), pt(1, 3, 2)}, 32, "(23)"},
    {71, {pt(2, 3), pt(2, 3, 1)}, 32, "(13)"},
    {72, {pt(1, 2, 3), pt(1, 2, 4)}, 72, ""},
    {73, {pt(1, 3, 2), pt(1, 3, 5)}, 72, "(23)(45)"},
    {74, {pt(2, 3, 1), pt(2, 3, 4)}, 72, "(13)"},
    {75, {pt(2, 3, 5), pt(2, 3, 1)}, 72, "(13)(45)"},
    {76, {pt(1, 2, 4), pt(1, 2, 5)}, 72, "(35)"},
    {77, {pt(1, 4, 2), pt(1, 4, 3)}, 72, "(24)"},
    {78, {pt(1, 4, 2), pt(1, 4, 5)}, 72, "(2354)"},
    {79, {pt(2, 4, 1), pt(2, 4, 3)}, 72, "(14)"},
    {80, {pt(1, 5, 2), pt(1, 5, 4)}, 72, "(235)"},
    {81, {pt(1, 5, 2), pt(1, 5, 3)}, 72, "(245)"},
    {82, {pt(2, 5, 1), pt(2, 5, 4)}, 72, "(135)"},
    {83, {pt(2, 5, 1), pt(2, 5, 3)}, 72, "(145)"},
    {84, {pt(1, 4, 3), pt(1, 4, 5)}, 72, "(254)"},
    {85, {pt(1, 3, 4), pt(1, 3, 5)}, 72, "(253)"},
    {86, {pt(3, 4, 1), pt(3, 4, 2)}, 72, "(13)(24)"},
    {87, {pt(3, 4, 1), pt(3, 4, 5)}, 72, "(13)(254)"},
    {88, {pt(1, 5, 4), pt(1, 5, 3)}, 72, "(25)"},
    {89, {pt(4, 5, 1), pt(4, 5, 3)}, 72, "(14)(25)"},
    {90, {pt(4, 5, 1), pt(4, 5, 2)}, 72, "(13524)"},
    {91, {pt(3, 5, 1), pt(3, 5, 4)}, 72, "(13)(25)"},
    {92, {pt(3, 5, 1), pt(3, 5, 2)}, 72, "(13)(245)"},
    {93, {pt(3, 4, 2), pt(3, 4, 5)}, 72, "(153)(24)"},
    {94, {pt(2, 4, 3), pt(2, 4, 5)}, 72, "(154)"},
    {95, {pt(2, 3, 4), pt(2, 3, 5)}, 72, "(153)"},
    {96, {pt(4, 5, 3), pt(4, 5, 2)}, 72, "(1524)"},
    {97, {pt(3, 5, 4), pt(3, 5, 2)}, 72, "(1523)"},
    {98, {pt(2, 5, 4), pt(2, 5, 3)}, 72, "(15)"},
    {99, {pt(1, 2, 3), pt(1, 2, 5)}, 72, "(45)"},
    {100, {pt(1, 3, 2), pt(1, 3, 4)}, 72, "(23)"},
    {101, {pt(2, 4, 1), pt(2, 4, 5)}, 72, "(1354)"},
};

// Rank 6: S = {x}.
constexpr Raw kRank6[] = {
    {1, {pt(1, 2)}, 1, ""},
    {2, {pt(1, 3)}, 1, "(23)"},
    {3, {pt(1, 4)}, 1, "(24)"},
    {4, {pt(1, 5)}, 1, "(25)"},
    {5, {pt(1, 6)}, 1, "(26)"},
    {6, {pt(2, 3)}, 1, "(13)"},
    {7, {pt(2, 4)}, 1, "(14)"},
    {8, {pt(2, 5)}, 1, "(15)"},
    {9, {pt(2, 6)}, 1, "(16)"},
    {10, {pt(3, 4)}, 1, "(13)(24)"},
    {11, {pt(3, 5)}, 1, "(13)(25)"},
    {12, {pt(3, 6)}, 1, "(13)(26)"},
    {13, {pt(4, 5)}, 1, "(14)(25)"},
    {14, {pt(4, 6)}, 1, "(14)(26)"},
    {15, {pt(5, 6)}, 1, "(15)(26)"},
    {16, {pt(1, 2, 3)}, 16, ""},
    {17, {pt(1, 3, 4)}, 16, "(24)"},
    {18, {pt(1, 4, 5)}, 16, "(25)(35)"},
    {19, {pt(1, 5, 6)}, 16, "(25)(36)"},
    {20, {pt(1, 2, 4)}, 16, "(34)"},
    {21, {pt(1, 2, 5)}, 16, "(35)"},
    {22, {pt(1, 2, 6)}, 16, "(36)"},
    {23, {pt(2, 3, 4)}, 16, "(14)"},
    {24, {pt(2, 4, 5)}, 16, "(14)(35)"},
    {25, {pt(2, 5, 6)}, 16, "(15)(36)"},
    {26, {pt(2, 3, 5)}, 16, "(15)"},
    {27, {pt(2, 3, 6)}, 16, "(16)"},
    {28, {pt(3, 4, 5)}, 16, "(14)(25)"},
    {29, {pt(4, 5, 6)}, 16, "(14)(25)(36)"},
    {30, {pt(3, 5, 6)}, 16, "(15)(26)"},
    {31, {pt(3, 4, 6)}, 16, "(14)(26)"},
    {32, {pt(1, 3, 5)}, 16, "(25)"},
    {33, {pt(2, 4, 6)}, 16, "(14)(36)"},
    {34, {pt(1, 3, 6)}, 16, "(26)"},
    {35, {pt(1, 4, 6)}, 16, "(24)(36)"},
    {36, {pt(1, 2, 3, 4, 5, 6)}, 36, ""},
};

std::vector<CatalogEntry> buildCatalog() {
    std::vector<CatalogEntry> entries;
    entries.reserve(193);

    auto push = [&entries](int rank, const Raw& raw, int sCount) {
        std::span<const Point> s(raw.s, static_cast<std::size_t>(sCount));
        CatalogEntry e{EntryId{rank, raw.index}, normalizedTile(rank, s), std::nullopt,
                       std::nullopt};
        if (raw.rep != raw.index) {
            e.claimedRepresentative = EntryId{rank, raw.rep};
            e.claimedWitness = std::string(raw.witness);
        }
        entries.push_back(std::move(e));
    };

    // Rank 3: the single tile is all of F_2^3.
    const Raw rank3{1, {pt(1, 2), pt(1, 3), pt(2, 3), pt(1, 2, 3)}, 1, ""};
    push(3, rank3, 4);
    for (const Raw& raw : kRank4)
        push(4, raw, 3);
    for (const Raw& raw : kRank5)
        push(5, raw, 2);
    for (const Raw& raw : kRank6)
        push(6, raw, 1);
    // Rank 7: S is empty, the tile is the ball itself.
    const Raw rank7{1, {}, 1, ""};
    push(7, rank7, 0);

    return entries;
}

} // namespace

std::span<const CatalogEntry> builtinCatalog() {
    static const std::vector<CatalogEntry> catalog = buildCatalog();
    return catalog;
}

std::uint64_t catalogChecksum(std::span<const CatalogEntry> entries) {
    // FNV-1a over a canonical serialization.
    std::uint64_t h = 0xcbf29ce484222325ull;
    auto mix = [&h](std::uint64_t v) {
        for (int byte = 0; byte < 8; ++byte) {
            h ^= (v >> (byte * 8)) & 0xff;
            h *= 0x100000001b3ull;
        }
    };
    for (const CatalogEntry& e : entries) {
        mix(static_cast<std::uint64_t>(e.id.rank));
        mix(static_cast<std::uint64_t>(e.id.index));
        mix(static_cast<std::uint64_t>(e.tile.dim()));
        for (Point p : e.tile.points())
            mix(p);
        if (e.claimedRepresentative) {
            mix(static_cast<std::uint64_t>(e.claimedRepresentative->rank));
            mix(static_cast<std::uint64_t>(e.claimedRepresentative->index));
        } else {
            mix(~std::uint64_t{0});
        }
        if (e.claimedWitness)
            for (char c : *e.claimedWitness)
                mix(static_cast<std::uint64_t>(static_cast<unsigned char>(c)));
    }
    return h;
}

std::string toString(EntryId id) {
    std::ostringstream os;
    os << 'D' << id.index << '^' << id.rank;
    return os.str();
}

} // namespace hamtiles
