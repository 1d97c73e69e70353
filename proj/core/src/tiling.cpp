#include "hamtiles/tiling.hpp"

#include <algorithm>
#include <bit>

#include "hamtiles/errors.hpp"

namespace hamtiles {

namespace {

constexpr int kMaxAmbient = 20; // search-space guard: 2^20-cell bitmap

// Coverage bitmap over the 2^n cells of F_2^n. Placing a translate is
// 8 bit tests plus 8 bit sets; for n <= 6 the whole state is one word.
class CoverBitmap {
public:
    explicit CoverBitmap(int n)
        : words_(std::max<std::size_t>(1, (std::size_t{1} << n) / 64), 0),
          cells_(std::uint32_t{1} << n) {}

    bool full() const noexcept { return covered_ == cells_; }

    bool test(std::uint32_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }

    void set(std::uint32_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

    void clear(std::uint32_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    // Least uncovered cell; only meaningful when !full().
    std::uint32_t firstUncovered() const noexcept {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (~words_[w] != 0)
                return static_cast<std::uint32_t>(w * 64 +
                                                  std::countr_one(words_[w]));
        return cells_;
    }

    bool canPlace(const std::array<Point, Tile::kPoints>& pts, std::uint32_t origin) const noexcept {
        for (Point p : pts)
            if (test(origin ^ static_cast<std::uint32_t>(p)))
                return false;
        return true;
    }

    void place(const std::array<Point, Tile::kPoints>& pts, std::uint32_t origin) noexcept {
        for (Point p : pts)
            set(origin ^ static_cast<std::uint32_t>(p));
        covered_ += Tile::kPoints;
    }

    void unplace(const std::array<Point, Tile::kPoints>& pts, std::uint32_t origin) noexcept {
        for (Point p : pts)
            clear(origin ^ static_cast<std::uint32_t>(p));
        covered_ -= Tile::kPoints;
    }

private:
    std::vector<std::uint64_t> words_;
    std::uint32_t cells_;
    std::uint32_t covered_ = 0;
};

void checkAmbient(const Tile& d, int n) {
    if (n < 3)
        throw DimensionError("findComplement: 8-point tiles cannot tile F_2^n for n < 3");
    if (n > kMaxAmbient)
        throw SearchLimitError("findComplement: ambient dimension above 20 refused");
    for (Point p : d.points())
        if (n < 64 && (p >> n) != 0)
            throw DimensionError("findComplement: tile point outside F_2^n");
}

struct Frame {
    std::uint32_t cell;  // least uncovered cell when the frame was opened
    int nextChoice;      // next index into the tile's points to branch on
};

// Exact-cover DFS on translates: at each node take the least uncovered
// cell x and branch on the 8 origins c = x + p. Branch order follows the
// ascending point order, which fixes the returned complement.
template <typename OnSolution>
void searchComplements(const Tile& d, int n, OnSolution&& onSolution) {
    const auto& pts = d.points();
    CoverBitmap cover(n);
    std::vector<Point> chosen;
    std::vector<Frame> stack;
    stack.push_back(Frame{cover.firstUncovered(), 0});

    while (!stack.empty()) {
        Frame& frame = stack.back();
        if (frame.nextChoice < Tile::kPoints) {
            const std::uint32_t origin =
                frame.cell ^ static_cast<std::uint32_t>(pts[static_cast<std::size_t>(frame.nextChoice)]);
            ++frame.nextChoice;
            if (!cover.canPlace(pts, origin))
                continue;
            cover.place(pts, origin);
            chosen.push_back(origin);
            if (cover.full()) {
                if (!onSolution(chosen))
                    return;
                cover.unplace(pts, origin);
                chosen.pop_back();
            } else {
                stack.push_back(Frame{cover.firstUncovered(), 0});
            }
        } else {
            stack.pop_back();
            if (!chosen.empty()) {
                cover.unplace(pts, static_cast<std::uint32_t>(chosen.back()));
                chosen.pop_back();
            }
        }
    }
}

} // namespace

std::optional<TilingCertificate> findComplement(const Tile& d, int n) {
    checkAmbient(d, n);
    std::optional<TilingCertificate> result;
    searchComplements(d, n, [&](const std::vector<Point>& chosen) {
        TilingCertificate cert{chosen, n};
        std::sort(cert.complement.begin(), cert.complement.end());
        result = std::move(cert);
        return false; // stop at the first solution
    });
    return result;
}

std::uint64_t countComplements(const Tile& d, int n) {
    checkAmbient(d, n);
    std::uint64_t count = 0;
    searchComplements(d, n, [&](const std::vector<Point>&) {
        ++count;
        return true;
    });
    return count;
}

bool verifyTiling(const Tile& d, const TilingCertificate& cert, int n) {
    if (n < 3 || n > kMaxAmbient || cert.dim != n)
        return false;
    const std::uint64_t cells = std::uint64_t{1} << n;
    if (static_cast<std::uint64_t>(cert.complement.size()) * Tile::kPoints != cells)
        return false;
    for (Point p : d.points())
        if ((p >> n) != 0)
            return false;
    for (Point c : cert.complement)
        if ((c >> n) != 0)
            return false;
    CoverBitmap cover(n);
    for (Point c : cert.complement)
        for (Point p : d.points()) {
            const auto cell = static_cast<std::uint32_t>(c ^ p);
            if (cover.test(cell))
                return false; // some sum repeats
            cover.set(cell);
        }
    return true;
}

} // namespace hamtiles
