#include "hamtiles/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "hamtiles/errors.hpp"

namespace hamtiles {

namespace {

constexpr int kMaxDegree = 7;

void checkDegree(int degree) {
    if (degree < 0 || degree > kMaxDegree)
        throw DimensionError("Permutation: degree must be in [0, 7]");
}

} // namespace

Permutation::Permutation(int degree) {
    checkDegree(degree);
    images_.resize(static_cast<std::size_t>(degree));
    std::iota(images_.begin(), images_.end(), std::uint8_t{1});
}

Permutation Permutation::fromImages(std::vector<std::uint8_t> images) {
    checkDegree(static_cast<int>(images.size()));
    const int n = static_cast<int>(images.size());
    unsigned seen = 0;
    for (std::uint8_t v : images) {
        if (v < 1 || v > n || (seen >> v) & 1u)
            throw DimensionError("Permutation: images must be a bijection of {1..n}");
        seen |= 1u << v;
    }
    Permutation p(0);
    p.images_ = std::move(images);
    return p;
}

bool Permutation::isIdentity() const noexcept {
    for (int i = 1; i <= degree(); ++i)
        if ((*this)(i) != i)
            return false;
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<std::uint8_t> inv(images_.size());
    for (int i = 1; i <= degree(); ++i)
        inv[static_cast<std::size_t>((*this)(i)) - 1] = static_cast<std::uint8_t>(i);
    Permutation p(0);
    p.images_ = std::move(inv);
    return p;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
    if (outer.degree() != inner.degree())
        throw DimensionError("compose: degrees differ");
    std::vector<std::uint8_t> images(static_cast<std::size_t>(outer.degree()));
    for (int i = 1; i <= outer.degree(); ++i)
        images[static_cast<std::size_t>(i) - 1] = static_cast<std::uint8_t>(outer(inner(i)));
    return Permutation::fromImages(std::move(images));
}

Permutation parseCycles(std::string_view text, int degree, CycleComposition order) {
    if (degree < 1 || degree > kMaxDegree)
        throw DimensionError("parseCycles: degree must be in [1, 7]");

    std::vector<std::vector<int>> cycles;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] != '(')
            throw ParseError("parseCycles: expected '('");
        ++i;
        std::vector<int> cycle;
        unsigned seen = 0;
        while (i < text.size() && text[i] != ')') {
            const char c = text[i];
            if (c < '1' || c > '9')
                throw ParseError("parseCycles: expected digit 1..7 or ')'");
            const int v = c - '0';
            if (v > degree)
                throw ParseError("parseCycles: digit exceeds degree");
            if ((seen >> v) & 1u)
                throw ParseError("parseCycles: repeated digit within a cycle");
            seen |= 1u << v;
            cycle.push_back(v);
            ++i;
        }
        if (i == text.size())
            throw ParseError("parseCycles: unterminated cycle");
        ++i; // ')'
        if (!cycle.empty())
            cycles.push_back(std::move(cycle));
    }

    Permutation result(degree);
    auto asPermutation = [degree](const std::vector<int>& cycle) {
        Permutation p(degree);
        std::vector<std::uint8_t> images = p.images();
        for (std::size_t k = 0; k < cycle.size(); ++k) {
            const int from = cycle[k];
            const int to = cycle[(k + 1) % cycle.size()];
            images[static_cast<std::size_t>(from) - 1] = static_cast<std::uint8_t>(to);
        }
        return Permutation::fromImages(std::move(images));
    };
    for (const auto& cycle : cycles) {
        const Permutation c = asPermutation(cycle);
        result = order == CycleComposition::rightToLeft ? compose(result, c)
                                                        : compose(c, result);
    }
    return result;
}

std::string formatCycles(const Permutation& p) {
    std::string out;
    std::vector<bool> done(static_cast<std::size_t>(p.degree()) + 1, false);
    for (int start = 1; start <= p.degree(); ++start) {
        if (done[static_cast<std::size_t>(start)] || p(start) == start)
            continue;
        out += '(';
        int cur = start;
        do {
            done[static_cast<std::size_t>(cur)] = true;
            out += static_cast<char>('0' + cur);
            cur = p(cur);
        } while (cur != start);
        out += ')';
    }
    if (out.empty())
        return "()";
    return out;
}

Point permutePoint(const Permutation& p, Point v) noexcept {
    Point out = 0;
    for (int i = 1; i <= p.degree(); ++i)
        if ((v >> (i - 1)) & 1u)
            out |= unitVector(p(i));
    return out;
}

} // namespace hamtiles
