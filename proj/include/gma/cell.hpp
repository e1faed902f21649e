#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace gma {

// Canonical memory-cell identifier. Tape models use a single coordinate,
// the grid uses two, rank-d lattices use d. Equal cells always compare
// equal, so route bookkeeping can key on CellId directly.
struct CellId {
    std::vector<std::int64_t> coords;

    CellId() = default;
    explicit CellId(std::int64_t i) : coords{i} {}
    CellId(std::int64_t x, std::int64_t y) : coords{x, y} {}
    explicit CellId(std::vector<std::int64_t> c) : coords(std::move(c)) {}

    std::int64_t index() const { return coords.at(0); }

    bool operator==(const CellId&) const = default;
    auto operator<=>(const CellId&) const = default;
};

struct CellIdHash {
    std::size_t operator()(const CellId& c) const {
        std::size_t h = 0x9e3779b97f4a7c15ull ^ c.coords.size();
        for (std::int64_t v : c.coords) {
            h ^= std::hash<std::int64_t>{}(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

std::string to_string(const CellId& c);

}  // namespace gma
