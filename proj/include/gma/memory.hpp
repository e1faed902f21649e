#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gma/cell.hpp"

namespace gma {

// Index into a model's mark set.
using Mark = int;

struct MarkSet {
    std::vector<std::string> names;

    int size() const { return static_cast<int>(names.size()); }
    std::optional<Mark> find(const std::string& name) const;
    const std::string& name(Mark m) const { return names.at(static_cast<std::size_t>(m)); }
};

enum class ModelKind {
    W1,            // one-way tape, marks {+}
    W2,            // two-way tape, marks {+,-}
    W15,           // one-way tape with a reset edge to the initial cell, marks {+,-}
    PerversedW15,  // W15 graph with the +/- marking swapped at cells whose omega bit is 0
    Z2,            // integer grid, marks {E,W,N,S}
    FreeAbelian,   // rank-d lattice, marks {+1,-1,...,+d,-d}
};

// A memory graph: every cell has exactly one successor per mark.
// Models are immutable after construction and safe to share.
class MemoryModel {
public:
    static MemoryModel w1();
    static MemoryModel w2();
    static MemoryModel w15();
    // omega_prefix holds the low-index bits (bit i covers the 1-indexed
    // position i+1); cells past the prefix use omega_default.
    static MemoryModel perversed_w15(std::vector<bool> omega_prefix, bool omega_default);
    static MemoryModel z2();
    static MemoryModel free_abelian(int rank);

    ModelKind kind() const { return kind_; }
    const MarkSet& marks() const { return marks_; }
    CellId initial_cell() const;
    bool is_tape() const;

    // Total: the unique successor of `cell` along `mark`.
    CellId neighbor(const CellId& cell, Mark mark) const;

    // 1-indexed omega bit for the perversed model.
    bool omega_bit(std::int64_t position) const;

    const std::vector<bool>& omega_prefix() const { return omega_prefix_; }
    bool omega_default() const { return omega_default_; }
    int rank() const { return rank_; }

private:
    MemoryModel(ModelKind kind, MarkSet marks) : kind_(kind), marks_(std::move(marks)) {}

    ModelKind kind_;
    MarkSet marks_;
    std::vector<bool> omega_prefix_;
    bool omega_default_ = true;
    int rank_ = 1;
};

const char* to_string(ModelKind kind);
std::optional<ModelKind> model_kind_from_string(const std::string& s);

// Finite-support assignment of symbols to cells over a default symbol.
// Stored entries never equal the default.
class MemoryContent {
public:
    explicit MemoryContent(int default_symbol = 0) : default_(default_symbol) {}

    int default_symbol() const { return default_; }
    int read(const CellId& cell) const;
    void set(const CellId& cell, int symbol);
    const std::map<CellId, int>& support() const { return support_; }
    std::size_t support_size() const { return support_.size(); }

    bool operator==(const MemoryContent&) const = default;

private:
    int default_;
    std::map<CellId, int> support_;
};

// Sequential read cursor over a tape content. advance() is O(1) amortized,
// which matters for the long unary scans in the history verifier.
class TapeContentCursor {
public:
    explicit TapeContentCursor(const MemoryContent& content);

    void reset();
    void advance();
    int read() const;
    std::int64_t position() const { return pos_; }

private:
    const MemoryContent* content_;
    std::vector<std::pair<std::int64_t, int>> cells_;  // sorted by index, non-negative only
    std::size_t cursor_ = 0;
    std::int64_t pos_ = 0;
};

struct GuessConstraint {
    enum class Kind { Unrestricted, Sparse };

    Kind kind = Kind::Unrestricted;
    int max_nonzero = 0;  // Sparse only
    int zero_symbol = 0;  // Sparse only

    static GuessConstraint unrestricted() { return {}; }
    static GuessConstraint sparse(int k, int zero_symbol) {
        return {Kind::Sparse, k, zero_symbol};
    }

    bool satisfied_by(const MemoryContent& content) const;
};

// Cells visited by a route from the initial cell, plus the partition of
// route positions into classes that share a cell (ordered by first visit).
struct RouteTrace {
    std::vector<CellId> cells;
    std::vector<std::vector<int>> classes;
};

RouteTrace route_cells(const MemoryModel& model, const std::vector<Mark>& route);

}  // namespace gma
