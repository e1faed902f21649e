#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gma/memory.hpp"

namespace gma {

// Finite automaton whose only action is moving on the memory graph: at a
// non-accepting state it reads the current cell's symbol d, switches to
// next[d][s] and moves along move[d][s]. Accepting states absorb. The
// dead state absorbs, never accepts, and keeps moving along mark 0.
struct WalkingAutomaton {
    int num_states = 0;
    int num_symbols = 0;
    int start_state = 0;
    int dead_state = -1;  // -1 when absent
    std::vector<char> accepting;
    std::vector<std::vector<int>> next;   // [symbol][state]
    std::vector<std::vector<Mark>> move;  // [symbol][state]
    MarkSet marks;
    std::vector<std::string> state_labels;

    bool is_accepting(int s) const { return accepting.at(static_cast<std::size_t>(s)) != 0; }
    int step_state(int symbol, int state) const {
        return next.at(static_cast<std::size_t>(symbol)).at(static_cast<std::size_t>(state));
    }
    Mark step_move(int symbol, int state) const {
        return move.at(static_cast<std::size_t>(symbol)).at(static_cast<std::size_t>(state));
    }

    // Structural checks (table shapes, ranges); empty when well-formed.
    std::vector<std::string> validate() const;
};

struct WalkerRunResult {
    bool accepted = false;
    std::uint64_t steps = 0;
    std::uint64_t return_moves = 0;  // landings on the initial cell
};

// Direct simulation on a content over a model whose marks match the
// walker's. Divergence is cut off by the budget; loops over
// (state, cell) are detected early.
WalkerRunResult walker_run(const WalkingAutomaton& walker, const MemoryModel& model,
                           const MemoryContent& content, std::uint64_t budget);

}  // namespace gma
