#include "gma/walker.hpp"

#include <set>
#include <utility>

namespace gma {

std::vector<std::string> WalkingAutomaton::validate() const {
    std::vector<std::string> diagnostics;
    if (num_states < 1) diagnostics.push_back("walker: at least one state required");
    if (num_symbols < 1) diagnostics.push_back("walker: at least one symbol required");
    if (start_state < 0 || start_state >= num_states)
        diagnostics.push_back("walker: start state out of range");
    if (accepting.size() != static_cast<std::size_t>(num_states))
        diagnostics.push_back("walker: accepting mask size mismatch");
    if (next.size() != static_cast<std::size_t>(num_symbols) ||
        move.size() != static_cast<std::size_t>(num_symbols)) {
        diagnostics.push_back("walker: per-symbol table count mismatch");
        return diagnostics;
    }
    for (int d = 0; d < num_symbols; ++d) {
        const auto& n = next[static_cast<std::size_t>(d)];
        const auto& m = move[static_cast<std::size_t>(d)];
        if (n.size() != static_cast<std::size_t>(num_states) ||
            m.size() != static_cast<std::size_t>(num_states)) {
            diagnostics.push_back("walker: table size mismatch for symbol " + std::to_string(d));
            continue;
        }
        for (int s = 0; s < num_states; ++s) {
            if (n[static_cast<std::size_t>(s)] < 0 || n[static_cast<std::size_t>(s)] >= num_states)
                diagnostics.push_back("walker: successor out of range");
            if (m[static_cast<std::size_t>(s)] < 0 || m[static_cast<std::size_t>(s)] >= marks.size())
                diagnostics.push_back("walker: move mark out of range");
        }
    }
    return diagnostics;
}

WalkerRunResult walker_run(const WalkingAutomaton& walker, const MemoryModel& model,
                           const MemoryContent& content, std::uint64_t budget) {
    WalkerRunResult result;
    int state = walker.start_state;
    CellId cell = model.initial_cell();
    CellId m0 = cell;
    std::set<std::pair<int, CellId>> seen;
    for (;;) {
        if (walker.is_accepting(state)) {
            result.accepted = true;
            return result;
        }
        if (result.steps >= budget) {
            result.steps = budget;
            return result;
        }
        if (!seen.insert({state, cell}).second) {
            result.steps = budget;
            return result;
        }
        int symbol = content.read(cell);
        Mark mark = walker.step_move(symbol, state);
        state = walker.step_state(symbol, state);
        CellId target = model.neighbor(cell, mark);
        if (target == m0 && cell != m0) ++result.return_moves;
        cell = std::move(target);
        ++result.steps;
    }
}

}  // namespace gma
