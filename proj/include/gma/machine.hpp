#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gma/memory.hpp"

namespace gma {

// One transition-table entry: successor state, one move per head, and a
// memory command (kStay or an index into the spec's mark-name list).
constexpr int kStay = -1;

struct Transition {
    int next = 0;
    std::vector<int> moves;  // each in {-1,0,+1}
    int mem_command = kStay;
};

// Finite control of a multi-head 2-way automaton with access to one memory
// cell at a time. The transition table is dense over
// (state, input symbols under the heads, memory symbol); input symbols
// include the endmarkers. Immutable once built.
class AutomatonSpec {
public:
    // Input symbol codes: 0 = left endmarker, 1 = right endmarker, 2+i = alphabet[i].
    static constexpr int kLeftMarker = 0;
    static constexpr int kRightMarker = 1;

    AutomatonSpec(int num_states, int num_heads, std::vector<char> input_alphabet,
                  std::vector<std::string> memory_alphabet, int zero_symbol, int initial_state,
                  std::vector<int> accepting);

    int num_states() const { return num_states_; }
    int num_heads() const { return num_heads_; }
    const std::vector<char>& input_alphabet() const { return input_alphabet_; }
    const std::vector<std::string>& memory_alphabet() const { return memory_alphabet_; }
    int num_memory_symbols() const { return static_cast<int>(memory_alphabet_.size()); }
    int zero_symbol() const { return zero_symbol_; }
    int initial_state() const { return initial_state_; }
    bool is_accepting(int state) const { return accepting_.at(static_cast<std::size_t>(state)) != 0; }
    const std::vector<char>& accepting_mask() const { return accepting_; }

    // Mark names referenced by transitions; resolved against a model by bind_marks.
    const std::vector<std::string>& mark_names() const { return mark_names_; }
    int intern_mark(const std::string& name);

    std::vector<std::string>& state_names() { return state_names_; }
    const std::vector<std::string>& state_names() const { return state_names_; }

    int num_input_codes() const { return 2 + static_cast<int>(input_alphabet_.size()); }
    std::optional<int> input_code(char symbol) const;

    // Flat index of a table tuple. `input_codes` has one code per head.
    std::size_t table_index(int state, const std::vector<int>& input_codes, int mem_symbol) const;
    std::size_t table_size() const;

    void set_transition(int state, const std::vector<int>& input_codes, int mem_symbol,
                        Transition t);
    bool has_transition(std::size_t idx) const { return defined_.at(idx) != 0; }
    const Transition& transition(std::size_t idx) const;

    // Enumerates (state, input codes, mem symbol) for a flat index; used by
    // validation diagnostics and document emission.
    void decode_index(std::size_t idx, int& state, std::vector<int>& input_codes,
                      int& mem_symbol) const;

    std::optional<int> memory_symbol_index(const std::string& name) const;

private:
    int num_states_;
    int num_heads_;
    std::vector<char> input_alphabet_;
    std::vector<std::string> memory_alphabet_;
    int zero_symbol_;
    int initial_state_;
    std::vector<char> accepting_;
    std::vector<std::string> state_names_;
    std::vector<std::string> mark_names_;

    std::vector<Transition> table_;
    std::vector<char> defined_;
};

// Write-once read-many extension: writing states fill fresh cells via the
// filling function. The void symbol is implicit (cells outside the written
// support), not part of the memory alphabet.
struct WormSpec {
    AutomatonSpec base;
    std::vector<char> writing;  // mask over states
    std::vector<int> fill;      // per state; meaningful where writing[q] != 0

    bool is_writing(int state) const { return writing.at(static_cast<std::size_t>(state)) != 0; }
};

struct Configuration {
    int state = 0;
    std::vector<int> heads;  // positions in 0..n+1 over the marked input
    CellId cell;
    std::uint64_t steps = 0;
};

enum class WormErrorKind { WriteConflict, ReadVoid };

struct RunOutcome {
    enum class Kind { Accept, BudgetExhausted, WormError, HeadFault };

    Kind kind = Kind::BudgetExhausted;
    std::uint64_t steps = 0;
    WormErrorKind worm_error = WormErrorKind::WriteConflict;

    bool accepted() const { return kind == Kind::Accept; }

    static RunOutcome accept(std::uint64_t steps) { return {Kind::Accept, steps, {}}; }
    static RunOutcome budget(std::uint64_t steps) { return {Kind::BudgetExhausted, steps, {}}; }
    static RunOutcome worm(WormErrorKind k, std::uint64_t step) { return {Kind::WormError, step, k}; }
    static RunOutcome fault(std::uint64_t step) { return {Kind::HeadFault, step, {}}; }
};

std::string to_string(const RunOutcome& outcome);

struct TraceSummary {
    std::uint64_t steps = 0;
    std::uint64_t return_moves = 0;           // non-stay commands landing on the initial cell
    std::uint64_t distinct_cells = 0;
    std::uint64_t max_new_cells_between_returns = 0;
    int max_head_excursion = 0;
};

struct RunResult {
    RunOutcome outcome;
    TraceSummary trace;
};

// Transition rows resolved against a model's mark set.
std::vector<Mark> bind_marks(const AutomatonSpec& spec, const MemoryModel& model);

// Totality over non-accepting states, mark membership, move ranges.
// Returns an empty list when the spec is well-formed for the model.
std::vector<std::string> validate_spec(const AutomatonSpec& spec, const MemoryModel& model);
std::vector<std::string> validate_worm(const WormSpec& worm, const MemoryModel& model);

Configuration initial_configuration(const AutomatonSpec& spec, const MemoryModel& model,
                                    int input_length);

// One transition application. Returns false on head fault (outcome filled in).
bool step(const AutomatonSpec& spec, const MemoryModel& model, const std::vector<Mark>& binding,
          const MemoryContent& content, const std::string& input, Configuration& config,
          RunOutcome& fault);

// Deterministic run on a fixed guess content. Rejection in the underlying
// model is divergence; the budget turns it into BudgetExhausted. Loops over
// (state, heads, cell) are detected early and reported as budget exhaustion
// with steps equal to the budget.
RunResult run(const AutomatonSpec& spec, const MemoryModel& model, const MemoryContent& content,
              const std::string& input, std::uint64_t budget);

// WORM run from all-void memory. `written` receives the partial content
// (support = cells written; the content default stands for void).
RunResult run_worm(const WormSpec& worm, const MemoryModel& model, const std::string& input,
                   std::uint64_t budget, MemoryContent* written = nullptr);

// Steps sufficient to certify non-acceptance of a WORM run on W15.
std::uint64_t worm_certification_budget(const AutomatonSpec& spec, int input_length);

}  // namespace gma
