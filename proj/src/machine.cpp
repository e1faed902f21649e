#include "gma/machine.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "gma/error.hpp"

namespace gma {

AutomatonSpec::AutomatonSpec(int num_states, int num_heads, std::vector<char> input_alphabet,
                             std::vector<std::string> memory_alphabet, int zero_symbol,
                             int initial_state, std::vector<int> accepting)
    : num_states_(num_states),
      num_heads_(num_heads),
      input_alphabet_(std::move(input_alphabet)),
      memory_alphabet_(std::move(memory_alphabet)),
      zero_symbol_(zero_symbol),
      initial_state_(initial_state) {
    if (num_states_ < 1) throw InputError("spec: at least one state required");
    if (num_heads_ < 1) throw InputError("spec: at least one head required");
    if (memory_alphabet_.empty()) throw InputError("spec: memory alphabet is empty");
    if (zero_symbol_ < 0 || zero_symbol_ >= num_memory_symbols())
        throw InputError("spec: zero symbol out of range");
    if (initial_state_ < 0 || initial_state_ >= num_states_)
        throw InputError("spec: initial state out of range");
    accepting_.assign(static_cast<std::size_t>(num_states_), 0);
    for (int q : accepting) {
        if (q < 0 || q >= num_states_) throw InputError("spec: accepting state out of range");
        accepting_[static_cast<std::size_t>(q)] = 1;
    }
    state_names_.reserve(static_cast<std::size_t>(num_states_));
    for (int q = 0; q < num_states_; ++q) state_names_.push_back("q" + std::to_string(q));
    table_.resize(table_size());
    defined_.assign(table_size(), 0);
}

int AutomatonSpec::intern_mark(const std::string& name) {
    for (std::size_t i = 0; i < mark_names_.size(); ++i) {
        if (mark_names_[i] == name) return static_cast<int>(i);
    }
    mark_names_.push_back(name);
    return static_cast<int>(mark_names_.size()) - 1;
}

std::optional<int> AutomatonSpec::input_code(char symbol) const {
    for (std::size_t i = 0; i < input_alphabet_.size(); ++i) {
        if (input_alphabet_[i] == symbol) return 2 + static_cast<int>(i);
    }
    return std::nullopt;
}

std::size_t AutomatonSpec::table_size() const {
    std::size_t size = static_cast<std::size_t>(num_states_);
    for (int j = 0; j < num_heads_; ++j) size *= static_cast<std::size_t>(num_input_codes());
    return size * static_cast<std::size_t>(num_memory_symbols());
}

std::size_t AutomatonSpec::table_index(int state, const std::vector<int>& input_codes,
                                       int mem_symbol) const {
    std::size_t idx = static_cast<std::size_t>(state);
    for (int code : input_codes) idx = idx * static_cast<std::size_t>(num_input_codes()) +
                                        static_cast<std::size_t>(code);
    return idx * static_cast<std::size_t>(num_memory_symbols()) + static_cast<std::size_t>(mem_symbol);
}

void AutomatonSpec::decode_index(std::size_t idx, int& state, std::vector<int>& input_codes,
                                 int& mem_symbol) const {
    mem_symbol = static_cast<int>(idx % static_cast<std::size_t>(num_memory_symbols()));
    idx /= static_cast<std::size_t>(num_memory_symbols());
    input_codes.assign(static_cast<std::size_t>(num_heads_), 0);
    for (int j = num_heads_ - 1; j >= 0; --j) {
        input_codes[static_cast<std::size_t>(j)] =
            static_cast<int>(idx % static_cast<std::size_t>(num_input_codes()));
        idx /= static_cast<std::size_t>(num_input_codes());
    }
    state = static_cast<int>(idx);
}

void AutomatonSpec::set_transition(int state, const std::vector<int>& input_codes, int mem_symbol,
                                   Transition t) {
    if (static_cast<int>(t.moves.size()) != num_heads_)
        throw InputError("transition: one move per head required");
    std::size_t idx = table_index(state, input_codes, mem_symbol);
    table_[idx] = std::move(t);
    defined_[idx] = 1;
}

const Transition& AutomatonSpec::transition(std::size_t idx) const {
    return table_.at(idx);
}

std::optional<int> AutomatonSpec::memory_symbol_index(const std::string& name) const {
    for (std::size_t i = 0; i < memory_alphabet_.size(); ++i) {
        if (memory_alphabet_[i] == name) return static_cast<int>(i);
    }
    return std::nullopt;
}

std::string to_string(const RunOutcome& outcome) {
    std::ostringstream os;
    switch (outcome.kind) {
        case RunOutcome::Kind::Accept:
            os << "ACCEPT steps=" << outcome.steps;
            break;
        case RunOutcome::Kind::BudgetExhausted:
            os << "BUDGET-EXHAUSTED steps=" << outcome.steps;
            break;
        case RunOutcome::Kind::WormError:
            os << "WORM-ERROR kind="
               << (outcome.worm_error == WormErrorKind::WriteConflict ? "write-conflict"
                                                                      : "read-void")
               << " step=" << outcome.steps;
            break;
        case RunOutcome::Kind::HeadFault:
            os << "HEAD-FAULT step=" << outcome.steps;
            break;
    }
    return os.str();
}

std::vector<Mark> bind_marks(const AutomatonSpec& spec, const MemoryModel& model) {
    std::vector<Mark> binding;
    binding.reserve(spec.mark_names().size());
    for (const auto& name : spec.mark_names()) {
        auto mark = model.marks().find(name);
        if (!mark) throw InputError("mark '" + name + "' not in the model's mark set");
        binding.push_back(*mark);
    }
    return binding;
}

namespace {

std::string describe_tuple(const AutomatonSpec& spec, int state, const std::vector<int>& codes,
                           int mem) {
    std::ostringstream os;
    os << "(" << spec.state_names()[static_cast<std::size_t>(state)] << ", inputs=[";
    for (std::size_t j = 0; j < codes.size(); ++j) {
        if (j) os << ' ';
        int c = codes[j];
        if (c == AutomatonSpec::kLeftMarker) os << '<';
        else if (c == AutomatonSpec::kRightMarker) os << '>';
        else os << spec.input_alphabet()[static_cast<std::size_t>(c - 2)];
    }
    os << "], memory=" << spec.memory_alphabet()[static_cast<std::size_t>(mem)] << ")";
    return os.str();
}

}  // namespace

std::vector<std::string> validate_spec(const AutomatonSpec& spec, const MemoryModel& model) {
    std::vector<std::string> diagnostics;
    for (const auto& name : spec.mark_names()) {
        if (!model.marks().find(name)) {
            diagnostics.push_back("mark '" + name + "' not in G for model " +
                                  to_string(model.kind()));
        }
    }
    std::vector<int> codes;
    for (std::size_t idx = 0; idx < spec.table_size(); ++idx) {
        int state, mem;
        spec.decode_index(idx, state, codes, mem);
        if (spec.is_accepting(state)) continue;
        if (!spec.has_transition(idx)) {
            diagnostics.push_back("missing transition for " + describe_tuple(spec, state, codes, mem));
            continue;
        }
        const Transition& t = spec.transition(idx);
        if (t.next < 0 || t.next >= spec.num_states()) {
            diagnostics.push_back("successor out of range at " + describe_tuple(spec, state, codes, mem));
        }
        for (int mv : t.moves) {
            if (mv < -1 || mv > 1) {
                diagnostics.push_back("head move out of {-1,0,+1} at " +
                                      describe_tuple(spec, state, codes, mem));
                break;
            }
        }
        if (t.mem_command != kStay &&
            (t.mem_command < 0 || t.mem_command >= static_cast<int>(spec.mark_names().size()))) {
            diagnostics.push_back("memory command out of range at " +
                                  describe_tuple(spec, state, codes, mem));
        }
    }
    return diagnostics;
}

std::vector<std::string> validate_worm(const WormSpec& worm, const MemoryModel& model) {
    std::vector<std::string> diagnostics = validate_spec(worm.base, model);
    if (worm.writing.size() != static_cast<std::size_t>(worm.base.num_states()))
        diagnostics.push_back("writing mask size differs from the state count");
    if (worm.fill.size() != static_cast<std::size_t>(worm.base.num_states()))
        diagnostics.push_back("filling function size differs from the state count");
    for (int q = 0; q < worm.base.num_states(); ++q) {
        if (!worm.is_writing(q)) continue;
        int d = worm.fill.at(static_cast<std::size_t>(q));
        if (d < 0 || d >= worm.base.num_memory_symbols()) {
            diagnostics.push_back("filling function value out of the memory alphabet for state " +
                                  worm.base.state_names()[static_cast<std::size_t>(q)]);
        }
    }
    return diagnostics;
}

Configuration initial_configuration(const AutomatonSpec& spec, const MemoryModel& model,
                                    int input_length) {
    Configuration config;
    config.state = spec.initial_state();
    config.heads.assign(static_cast<std::size_t>(spec.num_heads()), 1);
    config.cell = model.initial_cell();
    config.steps = 0;
    (void)input_length;
    return config;
}

namespace {

int symbol_code_at(const AutomatonSpec& spec, const std::string& input, int pos) {
    if (pos == 0) return AutomatonSpec::kLeftMarker;
    if (pos == static_cast<int>(input.size()) + 1) return AutomatonSpec::kRightMarker;
    auto code = spec.input_code(input[static_cast<std::size_t>(pos - 1)]);
    if (!code) throw InputError(std::string("input symbol '") +
                                input[static_cast<std::size_t>(pos - 1)] + "' not in the alphabet");
    return *code;
}

}  // namespace

bool step(const AutomatonSpec& spec, const MemoryModel& model, const std::vector<Mark>& binding,
          const MemoryContent& content, const std::string& input, Configuration& config,
          RunOutcome& fault) {
    int n = static_cast<int>(input.size());
    std::vector<int> codes(static_cast<std::size_t>(spec.num_heads()));
    for (int j = 0; j < spec.num_heads(); ++j) {
        codes[static_cast<std::size_t>(j)] = symbol_code_at(spec, input, config.heads[static_cast<std::size_t>(j)]);
    }
    int mem = content.read(config.cell);
    std::size_t idx = spec.table_index(config.state, codes, mem);
    const Transition& t = spec.transition(idx);
    config.state = t.next;
    for (int j = 0; j < spec.num_heads(); ++j) {
        int& pos = config.heads[static_cast<std::size_t>(j)];
        pos += t.moves[static_cast<std::size_t>(j)];
        if (pos < 0 || pos > n + 1) {
            fault = RunOutcome::fault(config.steps + 1);
            return false;
        }
    }
    if (t.mem_command != kStay) {
        config.cell = model.neighbor(config.cell, binding[static_cast<std::size_t>(t.mem_command)]);
    }
    ++config.steps;
    return true;
}

namespace {

// Exact configuration key for loop detection; repeats imply divergence
// because the content is read-only (or write-once with the support size
// folded into the key).
std::vector<std::int64_t> config_key(const Configuration& config, std::uint64_t support_size) {
    std::vector<std::int64_t> key;
    key.reserve(2 + config.heads.size() + config.cell.coords.size());
    key.push_back(config.state);
    for (int h : config.heads) key.push_back(h);
    for (std::int64_t c : config.cell.coords) key.push_back(c);
    key.push_back(static_cast<std::int64_t>(support_size));
    return key;
}

struct TraceAccumulator {
    std::set<CellId> visited;
    std::uint64_t segment_new_cells = 0;
    TraceSummary trace;

    void visit_cell(const CellId& cell) {
        if (visited.insert(cell).second) ++segment_new_cells;
        trace.distinct_cells = visited.size();
        trace.max_new_cells_between_returns =
            std::max(trace.max_new_cells_between_returns, segment_new_cells);
    }

    void note_heads(const Configuration& config) {
        for (int h : config.heads) trace.max_head_excursion = std::max(trace.max_head_excursion, h);
    }

    void note_return() {
        ++trace.return_moves;
        segment_new_cells = 0;
    }
};

}  // namespace

RunResult run(const AutomatonSpec& spec, const MemoryModel& model, const MemoryContent& content,
              const std::string& input, std::uint64_t budget) {
    std::vector<Mark> binding = bind_marks(spec, model);
    Configuration config = initial_configuration(spec, model, static_cast<int>(input.size()));
    CellId m0 = model.initial_cell();

    TraceAccumulator acc;
    acc.visit_cell(config.cell);
    acc.note_heads(config);

    std::set<std::vector<std::int64_t>> seen;
    RunResult result;
    for (;;) {
        if (spec.is_accepting(config.state)) {
            result.outcome = RunOutcome::accept(config.steps);
            break;
        }
        if (config.steps >= budget) {
            result.outcome = RunOutcome::budget(config.steps);
            break;
        }
        if (!seen.insert(config_key(config, 0)).second) {
            result.outcome = RunOutcome::budget(budget);
            break;
        }
        CellId before = config.cell;
        RunOutcome fault;
        if (!step(spec, model, binding, content, input, config, fault)) {
            result.outcome = fault;
            break;
        }
        if (config.cell != before && config.cell == m0) acc.note_return();
        acc.visit_cell(config.cell);
        acc.note_heads(config);
    }
    acc.trace.steps = result.outcome.steps;
    result.trace = acc.trace;
    return result;
}

RunResult run_worm(const WormSpec& worm, const MemoryModel& model, const std::string& input,
                   std::uint64_t budget, MemoryContent* written) {
    const AutomatonSpec& spec = worm.base;
    std::vector<Mark> binding = bind_marks(spec, model);
    Configuration config = initial_configuration(spec, model, static_cast<int>(input.size()));
    CellId m0 = model.initial_cell();

    constexpr int kVoid = -1;
    MemoryContent content(kVoid);

    TraceAccumulator acc;
    acc.visit_cell(config.cell);
    acc.note_heads(config);

    std::set<std::vector<std::int64_t>> seen;
    RunResult result;
    for (;;) {
        // The filling function applies on entering a cell in a writing
        // state, before the transition function is consulted. Writing the
        // symbol a cell already holds is not an error.
        if (worm.is_writing(config.state) && !spec.is_accepting(config.state)) {
            int held = content.read(config.cell);
            int wanted = worm.fill[static_cast<std::size_t>(config.state)];
            if (held == kVoid) {
                content.set(config.cell, wanted);
            } else if (held != wanted) {
                result.outcome = RunOutcome::worm(WormErrorKind::WriteConflict, config.steps);
                break;
            }
        }
        if (spec.is_accepting(config.state)) {
            result.outcome = RunOutcome::accept(config.steps);
            break;
        }
        if (content.read(config.cell) == kVoid) {
            result.outcome = RunOutcome::worm(WormErrorKind::ReadVoid, config.steps);
            break;
        }
        if (config.steps >= budget) {
            result.outcome = RunOutcome::budget(config.steps);
            break;
        }
        if (!seen.insert(config_key(config, content.support_size())).second) {
            result.outcome = RunOutcome::budget(budget);
            break;
        }
        CellId before = config.cell;
        RunOutcome fault;
        if (!step(spec, model, binding, content, input, config, fault)) {
            result.outcome = fault;
            break;
        }
        if (config.cell != before && config.cell == m0) acc.note_return();
        acc.visit_cell(config.cell);
        acc.note_heads(config);
    }
    acc.trace.steps = result.outcome.steps;
    result.trace = acc.trace;
    if (written) *written = content;
    return result;
}

std::uint64_t worm_certification_budget(const AutomatonSpec& spec, int input_length) {
    std::uint64_t surface = 1;
    for (int j = 0; j < spec.num_heads(); ++j) surface *= static_cast<std::uint64_t>(input_length + 2);
    std::uint64_t states = static_cast<std::uint64_t>(spec.num_states());
    return surface * surface * states * states + 1;
}

}  // namespace gma
