#include "gma/memory.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "gma/error.hpp"

namespace gma {

std::string to_string(const CellId& c) {
    std::ostringstream os;
    for (std::size_t i = 0; i < c.coords.size(); ++i) {
        if (i) os << ',';
        os << c.coords[i];
    }
    return os.str();
}

std::optional<Mark> MarkSet::find(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i] == name) return static_cast<Mark>(i);
    }
    return std::nullopt;
}

MemoryModel MemoryModel::w1() { return MemoryModel(ModelKind::W1, MarkSet{{"+"}}); }

MemoryModel MemoryModel::w2() { return MemoryModel(ModelKind::W2, MarkSet{{"+", "-"}}); }

MemoryModel MemoryModel::w15() { return MemoryModel(ModelKind::W15, MarkSet{{"+", "-"}}); }

MemoryModel MemoryModel::perversed_w15(std::vector<bool> omega_prefix, bool omega_default) {
    MemoryModel m(ModelKind::PerversedW15, MarkSet{{"+", "-"}});
    m.omega_prefix_ = std::move(omega_prefix);
    m.omega_default_ = omega_default;
    return m;
}

MemoryModel MemoryModel::z2() { return MemoryModel(ModelKind::Z2, MarkSet{{"E", "W", "N", "S"}}); }

MemoryModel MemoryModel::free_abelian(int rank) {
    if (rank < 1) throw InputError("free_abelian: rank must be >= 1");
    MarkSet marks;
    for (int i = 1; i <= rank; ++i) {
        marks.names.push_back("+" + std::to_string(i));
        marks.names.push_back("-" + std::to_string(i));
    }
    MemoryModel m(ModelKind::FreeAbelian, std::move(marks));
    m.rank_ = rank;
    return m;
}

CellId MemoryModel::initial_cell() const {
    switch (kind_) {
        case ModelKind::W1:
        case ModelKind::W2:
        case ModelKind::W15:
        case ModelKind::PerversedW15:
            return CellId(std::int64_t{0});
        case ModelKind::Z2:
            return CellId(std::int64_t{0}, std::int64_t{0});
        case ModelKind::FreeAbelian:
            return CellId(std::vector<std::int64_t>(static_cast<std::size_t>(rank_), 0));
    }
    throw InputError("initial_cell: unknown model kind");
}

bool MemoryModel::is_tape() const {
    return kind_ == ModelKind::W1 || kind_ == ModelKind::W2 || kind_ == ModelKind::W15 ||
           kind_ == ModelKind::PerversedW15;
}

bool MemoryModel::omega_bit(std::int64_t position) const {
    if (position < 1) throw InputError("omega_bit: positions are 1-indexed");
    std::size_t idx = static_cast<std::size_t>(position - 1);
    if (idx < omega_prefix_.size()) return omega_prefix_[idx];
    return omega_default_;
}

CellId MemoryModel::neighbor(const CellId& cell, Mark mark) const {
    if (mark < 0 || mark >= marks_.size()) throw InputError("neighbor: mark not in G");
    switch (kind_) {
        case ModelKind::W1:
            return CellId(cell.index() + 1);
        case ModelKind::W2:
            return CellId(mark == 0 ? cell.index() + 1 : cell.index() - 1);
        case ModelKind::W15: {
            // '-' returns to the initial cell; at the initial cell it is a self-loop.
            if (mark == 0) return CellId(cell.index() + 1);
            return CellId(std::int64_t{0});
        }
        case ModelKind::PerversedW15: {
            std::int64_t n = cell.index();
            // The vertex's two edges go right and home. The '+' mark sits on
            // the right edge iff the omega bit of the vertex is 1.
            bool plus_goes_right = omega_bit(n + 1);
            bool go_right = (mark == 0) == plus_goes_right;
            return go_right ? CellId(n + 1) : CellId(std::int64_t{0});
        }
        case ModelKind::Z2: {
            std::int64_t x = cell.coords.at(0), y = cell.coords.at(1);
            switch (mark) {
                case 0: return CellId(x + 1, y);  // E
                case 1: return CellId(x - 1, y);  // W
                case 2: return CellId(x, y + 1);  // N
                default: return CellId(x, y - 1); // S
            }
        }
        case ModelKind::FreeAbelian: {
            CellId out = cell;
            std::size_t axis = static_cast<std::size_t>(mark) / 2;
            out.coords.at(axis) += (mark % 2 == 0) ? 1 : -1;
            return out;
        }
    }
    throw InputError("neighbor: unknown model kind");
}

const char* to_string(ModelKind kind) {
    switch (kind) {
        case ModelKind::W1: return "w1";
        case ModelKind::W2: return "w2";
        case ModelKind::W15: return "w15";
        case ModelKind::PerversedW15: return "perversed_w15";
        case ModelKind::Z2: return "z2";
        case ModelKind::FreeAbelian: return "free_abelian";
    }
    return "?";
}

std::optional<ModelKind> model_kind_from_string(const std::string& s) {
    if (s == "w1") return ModelKind::W1;
    if (s == "w2") return ModelKind::W2;
    if (s == "w15") return ModelKind::W15;
    if (s == "perversed_w15") return ModelKind::PerversedW15;
    if (s == "z2") return ModelKind::Z2;
    if (s == "free_abelian") return ModelKind::FreeAbelian;
    return std::nullopt;
}

int MemoryContent::read(const CellId& cell) const {
    auto it = support_.find(cell);
    return it == support_.end() ? default_ : it->second;
}

void MemoryContent::set(const CellId& cell, int symbol) {
    if (symbol == default_) {
        support_.erase(cell);
    } else {
        support_[cell] = symbol;
    }
}

TapeContentCursor::TapeContentCursor(const MemoryContent& content) : content_(&content) {
    cells_.reserve(content.support().size());
    for (const auto& [cell, sym] : content.support()) {
        if (cell.coords.size() == 1 && cell.index() >= 0) cells_.emplace_back(cell.index(), sym);
    }
    // std::map iteration over single-coordinate cells is already sorted.
}

void TapeContentCursor::reset() {
    cursor_ = 0;
    pos_ = 0;
}

void TapeContentCursor::advance() {
    ++pos_;
    while (cursor_ < cells_.size() && cells_[cursor_].first < pos_) ++cursor_;
}

int TapeContentCursor::read() const {
    if (cursor_ < cells_.size() && cells_[cursor_].first == pos_) return cells_[cursor_].second;
    return content_->default_symbol();
}

bool GuessConstraint::satisfied_by(const MemoryContent& content) const {
    if (kind == Kind::Unrestricted) return true;
    std::size_t nonzero = 0;
    for (const auto& [cell, sym] : content.support()) {
        if (sym != zero_symbol) ++nonzero;
    }
    if (content.default_symbol() != zero_symbol) return false;
    return nonzero <= static_cast<std::size_t>(max_nonzero);
}

RouteTrace route_cells(const MemoryModel& model, const std::vector<Mark>& route) {
    RouteTrace trace;
    trace.cells.reserve(route.size() + 1);
    trace.cells.push_back(model.initial_cell());
    for (Mark m : route) {
        trace.cells.push_back(model.neighbor(trace.cells.back(), m));
    }
    std::map<CellId, int> class_of;
    for (int i = 0; i < static_cast<int>(trace.cells.size()); ++i) {
        auto [it, fresh] = class_of.try_emplace(trace.cells[i], static_cast<int>(trace.classes.size()));
        if (fresh) trace.classes.emplace_back();
        trace.classes[static_cast<std::size_t>(it->second)].push_back(i);
    }
    return trace;
}

}  // namespace gma
