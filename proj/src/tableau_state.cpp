#include "ytab/tableau_state.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ytab {

HeightState::HeightState(double r) : r_(r) {
    if (!(r > 0.0)) throw std::invalid_argument("HeightState: r must be positive");
}

HeightState::HeightState(double r, const std::vector<std::pair<Cell, double>>& cells)
    : HeightState(r) {
    for (const auto& [c, v] : cells) {
        if (c.i < 1 || c.j < 1)
            throw std::invalid_argument("HeightState: invalid cell");
        if (c.i > static_cast<int>(rows_.size())) rows_.resize(c.i);
        auto& row = rows_[c.i - 1];
        if (c.j > static_cast<int>(row.size())) row.resize(c.j, -1.0);
        row[c.j - 1] = v;
    }
    for (const auto& row : rows_)
        for (double v : row)
            if (v < 0.0)
                throw std::invalid_argument("HeightState: cells do not form a diagram");
    validate();
}

int HeightState::support_size() const {
    int n = 0;
    for (const auto& row : rows_) n += static_cast<int>(row.size());
    return n;
}

YoungDiagram HeightState::shape() const {
    std::vector<int> rows;
    rows.reserve(rows_.size());
    for (const auto& row : rows_) rows.push_back(static_cast<int>(row.size()));
    return YoungDiagram(std::move(rows));
}

std::vector<Cell> HeightState::active_cells() const {
    std::vector<Cell> out;
    for (int i = 1; i <= static_cast<int>(rows_.size()); ++i)
        for (int j = 1; j <= static_cast<int>(rows_[i - 1].size()); ++j)
            out.push_back({i, j});
    for (Cell c : shape().addable_corners()) out.push_back(c);
    std::sort(out.begin(), out.end());
    return out;
}

void HeightState::set_height(Cell c, double v) {
    if (!(v > 0.0 && v < r_))
        throw std::invalid_argument("set_height: value outside (0, r)");
    if (supported(c)) {
        rows_[c.i - 1][c.j - 1] = v;
        return;
    }
    if (!shape().is_addable(c))
        throw std::invalid_argument("set_height: cell is not in the support nor addable");
    if (c.i > static_cast<int>(rows_.size())) rows_.emplace_back();
    rows_[c.i - 1].push_back(v);
}

void HeightState::remove(Cell c) {
    if (!shape().is_removable(c))
        throw std::invalid_argument("remove: not a removable corner");
    rows_[c.i - 1].pop_back();
    if (rows_[c.i - 1].empty()) rows_.pop_back();
}

HeightState HeightState::truncate(double r_new) const {
    if (!(r_new > 0.0) || r_new > r_)
        throw std::invalid_argument("truncate: need 0 < r_new <= r");
    HeightState out(r_new);
    for (int i = 1; i <= static_cast<int>(rows_.size()); ++i) {
        std::vector<double> row;
        for (double v : rows_[i - 1]) {
            if (v < r_new) row.push_back(v); else break;
        }
        if (!row.empty()) out.rows_.push_back(std::move(row));
    }
    return out;
}

HeightState::Ranked HeightState::to_ranked_tableau() const {
    const YoungDiagram sh = shape();
    std::vector<std::pair<double, Cell>> order;
    order.reserve(sh.size());
    for (int i = 1; i <= static_cast<int>(rows_.size()); ++i)
        for (int j = 1; j <= static_cast<int>(rows_[i - 1].size()); ++j)
            order.push_back({rows_[i - 1][j - 1], Cell{i, j}});
    std::sort(order.begin(), order.end());

    std::vector<std::vector<int>> entries(sh.num_rows());
    for (int i = 1; i <= sh.num_rows(); ++i) entries[i - 1].assign(sh.row(i), 0);
    std::vector<double> sorted;
    sorted.reserve(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
        const Cell c = order[k].second;
        entries[c.i - 1][c.j - 1] = static_cast<int>(k) + 1;
        sorted.push_back(order[k].first);
    }
    return Ranked{sh, StandardTableau(sh, std::move(entries)), std::move(sorted)};
}

void HeightState::validate() const {
    const auto fail = [](const char* msg) { throw std::logic_error(msg); };
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i].empty()) fail("HeightState: empty stored row");
        if (i > 0 && rows_[i].size() > rows_[i - 1].size())
            fail("HeightState: support is not a Young diagram");
        for (std::size_t j = 0; j < rows_[i].size(); ++j) {
            const double v = rows_[i][j];
            if (!(v > 0.0 && v < r_)) fail("HeightState: height outside (0, r)");
            if (j > 0 && !(rows_[i][j - 1] < v)) fail("HeightState: rows must increase");
            if (i > 0 && !(rows_[i - 1][j] < v)) fail("HeightState: columns must increase");
        }
    }
    // pairwise distinct across incomparable cells as well; exact equality on
    // purpose, a collision indicates a bug upstream
    std::vector<double> all;
    for (const auto& row : rows_) all.insert(all.end(), row.begin(), row.end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        fail("HeightState: heights must be pairwise distinct");
}

} // namespace ytab
