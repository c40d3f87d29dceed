#include "ytab/partitions.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace ytab {

YoungDiagram::YoungDiagram(std::vector<int> rows) : rows_(std::move(rows)) {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        if (rows_[k] <= 0)
            throw std::invalid_argument("YoungDiagram: row lengths must be positive");
        if (k > 0 && rows_[k] > rows_[k - 1])
            throw std::invalid_argument("YoungDiagram: row lengths must be weakly decreasing");
        size_ += rows_[k];
    }
}

int YoungDiagram::col(int j) const {
    int len = 0;
    for (int r : rows_) {
        if (r >= j) ++len; else break;
    }
    return len;
}

std::vector<Cell> YoungDiagram::cells() const {
    std::vector<Cell> out;
    out.reserve(size_);
    for (int i = 1; i <= num_rows(); ++i)
        for (int j = 1; j <= row(i); ++j)
            out.push_back({i, j});
    return out;
}

std::vector<Cell> YoungDiagram::addable_corners() const {
    std::vector<Cell> out;
    for (int i = 1; i <= num_rows() + 1; ++i) {
        const int len = row(i);
        if (i == 1 || len < row(i - 1)) out.push_back({i, len + 1});
    }
    return out;
}

std::vector<Cell> YoungDiagram::removable_corners() const {
    std::vector<Cell> out;
    for (int i = 1; i <= num_rows(); ++i) {
        if (row(i) > row(i + 1)) out.push_back({i, row(i)});
    }
    return out;
}

bool YoungDiagram::is_addable(Cell c) const {
    if (c.i < 1 || c.j < 1) return false;
    return c.j == row(c.i) + 1 && (c.i == 1 || row(c.i - 1) >= c.j);
}

bool YoungDiagram::is_removable(Cell c) const {
    if (!contains(c)) return false;
    return c.j == row(c.i) && row(c.i + 1) < c.j;
}

YoungDiagram YoungDiagram::with_cell(Cell c) const {
    if (!is_addable(c)) throw std::invalid_argument("with_cell: not an addable corner");
    std::vector<int> rows = rows_;
    if (c.i > num_rows()) rows.push_back(1);
    else rows[c.i - 1] += 1;
    return YoungDiagram(std::move(rows));
}

YoungDiagram YoungDiagram::without_cell(Cell c) const {
    if (!is_removable(c)) throw std::invalid_argument("without_cell: not a removable corner");
    std::vector<int> rows = rows_;
    rows[c.i - 1] -= 1;
    if (rows[c.i - 1] == 0) rows.erase(rows.begin() + (c.i - 1));
    return YoungDiagram(std::move(rows));
}

std::string YoungDiagram::to_string() const {
    std::string s = "[";
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        if (k) s += ',';
        s += std::to_string(rows_[k]);
    }
    s += ']';
    return s;
}

StandardTableau::StandardTableau(YoungDiagram shape, std::vector<std::vector<int>> entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
    if (static_cast<int>(entries_.size()) != shape_.num_rows())
        throw std::invalid_argument("StandardTableau: entry rows do not match shape");
    std::vector<bool> seen(static_cast<std::size_t>(shape_.size()) + 1, false);
    for (int i = 1; i <= shape_.num_rows(); ++i) {
        if (static_cast<int>(entries_[i - 1].size()) != shape_.row(i))
            throw std::invalid_argument("StandardTableau: entry rows do not match shape");
        for (int j = 1; j <= shape_.row(i); ++j) {
            const int e = entries_[i - 1][j - 1];
            if (e < 1 || e > shape_.size() || seen[e])
                throw std::invalid_argument("StandardTableau: entries must be a bijection");
            seen[e] = true;
            if (j > 1 && entries_[i - 1][j - 2] >= e)
                throw std::invalid_argument("StandardTableau: rows must increase");
            if (i > 1 && entries_[i - 2][j - 1] >= e)
                throw std::invalid_argument("StandardTableau: columns must increase");
        }
    }
}

Cell StandardTableau::cell_of(int entry) const {
    for (int i = 1; i <= shape_.num_rows(); ++i)
        for (int j = 1; j <= shape_.row(i); ++j)
            if (entries_[i - 1][j - 1] == entry) return {i, j};
    throw std::out_of_range("StandardTableau::cell_of: no such entry");
}

std::vector<int> StandardTableau::row_major() const {
    std::vector<int> out;
    out.reserve(shape_.size());
    for (const auto& r : entries_) out.insert(out.end(), r.begin(), r.end());
    return out;
}

BigInt dim_tableaux(const YoungDiagram& shape) {
    const int n = shape.size();
    BigInt num = 1;
    for (int k = 2; k <= n; ++k) num *= k;
    BigInt den = 1;
    for (int i = 1; i <= shape.num_rows(); ++i)
        for (int j = 1; j <= shape.row(i); ++j)
            den *= (shape.row(i) - j) + (shape.col(j) - i) + 1;
    assert(num % den == 0);
    return num / den;
}

namespace {

// grow all tableaux of the shape entry by entry
void enumerate_rec(const YoungDiagram& target, const YoungDiagram& partial,
                   std::vector<std::vector<int>>& entries, int next,
                   std::vector<StandardTableau>& out) {
    if (next > target.size()) {
        out.emplace_back(target, entries);
        return;
    }
    for (Cell c : partial.addable_corners()) {
        if (!target.contains(c)) continue;
        if (c.i > static_cast<int>(entries.size())) entries.emplace_back();
        entries[c.i - 1].push_back(next);
        enumerate_rec(target, partial.with_cell(c), entries, next + 1, out);
        entries[c.i - 1].pop_back();
        if (entries[c.i - 1].empty()) entries.pop_back();
    }
}

} // namespace

std::vector<StandardTableau> enumerate_tableaux(const YoungDiagram& shape, int max_size) {
    if (shape.size() > max_size)
        throw std::invalid_argument("enumerate_tableaux: shape exceeds enumeration bound");
    std::vector<StandardTableau> out;
    std::vector<std::vector<int>> entries;
    enumerate_rec(shape, YoungDiagram(), entries, 1, out);
    return out;
}

Cell hook_walk_corner(const YoungDiagram& shape, Rng& rng) {
    if (shape.size() == 0)
        throw std::invalid_argument("hook_walk_corner: empty diagram");
    // start at a uniformly random cell
    std::uint64_t idx = rng.below(static_cast<std::uint64_t>(shape.size()));
    Cell c{1, 1};
    for (int i = 1; i <= shape.num_rows(); ++i) {
        if (idx < static_cast<std::uint64_t>(shape.row(i))) {
            c = {i, static_cast<int>(idx) + 1};
            break;
        }
        idx -= static_cast<std::uint64_t>(shape.row(i));
    }
    // walk: jump uniformly within the arm + leg until at a corner
    for (;;) {
        const int arm = shape.row(c.i) - c.j;
        const int leg = shape.col(c.j) - c.i;
        if (arm == 0 && leg == 0) return c;
        const std::uint64_t pick = rng.below(static_cast<std::uint64_t>(arm + leg));
        if (pick < static_cast<std::uint64_t>(arm))
            c = {c.i, c.j + 1 + static_cast<int>(pick)};
        else
            c = {c.i + 1 + static_cast<int>(pick) - arm, c.j};
    }
}

StandardTableau sample_uniform_tableau(const YoungDiagram& shape, Rng& rng) {
    std::vector<std::vector<int>> entries(shape.num_rows());
    for (int i = 1; i <= shape.num_rows(); ++i)
        entries[i - 1].assign(shape.row(i), 0);
    YoungDiagram cur = shape;
    for (int k = shape.size(); k >= 1; --k) {
        const Cell c = hook_walk_corner(cur, rng);
        entries[c.i - 1][c.j - 1] = k;
        cur = cur.without_cell(c);
    }
    return StandardTableau(shape, std::move(entries));
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& acc,
                    std::vector<YoungDiagram>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    // first part emitted smallest-first gives ascending lex order
    for (int part = 1; part <= std::min(remaining, max_part); ++part) {
        acc.push_back(part);
        partitions_rec(remaining - part, part, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<YoungDiagram> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative size");
    std::vector<YoungDiagram> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> acc;
    partitions_rec(n, n, acc, out);
    return out;
}

std::vector<YoungDiagram> diagrams_up_to(int n) {
    std::vector<YoungDiagram> out;
    for (int k = 0; k <= n; ++k) {
        auto part = partitions_of(k);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

} // namespace ytab
