#ifndef YTAB_PARTITIONS_HPP
#define YTAB_PARTITIONS_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "ytab/numeric.hpp"
#include "ytab/rng.hpp"

namespace ytab {

// A box of a Young diagram, 1-based matrix indexing.
struct Cell {
    int i = 0; // row
    int j = 0; // column

    int content() const { return j - i; }
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

// Finite Young diagram stored as weakly decreasing row lengths.
// The empty vector is the empty diagram.
class YoungDiagram {
public:
    YoungDiagram() = default;
    explicit YoungDiagram(std::vector<int> rows);

    int size() const { return size_; }
    int num_rows() const { return static_cast<int>(rows_.size()); }
    // length of row i (1-based); 0 beyond the last row
    int row(int i) const {
        return (i >= 1 && i <= num_rows()) ? rows_[i - 1] : 0;
    }
    // length of column j (1-based)
    int col(int j) const;
    const std::vector<int>& rows() const { return rows_; }

    bool contains(Cell c) const { return c.i >= 1 && c.j >= 1 && c.j <= row(c.i); }
    std::vector<Cell> cells() const; // row-major order

    // cells that can be appended / removed keeping a valid diagram
    std::vector<Cell> addable_corners() const;
    std::vector<Cell> removable_corners() const;
    bool is_addable(Cell c) const;
    bool is_removable(Cell c) const;

    YoungDiagram with_cell(Cell c) const;    // requires is_addable(c)
    YoungDiagram without_cell(Cell c) const; // requires is_removable(c)

    std::string to_string() const; // JSON row list, e.g. "[3,1]"

    friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;
    // total order: by size, then lexicographically on row lists
    friend bool operator<(const YoungDiagram& a, const YoungDiagram& b) {
        if (a.size_ != b.size_) return a.size_ < b.size_;
        return a.rows_ < b.rows_;
    }

private:
    std::vector<int> rows_;
    int size_ = 0;
};

// Standard tableau: entries 1..|shape| increasing along rows and columns.
class StandardTableau {
public:
    StandardTableau() = default;
    StandardTableau(YoungDiagram shape, std::vector<std::vector<int>> entries);

    const YoungDiagram& shape() const { return shape_; }
    int entry(Cell c) const { return entries_[c.i - 1][c.j - 1]; }
    Cell cell_of(int entry) const; // inverse lookup

    // entries flattened row-major; usable as a map key
    std::vector<int> row_major() const;

    friend bool operator==(const StandardTableau&, const StandardTableau&) = default;

private:
    YoungDiagram shape_;
    std::vector<std::vector<int>> entries_;
};

// Number of standard tableaux of the given shape (hook length formula).
BigInt dim_tableaux(const YoungDiagram& shape);

// All standard tableaux of the shape. Throws if |shape| > max_size.
std::vector<StandardTableau> enumerate_tableaux(const YoungDiagram& shape,
                                                int max_size = 12);

// Greene-Nijenhuis-Wilf hook walk. Returns a removable corner of a nonempty
// diagram; the corner law is dim(shape - corner) / dim(shape).
Cell hook_walk_corner(const YoungDiagram& shape, Rng& rng);

// Uniform random standard tableau, built by stripping hook-walk corners.
StandardTableau sample_uniform_tableau(const YoungDiagram& shape, Rng& rng);

// All diagrams with exactly n boxes, ascending in the (size, lex) order.
std::vector<YoungDiagram> partitions_of(int n);
// All diagrams with at most n boxes, ascending in the (size, lex) order.
std::vector<YoungDiagram> diagrams_up_to(int n);

} // namespace ytab

#endif
