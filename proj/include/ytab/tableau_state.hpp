#ifndef YTAB_TABLEAU_STATE_HPP
#define YTAB_TABLEAU_STATE_HPP

#include <vector>

#include "ytab/partitions.hpp"

namespace ytab {

// A generalized standard tableau bounded by r: a finite, order-compatible,
// injective height function on a Young diagram with values in (0, r).
// Cells outside the support read as height r. Stored as per-row arrays.
class HeightState {
public:
    explicit HeightState(double r);
    HeightState(double r, const std::vector<std::pair<Cell, double>>& cells);

    double r() const { return r_; }
    int support_size() const;
    bool supported(Cell c) const {
        return c.i >= 1 && c.i <= static_cast<int>(rows_.size()) &&
               c.j >= 1 && c.j <= static_cast<int>(rows_[c.i - 1].size());
    }

    // stored height, or r outside the support
    double height(Cell c) const {
        return supported(c) ? rows_[c.i - 1][c.j - 1] : r_;
    }

    // max of the left and upper neighbor heights; 0 at the origin cell
    double h_down(Cell c) const {
        if (c.i == 1 && c.j == 1) return 0.0;
        if (c.i == 1) return height({1, c.j - 1});
        if (c.j == 1) return height({c.i - 1, 1});
        return std::max(height({c.i - 1, c.j}), height({c.i, c.j - 1}));
    }

    YoungDiagram shape() const;

    // support plus addable corners: exactly the cells with h_down < height
    std::vector<Cell> active_cells() const;

    // set the height of a supported cell or an addable corner to v in (0, r)
    void set_height(Cell c, double v);
    // remove a removable corner from the support (its height reached r)
    void remove(Cell c);

    // level lowering h -> min(h, r_new); cells at or above r_new leave the
    // support. Requires 0 < r_new <= r.
    HeightState truncate(double r_new) const;

    struct Ranked {
        YoungDiagram shape;
        StandardTableau tableau; // k at the cell with the k-th smallest height
        std::vector<double> sorted_heights;
    };
    Ranked to_ranked_tableau() const;

    // checks every invariant; throws std::logic_error on violation
    void validate() const;

    friend bool operator==(const HeightState&, const HeightState&) = default;

private:
    double r_;
    std::vector<std::vector<double>> rows_;
};

} // namespace ytab

#endif
