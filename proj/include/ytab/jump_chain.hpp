#ifndef YTAB_JUMP_CHAIN_HPP
#define YTAB_JUMP_CHAIN_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "ytab/params.hpp"
#include "ytab/partitions.hpp"
#include "ytab/rng.hpp"

namespace ytab {

using Distribution = std::map<YoungDiagram, double>;

// Jump rates out of one diagram: up moves append a box with rate
// r q(c) dim(lam+box) / ((|lam|+1) dim lam), down moves remove a box with
// rate (r+1) |lam| dim(lam-box) / dim lam. The exit rate always equals
// (2r+1)|lam| + r p.
struct RateRow {
    YoungDiagram source;
    std::vector<std::pair<Cell, double>> up;
    std::vector<std::pair<Cell, double>> down;
    double total_exit = 0.0;
};

RateRow rate_row(const YoungDiagram& lam, const Parameters& params);

// Exact-rational version used by the row-sum identity checks.
struct RationalRateRow {
    std::vector<std::pair<Cell, Rational>> up;
    std::vector<std::pair<Cell, Rational>> down;
    Rational sum;      // of all rates
    Rational expected; // (2r+1)|lam| + r p
};

RationalRateRow rational_rate_row(const YoungDiagram& lam, const RationalParams& params);

struct TimedShape {
    double t = 0.0;
    YoungDiagram shape;
};

// Gillespie simulation of the jump chain from lam0 up to the horizon.
// The trajectory starts with (0, lam0); entries record jump times.
std::vector<TimedShape> gillespie_run(const YoungDiagram& lam0,
                                      const Parameters& params, double horizon,
                                      Rng& rng, std::uint64_t event_cap = 1'000'000);

// Occupation measure over [t0, t1] of a trajectory that covers [0, t1].
std::map<YoungDiagram, double> trajectory_occupation(const std::vector<TimedShape>& traj,
                                                     double t0, double t1);

// Finite truncation of the generator: all diagrams with at most max_size
// boxes plus one absorbing overflow state that collects up-moves out of the
// largest diagrams.
class Generator {
public:
    Generator(int max_size, const Parameters& params);

    int num_states() const { return static_cast<int>(states_.size()); }
    int overflow_index() const { return num_states(); }
    const std::vector<YoungDiagram>& states() const { return states_; }
    int index_of(const YoungDiagram& lam) const; // -1 if absent
    const Parameters& params() const { return params_; }
    int max_size() const { return max_size_; }

    // off-diagonal row entries (column -> rate); diagonal is -exit_rate
    const std::vector<std::pair<int, double>>& row(int i) const { return rows_[i]; }
    double exit_rate(int i) const { return exit_[i]; }

private:
    int max_size_;
    Parameters params_;
    std::vector<YoungDiagram> states_;
    std::map<YoungDiagram, int> index_;
    std::vector<std::vector<std::pair<int, double>>> rows_;
    std::vector<double> exit_;
};

Generator build_generator(int max_size, const Parameters& params);

struct TransientResult {
    std::vector<double> probabilities; // over generator states, by index
    double overflow_mass = 0.0;        // upper bound on truncation error
    double series_tail = 0.0;          // neglected Poisson mass, < 1e-12
};

// Distribution at time t of the truncated chain started at lam0, computed by
// uniformization.
TransientResult transient_distribution(const Generator& gen,
                                       const YoungDiagram& lam0, double t);

struct StationaryResult {
    std::vector<double> pi;      // over generator states
    double residual_inf = 0.0;   // ||pi Q||_inf over retained states
    double boundary_mass = 0.0;  // mass on diagrams of the largest size
};

// Numerical stationary distribution of the truncated chain (overflow row and
// column deleted, least-squares null vector, renormalized).
StationaryResult stationary_distribution(const Generator& gen);

Distribution to_distribution(const Generator& gen, const std::vector<double>& probs);

} // namespace ytab

#endif
