#include "ytab/pdmp.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>

#include "ytab/parallel.hpp"

namespace ytab {

double flow(double y, double t, FlowMode mode, double r) {
    assert(y >= 0.0 && y <= r && t >= 0.0);
    if (y <= 0.0) return 0.0;
    if (y >= r || t == 0.0) return std::min(y, r);
    if (t >= hitting_time(y, r, mode)) return r;
    if (mode == FlowMode::plancherel) return std::min(y * std::exp(t), r);
    // dy/dt = y(y+1): w = (y/(y+1)) e^t stays below r/(r+1) before the cap
    const double w = y / (y + 1.0) * std::exp(t);
    return std::min(w / (1.0 - w), r);
}

double hitting_time(double y, double b, FlowMode mode) {
    if (!(y > 0.0)) throw std::invalid_argument("hitting_time: no finite hitting time from 0");
    if (!(y <= b)) throw std::invalid_argument("hitting_time: y must not exceed b");
    if (y == b) return 0.0;
    if (mode == FlowMode::plancherel) return std::log(b / y);
    return std::log(b * (y + 1.0) / (y * (b + 1.0)));
}

namespace {

// Single flow application shared by the simulator and replay; keeping the
// arithmetic in one place is what makes replay bit-exact.
void advance_supported(HeightState& state, double dt, FlowMode mode,
                       std::optional<Cell> skip = std::nullopt) {
    if (dt == 0.0) return;
    const double r = state.r();
    const double below_r = std::nextafter(r, 0.0);
    for (Cell c : state.shape().cells()) {
        if (skip && c == *skip) continue;
        double v = flow(state.height(c), dt, mode, r);
        if (v >= r) v = below_r; // rounding guard; exact hits are absorbed separately
        state.set_height(c, v);
    }
}

} // namespace

PdmpSimulator::PdmpSimulator(const SimConfig& cfg, HeightState initial)
    : cfg_(cfg), state_(std::move(initial)), rng_(cfg.seed) {
    if (state_.r() != cfg_.params.r())
        throw std::invalid_argument("PdmpSimulator: state level differs from params.r");
    state_.validate();
    if (cfg_.subdiagram) {
        for (Cell c : state_.shape().cells())
            if (!cfg_.subdiagram->contains(c))
                throw std::invalid_argument("PdmpSimulator: initial support not inside subdiagram");
    }
    if (!(cfg_.horizon >= 0.0))
        throw std::invalid_argument("PdmpSimulator: bad horizon");
}

bool PdmpSimulator::in_scope(Cell c) const {
    return !cfg_.subdiagram || cfg_.subdiagram->contains(c);
}

void PdmpSimulator::commit_flow(double dt) {
    advance_supported(state_, dt, cfg_.mode);
}

std::optional<Event> PdmpSimulator::step() {
    if (finished()) return std::nullopt;
    const double r = cfg_.params.r();

    // earliest deterministic absorption among supported cells
    double t_abs = std::numeric_limits<double>::infinity();
    Cell abs_cell;
    double abs_from = 0.0;
    for (Cell c : state_.shape().cells()) {
        const double h = state_.height(c);
        const double t = anchor_ + hitting_time(h, r, cfg_.mode);
        if (t < t_abs) {
            t_abs = t;
            abs_cell = c;
            abs_from = h;
        }
    }

    // exponential candidate clocks for every active cell, canonical order
    double t_cand = std::numeric_limits<double>::infinity();
    Cell cand_cell;
    for (Cell c : state_.active_cells()) {
        if (!in_scope(c)) continue;
        const double rate =
            (cfg_.mode == FlowMode::plancherel ? 1.0 : cfg_.params.q(c)) * r;
        const double t = clock_ + rng_.exponential(rate);
        if (t < t_cand) {
            t_cand = t;
            cand_cell = c;
        }
    }

    // ties go to absorption, then to the horizon
    if (t_abs <= t_cand && t_abs <= cfg_.horizon) {
        advance_supported(state_, t_abs - anchor_, cfg_.mode, abs_cell);
        state_.remove(abs_cell);
        anchor_ = clock_ = t_abs;
        const Event ev{t_abs, abs_cell, EventKind::absorb, abs_from, r};
        log_.push_back(ev);
        return ev;
    }
    if (cfg_.horizon <= t_cand) {
        commit_flow(cfg_.horizon - anchor_);
        anchor_ = clock_ = cfg_.horizon;
        return std::nullopt;
    }

    // candidate: evaluate the moving window at the candidate time
    const double x = rng_.uniform(0.0, r);
    const double dt = t_cand - anchor_;
    const auto height_at = [&](Cell c) {
        return state_.supported(c) ? flow(state_.height(c), dt, cfg_.mode, r) : r;
    };
    const Cell c = cand_cell;
    double hdown_at = 0.0;
    if (c.i == 1 && c.j == 1) hdown_at = 0.0;
    else if (c.i == 1) hdown_at = height_at({1, c.j - 1});
    else if (c.j == 1) hdown_at = height_at({c.i - 1, 1});
    else hdown_at = std::max(height_at({c.i - 1, c.j}), height_at({c.i, c.j - 1}));
    const double h_at = height_at(c);

    bool accept = hdown_at < x && x < h_at;
    if (accept) {
        // collisions with other heights carry probability 0 and are forbidden
        for (Cell o : state_.shape().cells())
            if (flow(state_.height(o), dt, cfg_.mode, r) == x) accept = false;
    }
    if (!accept) {
        clock_ = t_cand;
        return std::nullopt;
    }

    commit_flow(dt);
    state_.set_height(c, x);
    anchor_ = clock_ = t_cand;
    const Event ev{t_cand, c, EventKind::jump, h_at, x};
    log_.push_back(ev);
    return ev;
}

void PdmpSimulator::run() {
    while (!finished()) {
        step();
        if (log_.size() > cfg_.event_cap) throw ExplosionAlarm(cfg_.event_cap);
    }
}

RunResult run(const SimConfig& cfg, const HeightState& initial) {
    PdmpSimulator sim(cfg, initial);
    sim.run();
    return RunResult{sim.state(), sim.log()};
}

HeightState replay(const HeightState& initial, std::span<const Event> log,
                   double horizon, FlowMode mode) {
    HeightState state = initial;
    double t_prev = 0.0;
    for (const Event& e : log) {
        if (e.kind == EventKind::absorb) {
            advance_supported(state, e.t - t_prev, mode, e.cell);
            state.remove(e.cell);
        } else {
            advance_supported(state, e.t - t_prev, mode);
            state.set_height(e.cell, e.to);
        }
        t_prev = e.t;
    }
    advance_supported(state, horizon - t_prev, mode);
    return state;
}

std::map<YoungDiagram, double> shape_occupation(const YoungDiagram& initial_shape,
                                                std::span<const Event> log,
                                                double t0, double t1) {
    std::map<YoungDiagram, double> occ;
    YoungDiagram shape = initial_shape;
    double t_cur = 0.0;
    const auto credit = [&](double a, double b) {
        const double lo = std::max(a, t0), hi = std::min(b, t1);
        if (hi > lo) occ[shape] += hi - lo;
    };
    for (const Event& e : log) {
        credit(t_cur, e.t);
        if (e.kind == EventKind::absorb)
            shape = shape.without_cell(e.cell);
        else if (!shape.contains(e.cell)) // jump from level r appends a corner
            shape = shape.with_cell(e.cell);
        t_cur = e.t;
    }
    credit(t_cur, t1);
    return occ;
}

YoungDiagram shape_at(const YoungDiagram& initial_shape, std::span<const Event> log,
                      double t) {
    YoungDiagram shape = initial_shape;
    for (const Event& e : log) {
        if (e.t > t) break;
        if (e.kind == EventKind::absorb) shape = shape.without_cell(e.cell);
        else if (!shape.contains(e.cell)) shape = shape.with_cell(e.cell);
    }
    return shape;
}

EnsembleResult run_ensemble(const SimConfig& cfg, std::size_t replicas,
                            bool keep_logs,
                            const std::function<HeightState(Rng&)>& make_initial) {
    EnsembleResult res;
    res.replicas = replicas;
    res.finals.reserve(replicas);
    std::vector<std::optional<HeightState>> finals(replicas);
    std::vector<EventLog> logs(keep_logs ? replicas : 0);
    std::vector<std::uint64_t> counts(replicas, 0);

    parallel_for(replicas, [&](std::size_t k) {
        SimConfig rc = cfg;
        rc.seed = replica_seed(cfg.seed, k);
        HeightState initial(cfg.params.r());
        if (make_initial) {
            Rng init_rng(mix64(rc.seed + 1));
            initial = make_initial(init_rng);
        }
        PdmpSimulator sim(rc, std::move(initial));
        sim.run();
        counts[k] = sim.event_count();
        finals[k] = sim.state();
        if (keep_logs) logs[k] = sim.log();
    });

    double total_events = 0.0;
    for (std::size_t k = 0; k < replicas; ++k) {
        res.shape_counts[finals[k]->shape()] += 1;
        res.finals.push_back(std::move(*finals[k]));
        total_events += static_cast<double>(counts[k]);
        res.max_events = std::max(res.max_events, counts[k]);
    }
    if (keep_logs) res.logs = std::move(logs);
    res.mean_events = replicas ? total_events / static_cast<double>(replicas) : 0.0;
    return res;
}

} // namespace ytab
