#ifndef YTAB_PDMP_HPP
#define YTAB_PDMP_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "ytab/params.hpp"
#include "ytab/rng.hpp"
#include "ytab/tableau_state.hpp"

namespace ytab {

enum class FlowMode { full, plancherel };

// Deterministic height growth: dy/dt = y(y+1) in full mode, dy/dt = y in
// plancherel mode, capped at r. flow(0,.) = 0 and flow(r,.) = r.
double flow(double y, double t, FlowMode mode, double r);

// Time for the flow to carry y up to b; inverse of flow in t.
// Requires 0 < y <= b.
double hitting_time(double y, double b, FlowMode mode);

enum class EventKind { jump, absorb };

struct Event {
    double t = 0.0;
    Cell cell;
    EventKind kind = EventKind::jump;
    double from = 0.0; // jump: height at time t; absorb: height when the flow segment started
    double to = 0.0;   // jump: new height; absorb: r
};

using EventLog = std::vector<Event>;

struct SimConfig {
    Parameters params;
    FlowMode mode = FlowMode::full;
    std::optional<YoungDiagram> subdiagram; // restrict dynamics to these cells
    double horizon = 1.0;
    std::uint64_t seed = 0;
    std::uint64_t event_cap = 1'000'000;
};

// Raised when a replica emits more events than the configured cap.
class ExplosionAlarm : public std::runtime_error {
public:
    explicit ExplosionAlarm(std::uint64_t cap)
        : std::runtime_error("event cap exceeded (" + std::to_string(cap) +
                             " events): possible explosion") {}
};

// Event-driven simulator. Each active cell carries an exponential candidate
// clock with rate q * r; the candidate ordinate is uniform on (0, r) and is
// accepted iff it falls in the moving window (h_down, h). This reproduces the
// per-cell planar Poisson fields exactly. All candidate clocks are resampled
// after every event or rejection.
//
// Heights are committed (advanced through the flow) only at events, so a
// replayed log reconstructs every intermediate and final state bit-exactly.
class PdmpSimulator {
public:
    PdmpSimulator(const SimConfig& cfg, HeightState initial);

    // Advance to the next candidate, absorption, or the horizon. Returns the
    // event if one was emitted; a rejected candidate advances the clock only.
    std::optional<Event> step();

    bool finished() const { return clock_ >= cfg_.horizon; }
    double clock() const { return clock_; }
    const HeightState& state() const { return state_; }
    const EventLog& log() const { return log_; }
    std::uint64_t event_count() const { return log_.size(); }

    // run to the horizon; throws ExplosionAlarm past the event cap
    void run();

private:
    void commit_flow(double dt); // advance all supported heights
    bool in_scope(Cell c) const;

    SimConfig cfg_;
    HeightState state_; // heights as of time anchor_
    double clock_ = 0.0;
    double anchor_ = 0.0;
    EventLog log_;
    Rng rng_;
};

struct RunResult {
    HeightState final_state;
    EventLog log;
};

RunResult run(const SimConfig& cfg, const HeightState& initial);

// Reconstructs the state at the horizon from the event log alone. Matches the
// simulator's final state exactly (bitwise).
HeightState replay(const HeightState& initial, std::span<const Event> log,
                   double horizon, FlowMode mode);

// Shape occupation measure over [t0, t1] extracted from an event log:
// total time spent in each shape (not normalized).
std::map<YoungDiagram, double> shape_occupation(const YoungDiagram& initial_shape,
                                                std::span<const Event> log,
                                                double t0, double t1);

// Shape at time t (events at exactly t already applied).
YoungDiagram shape_at(const YoungDiagram& initial_shape, std::span<const Event> log,
                      double t);

struct EnsembleResult {
    std::map<YoungDiagram, std::size_t> shape_counts; // final shapes
    std::vector<HeightState> finals;                  // by replica index
    std::vector<EventLog> logs;                       // only if keep_logs
    double mean_events = 0.0;
    std::uint64_t max_events = 0;
    std::size_t replicas = 0;
};

// Independent replicas from the same initial state; replica k uses
// replica_seed(cfg.seed, k). make_initial may be empty (empty state).
EnsembleResult run_ensemble(const SimConfig& cfg, std::size_t replicas,
                            bool keep_logs = false,
                            const std::function<HeightState(Rng&)>& make_initial = {});

} // namespace ytab

#endif
