#include <doctest.h>

#include <cmath>

#include "ytab/pdmp.hpp"

using namespace ytab;

namespace {

const Parameters desk = Parameters::validate(0.5, 0.0, 0.5, 0.0, 1.0);

// independent oracle: RK4 integration of dy/dt = v(y)
double ode_flow(double y, double t, FlowMode mode, double r, int steps = 4000) {
    const auto v = [&](double x) {
        return mode == FlowMode::full ? x * (x + 1.0) : x;
    };
    const double h = t / steps;
    for (int k = 0; k < steps; ++k) {
        if (y >= r) return r;
        const double k1 = v(y);
        const double k2 = v(y + 0.5 * h * k1);
        const double k3 = v(y + 0.5 * h * k2);
        const double k4 = v(y + h * k3);
        y += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return std::min(y, r);
}

} // namespace

TEST_CASE("flow fixed points and identity at t = 0") {
    for (FlowMode mode : {FlowMode::full, FlowMode::plancherel}) {
        CHECK(flow(0.0, 3.0, mode, 1.0) == 0.0);
        CHECK(flow(1.0, 5.0, mode, 1.0) == 1.0);
        CHECK(flow(0.37, 0.0, mode, 1.0) == 0.37);
    }
}

TEST_CASE("full-mode closed form examples") {
    // from y = 1 the solution reaches 2 at t = ln(4/3) and blows up at ln 2
    CHECK(flow(1.0, std::log(4.0 / 3.0), FlowMode::full, 10.0) == doctest::Approx(2.0));
    CHECK(flow(1.0, std::log(2.0), FlowMode::full, 10.0) == 10.0);
    CHECK(flow(1.0, 0.8, FlowMode::full, 10.0) == 10.0);
}

TEST_CASE("flow matches the ODE oracle") {
    for (FlowMode mode : {FlowMode::full, FlowMode::plancherel}) {
        const double r = 2.0;
        for (int a = 1; a <= 9; ++a) {
            for (int b = 1; b <= 8; ++b) {
                const double y = 0.2 * a;
                double t = 0.08 * b;
                // stay away from the cap where the oracle loses accuracy
                if (flow(y, t, mode, r) > 0.95 * r) continue;
                CHECK(flow(y, t, mode, r) ==
                      doctest::Approx(ode_flow(y, t, mode, r)).epsilon(1e-7));
            }
        }
    }
}

TEST_CASE("hitting time inverts the flow") {
    CHECK(hitting_time(0.7, 0.7, FlowMode::full) == 0.0);
    CHECK(hitting_time(1.0, 2.0, FlowMode::full) == doctest::Approx(std::log(4.0 / 3.0)));
    CHECK(hitting_time(1.0, std::exp(1.0), FlowMode::plancherel) == doctest::Approx(1.0));
    CHECK_THROWS_AS(hitting_time(0.0, 1.0, FlowMode::full), std::invalid_argument);
    CHECK_THROWS_AS(hitting_time(2.0, 1.0, FlowMode::full), std::invalid_argument);

    for (FlowMode mode : {FlowMode::full, FlowMode::plancherel}) {
        for (int a = 1; a <= 20; ++a) {
            for (int b = 1; b <= 10; ++b) {
                const double y = 0.11 * a;
                const double target = y + 0.17 * b;
                const double t = hitting_time(y, target, mode);
                CHECK(flow(y, t, mode, target + 1.0) ==
                      doctest::Approx(target).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("flow semigroup and monotonicity on a grid") {
    for (FlowMode mode : {FlowMode::full, FlowMode::plancherel}) {
        const double r = 3.0;
        for (int a = 1; a <= 10; ++a) {
            for (int i = 1; i <= 10; ++i) {
                for (int j = 1; j <= 10; ++j) {
                    const double y = 0.28 * a;
                    const double s = 0.05 * i, t = 0.05 * j;
                    const double two_step = flow(flow(y, s, mode, r), t, mode, r);
                    const double one_step = flow(y, s + t, mode, r);
                    CHECK(two_step == doctest::Approx(one_step).epsilon(1e-9));
                    // strictly increasing velocity preserves the ordering
                    CHECK(flow(y, s, mode, r) <= flow(y + 0.05, s, mode, r));
                }
            }
        }
    }
}

TEST_CASE("first event from the empty state is a jump with uniform ordinate") {
    SimConfig cfg{desk, FlowMode::full, std::nullopt, 1e9, 99, 1000};
    PdmpSimulator sim(cfg, HeightState(1.0));
    std::optional<Event> ev;
    while (!ev) ev = sim.step();
    CHECK(ev->kind == EventKind::jump);
    CHECK(ev->cell == Cell{1, 1});
    CHECK(ev->from == 1.0);
    CHECK(ev->to > 0.0);
    CHECK(ev->to < 1.0);
    CHECK(sim.state().shape() == YoungDiagram({1}));
}

TEST_CASE("deterministic absorption of a lone particle") {
    // tiny horizon: no candidate can be accepted inside (h_down, h) = (0, y)
    // before the absorption when the seed gives a late first candidate; we
    // instead pick a state one flow-step from the cap and check the timing
    const double y = 0.99;
    const double t_abs = hitting_time(y, 1.0, FlowMode::full);
    SimConfig cfg{desk, FlowMode::full, std::nullopt, 10.0, 1234, 100000};
    PdmpSimulator sim(cfg, HeightState(1.0, {{{1, 1}, y}}));
    std::optional<Event> first;
    while (!first && !sim.finished()) first = sim.step();
    REQUIRE(first.has_value());
    if (first->kind == EventKind::absorb) {
        CHECK(first->t == doctest::Approx(t_abs));
        CHECK(first->from == y);
        CHECK(first->to == 1.0);
        CHECK(sim.state().support_size() == 0);
    } else {
        CHECK(first->t < t_abs); // a candidate beat the absorption
        CHECK(first->to < first->from);
    }
}

TEST_CASE("run horizon zero returns the initial state") {
    SimConfig cfg{desk, FlowMode::full, std::nullopt, 0.0, 5, 1000};
    const HeightState initial(1.0, {{{1, 1}, 0.4}});
    const RunResult res = run(cfg, initial);
    CHECK(res.log.empty());
    CHECK(res.final_state == initial);
}

TEST_CASE("event stream is valid and replays exactly") {
    SimConfig cfg{desk, FlowMode::full, std::nullopt, 25.0, 2024, 1'000'000};
    const HeightState initial(1.0);
    const RunResult res = run(cfg, initial);
    CHECK(!res.log.empty());

    double t_prev = 0.0;
    for (const Event& e : res.log) {
        CHECK(e.t > t_prev);
        t_prev = e.t;
        if (e.kind == EventKind::jump) {
            CHECK(e.to > 0.0);
            CHECK(e.to < e.from);
            CHECK(e.from <= 1.0);
        } else {
            CHECK(e.from < 1.0);
            CHECK(e.to == 1.0);
        }
    }

    // shape trajectory moves by single boxes
    YoungDiagram shape;
    for (const Event& e : res.log) {
        if (e.kind == EventKind::absorb) {
            CHECK(shape.is_removable(e.cell));
            shape = shape.without_cell(e.cell);
        } else if (!shape.contains(e.cell)) {
            CHECK(e.from == 1.0); // entering cells jump from the top level
            CHECK(shape.is_addable(e.cell));
            shape = shape.with_cell(e.cell);
        }
    }
    CHECK(shape == res.final_state.shape());

    const HeightState replayed = replay(initial, res.log, cfg.horizon, cfg.mode);
    CHECK(replayed == res.final_state); // bitwise

    CHECK_NOTHROW(res.final_state.validate());
}

TEST_CASE("same seed, same log; different seed, different log") {
    SimConfig cfg{desk, FlowMode::full, std::nullopt, 20.0, 31337, 1'000'000};
    const RunResult a = run(cfg, HeightState(1.0));
    const RunResult b = run(cfg, HeightState(1.0));
    REQUIRE(a.log.size() == b.log.size());
    for (std::size_t k = 0; k < a.log.size(); ++k) {
        CHECK(a.log[k].t == b.log[k].t);
        CHECK(a.log[k].cell == b.log[k].cell);
        CHECK(a.log[k].to == b.log[k].to);
    }
    cfg.seed = 31338;
    const RunResult c = run(cfg, HeightState(1.0));
    CHECK((c.log.size() != a.log.size() ||
           (!c.log.empty() && c.log.front().t != a.log.front().t)));
}

TEST_CASE("plancherel mode runs without parameters entering the rates") {
    SimConfig cfg{desk, FlowMode::plancherel, std::nullopt, 5.0, 7, 1'000'000};
    const RunResult res = run(cfg, HeightState(1.0));
    CHECK_NOTHROW(res.final_state.validate());
    CHECK(!res.log.empty());
}

TEST_CASE("subdiagram restriction keeps the support inside") {
    const YoungDiagram box({2, 1});
    SimConfig cfg{desk, FlowMode::full, box, 50.0, 11, 1'000'000};
    const RunResult res = run(cfg, HeightState(1.0));
    for (const Event& e : res.log) CHECK(box.contains(e.cell));
    for (Cell c : res.final_state.shape().cells()) CHECK(box.contains(c));

    // initial support outside the subdiagram is rejected
    SimConfig bad{desk, FlowMode::full, YoungDiagram({1}), 1.0, 1, 1000};
    CHECK_THROWS_AS(PdmpSimulator(bad, HeightState(1.0, {{{1, 1}, 0.2}, {{1, 2}, 0.5}})),
                    std::invalid_argument);
}

TEST_CASE("mismatched truncation level is rejected") {
    SimConfig cfg{desk, FlowMode::full, std::nullopt, 1.0, 1, 1000};
    CHECK_THROWS_AS(PdmpSimulator(cfg, HeightState(2.0)), std::invalid_argument);
}

TEST_CASE("event cap raises the explosion alarm") {
    SimConfig cfg{desk, FlowMode::full, std::nullopt, 1e7, 3, 50};
    PdmpSimulator sim(cfg, HeightState(1.0));
    CHECK_THROWS_AS(sim.run(), ExplosionAlarm);
}

TEST_CASE("shape occupation and shape_at agree with the log") {
    SimConfig cfg{desk, FlowMode::full, std::nullopt, 30.0, 404, 1'000'000};
    const RunResult res = run(cfg, HeightState(1.0));
    const auto occ = shape_occupation(YoungDiagram(), res.log, 0.0, 30.0);
    double total = 0.0;
    for (const auto& [lam, mass] : occ) total += mass;
    CHECK(total == doctest::Approx(30.0));
    CHECK(shape_at(YoungDiagram(), res.log, 30.0) == res.final_state.shape());
    CHECK(shape_at(YoungDiagram(), res.log, 0.0) == YoungDiagram());
}

TEST_CASE("ensemble aggregation is deterministic in the master seed") {
    SimConfig cfg{desk, FlowMode::full, std::nullopt, 1.0, 555, 1'000'000};
    const EnsembleResult a = run_ensemble(cfg, 200);
    const EnsembleResult b = run_ensemble(cfg, 200);
    CHECK(a.shape_counts == b.shape_counts);
    CHECK(a.mean_events == b.mean_events);
    REQUIRE(a.finals.size() == 200);
    for (std::size_t k = 0; k < a.finals.size(); ++k) CHECK(a.finals[k] == b.finals[k]);
}
