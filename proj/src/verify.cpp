#include "ytab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "ytab/parallel.hpp"

namespace ytab {

double tv_distance(const Distribution& pa, const Distribution& pb) {
    double sum = 0.0;
    auto ia = pa.begin();
    auto ib = pb.begin();
    while (ia != pa.end() || ib != pb.end()) {
        if (ib == pb.end() || (ia != pa.end() && ia->first < ib->first)) {
            sum += std::fabs(ia->second);
            ++ia;
        } else if (ia == pa.end() || ib->first < ia->first) {
            sum += std::fabs(ib->second);
            ++ib;
        } else {
            sum += std::fabs(ia->second - ib->second);
            ++ia;
            ++ib;
        }
    }
    return 0.5 * sum;
}

namespace {

Distribution normalize_counts(const std::map<YoungDiagram, std::size_t>& counts,
                              std::size_t total) {
    Distribution out;
    for (const auto& [lam, c] : counts)
        out[lam] = static_cast<double>(c) / static_cast<double>(total);
    return out;
}

Distribution normalize_mass(const std::map<YoungDiagram, double>& mass) {
    double total = 0.0;
    for (const auto& [lam, m] : mass) total += m;
    Distribution out;
    for (const auto& [lam, m] : mass) out[lam] = m / total;
    return out;
}

int count_heavy_states(const Distribution& d, double floor) {
    int k = 0;
    for (const auto& [lam, p] : d)
        if (p > floor) ++k;
    return std::max(k, 1);
}

} // namespace

// ---------------------------------------------------------------------------
// Remark identity
// ---------------------------------------------------------------------------

namespace {

// y-value of the order-max / order-min of two candidate cells. The order is
// only consulted when the two y-values differ; equal values decide
// themselves, which keeps small regions usable.
Rational value_of_extreme(const std::map<Cell, Rational>& y,
                          const YoungDiagram& region,
                          const StandardTableau& order, Cell a, Cell b,
                          bool want_max) {
    const auto val = [&](Cell c) -> Rational {
        auto it = y.find(c);
        return it == y.end() ? Rational(0) : it->second;
    };
    const Rational va = val(a), vb = val(b);
    if (va == vb) return va;
    if (!region.contains(a) || !region.contains(b)) {
        std::ostringstream msg;
        msg << "region cannot rank (" << a.i << "," << a.j << ") against ("
            << b.i << "," << b.j << ")";
        throw RegionError(msg.str());
    }
    const bool a_greater = order.entry(a) > order.entry(b);
    return (a_greater == want_max) ? va : vb;
}

} // namespace

bool remark_identity_check(const std::map<Cell, Rational>& y,
                           const YoungDiagram& region,
                           const StandardTableau& order,
                           const Rational& s, const Rational& p) {
    if (order.shape() != region)
        throw std::invalid_argument("remark_identity_check: order must cover the region");

    // cells with a possibly nonzero term: the support and its 4-neighbors
    std::map<Cell, bool> candidates;
    for (const auto& [c, v] : y) {
        if (v == 0) continue;
        candidates[c] = true;
        if (c.i > 1) candidates[{c.i - 1, c.j}] = true;
        if (c.j > 1) candidates[{c.i, c.j - 1}] = true;
        candidates[{c.i + 1, c.j}] = true;
        candidates[{c.i, c.j + 1}] = true;
    }

    const auto val = [&](Cell c) -> Rational {
        auto it = y.find(c);
        return it == y.end() ? Rational(0) : it->second;
    };

    Rational lhs = 0, rhs = 0;
    for (const auto& [c, v] : y) rhs += v;
    rhs *= 2;

    for (const auto& [c, unused] : candidates) {
        (void)unused;
        Rational y_down;
        if (c.i == 1 && c.j == 1) y_down = 0;
        else if (c.i == 1) y_down = val({1, c.j - 1});
        else if (c.j == 1) y_down = val({c.i - 1, 1});
        else y_down = value_of_extreme(y, region, order, {c.i - 1, c.j},
                                       {c.i, c.j - 1}, /*want_max=*/true);
        const Rational y_up = value_of_extreme(y, region, order, {c.i + 1, c.j},
                                               {c.i, c.j + 1}, /*want_max=*/false);
        const Rational term = y_up + y_down - 2 * val(c);
        if (term == 0) continue;
        const Rational content(c.content());
        lhs += term * (p + s * content + content * content);
    }
    return lhs == rhs;
}

IdentityTrialsReport run_identity_trials(int trials, std::uint64_t seed) {
    IdentityTrialsReport report;
    report.trials = trials;
    report.seed = seed;
    Rng rng(seed);

    const YoungDiagram region(std::vector<int>(8, 8)); // 8x8 covers a 6x6 support

    const auto random_rational = [&](int max_abs) {
        const std::int64_t den = 1 + static_cast<std::int64_t>(rng.below(10));
        const std::int64_t span = 2 * max_abs * den;
        const std::int64_t num = static_cast<std::int64_t>(rng.below(span + 1)) - max_abs * den;
        return Rational(num, den);
    };

    for (int t = 0; t < trials; ++t) {
        std::map<Cell, Rational> y;
        for (int i = 1; i <= 6; ++i)
            for (int j = 1; j <= 6; ++j)
                if (rng.below(4) == 0) {
                    const Rational v = random_rational(10);
                    if (v != 0) y[{i, j}] = v;
                }
        const StandardTableau order = sample_uniform_tableau(region, rng);
        const Rational s = random_rational(10);
        const Rational p = random_rational(10);
        if (remark_identity_check(y, region, order, s, p)) {
            ++report.passed;
        } else if (!report.counterexample) {
            std::ostringstream msg;
            msg << "trial " << t << ": s=" << s << " p=" << p << " support={";
            for (const auto& [c, v] : y)
                msg << "(" << c.i << "," << c.j << ")=" << v << " ";
            msg << "}";
            report.counterexample = msg.str();
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Row sums
// ---------------------------------------------------------------------------

RowSumReport check_row_sums(int max_size, const std::vector<RationalParams>& params_list) {
    RowSumReport report;
    report.max_size = max_size;
    report.all_exact = true;
    for (const YoungDiagram& lam : diagrams_up_to(max_size)) {
        for (const RationalParams& params : params_list) {
            const RationalRateRow row = rational_rate_row(lam, params);
            ++report.rows_checked;
            if (row.sum != row.expected) {
                report.all_exact = false;
                if (!report.counterexample) {
                    std::ostringstream msg;
                    msg << "diagram " << lam.to_string() << ": sum=" << row.sum
                        << " expected=" << row.expected;
                    report.counterexample = msg.str();
                }
            }
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Claim 4.A
// ---------------------------------------------------------------------------

Claim4aReport claim_4a_test(const Claim4aConfig& cfg) {
    Claim4aReport report;
    report.replicas = cfg.replicas;

    SimConfig sim{cfg.params, FlowMode::full, std::nullopt, cfg.horizon,
                  cfg.seed, cfg.event_cap};
    const EnsembleResult ens = run_ensemble(sim, cfg.replicas);
    report.mean_events = ens.mean_events;
    report.max_events = ens.max_events;
    const Distribution empirical = normalize_counts(ens.shape_counts, ens.replicas);

    const Generator gen = build_generator(cfg.generator_size, cfg.params);
    const TransientResult trans = transient_distribution(gen, YoungDiagram(), cfg.horizon);
    const Distribution exact = to_distribution(gen, trans.probabilities);
    report.overflow_mass = trans.overflow_mass;
    report.overflow_ok = trans.overflow_mass < cfg.overflow_budget;

    report.k_states = count_heavy_states(exact, cfg.mass_floor);
    report.margin = 2.0 * std::sqrt(static_cast<double>(report.k_states) /
                                    static_cast<double>(cfg.replicas)) +
                    trans.overflow_mass;
    report.tv = tv_distance(empirical, exact);
    report.tv_ok = report.tv < report.margin;

    report.gibbs = test_gibbsianness(ens.finals);
    report.pass = report.tv_ok && report.overflow_ok &&
                  report.gibbs.verdict != TestVerdict::fail;
    return report;
}

CalibrationReport claim_4a_calibration(const Claim4aConfig& cfg) {
    CalibrationReport report;
    std::vector<YoungDiagram> finals(cfg.replicas);
    parallel_for(cfg.replicas, [&](std::size_t k) {
        Rng rng(replica_seed(cfg.seed ^ 0x5ca1ab1eULL, k));
        const auto traj = gillespie_run(YoungDiagram(), cfg.params, cfg.horizon,
                                        rng, cfg.event_cap);
        finals[k] = traj.back().shape;
    });
    std::map<YoungDiagram, std::size_t> counts;
    for (const auto& lam : finals) counts[lam] += 1;
    const Distribution empirical = normalize_counts(counts, cfg.replicas);

    const Generator gen = build_generator(cfg.generator_size, cfg.params);
    const TransientResult trans = transient_distribution(gen, YoungDiagram(), cfg.horizon);
    const Distribution exact = to_distribution(gen, trans.probabilities);

    const int k_states = count_heavy_states(exact, cfg.mass_floor);
    report.margin = 2.0 * std::sqrt(static_cast<double>(k_states) /
                                    static_cast<double>(cfg.replicas)) +
                    trans.overflow_mass;
    report.tv = tv_distance(empirical, exact);
    report.pass = report.tv < report.margin;
    return report;
}

// ---------------------------------------------------------------------------
// Claim 5.A
// ---------------------------------------------------------------------------

Claim5aReport claim_5a_test(const Claim5aConfig& cfg) {
    if (!(cfg.r_prime >= cfg.params.r()))
        throw std::invalid_argument("claim_5a_test: need r' >= r");
    Claim5aReport report;

    const double r = cfg.params.r();
    const Parameters params_prime = cfg.params.with_r(cfg.r_prime);

    SimConfig sim_a{params_prime, FlowMode::full, std::nullopt, cfg.horizon,
                    cfg.seed, cfg.event_cap};
    EnsembleResult ens_a = run_ensemble(sim_a, cfg.replicas);
    report.mean_events_r_prime = ens_a.mean_events;

    SimConfig sim_b{cfg.params, FlowMode::full, std::nullopt, cfg.horizon,
                    cfg.seed + 1, cfg.event_cap};
    const EnsembleResult ens_b = run_ensemble(sim_b, cfg.replicas);
    report.mean_events_r = ens_b.mean_events;
    report.max_events = std::max(ens_a.max_events, ens_b.max_events);

    std::map<YoungDiagram, std::size_t> counts_a;
    std::vector<HeightState> truncated;
    truncated.reserve(ens_a.finals.size());
    for (const HeightState& s : ens_a.finals) {
        HeightState t = s.truncate(r);
        counts_a[t.shape()] += 1;
        truncated.push_back(std::move(t));
    }
    const Distribution da = normalize_counts(counts_a, cfg.replicas);
    const Distribution db = normalize_counts(ens_b.shape_counts, cfg.replicas);

    Distribution pooled;
    for (const auto& [lam, pa] : da) pooled[lam] += 0.5 * pa;
    for (const auto& [lam, pb] : db) pooled[lam] += 0.5 * pb;
    report.k_states = count_heavy_states(pooled, 1e-4);
    const double n = static_cast<double>(cfg.replicas);
    report.margin = 2.0 * std::sqrt(static_cast<double>(report.k_states) * (2.0 / n));

    report.tv = tv_distance(da, db);
    report.tv_ok = report.tv < report.margin;
    report.gibbs_truncated = test_gibbsianness(truncated);
    report.pass = report.tv_ok && report.gibbs_truncated.verdict != TestVerdict::fail;
    return report;
}

// ---------------------------------------------------------------------------
// Stationarity
// ---------------------------------------------------------------------------

StationarityReport stationarity_test(const StationarityConfig& cfg) {
    StationarityReport report;

    const Generator gen = build_generator(cfg.generator_size, cfg.params);
    const StationaryResult stat = stationary_distribution(gen);
    report.pi_residual = stat.residual_inf;
    report.pi_boundary_mass = stat.boundary_mass;
    const Distribution pi = to_distribution(gen, stat.pi);

    // PDMP occupation measure over [t_burn, t_total]
    SimConfig sim{cfg.params, FlowMode::full, std::nullopt, cfg.t_total,
                  cfg.seed, cfg.event_cap};
    const EnsembleResult ens = run_ensemble(sim, cfg.replicas, /*keep_logs=*/true);
    report.mean_events = ens.mean_events;
    report.max_events = ens.max_events;

    std::map<YoungDiagram, double> occupation;
    std::map<YoungDiagram, std::size_t> hist_burn, hist_total;
    for (std::size_t k = 0; k < ens.logs.size(); ++k) {
        for (const auto& [lam, mass] :
             shape_occupation(YoungDiagram(), ens.logs[k], cfg.t_burn, cfg.t_total))
            occupation[lam] += mass;
        hist_burn[shape_at(YoungDiagram(), ens.logs[k], cfg.t_burn)] += 1;
        hist_total[ens.finals[k].shape()] += 1;
    }
    report.tv_pdmp = tv_distance(normalize_mass(occupation), pi);
    report.tv_two_time = tv_distance(normalize_counts(hist_burn, cfg.replicas),
                                     normalize_counts(hist_total, cfg.replicas));

    // calibration: the jump chain's own occupation measure
    std::vector<std::map<YoungDiagram, double>> g_occ(cfg.gillespie_replicas);
    parallel_for(cfg.gillespie_replicas, [&](std::size_t k) {
        Rng rng(replica_seed(cfg.seed ^ 0x9111e5ULL, k));
        const auto traj = gillespie_run(YoungDiagram(), cfg.params, cfg.t_total,
                                        rng, cfg.event_cap);
        g_occ[k] = trajectory_occupation(traj, cfg.t_burn, cfg.t_total);
    });
    std::map<YoungDiagram, double> g_total;
    for (const auto& occ : g_occ)
        for (const auto& [lam, mass] : occ) g_total[lam] += mass;
    report.tv_gillespie = tv_distance(normalize_mass(g_total), pi);

    // started from the stationary Gibbs measure, the histogram should match
    // pi already at a short horizon
    SimConfig sim_pi{cfg.params, FlowMode::full, std::nullopt, cfg.init_pi_horizon,
                     cfg.seed ^ 0x5eedULL, cfg.event_cap};
    const double r = cfg.params.r();
    const EnsembleResult ens_pi = run_ensemble(
        sim_pi, cfg.init_pi_replicas, /*keep_logs=*/false,
        [&pi, r](Rng& rng) { return sample_gibbs(pi, r, rng); });
    report.tv_init_pi =
        tv_distance(normalize_counts(ens_pi.shape_counts, cfg.init_pi_replicas), pi);

    report.pdmp_ok = report.tv_pdmp < cfg.pdmp_threshold;
    report.gillespie_ok = report.tv_gillespie < cfg.gillespie_threshold;
    report.init_pi_ok = report.tv_init_pi < cfg.init_pi_threshold;
    report.pass = report.pdmp_ok && report.gillespie_ok && report.init_pi_ok;
    return report;
}

// ---------------------------------------------------------------------------
// Single-particle model
// ---------------------------------------------------------------------------

SingleParticleReport single_particle_test(const SingleParticleConfig& cfg) {
    SingleParticleReport report;
    const double r = cfg.params.r();
    const double rate = cfg.params.q(Cell{1, 1}) * r;
    report.expected_mean = 1.0 / rate;
    const YoungDiagram single(std::vector<int>{1});

    // (a) time of the first event from the empty state
    std::vector<double> first_times(cfg.samples, 0.0);
    std::vector<char> clean_start(cfg.samples, 0);
    parallel_for(cfg.samples, [&](std::size_t k) {
        SimConfig sim{cfg.params, FlowMode::full, single, 1e9,
                      replica_seed(cfg.seed, k), 1'000'000};
        PdmpSimulator engine(sim, HeightState(r));
        std::optional<Event> ev;
        while (!ev && !engine.finished()) ev = engine.step();
        first_times[k] = ev ? ev->t : 1e9;
        clean_start[k] = ev && ev->kind == EventKind::jump;
    });
    double sum = 0.0;
    std::vector<double> u;
    u.reserve(cfg.samples);
    for (double t : first_times) {
        sum += t;
        u.push_back(1.0 - std::exp(-rate * t));
    }
    report.mean_first_event = sum / static_cast<double>(cfg.samples);
    report.first_event_ks = ks_test_uniform(std::move(u));
    report.no_absorb_before_first_jump =
        std::all_of(clean_start.begin(), clean_start.end(), [](char c) { return c != 0; });

    // (b) destination / height ratios over long trajectories
    const double horizon = 6.0 * static_cast<double>(cfg.samples) /
                           (static_cast<double>(cfg.long_replicas) * rate);
    std::vector<std::vector<double>> ratios(cfg.long_replicas);
    parallel_for(cfg.long_replicas, [&](std::size_t k) {
        SimConfig sim{cfg.params, FlowMode::full, single, horizon,
                      replica_seed(cfg.seed ^ 0x0b5e55edULL, k), 10'000'000};
        const RunResult res = run(sim, HeightState(r));
        for (const Event& e : res.log)
            if (e.kind == EventKind::jump) ratios[k].push_back(e.to / e.from);
    });
    std::vector<double> pooled;
    for (const auto& v : ratios) {
        for (double x : v) {
            if (pooled.size() >= cfg.samples) break;
            pooled.push_back(x);
        }
    }
    report.ratios_collected = pooled.size();
    report.ratio_ks = ks_test_uniform(std::move(pooled));

    report.pass = report.first_event_ks.p_value > cfg.alpha &&
                  report.ratio_ks.p_value > cfg.alpha &&
                  report.ratios_collected >= cfg.samples &&
                  report.no_absorb_before_first_jump;
    return report;
}

} // namespace ytab
