#ifndef YTAB_VERIFY_HPP
#define YTAB_VERIFY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ytab/gibbs.hpp"
#include "ytab/jump_chain.hpp"
#include "ytab/pdmp.hpp"
#include "ytab/stats.hpp"

namespace ytab {

// Total variation distance between two sub-probability vectors on diagrams.
double tv_distance(const Distribution& pa, const Distribution& pb);

// ---------------------------------------------------------------------------
// Exact discrete Laplacian identity on a totally ordered grid
// ---------------------------------------------------------------------------

// Raised when the region is too small to decide a needed up/down neighbor.
class RegionError : public std::runtime_error {
public:
    explicit RegionError(const std::string& msg) : std::runtime_error(msg) {}
};

// Checks, in exact rational arithmetic, that
//   sum (y(up) + y(down) - 2 y) * (p + s c + c^2)  ==  2 sum y
// where up/down neighbors are resolved through the given linear extension
// (a standard tableau on `region`). Cells outside the support carry y = 0;
// the down-neighbor of (1,1) contributes 0.
bool remark_identity_check(const std::map<Cell, Rational>& y,
                           const YoungDiagram& region,
                           const StandardTableau& order,
                           const Rational& s, const Rational& p);

struct IdentityTrialsReport {
    int trials = 0;
    int passed = 0;
    std::uint64_t seed = 0;
    // first failing witness, if any
    std::optional<std::string> counterexample;
    bool all_passed() const { return passed == trials; }
};

// Randomized trials: support inside a 6x6 box, rational values in [-10, 10],
// uniform random linear extension of an 8x8 region, random rational (s, p).
IdentityTrialsReport run_identity_trials(int trials, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Exact Q-matrix row sums
// ---------------------------------------------------------------------------

struct RowSumReport {
    int max_size = 0;
    int rows_checked = 0;
    bool all_exact = false;
    std::optional<std::string> counterexample;
};

RowSumReport check_row_sums(int max_size, const std::vector<RationalParams>& params_list);

// ---------------------------------------------------------------------------
// Statistical claim tests
// ---------------------------------------------------------------------------

struct Claim4aConfig {
    Parameters params;
    double horizon = 1.0;
    std::size_t replicas = 100'000;
    int generator_size = 14;
    std::uint64_t seed = 1;
    double mass_floor = 1e-4;      // states counted into the margin
    double overflow_budget = 1e-6; // larger overflow demands a larger N
    std::uint64_t event_cap = 1'000'000;
};

struct Claim4aReport {
    double tv = 0.0;
    double margin = 0.0;        // 2 sqrt(K / replicas) + overflow
    int k_states = 0;
    double overflow_mass = 0.0;
    bool overflow_ok = false;
    double mean_events = 0.0;
    std::uint64_t max_events = 0;
    std::size_t replicas = 0;
    GibbsReport gibbs;
    bool tv_ok = false;
    bool pass = false; // tv_ok && overflow_ok && gibbs pass
};

Claim4aReport claim_4a_test(const Claim4aConfig& cfg);

// Harness self-test: same comparison with Gillespie samples of the jump
// chain itself in place of the particle process.
struct CalibrationReport {
    double tv = 0.0;
    double margin = 0.0;
    bool pass = false;
};
CalibrationReport claim_4a_calibration(const Claim4aConfig& cfg);

struct Claim5aConfig {
    Parameters params;      // level r
    double r_prime = 2.0;   // level r' > r
    double horizon = 1.0;
    std::size_t replicas = 50'000; // per ensemble
    std::uint64_t seed = 2;
    std::uint64_t event_cap = 1'000'000;
};

struct Claim5aReport {
    double tv = 0.0;
    double margin = 0.0;
    int k_states = 0;
    double mean_events_r = 0.0;
    double mean_events_r_prime = 0.0;
    std::uint64_t max_events = 0;
    GibbsReport gibbs_truncated; // Gibbsianness of the truncated ensemble
    bool tv_ok = false;
    bool pass = false;
};

Claim5aReport claim_5a_test(const Claim5aConfig& cfg);

struct StationarityConfig {
    Parameters params;
    int generator_size = 14;
    double t_burn = 10.0;
    double t_total = 30.0;
    std::size_t replicas = 1000;
    std::size_t gillespie_replicas = 1000;
    std::size_t init_pi_replicas = 10'000;
    double init_pi_horizon = 1.0;
    std::uint64_t seed = 3;
    std::uint64_t event_cap = 1'000'000;
    double pdmp_threshold = 0.03;
    double gillespie_threshold = 0.02;
    double init_pi_threshold = 0.03;
};

struct StationarityReport {
    double tv_pdmp = 0.0;       // PDMP occupation vs numerical pi
    double tv_gillespie = 0.0;  // jump-chain occupation vs pi (calibration)
    double tv_two_time = 0.0;   // shape histogram at t_burn vs t_total
    double tv_init_pi = 0.0;    // started from sampled pi, histogram at small T
    double pi_residual = 0.0;
    double pi_boundary_mass = 0.0;
    double mean_events = 0.0;
    std::uint64_t max_events = 0;
    bool pdmp_ok = false;
    bool gillespie_ok = false;
    bool init_pi_ok = false;
    bool pass = false;
};

StationarityReport stationarity_test(const StationarityConfig& cfg);

struct SingleParticleConfig {
    Parameters params;
    std::size_t samples = 20'000;
    std::size_t long_replicas = 100; // trajectories feeding the ratio test
    std::uint64_t seed = 4;
    double alpha = 1e-3;
};

struct SingleParticleReport {
    KsResult first_event_ks;  // against Exponential(q(1,1) r)
    KsResult ratio_ks;        // destination/height against U(0,1)
    double mean_first_event = 0.0;
    double expected_mean = 0.0;
    std::size_t ratios_collected = 0;
    bool no_absorb_before_first_jump = false;
    bool pass = false;
};

SingleParticleReport single_particle_test(const SingleParticleConfig& cfg);

} // namespace ytab

#endif
