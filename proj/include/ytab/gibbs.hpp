#ifndef YTAB_GIBBS_HPP
#define YTAB_GIBBS_HPP

#include <string>
#include <vector>

#include "ytab/jump_chain.hpp"
#include "ytab/stats.hpp"
#include "ytab/tableau_state.hpp"

namespace ytab {

// Normalized Lebesgue measure on the states of shape lam bounded by r: all
// dim(lam) tableau simplices have equal volume, so draw a uniform tableau and
// populate it with sorted iid Uniform(0, r) heights.
HeightState sample_given_shape(const YoungDiagram& lam, double r, Rng& rng);

// Gibbs measure corresponding to the given shape distribution (mixture of
// sample_given_shape). dist must sum to 1 within 1e-9.
HeightState sample_gibbs(const Distribution& dist, double r, Rng& rng);

enum class TestVerdict { pass, fail, inconclusive };

struct GibbsShapeReport {
    YoungDiagram shape;
    std::size_t samples = 0;
    // chi-square over the tableau projection (shapes with dim >= 2)
    bool chi_square_ran = false;
    double chi_square_p = 1.0;
    std::string chi_square_note;
    // per-coordinate KS of the order-statistics probability transform
    std::vector<double> ks_p; // one entry per coordinate
    TestVerdict verdict = TestVerdict::inconclusive;
};

struct GibbsReport {
    std::vector<GibbsShapeReport> shapes;
    std::size_t tests_run = 0;     // Bonferroni denominator
    double alpha = 1e-3;           // family-wise level
    double threshold = 0.0;        // alpha / tests_run
    double min_p = 1.0;
    TestVerdict verdict = TestVerdict::inconclusive;
};

struct GibbsTestOptions {
    std::size_t min_samples_per_shape = 100;
    int enumeration_bound = 12; // tableau chi-square needs the full list
    double alpha = 1e-3;
    double min_expected_count = 5.0; // chi-square validity guard
};

// Tests whether the sample is Gibbs: conditionally on each sufficiently
// observed shape, the tableau projection must be uniform and the sorted
// heights must look like uniform order statistics.
GibbsReport test_gibbsianness(const std::vector<HeightState>& samples,
                              const GibbsTestOptions& opts = {});

} // namespace ytab

#endif
