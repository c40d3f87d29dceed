#include <doctest.h>

#include "ytab/serialize.hpp"
#include "ytab/verify.hpp"

using namespace ytab;

namespace {

const Parameters desk = Parameters::validate(0.5, 0.0, 0.5, 0.0, 1.0);

StandardTableau row_major_order(const YoungDiagram& region) {
    // entries 1, 2, ... row by row: a valid linear extension
    std::vector<std::vector<int>> entries(region.num_rows());
    int next = 1;
    for (int i = 1; i <= region.num_rows(); ++i)
        for (int j = 1; j <= region.row(i); ++j) entries[i - 1].push_back(next++);
    return StandardTableau(region, std::move(entries));
}

StandardTableau column_major_order(const YoungDiagram& region) {
    std::vector<std::vector<int>> entries(region.num_rows());
    for (int i = 1; i <= region.num_rows(); ++i) entries[i - 1].assign(region.row(i), 0);
    int next = 1;
    for (int j = 1; j <= region.row(1); ++j)
        for (int i = 1; i <= region.col(j); ++i) entries[i - 1][j - 1] = next++;
    return StandardTableau(region, std::move(entries));
}

} // namespace

TEST_CASE("tv distance") {
    const Distribution a{{YoungDiagram(), 0.5}, {YoungDiagram({1}), 0.5}};
    const Distribution b{{YoungDiagram(), 1.0}};
    CHECK(tv_distance(a, a) == 0.0);
    CHECK(tv_distance(a, b) == doctest::Approx(0.5));
    const Distribution c{{YoungDiagram({2}), 1.0}};
    CHECK(tv_distance(b, c) == doctest::Approx(1.0));
}

TEST_CASE("remark identity: zero function") {
    const YoungDiagram region(std::vector<int>(3, 3));
    CHECK(remark_identity_check({}, region, row_major_order(region), Rational(3, 7),
                                Rational(-2, 5)));
}

TEST_CASE("remark identity: indicator of the origin, hand-expanded") {
    // terms: (1,1) contributes -2p, (1,2) contributes p+s+1, (2,1) p-s+1;
    // the total is 2 = 2 sum y independently of the chosen order
    const YoungDiagram region(std::vector<int>(3, 3));
    const std::map<Cell, Rational> y{{{1, 1}, Rational(1)}};
    for (const StandardTableau& order :
         {row_major_order(region), column_major_order(region)}) {
        CHECK(remark_identity_check(y, region, order, Rational(17, 3), Rational(-9, 2)));
        CHECK(remark_identity_check(y, region, order, Rational(0), Rational(0)));
    }
}

TEST_CASE("remark identity: the order changes terms but not the total") {
    const YoungDiagram region(std::vector<int>(4, 4));
    const std::map<Cell, Rational> y{{{1, 1}, Rational(3, 2)},
                                     {{1, 2}, Rational(-7, 3)},
                                     {{2, 1}, Rational(5)},
                                     {{2, 2}, Rational(1, 6)}};
    CHECK(remark_identity_check(y, region, row_major_order(region), Rational(11, 4),
                                Rational(2, 9)));
    CHECK(remark_identity_check(y, region, column_major_order(region), Rational(11, 4),
                                Rational(2, 9)));
}

TEST_CASE("remark identity: mixed signs and detached support") {
    const YoungDiagram region(std::vector<int>(4, 4));
    const std::map<Cell, Rational> y{{{1, 1}, Rational(2)},
                                     {{2, 2}, Rational(-1)},
                                     {{3, 3}, Rational(7, 4)}};
    CHECK(remark_identity_check(y, region, row_major_order(region), Rational(1, 2),
                                Rational(1, 3)));
    // an order on the wrong shape is rejected outright
    const YoungDiagram other(std::vector<int>(3, 3));
    CHECK_THROWS_AS(remark_identity_check(y, region, row_major_order(other),
                                          Rational(1), Rational(1)),
                    std::invalid_argument);
}

TEST_CASE("remark identity: region too small raises an error") {
    // support at (2,2): the up-neighbor of (2,1) must rank (3,1) vs (2,2),
    // and a 2x2 region cannot
    const YoungDiagram small(std::vector<int>{2, 2});
    const std::map<Cell, Rational> y{{{2, 2}, Rational(5)}};
    CHECK_THROWS_AS(remark_identity_check(y, small, row_major_order(small), Rational(1),
                                          Rational(1)),
                    RegionError);
    // a 3x3 region is enough
    const YoungDiagram big(std::vector<int>(3, 3));
    CHECK(remark_identity_check(y, big, row_major_order(big), Rational(1), Rational(1)));
}

TEST_CASE("remark identity randomized trials") {
    const IdentityTrialsReport report = run_identity_trials(60, 987);
    CHECK(report.passed == report.trials);
    if (report.counterexample) MESSAGE(*report.counterexample);
}

TEST_CASE("row sums stay exact for a randomized rational parameter set") {
    // any rational (s, p, r) satisfies the row-sum identity; admissibility
    // only matters for positivity
    const std::vector<RationalParams> params = {{Rational(7, 3), Rational(-2, 5), Rational(4, 7)}};
    const RowSumReport report = check_row_sums(6, params);
    CHECK(report.all_exact);
}

TEST_CASE("claim 4a at reduced desk scale") {
    Claim4aConfig cfg{desk, 1.0, 20'000, 12, 71, 1e-4, 1e-5, 1'000'000};
    const Claim4aReport report = claim_4a_test(cfg);
    CHECK(report.overflow_ok);
    CHECK(report.tv_ok);
    CHECK(report.tv < 0.03);
    CHECK(report.gibbs.verdict != TestVerdict::fail);
    CHECK(report.mean_events > 0.0);
    CHECK(report.pass);
}

TEST_CASE("claim 4a calibration via the jump chain itself") {
    Claim4aConfig cfg{desk, 1.0, 20'000, 12, 72, 1e-4, 1e-5, 1'000'000};
    const CalibrationReport report = claim_4a_calibration(cfg);
    CHECK(report.pass);
}

TEST_CASE("claim 5a with equal levels is near zero in distribution") {
    Claim5aConfig cfg{desk, 1.0, 1.0, 5'000, 81, 1'000'000};
    const Claim5aReport report = claim_5a_test(cfg);
    // both ensembles have the same law; independent seeds give small TV
    CHECK(report.tv < report.margin);
}

TEST_CASE("claim 5a at reduced desk scale") {
    Claim5aConfig cfg{desk, 2.0, 1.0, 10'000, 82, 1'000'000};
    const Claim5aReport report = claim_5a_test(cfg);
    CHECK(report.tv_ok);
    CHECK(report.tv < 0.04);
    CHECK(report.gibbs_truncated.verdict != TestVerdict::fail);
}

TEST_CASE("single particle test at reduced scale") {
    SingleParticleConfig cfg{desk, 4'000, 40, 91, 1e-3};
    const SingleParticleReport report = single_particle_test(cfg);
    CHECK(report.no_absorb_before_first_jump);
    CHECK(report.ratios_collected >= cfg.samples);
    CHECK(report.first_event_ks.p_value > 1e-3);
    CHECK(report.ratio_ks.p_value > 1e-3);
    CHECK(report.mean_first_event ==
          doctest::Approx(report.expected_mean).epsilon(0.1));
    CHECK(report.pass);
}

TEST_CASE("stationarity test at reduced scale") {
    StationarityConfig cfg{desk, 12,   8.0, 24.0, 400, 400, 4'000, 1.0,
                           101,  1'000'000, 0.05, 0.04, 0.05};
    const StationarityReport report = stationarity_test(cfg);
    CHECK(report.pi_residual < 1e-9);
    CHECK(report.pdmp_ok);
    CHECK(report.gillespie_ok);
    CHECK(report.init_pi_ok);
    CHECK(report.tv_two_time < 0.08);
    CHECK(report.pass);
}
