#include <doctest.h>

#include <cmath>

#include "ytab/rng.hpp"
#include "ytab/stats.hpp"

using namespace ytab;

TEST_CASE("ks test calibrates on uniform data and rejects shifted data") {
    Rng rng(42);
    std::vector<double> u(20'000);
    for (double& x : u) x = rng.uniform01();
    const KsResult good = ks_test_uniform(u);
    CHECK(good.p_value > 1e-3);

    for (double& x : u) x = 0.5 * x; // clearly not uniform on (0,1)
    const KsResult bad = ks_test_uniform(u);
    CHECK(bad.p_value < 1e-12);
}

TEST_CASE("ks p-value reference points") {
    // large-n Kolmogorov limit: Q(1.36) is close to 0.05
    const double p = ks_p_value(1.36 / std::sqrt(1e6), 1'000'000);
    CHECK(p == doctest::Approx(0.05).epsilon(0.02));
    CHECK(ks_p_value(0.0, 100) == 1.0);
}

TEST_CASE("chi-square survival sanity") {
    // chi2 with 1 dof at 3.84 -> p close to 0.05
    CHECK(chi_square_p_value(3.841, 1) == doctest::Approx(0.05).epsilon(0.01));
    CHECK(chi_square_p_value(0.0, 5) == 1.0);
    CHECK_THROWS(chi_square_p_value(1.0, 0));
}

TEST_CASE("chi-square test calibrates and rejects") {
    Rng rng(7);
    std::vector<std::size_t> counts(4, 0);
    for (int k = 0; k < 40'000; ++k) counts[rng.below(4)] += 1;
    const std::vector<double> uniform(4, 0.25);
    CHECK(chi_square_test(counts, uniform).p_value > 1e-3);

    std::vector<std::size_t> biased = {20'000, 10'000, 5'000, 5'000};
    CHECK(chi_square_test(biased, uniform).p_value < 1e-12);
}

TEST_CASE("beta cdf") {
    CHECK(beta_cdf(1, 1, 0.3) == doctest::Approx(0.3)); // Beta(1,1) = uniform
    CHECK(beta_cdf(2, 1, 0.5) == doctest::Approx(0.25)); // x^2
    CHECK(beta_cdf(3, 2, 0.0) == 0.0);
    CHECK(beta_cdf(3, 2, 1.0) == 1.0);
}

TEST_CASE("rng reproducibility and ranges") {
    Rng a(123), b(123);
    for (int k = 0; k < 1000; ++k) {
        CHECK(a.raw() == b.raw());
    }
    Rng r(5);
    for (int k = 0; k < 10'000; ++k) {
        const double u = r.uniform01();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        CHECK(r.exponential(2.0) > 0.0);
        CHECK(r.below(7) < 7);
    }
    CHECK(replica_seed(0, 1) != replica_seed(0, 2));
    CHECK(replica_seed(0, 1) != replica_seed(1, 1));
}
