#ifndef YTAB_STATS_HPP
#define YTAB_STATS_HPP

#include <cstddef>
#include <vector>

namespace ytab {

struct KsResult {
    double d = 0.0;       // sup-norm statistic
    double p_value = 1.0;
    std::size_t n = 0;
};

// One-sample Kolmogorov-Smirnov test against U(0,1). Input need not be sorted.
KsResult ks_test_uniform(std::vector<double> values);

// Kolmogorov tail probability with the usual finite-n correction.
double ks_p_value(double d, std::size_t n);

// Survival function of chi-square with dof degrees of freedom.
double chi_square_p_value(double statistic, int dof);

// Pearson chi-square test of observed counts against given probabilities.
struct ChiSquareResult {
    double statistic = 0.0;
    int dof = 0;
    double p_value = 1.0;
    double min_expected = 0.0;
};
ChiSquareResult chi_square_test(const std::vector<std::size_t>& observed,
                                const std::vector<double>& probabilities);

// Regularized incomplete beta I_x(a, b): CDF of Beta(a, b) at x.
double beta_cdf(double a, double b, double x);

} // namespace ytab

#endif
