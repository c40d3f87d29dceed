#include "ytab/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>

namespace ytab {

double ks_p_value(double d, std::size_t n) {
    if (n == 0) return 1.0;
    const double sn = std::sqrt(static_cast<double>(n));
    // Stephens' effective-n scaling of the Kolmogorov limit law
    const double x = (sn + 0.12 + 0.11 / sn) * d;
    if (x < 1e-8) return 1.0;
    double sum = 0.0;
    for (int k = 1; k <= 100; ++k) {
        const double term = 2.0 * ((k & 1) ? 1.0 : -1.0) * std::exp(-2.0 * k * k * x * x);
        sum += term;
        if (std::fabs(term) < 1e-16 * std::fabs(sum)) break;
    }
    return std::clamp(sum, 0.0, 1.0);
}

KsResult ks_test_uniform(std::vector<double> values) {
    KsResult res;
    res.n = values.size();
    if (values.empty()) return res;
    std::sort(values.begin(), values.end());
    const double n = static_cast<double>(values.size());
    double d = 0.0;
    for (std::size_t k = 0; k < values.size(); ++k) {
        const double f = std::clamp(values[k], 0.0, 1.0);
        d = std::max(d, (static_cast<double>(k) + 1.0) / n - f);
        d = std::max(d, f - static_cast<double>(k) / n);
    }
    res.d = d;
    res.p_value = ks_p_value(d, values.size());
    return res;
}

double chi_square_p_value(double statistic, int dof) {
    if (dof <= 0) throw std::invalid_argument("chi_square_p_value: dof must be positive");
    if (statistic <= 0.0) return 1.0;
    return boost::math::gamma_q(0.5 * dof, 0.5 * statistic);
}

ChiSquareResult chi_square_test(const std::vector<std::size_t>& observed,
                                const std::vector<double>& probabilities) {
    if (observed.size() != probabilities.size() || observed.size() < 2)
        throw std::invalid_argument("chi_square_test: need >= 2 matching categories");
    const double total = static_cast<double>(
        std::accumulate(observed.begin(), observed.end(), std::size_t{0}));
    ChiSquareResult res;
    res.dof = static_cast<int>(observed.size()) - 1;
    res.min_expected = total;
    for (std::size_t k = 0; k < observed.size(); ++k) {
        const double expected = total * probabilities[k];
        if (expected <= 0.0)
            throw std::invalid_argument("chi_square_test: zero expected count");
        res.min_expected = std::min(res.min_expected, expected);
        const double diff = static_cast<double>(observed[k]) - expected;
        res.statistic += diff * diff / expected;
    }
    res.p_value = chi_square_p_value(res.statistic, res.dof);
    return res;
}

double beta_cdf(double a, double b, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    return boost::math::ibeta(a, b, x);
}

} // namespace ytab
