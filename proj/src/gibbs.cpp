#include "ytab/gibbs.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace ytab {

HeightState sample_given_shape(const YoungDiagram& lam, double r, Rng& rng) {
    const int n = lam.size();
    HeightState state(r);
    if (n == 0) return state;
    const StandardTableau tableau = sample_uniform_tableau(lam, rng);
    std::vector<double> values(n);
    for (;;) {
        for (double& v : values) {
            do { v = rng.uniform(0.0, r); } while (v == 0.0);
        }
        std::sort(values.begin(), values.end());
        if (std::adjacent_find(values.begin(), values.end()) == values.end()) break;
    }
    std::vector<std::pair<Cell, double>> cells;
    cells.reserve(n);
    for (int k = 1; k <= n; ++k) cells.push_back({tableau.cell_of(k), values[k - 1]});
    return HeightState(r, cells);
}

HeightState sample_gibbs(const Distribution& dist, double r, Rng& rng) {
    double total = 0.0;
    for (const auto& [lam, w] : dist) {
        if (w < 0.0) throw std::invalid_argument("sample_gibbs: negative weight");
        total += w;
    }
    if (std::fabs(total - 1.0) > 1e-9)
        throw std::invalid_argument("sample_gibbs: distribution does not sum to 1");
    double pick = rng.uniform01() * total;
    for (const auto& [lam, w] : dist) {
        pick -= w;
        if (pick < 0.0) return sample_given_shape(lam, r, rng);
    }
    return sample_given_shape(dist.rbegin()->first, r, rng);
}

GibbsReport test_gibbsianness(const std::vector<HeightState>& samples,
                              const GibbsTestOptions& opts) {
    GibbsReport report;
    report.alpha = opts.alpha;
    if (samples.size() < 1000) {
        report.verdict = TestVerdict::inconclusive;
        return report;
    }
    const double r = samples.front().r();
    std::map<YoungDiagram, std::vector<const HeightState*>> by_shape;
    for (const auto& s : samples) {
        if (s.r() != r)
            throw std::invalid_argument("test_gibbsianness: mixed truncation levels");
        by_shape[s.shape()].push_back(&s);
    }

    std::vector<double> all_p;
    for (const auto& [shape, group] : by_shape) {
        if (group.size() < opts.min_samples_per_shape) continue;
        const int n = shape.size();
        if (n == 0) continue; // nothing to test on the empty shape
        GibbsShapeReport sr;
        sr.shape = shape;
        sr.samples = group.size();

        // (a) uniformity over the standard tableaux of the shape
        const BigInt dim = dim_tableaux(shape);
        if (dim >= 2) {
            if (n > opts.enumeration_bound) {
                sr.chi_square_note = "shape exceeds enumeration bound";
            } else if (to_double(dim) * opts.min_expected_count >
                       static_cast<double>(group.size())) {
                sr.chi_square_note = "too few samples per tableau";
            } else {
                const auto tableaux = enumerate_tableaux(shape, opts.enumeration_bound);
                std::map<std::vector<int>, std::size_t> key_to_index;
                for (std::size_t k = 0; k < tableaux.size(); ++k)
                    key_to_index[tableaux[k].row_major()] = k;
                std::vector<std::size_t> counts(tableaux.size(), 0);
                for (const HeightState* s : group)
                    counts[key_to_index.at(s->to_ranked_tableau().tableau.row_major())]++;
                const std::vector<double> uniform(tableaux.size(),
                                                  1.0 / static_cast<double>(tableaux.size()));
                const ChiSquareResult chi = chi_square_test(counts, uniform);
                sr.chi_square_ran = true;
                sr.chi_square_p = chi.p_value;
                all_p.push_back(chi.p_value);
            }
        }

        // (b) sorted heights as order statistics of n iid Uniform(0, r):
        // coordinate k maps through the Beta(k, n+1-k) CDF to U(0,1)
        std::vector<std::vector<double>> transformed(n);
        for (const HeightState* s : group) {
            const auto ranked = s->to_ranked_tableau();
            for (int k = 1; k <= n; ++k) {
                const double u = ranked.sorted_heights[k - 1] / r;
                transformed[k - 1].push_back(beta_cdf(k, n + 1 - k, u));
            }
        }
        for (int k = 0; k < n; ++k) {
            const KsResult ks = ks_test_uniform(std::move(transformed[k]));
            sr.ks_p.push_back(ks.p_value);
            all_p.push_back(ks.p_value);
        }
        report.shapes.push_back(std::move(sr));
    }

    report.tests_run = all_p.size();
    if (report.tests_run == 0) {
        report.verdict = TestVerdict::inconclusive;
        return report;
    }
    report.threshold = report.alpha / static_cast<double>(report.tests_run);
    report.min_p = *std::min_element(all_p.begin(), all_p.end());
    report.verdict = report.min_p > report.threshold ? TestVerdict::pass : TestVerdict::fail;
    for (auto& sr : report.shapes) {
        double shape_min = sr.chi_square_ran ? sr.chi_square_p : 1.0;
        for (double p : sr.ks_p) shape_min = std::min(shape_min, p);
        sr.verdict = shape_min > report.threshold ? TestVerdict::pass : TestVerdict::fail;
    }
    return report;
}

} // namespace ytab
