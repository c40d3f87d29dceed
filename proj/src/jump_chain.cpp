#include "ytab/jump_chain.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace ytab {

RateRow rate_row(const YoungDiagram& lam, const Parameters& params) {
    RateRow row;
    row.source = lam;
    const double r = params.r();
    const double n = static_cast<double>(lam.size());
    const double dim_lam = to_double(dim_tableaux(lam));
    for (Cell c : lam.addable_corners()) {
        const double dim_up = to_double(dim_tableaux(lam.with_cell(c)));
        const double rate = r * params.q(c) * dim_up / ((n + 1.0) * dim_lam);
        row.up.push_back({c, rate});
        row.total_exit += rate;
    }
    for (Cell c : lam.removable_corners()) {
        const double dim_down = to_double(dim_tableaux(lam.without_cell(c)));
        const double rate = (r + 1.0) * n * dim_down / dim_lam;
        row.down.push_back({c, rate});
        row.total_exit += rate;
    }
    return row;
}

RationalRateRow rational_rate_row(const YoungDiagram& lam, const RationalParams& params) {
    RationalRateRow row;
    const Rational n(lam.size());
    const Rational dim_lam(dim_tableaux(lam));
    for (Cell c : lam.addable_corners()) {
        const Rational dim_up(dim_tableaux(lam.with_cell(c)));
        const Rational rate = params.r * params.q(c) * dim_up / ((n + 1) * dim_lam);
        row.up.push_back({c, rate});
        row.sum += rate;
    }
    for (Cell c : lam.removable_corners()) {
        const Rational dim_down(dim_tableaux(lam.without_cell(c)));
        const Rational rate = (params.r + 1) * n * dim_down / dim_lam;
        row.down.push_back({c, rate});
        row.sum += rate;
    }
    row.expected = (2 * params.r + 1) * n + params.r * params.p;
    return row;
}

std::vector<TimedShape> gillespie_run(const YoungDiagram& lam0,
                                      const Parameters& params, double horizon,
                                      Rng& rng, std::uint64_t event_cap) {
    std::vector<TimedShape> traj;
    traj.push_back({0.0, lam0});
    double t = 0.0;
    YoungDiagram lam = lam0;
    while (true) {
        const RateRow row = rate_row(lam, params);
        t += rng.exponential(row.total_exit);
        if (t >= horizon) return traj;
        double pick = rng.uniform01() * row.total_exit;
        bool moved = false;
        for (const auto& [c, rate] : row.up) {
            pick -= rate;
            if (pick < 0.0) {
                lam = lam.with_cell(c);
                moved = true;
                break;
            }
        }
        if (!moved) {
            for (const auto& [c, rate] : row.down) {
                pick -= rate;
                if (pick < 0.0) {
                    lam = lam.without_cell(c);
                    moved = true;
                    break;
                }
            }
        }
        if (!moved) { // pick == total_exit after rounding: take the last move
            if (!row.down.empty()) lam = lam.without_cell(row.down.back().first);
            else lam = lam.with_cell(row.up.back().first);
        }
        traj.push_back({t, lam});
        if (traj.size() > event_cap)
            throw std::runtime_error("gillespie_run: event cap exceeded");
    }
}

std::map<YoungDiagram, double> trajectory_occupation(const std::vector<TimedShape>& traj,
                                                     double t0, double t1) {
    std::map<YoungDiagram, double> occ;
    for (std::size_t k = 0; k < traj.size(); ++k) {
        const double a = traj[k].t;
        const double b = (k + 1 < traj.size()) ? traj[k + 1].t : t1;
        const double lo = std::max(a, t0), hi = std::min(b, t1);
        if (hi > lo) occ[traj[k].shape] += hi - lo;
    }
    return occ;
}

Generator::Generator(int max_size, const Parameters& params)
    : max_size_(max_size), params_(params) {
    if (max_size < 0) throw std::invalid_argument("Generator: negative max size");
    states_ = diagrams_up_to(max_size);
    for (int i = 0; i < num_states(); ++i) index_[states_[i]] = i;
    rows_.resize(states_.size());
    exit_.assign(states_.size(), 0.0);
    for (int i = 0; i < num_states(); ++i) {
        const RateRow row = rate_row(states_[i], params);
        exit_[i] = row.total_exit;
        for (const auto& [c, rate] : row.up) {
            const YoungDiagram target = states_[i].with_cell(c);
            const int j = target.size() > max_size_ ? overflow_index() : index_.at(target);
            rows_[i].push_back({j, rate});
        }
        for (const auto& [c, rate] : row.down)
            rows_[i].push_back({index_.at(states_[i].without_cell(c)), rate});
    }
}

int Generator::index_of(const YoungDiagram& lam) const {
    auto it = index_.find(lam);
    return it == index_.end() ? -1 : it->second;
}

Generator build_generator(int max_size, const Parameters& params) {
    return Generator(max_size, params);
}

TransientResult transient_distribution(const Generator& gen,
                                       const YoungDiagram& lam0, double t) {
    const int m = gen.num_states();
    const int start = gen.index_of(lam0);
    if (start < 0) throw std::invalid_argument("transient_distribution: lam0 not enumerated");

    // uniformization: P = I + Q / Lambda, p(t) = sum_k Pois(Lambda t, k) p0 P^k
    double lambda = 0.0;
    for (int i = 0; i < m; ++i) lambda = std::max(lambda, gen.exit_rate(i));
    TransientResult res;
    std::vector<double> cur(m + 1, 0.0), nxt(m + 1, 0.0), acc(m + 1, 0.0);
    cur[start] = 1.0;
    if (lambda == 0.0 || t == 0.0) {
        res.probabilities.assign(cur.begin(), cur.begin() + m);
        res.overflow_mass = cur[m];
        return res;
    }

    const double lt = lambda * t;
    double log_weight = -lt; // log Pois(lt, 0)
    double weight = std::exp(log_weight);
    double covered = weight;
    for (double* a = acc.data(); const double v : cur) *a++ += weight * v;

    const double tol = 1e-12;
    for (int k = 1; covered < 1.0 - tol; ++k) {
        // one uniformized step: nxt = cur P
        std::fill(nxt.begin(), nxt.end(), 0.0);
        for (int i = 0; i < m; ++i) {
            const double mass = cur[i];
            if (mass == 0.0) continue;
            nxt[i] += mass * (1.0 - gen.exit_rate(i) / lambda);
            for (const auto& [j, rate] : gen.row(i)) nxt[j] += mass * (rate / lambda);
        }
        nxt[m] += cur[m]; // overflow is absorbing
        cur.swap(nxt);

        log_weight += std::log(lt) - std::log(static_cast<double>(k));
        weight = std::exp(log_weight);
        covered += weight;
        for (int i = 0; i <= m; ++i) acc[i] += weight * cur[i];
        if (k > 10 * lt + 200) break; // defensive; tol reached long before
    }
    res.series_tail = std::max(0.0, 1.0 - covered);
    res.probabilities.assign(acc.begin(), acc.begin() + m);
    res.overflow_mass = acc[m];
    return res;
}

StationaryResult stationary_distribution(const Generator& gen) {
    const int m = gen.num_states();
    // least squares for pi Q = 0 with the normalization sum(pi) = 1 appended;
    // the overflow row/column is simply never formed
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(m + 1, m);
    for (int i = 0; i < m; ++i) {
        a(i, i) -= gen.exit_rate(i);
        for (const auto& [j, rate] : gen.row(i))
            if (j < m) a(j, i) += rate; // transposed: columns are source states
    }
    for (int i = 0; i < m; ++i) a(m, i) = 1.0;
    Eigen::VectorXd b = Eigen::VectorXd::Zero(m + 1);
    b(m) = 1.0;

    Eigen::VectorXd pi = a.colPivHouseholderQr().solve(b);

    StationaryResult res;
    res.pi.resize(m);
    double sum = 0.0;
    for (int i = 0; i < m; ++i) {
        if (pi(i) < 0.0) {
            if (pi(i) < -1e-9)
                throw std::runtime_error("stationary_distribution: negative mass, solver failure");
            pi(i) = 0.0;
        }
        sum += pi(i);
    }
    if (!(sum > 0.0)) throw std::runtime_error("stationary_distribution: degenerate solution");
    for (int i = 0; i < m; ++i) res.pi[i] = pi(i) / sum;

    // residual ||pi Q||_inf via one sparse pass
    std::vector<double> residual(m, 0.0);
    for (int i = 0; i < m; ++i) {
        residual[i] -= res.pi[i] * gen.exit_rate(i);
        for (const auto& [j, rate] : gen.row(i))
            if (j < m) residual[j] += res.pi[i] * rate;
    }
    for (int i = 0; i < m; ++i)
        res.residual_inf = std::max(res.residual_inf, std::fabs(residual[i]));
    for (int i = 0; i < m; ++i)
        if (gen.states()[i].size() == gen.max_size()) res.boundary_mass += res.pi[i];
    return res;
}

Distribution to_distribution(const Generator& gen, const std::vector<double>& probs) {
    Distribution out;
    for (int i = 0; i < gen.num_states(); ++i)
        if (probs[i] != 0.0) out[gen.states()[i]] = probs[i];
    return out;
}

} // namespace ytab
