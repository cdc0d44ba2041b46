#include "pidim/lumped_chain.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pidim/errors.hpp"

namespace pidim {

std::vector<std::vector<double>> TruncatedChain::dense() const {
    std::vector<std::vector<double>> out(
        static_cast<std::size_t>(n_states),
        std::vector<double>(static_cast<std::size_t>(n_states), 0.0));
    for (std::int64_t m = 0; m < n_states; ++m) {
        out[static_cast<std::size_t>(m)][static_cast<std::size_t>(up_target(m))] += params.p;
        out[static_cast<std::size_t>(m)][static_cast<std::size_t>(down_target(m))] +=
            1.0 - params.p;
    }
    return out;
}

TruncatedChain build_truncated_chain(const IfsParams& params, std::int64_t n) {
    if (params.beta != 1) {
        throw BetaNotOne("the lumped chain is defined for beta = 1, got beta = " +
                         std::to_string(params.beta));
    }
    if (n < params.alpha) {
        throw TruncationTooSmall("need at least alpha = " + std::to_string(params.alpha) +
                                 " states, got " + std::to_string(n));
    }
    return TruncatedChain{params, n};
}

double stationary_residual(const TruncatedChain& chain, const std::vector<double>& v) {
    const auto n = static_cast<std::size_t>(chain.n_states);
    std::vector<double> w(n, 0.0);
    const double p = chain.params.p;
    for (std::int64_t m = 0; m < chain.n_states; ++m) {
        const double vm = v[static_cast<std::size_t>(m)];
        w[static_cast<std::size_t>(chain.up_target(m))] += p * vm;
        w[static_cast<std::size_t>(chain.down_target(m))] += (1.0 - p) * vm;
    }
    double res = 0.0;
    for (std::size_t i = 0; i < n; ++i) res = std::max(res, std::abs(w[i] - v[i]));
    return res;
}

StationaryVector solve_stationary(const TruncatedChain& chain, double tol,
                                  std::int64_t max_iter,
                                  const std::vector<double>* warm_start) {
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    const auto n = static_cast<std::size_t>(chain.n_states);
    const double p = chain.params.p;

    std::vector<double> v(n, 1.0 / static_cast<double>(n));
    if (warm_start != nullptr && !warm_start->empty()) {
        // Previous (smaller) solution as the initial guess; extra states 0.
        std::fill(v.begin(), v.end(), 0.0);
        const std::size_t m = std::min(warm_start->size(), n);
        std::copy(warm_start->begin(), warm_start->begin() + static_cast<std::ptrdiff_t>(m),
                  v.begin());
        const double s = std::accumulate(v.begin(), v.end(), 0.0);
        if (s > 0) {
            for (auto& x : v) x /= s;
        } else {
            std::fill(v.begin(), v.end(), 1.0 / static_cast<double>(n));
        }
    }

    std::vector<double> w(n, 0.0);
    for (std::int64_t iter = 1; iter <= max_iter; ++iter) {
        std::fill(w.begin(), w.end(), 0.0);
        for (std::int64_t m = 0; m < chain.n_states; ++m) {
            const double vm = v[static_cast<std::size_t>(m)];
            w[static_cast<std::size_t>(chain.up_target(m))] += p * vm;
            w[static_cast<std::size_t>(chain.down_target(m))] += (1.0 - p) * vm;
        }
        double res = 0.0;
        for (std::size_t i = 0; i < n; ++i) res = std::max(res, std::abs(w[i] - v[i]));
        const double sum = std::accumulate(w.begin(), w.end(), 0.0);
        for (auto& x : w) x /= sum;  // rows are stochastic; this only removes drift
        v.swap(w);
        if (res < tol) {
            const double final_res = stationary_residual(chain, v);
            return StationaryVector{std::move(v), final_res, iter};
        }
    }
    char tol_text[32];
    std::snprintf(tol_text, sizeof tol_text, "%g", tol);
    throw NoConvergence(std::string("power iteration did not reach tol = ") + tol_text +
                        " within " + std::to_string(max_iter) + " sweeps");
}

StationaryVector solve_stationary_exact(const TruncatedChain& chain) {
    const auto n = static_cast<std::size_t>(chain.n_states);
    // Dense working copy; elimination fills rows in.
    std::vector<double> a(n * n, 0.0);
    const double p = chain.params.p;
    for (std::int64_t m = 0; m < chain.n_states; ++m) {
        a[static_cast<std::size_t>(m) * n + static_cast<std::size_t>(chain.up_target(m))] += p;
        a[static_cast<std::size_t>(m) * n + static_cast<std::size_t>(chain.down_target(m))] +=
            1.0 - p;
    }

    // Eliminate states from the top down. Every update is an addition of
    // nonnegative terms, so no cancellation occurs anywhere.
    for (std::size_t k = n - 1; k >= 1; --k) {
        double s = 0.0;
        for (std::size_t j = 0; j < k; ++j) s += a[k * n + j];
        const double inv = 1.0 / s;
        for (std::size_t i = 0; i < k; ++i) a[i * n + k] *= inv;
        for (std::size_t i = 0; i < k; ++i) {
            const double aik = a[i * n + k];
            if (aik == 0.0) continue;
            const double* rowk = &a[k * n];
            double* rowi = &a[i * n];
            for (std::size_t j = 0; j < k; ++j) rowi[j] += aik * rowk[j];
        }
    }

    std::vector<double> x(n, 0.0);
    x[0] = 1.0;
    for (std::size_t k = 1; k < n; ++k) {
        double acc = 0.0;
        for (std::size_t i = 0; i < k; ++i) acc += x[i] * a[i * n + k];
        x[k] = acc;
    }
    const double sum = std::accumulate(x.begin(), x.end(), 0.0);
    for (auto& v : x) v /= sum;

    StationaryVector out;
    out.residual = stationary_residual(chain, x);
    out.probabilities = std::move(x);
    out.iterations = 0;
    return out;
}

XiVector xi_from_stationary(const StationaryVector& sv, std::int64_t alpha) {
    if (alpha < 1) throw std::invalid_argument("alpha must be >= 1");
    XiVector out;
    out.truncation_n = static_cast<std::int64_t>(sv.probabilities.size());
    out.xi.assign(static_cast<std::size_t>(alpha), 0.0);
    for (std::size_t m = 0; m < sv.probabilities.size(); ++m) {
        out.xi[m % static_cast<std::size_t>(alpha)] += sv.probabilities[m];
    }
    return out;
}

ConvergedXi xi_converged(const IfsParams& params, double tol, std::int64_t n_cap) {
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    constexpr double kSolverTol = 1e-13;
    constexpr std::int64_t kSolverMaxIter = 1000000;

    std::int64_t n = 64;
    TruncatedChain chain = build_truncated_chain(params, n);
    StationaryVector sv = solve_stationary(chain, kSolverTol, kSolverMaxIter);
    XiVector xi = xi_from_stationary(sv, params.alpha);

    while (true) {
        const std::int64_t next_n = n * 2;
        if (next_n > n_cap) {
            char tol_text[32];
            std::snprintf(tol_text, sizeof tol_text, "%g", tol);
            throw NoConvergence(std::string("xi did not settle below tol = ") + tol_text +
                                " at the truncation cap " + std::to_string(n_cap));
        }
        TruncatedChain next_chain = build_truncated_chain(params, next_n);
        StationaryVector next_sv =
            solve_stationary(next_chain, kSolverTol, kSolverMaxIter, &sv.probabilities);
        XiVector next_xi = xi_from_stationary(next_sv, params.alpha);

        double change = 0.0;
        for (std::size_t k = 0; k < next_xi.xi.size(); ++k) {
            change = std::max(change, std::abs(next_xi.xi[k] - xi.xi[k]));
        }
        n = next_n;
        sv = std::move(next_sv);
        xi = std::move(next_xi);
        if (change < tol) {
            return ConvergedXi{std::move(xi), n, std::move(sv)};
        }
    }
}

double invariance_residual(const StationaryVector& sv, const IfsParams& params,
                           std::int64_t m_max) {
    const auto n = static_cast<std::int64_t>(sv.probabilities.size());
    if (m_max * params.alpha + params.alpha - 1 >= n) {
        throw std::invalid_argument("m_max too large: children of state " +
                                    std::to_string(m_max) + " exceed the truncation");
    }
    const double p = params.p;
    double worst = 0.0;
    for (std::int64_t m = 0; m <= m_max; ++m) {
        const double prev = m >= 1 ? sv.probabilities[static_cast<std::size_t>(m - 1)] : 0.0;
        double children = 0.0;
        for (std::int64_t j = 0; j < params.alpha; ++j) {
            children += sv.probabilities[static_cast<std::size_t>(m * params.alpha + j)];
        }
        const double res =
            std::abs(sv.probabilities[static_cast<std::size_t>(m)] - p * prev -
                     (1.0 - p) * children);
        worst = std::max(worst, res);
    }
    return worst;
}

double least_squares_log_slope(const StationaryVector& sv, std::int64_t m_lo,
                               std::int64_t m_hi) {
    if (m_lo >= m_hi || m_lo < 0 ||
        m_hi >= static_cast<std::int64_t>(sv.probabilities.size())) {
        throw std::invalid_argument("bad slope window");
    }
    const auto count = static_cast<double>(m_hi - m_lo + 1);
    double mx = 0.0;
    double my = 0.0;
    for (std::int64_t m = m_lo; m <= m_hi; ++m) {
        mx += static_cast<double>(m);
        my += std::log(sv.probabilities[static_cast<std::size_t>(m)]);
    }
    mx /= count;
    my /= count;
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::int64_t m = m_lo; m <= m_hi; ++m) {
        const double dx = static_cast<double>(m) - mx;
        sxy += dx * (std::log(sv.probabilities[static_cast<std::size_t>(m)]) - my);
        sxx += dx * dx;
    }
    return sxy / sxx;
}

}  // namespace pidim
