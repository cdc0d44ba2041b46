#pragma once

#include <cstdint>
#include <vector>

#include "pidim/params.hpp"

namespace pidim {

// The integer-part chain of the process, truncated to n states 0..n-1:
//   m -> m+1        with probability p   (from the last state, p stays put)
//   m -> floor(m/a) with probability 1-p
// Rows are stochastic by construction; each row has at most two entries, so
// the chain is kept in this implicit sparse form.
struct TruncatedChain {
    IfsParams params;
    std::int64_t n_states = 0;

    std::int64_t up_target(std::int64_t m) const {
        return m + 1 < n_states ? m + 1 : n_states - 1;
    }
    std::int64_t down_target(std::int64_t m) const { return m / params.alpha; }

    // Dense rendering, for small n and for display.
    std::vector<std::vector<double>> dense() const;
};

// Requires beta = 1 (unit intervals are the chain's states) and n >= alpha.
TruncatedChain build_truncated_chain(const IfsParams& params, std::int64_t n);

// Left fixed point of the transition rule, normalized to a probability
// vector. residual is the sup norm of v P - v for the returned v.
struct StationaryVector {
    std::vector<double> probabilities;
    double residual = 0.0;
    std::int64_t iterations = 0;
};

// Power iteration; the default for large chains. Throws NoConvergence when
// max_iter sweeps leave the residual above tol.
StationaryVector solve_stationary(const TruncatedChain& chain, double tol = 1e-12,
                                  std::int64_t max_iter = 1000000,
                                  const std::vector<double>* warm_start = nullptr);

// Direct state-elimination solve (no subtraction of like-signed quantities),
// accurate to machine precision. O(n^3) dense; intended for n <= 2000. This
// is the oracle the iterative solver is checked against.
StationaryVector solve_stationary_exact(const TruncatedChain& chain);

// sup norm of v P - v.
double stationary_residual(const TruncatedChain& chain, const std::vector<double>& v);

// Digit-frequency vector: xi_k = total stationary mass of states congruent
// to k mod alpha.
struct XiVector {
    std::vector<double> xi;
    std::int64_t truncation_n = 0;
};

XiVector xi_from_stationary(const StationaryVector& sv, std::int64_t alpha);

// Doubles the truncation (starting at 64) until xi changes by less than tol
// in sup norm between successive sizes. Throws NoConvergence past n_cap.
struct ConvergedXi {
    XiVector xi;
    std::int64_t n_used = 0;
    StationaryVector stationary;  // the vector at n_used
};

ConvergedXi xi_converged(const IfsParams& params, double tol,
                         std::int64_t n_cap = std::int64_t{1} << 20);

// Largest residual of the unit-interval invariance
//   v(m) = p v(m-1) + (1-p) sum_{j<alpha} v(m*alpha + j),  v(-1) = 0,
// over m = 0..m_max. Requires m_max*alpha + alpha - 1 < n.
double invariance_residual(const StationaryVector& sv, const IfsParams& params,
                           std::int64_t m_max);

// Ordinary least-squares slope of log v(m) against m over [m_lo, m_hi].
double least_squares_log_slope(const StationaryVector& sv, std::int64_t m_lo,
                               std::int64_t m_hi);

}  // namespace pidim
