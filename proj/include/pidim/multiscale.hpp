#pragma once

#include <cstdint>
#include <vector>

#include "pidim/digits.hpp"
#include "pidim/lumped_chain.hpp"
#include "pidim/params.hpp"

namespace pidim {

// Stationary masses of the intervals [n b / a^k, (n+1) b / a^k] at
// refinement level k. Index coverage is explicit: masses[n] is trustworthy
// exactly for n < masses.size(), and queries outside refuse to answer.
struct MassGrid {
    std::int64_t level = 0;
    std::vector<double> masses;
    IfsParams params;

    std::int64_t coverage() const { return static_cast<std::int64_t>(masses.size()); }
    double interval_left(std::int64_t n) const;
    double interval_right(std::int64_t n) const;
};

// Level-0 grid: unit-interval masses straight from the truncated stationary
// vector. Requires beta = 1.
MassGrid base_grid_from_stationary(const StationaryVector& sv, const IfsParams& params);

// One refinement level:
//   child[n] = (1-p) * sum_{j=0}^{floor(n/a^k)} p^j * parent[n - j a^k]
// with k the child level. Each child index needs parent indices up to n, so
// the default output coverage equals the parent's. child_count beyond that
// throws InsufficientParentCoverage.
MassGrid refine_grid(const MassGrid& parent, std::int64_t child_count = -1);

// Constants of the geometric mass envelope
//   base_mass * (1-p)^k * p^g(n,k)  <=  mass  <=
//   base_mass * slack_factor * ((1-p)/(1-p^(alpha-1)))^k * p^g(n,k).
// slack_factor is the convergent product prod_{k>=1} (1 + k a p^(k(a-1))),
// truncated once the next factor drops below 1 + eps. Requires p <= 1/2.
double envelope_slack_factor(const IfsParams& params, double eps = 1e-15);

struct EnvelopeConstants {
    double base_mass = 0.0;    // level-0 mass of [0, beta]
    double slack_factor = 1.0; // > 1
};

EnvelopeConstants envelope_constants(const MassGrid& level0, const IfsParams& params,
                                     double eps = 1e-15);

// Per-index envelope verdicts for a grid.
struct EnvelopeEntry {
    std::int64_t index = 0;
    double mass = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    bool pass = false;
};

struct EnvelopeReport {
    std::int64_t level = 0;
    double slack = 0.0;
    bool all_pass = false;
    std::vector<EnvelopeEntry> entries;
};

EnvelopeReport envelope_check(const MassGrid& grid, const EnvelopeConstants& constants,
                              double slack = 0.0);

// Pointwise local-dimension bounds at x from the digit mean of x/beta in
// base alpha. The prefix mean over n_digits digits stands in for the liminf;
// that is an estimate, not a certificate, so the prefix length travels with
// the result.
struct LocalDimBounds {
    double lower = 0.0;
    double upper = 0.0;
    double digit_mean = 0.0;
    std::int64_t prefix_length = 0;
};

LocalDimBounds local_dim_bounds(const Rational& x, const IfsParams& params,
                                const Applicability& applicability,
                                std::int64_t n_digits);

}  // namespace pidim
