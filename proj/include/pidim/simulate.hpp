#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pidim/params.hpp"

namespace pidim {

struct SimConfig {
    std::uint64_t seed = 0;
    std::int64_t steps = 1000000;
    std::int64_t burn_in = 1000;     // steps discarded before recording
    std::int64_t record_every = 1;   // trajectory thinning
};

// One step of the exact integer lumped walk. translate=true applies the
// +beta map; otherwise the contraction emits the digit state mod alpha and
// the state drops to floor(state / alpha). All arithmetic exact.
std::optional<std::int32_t> lumped_digit_step(__int128& state, bool translate,
                                              const IfsParams& params);

// One step of the floating-point walk.
double trajectory_step(double x, bool translate, const IfsParams& params);

// Frequencies of digits emitted by the integer walk after burn-in. These
// estimate the xi vector; pi-almost all points share those digit frequencies.
struct DigitFrequencyEstimate {
    std::vector<std::int64_t> counts;          // one per digit 0..alpha-1
    std::int64_t digits_emitted = 0;
    std::vector<double> frequencies;           // counts / digits_emitted
    std::vector<double> standard_errors;       // binomial, per digit
};

DigitFrequencyEstimate simulate_lumped_digits(const IfsParams& params,
                                              const SimConfig& cfg);

// Forward floating-point iteration from X0 = 0, recording every
// record_every-th value after burn-in.
struct TrajectoryStats {
    std::vector<double> samples;
};

TrajectoryStats simulate_trajectory(const IfsParams& params, const SimConfig& cfg);

// Equal-width histogram over [0, max sample] plus the empirical CDF on the
// distinct sorted sample values.
struct HistogramRow {
    double bin_left = 0.0;
    double bin_right = 0.0;
    std::int64_t count = 0;
    double density = 0.0;  // count / (total * width); density * width sums to 1
};

struct DistributionTables {
    std::vector<HistogramRow> histogram;
    std::vector<std::pair<double, double>> cdf;  // (x, fraction <= x)
};

DistributionTables empirical_distribution_export(const TrajectoryStats& stats,
                                                 std::int64_t bins);

}  // namespace pidim
