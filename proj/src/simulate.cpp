#include "pidim/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "pidim/errors.hpp"
#include "pidim/rng.hpp"

namespace pidim {

namespace {

// The integer state only grows by +beta steps; anything near 2^100 means the
// parameters drive the walk to infinity in practice, so fail loudly.
constexpr __int128 kStateGuard = static_cast<__int128>(1) << 100;

void validate_config(const SimConfig& cfg) {
    if (cfg.burn_in < 0) throw std::invalid_argument("burn_in must be >= 0");
    if (cfg.steps <= cfg.burn_in) {
        throw std::invalid_argument("steps must exceed burn_in");
    }
    if (cfg.record_every < 1) throw std::invalid_argument("record_every must be >= 1");
}

}  // namespace

std::optional<std::int32_t> lumped_digit_step(__int128& state, bool translate,
                                              const IfsParams& params) {
    if (translate) {
        state += params.beta;
        if (state >= kStateGuard) {
            throw std::overflow_error("integer state exceeded the width guard");
        }
        return std::nullopt;
    }
    const auto digit = static_cast<std::int32_t>(state % params.alpha);
    state /= params.alpha;
    return digit;
}

double trajectory_step(double x, bool translate, const IfsParams& params) {
    return translate ? x + static_cast<double>(params.beta)
                     : x / static_cast<double>(params.alpha);
}

DigitFrequencyEstimate simulate_lumped_digits(const IfsParams& params,
                                              const SimConfig& cfg) {
    validate_config(cfg);
    Xoshiro256pp rng(cfg.seed);
    __int128 state = 0;

    DigitFrequencyEstimate out;
    out.counts.assign(static_cast<std::size_t>(params.alpha), 0);
    for (std::int64_t i = 0; i < cfg.steps; ++i) {
        const bool translate = rng.next_double() < params.p;
        const auto digit = lumped_digit_step(state, translate, params);
        if (digit && i >= cfg.burn_in) {
            ++out.counts[static_cast<std::size_t>(*digit)];
        }
    }

    out.digits_emitted = 0;
    for (const auto c : out.counts) out.digits_emitted += c;
    out.frequencies.assign(out.counts.size(), 0.0);
    out.standard_errors.assign(out.counts.size(), 0.0);
    if (out.digits_emitted > 0) {
        const auto total = static_cast<double>(out.digits_emitted);
        for (std::size_t k = 0; k < out.counts.size(); ++k) {
            const double f = static_cast<double>(out.counts[k]) / total;
            out.frequencies[k] = f;
            out.standard_errors[k] = std::sqrt(f * (1.0 - f) / total);
        }
    }
    return out;
}

TrajectoryStats simulate_trajectory(const IfsParams& params, const SimConfig& cfg) {
    validate_config(cfg);
    Xoshiro256pp rng(cfg.seed);
    double x = 0.0;

    TrajectoryStats out;
    out.samples.reserve(
        static_cast<std::size_t>((cfg.steps - cfg.burn_in) / cfg.record_every + 1));
    for (std::int64_t i = 0; i < cfg.steps; ++i) {
        x = trajectory_step(x, rng.next_double() < params.p, params);
        if (i >= cfg.burn_in && (i - cfg.burn_in) % cfg.record_every == 0) {
            out.samples.push_back(x);
        }
    }
    return out;
}

DistributionTables empirical_distribution_export(const TrajectoryStats& stats,
                                                 std::int64_t bins) {
    if (stats.samples.empty()) throw NoSamples("no samples to export");
    if (bins < 1) throw std::invalid_argument("need at least one bin");

    const double max_sample = *std::max_element(stats.samples.begin(), stats.samples.end());
    const double span = max_sample > 0.0 ? max_sample : 1.0;
    const double width = span / static_cast<double>(bins);
    const auto total = static_cast<double>(stats.samples.size());

    DistributionTables out;
    out.histogram.resize(static_cast<std::size_t>(bins));
    for (std::int64_t b = 0; b < bins; ++b) {
        auto& row = out.histogram[static_cast<std::size_t>(b)];
        row.bin_left = static_cast<double>(b) * width;
        row.bin_right = static_cast<double>(b + 1) * width;
    }
    for (const double x : stats.samples) {
        auto b = static_cast<std::int64_t>(x / width);
        b = std::clamp<std::int64_t>(b, 0, bins - 1);
        ++out.histogram[static_cast<std::size_t>(b)].count;
    }
    for (auto& row : out.histogram) {
        row.density = static_cast<double>(row.count) / (total * width);
    }

    std::vector<double> sorted = stats.samples;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        // one row per distinct value, carrying the full fraction <= x
        if (i + 1 < sorted.size() && sorted[i + 1] == sorted[i]) continue;
        out.cdf.emplace_back(sorted[i], static_cast<double>(i + 1) / total);
    }
    return out;
}

}  // namespace pidim
