#include "pidim/dimension.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "pidim/errors.hpp"

namespace pidim {

namespace {

double log_alpha_inv(const IfsParams& params) {
    return -std::log(static_cast<double>(params.alpha));
}

// log(1 - p^(alpha-1)) / log(1/alpha); the vertical gap between the lines.
double line_gap(const IfsParams& params) {
    return std::log1p(-std::pow(params.p, static_cast<double>(params.alpha - 1))) /
           log_alpha_inv(params);
}

// Weighted digit mean sum_i i r^i / sum_i r^i with r = e^u, evaluated
// stably by shifting out the largest exponent.
double digit_mean_at(double u, std::int64_t b) {
    const double shift = u > 0 ? static_cast<double>(b - 1) * u : 0.0;
    double wsum = 0.0;
    double iwsum = 0.0;
    for (std::int64_t i = 0; i < b; ++i) {
        const double w = std::exp(static_cast<double>(i) * u - shift);
        wsum += w;
        iwsum += static_cast<double>(i) * w;
    }
    return iwsum / wsum;
}

// log sum_i exp((i - t) u), shift-stable.
double log_objective_at(double u, std::int64_t b, double t) {
    double max_e = (0.0 - t) * u;
    for (std::int64_t i = 1; i < b; ++i) {
        max_e = std::max(max_e, (static_cast<double>(i) - t) * u);
    }
    double acc = 0.0;
    for (std::int64_t i = 0; i < b; ++i) {
        acc += std::exp((static_cast<double>(i) - t) * u - max_e);
    }
    return max_e + std::log(acc);
}

}  // namespace

double dim_upper_line(double x, const IfsParams& params) {
    return (std::log1p(-params.p) + x * std::log(params.p)) / log_alpha_inv(params);
}

double dim_lower_line(double x, const IfsParams& params) {
    return dim_upper_line(x, params) - line_gap(params);
}

double dim_line_inverse(double t, const IfsParams& params, DimLine which, double clamp_max) {
    double numerator = t * log_alpha_inv(params) - std::log1p(-params.p);
    if (which == DimLine::lower) {
        numerator += std::log1p(-std::pow(params.p, static_cast<double>(params.alpha - 1)));
    }
    const double x = numerator / std::log(params.p);
    return std::min(std::max(x, 0.0), clamp_max);
}

double eggleston_dim(std::span<const double> q, std::int64_t b) {
    if (static_cast<std::int64_t>(q.size()) != b) {
        throw NotAProbabilityVector("expected " + std::to_string(b) + " entries, got " +
                                    std::to_string(q.size()));
    }
    double sum = 0.0;
    double entropy = 0.0;
    for (const double qi : q) {
        if (!(qi >= 0.0)) throw NotAProbabilityVector("negative entry in frequency vector");
        sum += qi;
        if (qi > 0.0) entropy -= qi * std::log(qi);  // 0 log 0 = 0 by explicit branch
    }
    if (std::abs(sum - 1.0) > 1e-12) {
        throw NotAProbabilityVector("entries sum to " + std::to_string(sum));
    }
    return entropy / std::log(static_cast<double>(b));
}

BarreiraSolution barreira_dim(std::int64_t b, double t) {
    if (b < 2) throw std::invalid_argument("base must be >= 2");
    if (!(t >= 0.0) || !(t <= static_cast<double>(b - 1))) {
        throw MeanOutOfRange("digit mean " + std::to_string(t) + " outside [0, " +
                             std::to_string(b - 1) + "]");
    }
    if (t == 0.0) return {0.0, 0.0};
    if (t == static_cast<double>(b - 1)) {
        return {std::numeric_limits<double>::infinity(), 0.0};
    }

    // The digit mean is strictly increasing in u = log r, from 0 to b-1.
    double lo = -60.0;
    double hi = 60.0;
    double u = 0.0;
    for (int iter = 0; iter < 200; ++iter) {
        u = 0.5 * (lo + hi);
        const double mean = digit_mean_at(u, b);
        if (std::abs(mean - t) < 1e-14) break;
        if (mean < t) {
            lo = u;
        } else {
            hi = u;
        }
    }
    BarreiraSolution out;
    out.r_root = std::exp(u);
    out.dimension = log_objective_at(u, b, t) / std::log(static_cast<double>(b));
    return out;
}

double naive_upper_bound(const IfsParams& params) {
    const double p = params.p;
    return (p * std::log(p) + (1.0 - p) * std::log1p(-p)) /
           ((1.0 - p) * log_alpha_inv(params));
}

DimensionBounds bounds_from_xi(const XiVector& xi, const IfsParams& params,
                               const Applicability& applicability) {
    if (static_cast<std::int64_t>(xi.xi.size()) != params.alpha) {
        throw NotAProbabilityVector("xi must have exactly alpha entries");
    }
    DimensionBounds out;
    double entropy = 0.0;
    double mean = 0.0;
    for (std::size_t i = 0; i < xi.xi.size(); ++i) {
        const double v = xi.xi[i];
        if (v > 0.0) entropy += v * std::log(v);
        mean += static_cast<double>(i) * v;
    }
    out.hausdorff_upper = entropy / log_alpha_inv(params);
    out.naive_upper = naive_upper_bound(params);
    out.mean_digit = mean;
    if (applicability.lower_and_spectrum_ok) {
        out.hausdorff_lower = dim_lower_line(mean, params);
        out.packing_lower = out.hausdorff_lower;
        out.packing_upper = dim_upper_line(mean, params);
    }
    return out;
}

}  // namespace pidim
