#include "pidim/multiscale.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "pidim/dimension.hpp"
#include "pidim/errors.hpp"

namespace pidim {

namespace {

// alpha^level saturated at `cap` so division stays meaningful without
// overflow; past the cap no summation term beyond j = 0 exists anyway.
std::int64_t saturating_power(std::int64_t alpha, std::int64_t level, std::int64_t cap) {
    std::int64_t out = 1;
    for (std::int64_t i = 0; i < level; ++i) {
        if (out > cap / alpha) return cap;
        out *= alpha;
    }
    return out;
}

}  // namespace

double MassGrid::interval_left(std::int64_t n) const {
    return static_cast<double>(n) * static_cast<double>(params.beta) /
           std::pow(static_cast<double>(params.alpha), static_cast<double>(level));
}

double MassGrid::interval_right(std::int64_t n) const {
    return static_cast<double>(n + 1) * static_cast<double>(params.beta) /
           std::pow(static_cast<double>(params.alpha), static_cast<double>(level));
}

MassGrid base_grid_from_stationary(const StationaryVector& sv, const IfsParams& params) {
    if (params.beta != 1) {
        throw BetaNotOne("unit-interval masses require beta = 1");
    }
    MassGrid out;
    out.level = 0;
    out.masses = sv.probabilities;
    out.params = params;
    return out;
}

MassGrid refine_grid(const MassGrid& parent, std::int64_t child_count) {
    const std::int64_t parent_cov = parent.coverage();
    if (child_count < 0) child_count = parent_cov;
    if (child_count > parent_cov) {
        throw InsufficientParentCoverage(
            "child index " + std::to_string(child_count - 1) + " needs parent index " +
            std::to_string(child_count - 1) + " but coverage ends at " +
            std::to_string(parent_cov - 1));
    }

    MassGrid out;
    out.level = parent.level + 1;
    out.params = parent.params;
    out.masses.assign(static_cast<std::size_t>(child_count), 0.0);

    const double p = parent.params.p;
    const std::int64_t stride =
        saturating_power(parent.params.alpha, out.level, child_count + 1);
    for (std::int64_t n = 0; n < child_count; ++n) {
        const std::int64_t j_max = n / stride;
        double acc = 0.0;
        double pj = 1.0;
        for (std::int64_t j = 0; j <= j_max; ++j) {
            acc += pj * parent.masses[static_cast<std::size_t>(n - j * stride)];
            pj *= p;
        }
        out.masses[static_cast<std::size_t>(n)] = (1.0 - p) * acc;
    }
    return out;
}

double envelope_slack_factor(const IfsParams& params, double eps) {
    if (params.p > 0.5) {
        throw HypothesisNotMet("the geometric envelope requires p <= 1/2, got p = " +
                               std::to_string(params.p));
    }
    if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
    double product = 1.0;
    const double a = static_cast<double>(params.alpha);
    for (std::int64_t k = 1;; ++k) {
        const double factor =
            1.0 + static_cast<double>(k) * a *
                      std::pow(params.p, static_cast<double>(k) * (a - 1.0));
        if (factor < 1.0 + eps) break;
        product *= factor;
    }
    return product;
}

EnvelopeConstants envelope_constants(const MassGrid& level0, const IfsParams& params,
                                     double eps) {
    if (level0.level != 0 || level0.masses.empty()) {
        throw std::invalid_argument("envelope constants come from a nonempty level-0 grid");
    }
    return EnvelopeConstants{level0.masses[0], envelope_slack_factor(params, eps)};
}

EnvelopeReport envelope_check(const MassGrid& grid, const EnvelopeConstants& constants,
                              double slack) {
    const double p = grid.params.p;
    const double a = static_cast<double>(grid.params.alpha);
    const auto k = static_cast<double>(grid.level);
    const double lower_scale = constants.base_mass * std::pow(1.0 - p, k);
    const double upper_scale =
        constants.base_mass * constants.slack_factor *
        std::pow((1.0 - p) / (1.0 - std::pow(p, a - 1.0)), k);

    EnvelopeReport report;
    report.level = grid.level;
    report.slack = slack;
    report.all_pass = true;
    report.entries.reserve(grid.masses.size());
    for (std::int64_t n = 0; n < grid.coverage(); ++n) {
        const std::int64_t g = mass_exponent(n, grid.level, grid.params.alpha);
        const double pg = std::pow(p, static_cast<double>(g));
        EnvelopeEntry e;
        e.index = n;
        e.mass = grid.masses[static_cast<std::size_t>(n)];
        e.lower = lower_scale * pg;
        e.upper = upper_scale * pg;
        e.pass = (e.lower - slack <= e.mass) && (e.mass <= e.upper + slack);
        report.all_pass = report.all_pass && e.pass;
        report.entries.push_back(e);
    }
    return report;
}

LocalDimBounds local_dim_bounds(const Rational& x, const IfsParams& params,
                                const Applicability& applicability,
                                std::int64_t n_digits) {
    if (!applicability.lower_and_spectrum_ok) {
        throw HypothesisNotMet(
            "local dimension bounds need p <= 1/2 and beta a power of alpha");
    }
    if (n_digits < 1) throw std::invalid_argument("need at least one digit");
    const Rational scaled = rational_div(x, params.beta);
    const DigitString ds = normalized_digits(scaled, params.alpha, n_digits);
    LocalDimBounds out;
    out.digit_mean = mean_digit_prefix(ds, n_digits);
    out.prefix_length = n_digits;
    out.lower = dim_lower_line(out.digit_mean, params);
    out.upper = dim_upper_line(out.digit_mean, params);
    return out;
}

}  // namespace pidim
