#include "pidim/spectrum.hpp"

#include <stdexcept>

#include "pidim/dimension.hpp"
#include "pidim/errors.hpp"

namespace pidim {

SpectrumCurve spectrum_lower_bounds(const IfsParams& params,
                                    const Applicability& applicability,
                                    std::int64_t grid_points, double clamp_max) {
    if (!applicability.lower_and_spectrum_ok) {
        throw HypothesisNotMet("spectrum bounds need p <= 1/2 and beta a power of alpha");
    }
    if (grid_points < 2) throw std::invalid_argument("need at least two grid points");
    if (!(clamp_max > 0.0)) throw std::invalid_argument("clamp_max must be positive");

    SpectrumCurve curve;
    curve.t_grid.reserve(static_cast<std::size_t>(grid_points));
    curve.upper_spectrum_lb.reserve(static_cast<std::size_t>(grid_points));
    curve.lower_spectrum_lb.reserve(static_cast<std::size_t>(grid_points));
    curve.diagonal.reserve(static_cast<std::size_t>(grid_points));

    for (std::int64_t i = 0; i < grid_points; ++i) {
        const double t =
            static_cast<double>(i) / static_cast<double>(grid_points - 1);
        const double upper_arg = dim_line_inverse(t, params, DimLine::upper, clamp_max);
        const double lower_arg = dim_line_inverse(t, params, DimLine::lower, clamp_max);
        curve.t_grid.push_back(t);
        curve.upper_spectrum_lb.push_back(barreira_dim(params.alpha, upper_arg).dimension);
        curve.lower_spectrum_lb.push_back(barreira_dim(params.alpha, lower_arg).dimension);
        curve.diagonal.push_back(t);
    }
    return curve;
}

}  // namespace pidim
