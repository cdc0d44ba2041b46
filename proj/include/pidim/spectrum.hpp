#pragma once

#include <cstdint>
#include <vector>

#include "pidim/params.hpp"

namespace pidim {

// Lower bounds for the two multifractal spectra over a uniform grid of the
// level t in [0, 1], together with the standard diagonal upper bound t for
// the upper spectrum. upper_spectrum_lb[i] bounds the dimension of the set
// where the local dimension is <= t; lower_spectrum_lb[i] the set where it
// is >= t.
struct SpectrumCurve {
    std::vector<double> t_grid;
    std::vector<double> upper_spectrum_lb;
    std::vector<double> lower_spectrum_lb;
    std::vector<double> diagonal;
};

// Composition: invert the appropriate local-dimension line at t (clamped),
// then take the digit-average set dimension in base alpha. Endpoint clamps
// produce dimension 0. Requires the lower-bound hypotheses.
SpectrumCurve spectrum_lower_bounds(const IfsParams& params,
                                    const Applicability& applicability,
                                    std::int64_t grid_points = 512,
                                    double clamp_max = 1.0);

}  // namespace pidim
