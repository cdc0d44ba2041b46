#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "pidim/lumped_chain.hpp"
#include "pidim/params.hpp"

namespace pidim {

// The two affine lines bounding the local dimension as a function of the
// asymptotic digit mean x in [0, alpha-1]:
//   upper line: (log(1-p) + x log p) / log(1/alpha)
//   lower line: upper line - log(1 - p^(alpha-1)) / log(1/alpha)
// Both are increasing in x; the lower line sits below the upper one.
double dim_upper_line(double x, const IfsParams& params);
double dim_lower_line(double x, const IfsParams& params);

enum class DimLine { upper, lower };

// Inverse of the chosen line, clamped to [0, clamp_max]. clamp_max defaults
// to 1; it is configurable so the full digit-mean range [0, alpha-1] can be
// explored.
double dim_line_inverse(double t, const IfsParams& params, DimLine which,
                        double clamp_max = 1.0);

// Dimension of the set of points whose base-b digit frequencies equal q:
// entropy of q over log b, with the 0*log 0 = 0 convention.
double eggleston_dim(std::span<const double> q, std::int64_t b);

// Dimension of the set of points whose base-b digit average equals t,
// via the one-parameter minimization log(sum_i r^(i-t)) / log b subject to
// sum_i (i - t) r^i = 0. The constraint's weighted-mean form is strictly
// increasing in r, so bisection on log r finds the unique root.
struct BarreiraSolution {
    double r_root = 0.0;
    double dimension = 0.0;
};

BarreiraSolution barreira_dim(std::int64_t b, double t);

// The entropy-over-escape upper bound that needs no digit statistics:
//   (p log p + (1-p) log(1-p)) / ((1-p) log(1/alpha)).
// May exceed 1. Algebraically equal to dim_upper_line(p/(1-p)).
double naive_upper_bound(const IfsParams& params);

// All closed-form dimension bounds derived from a digit-frequency vector.
// The Hausdorff upper bound and the naive bound are always computed; the
// lower bound and the packing bounds require the stronger hypotheses and are
// absent otherwise.
struct DimensionBounds {
    double hausdorff_upper = 0.0;
    double naive_upper = 0.0;
    double mean_digit = 0.0;  // sum_i i * xi_i
    std::optional<double> hausdorff_lower;
    std::optional<double> packing_lower;
    std::optional<double> packing_upper;
};

DimensionBounds bounds_from_xi(const XiVector& xi, const IfsParams& params,
                               const Applicability& applicability);

}  // namespace pidim
