#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace pidim {

// The model triple (alpha, beta, p) for the process
//   X_{n+1} = X_n + beta   with probability p
//   X_{n+1} = X_n / alpha  with probability 1 - p.
// Average contractivity holds for every valid triple, so the stationary
// distribution exists and is unique.
struct IfsParams {
    std::int64_t alpha = 2;  // integer scale factor, >= 2
    std::int64_t beta = 1;   // integer translation, >= 1
    double p = 0.5;          // probability of the translation step, in (0,1)
};

// Which closed-form results apply to a given parameter triple.
// The upper bound needs only integer alpha >= 2, beta >= 1; the lower bound
// and the spectrum additionally need p <= 1/2 and beta an exact power of
// alpha.
struct Applicability {
    bool upper_bound_ok = false;
    bool lower_and_spectrum_ok = false;
    std::optional<int> t_power;  // t with beta == alpha^t, when it exists
};

// Validates raw inputs and returns the record, or throws. Never clamps.
IfsParams validate_params(std::int64_t alpha, std::int64_t beta, double p);

// Pure function of the params; t_power computed by exact integer arithmetic.
Applicability check_applicability(const IfsParams& params);

// Exact integer check: returns t with value == base^t, if any (t >= 0).
std::optional<int> exact_power_exponent(std::int64_t value, std::int64_t base);

// Accepts "a/b" rationals and plain decimals; conversion happens once here so
// every module sees the same double.
double parse_probability(const std::string& text);

}  // namespace pidim
