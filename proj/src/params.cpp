#include "pidim/params.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "pidim/errors.hpp"

namespace pidim {

IfsParams validate_params(std::int64_t alpha, std::int64_t beta, double p) {
    if (alpha < 2) {
        throw AlphaOutOfRange("alpha must be an integer >= 2, got " + std::to_string(alpha));
    }
    if (beta < 1) {
        throw BetaOutOfRange("beta must be an integer >= 1, got " + std::to_string(beta));
    }
    if (!(p > 0.0) || !(p < 1.0)) {
        throw ProbabilityOutOfRange("p must lie strictly between 0 and 1, got " +
                                    std::to_string(p));
    }
    return IfsParams{alpha, beta, p};
}

std::optional<int> exact_power_exponent(std::int64_t value, std::int64_t base) {
    if (value < 1 || base < 2) return std::nullopt;
    int t = 0;
    std::int64_t v = value;
    while (v > 1) {
        if (v % base != 0) return std::nullopt;
        v /= base;
        ++t;
    }
    return t;
}

Applicability check_applicability(const IfsParams& params) {
    Applicability out;
    out.upper_bound_ok = params.alpha >= 2 && params.beta >= 1;
    out.t_power = exact_power_exponent(params.beta, params.alpha);
    out.lower_and_spectrum_ok =
        out.upper_bound_ok && params.p <= 0.5 && out.t_power.has_value();
    return out;
}

double parse_probability(const std::string& text) {
    const auto slash = text.find('/');
    std::size_t used = 0;
    double value = 0.0;
    if (slash == std::string::npos) {
        value = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument("trailing junk in probability: " + text);
    } else {
        const std::string num_s = text.substr(0, slash);
        const std::string den_s = text.substr(slash + 1);
        const double num = std::stod(num_s, &used);
        if (used != num_s.size()) throw std::invalid_argument("bad numerator: " + text);
        const double den = std::stod(den_s, &used);
        if (used != den_s.size()) throw std::invalid_argument("bad denominator: " + text);
        if (den == 0.0) throw std::invalid_argument("zero denominator: " + text);
        value = num / den;
    }
    return value;
}

}  // namespace pidim
