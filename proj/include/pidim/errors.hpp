#pragma once

#include <stdexcept>
#include <string>

namespace pidim {

// Parameter validation failures (caller passed something out of domain).
struct AlphaOutOfRange : std::invalid_argument {
    explicit AlphaOutOfRange(const std::string& msg) : std::invalid_argument(msg) {}
};
struct BetaOutOfRange : std::invalid_argument {
    explicit BetaOutOfRange(const std::string& msg) : std::invalid_argument(msg) {}
};
struct ProbabilityOutOfRange : std::invalid_argument {
    explicit ProbabilityOutOfRange(const std::string& msg) : std::invalid_argument(msg) {}
};

// Chain construction / solving.
struct BetaNotOne : std::invalid_argument {
    explicit BetaNotOne(const std::string& msg) : std::invalid_argument(msg) {}
};
struct TruncationTooSmall : std::invalid_argument {
    explicit TruncationTooSmall(const std::string& msg) : std::invalid_argument(msg) {}
};
struct NoConvergence : std::runtime_error {
    explicit NoConvergence(const std::string& msg) : std::runtime_error(msg) {}
};

// Digit machinery.
struct NonPositiveInput : std::invalid_argument {
    explicit NonPositiveInput(const std::string& msg) : std::invalid_argument(msg) {}
};
struct PrefixTooLong : std::invalid_argument {
    explicit PrefixTooLong(const std::string& msg) : std::invalid_argument(msg) {}
};
struct EmptyPrefix : std::invalid_argument {
    explicit EmptyPrefix(const std::string& msg) : std::invalid_argument(msg) {}
};

// Dimension formulas.
struct NotAProbabilityVector : std::invalid_argument {
    explicit NotAProbabilityVector(const std::string& msg) : std::invalid_argument(msg) {}
};
struct MeanOutOfRange : std::invalid_argument {
    explicit MeanOutOfRange(const std::string& msg) : std::invalid_argument(msg) {}
};

// An operation whose validity depends on the p <= 1/2 / beta = alpha^t
// hypotheses was invoked without them.
struct HypothesisNotMet : std::domain_error {
    explicit HypothesisNotMet(const std::string& msg) : std::domain_error(msg) {}
};

// Mass-grid refinement.
struct InsufficientParentCoverage : std::invalid_argument {
    explicit InsufficientParentCoverage(const std::string& msg) : std::invalid_argument(msg) {}
};

// Empirical distribution export.
struct NoSamples : std::invalid_argument {
    explicit NoSamples(const std::string& msg) : std::invalid_argument(msg) {}
};

}  // namespace pidim
