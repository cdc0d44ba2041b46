#include <doctest.h>

#include <cmath>

#include "pidim/errors.hpp"
#include "pidim/params.hpp"

using namespace pidim;

TEST_CASE("validate_params accepts the documented triples and stores them exactly") {
    const IfsParams a = validate_params(2, 1, 1.0 / 3.0);
    CHECK(a.alpha == 2);
    CHECK(a.beta == 1);
    CHECK(a.p == 1.0 / 3.0);

    const IfsParams b = validate_params(5, 1, 1.0 / 3.0);
    CHECK(b.alpha == 5);
    CHECK(b.beta == 1);
    CHECK(b.p == 1.0 / 3.0);
}

TEST_CASE("validate_params rejects out-of-domain inputs without clamping") {
    CHECK_THROWS_AS(validate_params(1, 1, 0.5), AlphaOutOfRange);
    CHECK_THROWS_AS(validate_params(0, 1, 0.5), AlphaOutOfRange);
    CHECK_THROWS_AS(validate_params(2, 0, 0.5), BetaOutOfRange);
    CHECK_THROWS_AS(validate_params(2, -3, 0.5), BetaOutOfRange);
    CHECK_THROWS_AS(validate_params(2, 1, 0.0), ProbabilityOutOfRange);
    CHECK_THROWS_AS(validate_params(2, 1, 1.0), ProbabilityOutOfRange);
    CHECK_THROWS_AS(validate_params(2, 1, -0.2), ProbabilityOutOfRange);
    CHECK_THROWS_AS(validate_params(2, 1, 1.7), ProbabilityOutOfRange);
}

TEST_CASE("applicability flags and the exact power exponent") {
    const auto a = check_applicability(validate_params(2, 1, 1.0 / 3.0));
    CHECK(a.upper_bound_ok);
    CHECK(a.lower_and_spectrum_ok);
    REQUIRE(a.t_power.has_value());
    CHECK(*a.t_power == 0);

    const auto b = check_applicability(validate_params(2, 4, 1.0 / 3.0));
    CHECK(b.upper_bound_ok);
    CHECK(b.lower_and_spectrum_ok);
    REQUIRE(b.t_power.has_value());
    CHECK(*b.t_power == 2);

    const auto c = check_applicability(validate_params(2, 3, 0.6));
    CHECK(c.upper_bound_ok);
    CHECK_FALSE(c.lower_and_spectrum_ok);
    CHECK_FALSE(c.t_power.has_value());

    // p = 1/2 is inside the hypothesis, p just above is not
    CHECK(check_applicability(validate_params(2, 8, 0.5)).lower_and_spectrum_ok);
    CHECK_FALSE(check_applicability(validate_params(2, 8, 0.5000001)).lower_and_spectrum_ok);
}

TEST_CASE("lower hypothesis implies the upper one on a parameter sweep") {
    for (const std::int64_t alpha : {2, 3, 5}) {
        for (const std::int64_t beta : {1, 2, 3, 4, 8, 9, 25}) {
            for (const double p : {0.1, 0.4, 0.5, 0.7}) {
                const auto app = check_applicability(validate_params(alpha, beta, p));
                if (app.lower_and_spectrum_ok) CHECK(app.upper_bound_ok);
                CHECK(app.lower_and_spectrum_ok ==
                      (p <= 0.5 && app.t_power.has_value()));
            }
        }
    }
}

TEST_CASE("exact_power_exponent uses integer arithmetic only") {
    CHECK(exact_power_exponent(1, 2) == 0);
    CHECK(exact_power_exponent(8, 2) == 3);
    CHECK(exact_power_exponent(9, 3) == 2);
    CHECK(exact_power_exponent(125, 5) == 3);
    CHECK_FALSE(exact_power_exponent(12, 2).has_value());
    CHECK_FALSE(exact_power_exponent(10, 3).has_value());
}

TEST_CASE("average contractivity holds for every valid triple") {
    for (const std::int64_t alpha : {2, 3, 5, 17}) {
        for (const double p : {0.01, 0.3, 0.5, 0.99}) {
            const auto params = validate_params(alpha, 1, p);
            const double mean_log_rate =
                params.p * std::log(1.0) +
                (1.0 - params.p) * std::log(1.0 / static_cast<double>(params.alpha));
            CHECK(mean_log_rate < 0.0);
        }
    }
}

TEST_CASE("parse_probability handles rationals and decimals") {
    CHECK(parse_probability("1/3") == 1.0 / 3.0);
    CHECK(parse_probability("0.25") == 0.25);
    CHECK(parse_probability("2/5") == 2.0 / 5.0);
    CHECK_THROWS(parse_probability("1/3x"));
    CHECK_THROWS(parse_probability("abc"));
    CHECK_THROWS(parse_probability("1/0"));
}
