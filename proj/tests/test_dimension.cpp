#include <doctest.h>

#include <cmath>
#include <vector>

#include "pidim/dimension.hpp"
#include "pidim/errors.hpp"
#include "pidim/params.hpp"

using namespace pidim;

namespace {

const IfsParams kThird = validate_params(2, 1, 1.0 / 3.0);
const IfsParams kHalf = validate_params(2, 1, 0.5);

}  // namespace

TEST_CASE("upper dimension line at reference points") {
    CHECK(dim_upper_line(0.0, kHalf) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(dim_upper_line(1.0, kHalf) == doctest::Approx(2.0).epsilon(1e-14));
    // log(3/2)/log 2
    CHECK(dim_upper_line(0.0, kThird) ==
          doctest::Approx(0.58496250072115618).epsilon(1e-13));
}

TEST_CASE("lower dimension line collapses to a pure slope at alpha = 2") {
    for (const double p : {0.1, 1.0 / 3.0, 0.49}) {
        const auto params = validate_params(2, 1, p);
        CHECK(dim_lower_line(0.0, params) == doctest::Approx(0.0).epsilon(1e-13));
    }
    CHECK(dim_lower_line(1.0, kHalf) == doctest::Approx(1.0).epsilon(1e-13));
    // slope log 3 / log 2 for p = 1/3
    const double slope = 1.5849625007211562;
    CHECK(dim_lower_line(0.3205, kThird) == doctest::Approx(slope * 0.3205).epsilon(1e-13));
    CHECK(dim_lower_line(0.3205, kThird) == doctest::Approx(0.508).epsilon(1e-3));
}

TEST_CASE("both lines are affine: second differences vanish") {
    for (const std::int64_t alpha : {2, 3, 5}) {
        const auto params = validate_params(alpha, 1, 0.3);
        for (const double x : {0.1, 0.45, 0.8}) {
            const double h = 0.17;
            const double d2_upper = dim_upper_line(x + h, params) -
                                    2.0 * dim_upper_line(x, params) +
                                    dim_upper_line(x - h, params);
            const double d2_lower = dim_lower_line(x + h, params) -
                                    2.0 * dim_lower_line(x, params) +
                                    dim_lower_line(x - h, params);
            CHECK(std::abs(d2_upper) < 1e-14);
            CHECK(std::abs(d2_lower) < 1e-14);
        }
    }
}

TEST_CASE("line inverses clamp and invert") {
    const double intercept = dim_upper_line(0.0, kThird);
    CHECK(dim_line_inverse(intercept, kThird, DimLine::upper) == 0.0);
    CHECK(dim_line_inverse(0.0, kThird, DimLine::upper) == 0.0);
    // (0.9 - log(3/2)/log2) / (log3/log2)
    CHECK(dim_line_inverse(0.9, kThird, DimLine::upper) ==
          doctest::Approx(0.19876653178576913).epsilon(1e-12));
    // inverse really inverts on the unclamped range
    for (const double x : {0.05, 0.2, 0.26}) {
        const double t = dim_upper_line(x, kThird);
        CHECK(dim_line_inverse(t, kThird, DimLine::upper) ==
              doctest::Approx(x).epsilon(1e-12));
        const double tl = dim_lower_line(x, kThird);
        CHECK(dim_line_inverse(tl, kThird, DimLine::lower) ==
              doctest::Approx(x).epsilon(1e-12));
    }
    // clamp_max is honored
    CHECK(dim_line_inverse(5.0, kThird, DimLine::upper, 1.0) == 1.0);
    CHECK(dim_line_inverse(5.0, kThird, DimLine::upper, 0.25) == 0.25);
}

TEST_CASE("eggleston dimension: entropy over log base") {
    for (const std::int64_t b : {2, 3, 5, 10}) {
        std::vector<double> uniform(static_cast<std::size_t>(b),
                                    1.0 / static_cast<double>(b));
        CHECK(eggleston_dim(uniform, b) == doctest::Approx(1.0).epsilon(1e-13));

        std::vector<double> point(static_cast<std::size_t>(b), 0.0);
        point[0] = 1.0;
        CHECK(eggleston_dim(point, b) == 0.0);
    }
    const std::vector<double> third{2.0 / 3.0, 1.0 / 3.0};
    CHECK(eggleston_dim(third, 2) == doctest::Approx(0.91829583405448951).epsilon(1e-13));

    CHECK_THROWS_AS(eggleston_dim(std::vector<double>{0.5, 0.6}, 2), NotAProbabilityVector);
    CHECK_THROWS_AS(eggleston_dim(std::vector<double>{1.2, -0.2}, 2), NotAProbabilityVector);
    CHECK_THROWS_AS(eggleston_dim(third, 3), NotAProbabilityVector);
}

TEST_CASE("digit-average set dimension: symmetry point, endpoints, base-2 closed form") {
    for (const std::int64_t b : {2, 3, 5}) {
        const auto mid = barreira_dim(b, static_cast<double>(b - 1) / 2.0);
        CHECK(mid.r_root == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(mid.dimension == doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK(barreira_dim(5, 0.0).dimension == 0.0);
    CHECK(barreira_dim(5, 4.0).dimension == 0.0);

    const auto third = barreira_dim(2, 1.0 / 3.0);
    CHECK(third.r_root == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(third.dimension == doctest::Approx(0.91829583405448951).epsilon(1e-9));

    CHECK_THROWS_AS(barreira_dim(2, -0.1), MeanOutOfRange);
    CHECK_THROWS_AS(barreira_dim(2, 1.5), MeanOutOfRange);
}

TEST_CASE("digit-average dimension equals the entropy form on base 2") {
    for (int i = 1; i <= 19; ++i) {
        const double t = 0.05 * i;
        const std::vector<double> q{1.0 - t, t};
        CHECK(std::abs(barreira_dim(2, t).dimension - eggleston_dim(q, 2)) < 1e-10);
    }
}

TEST_CASE("constraint residual at the returned root stays tiny") {
    // interior grid over the operating range of the spectrum (means in (0,1))
    for (const std::int64_t b : {2, 3, 5, 10}) {
        for (int i = 1; i <= 9; ++i) {
            const double t = 0.1 * i;
            const auto sol = barreira_dim(b, t);
            double residual = 0.0;
            double rpow = 1.0;
            for (std::int64_t d = 0; d < b; ++d) {
                residual += (static_cast<double>(d) - t) * rpow;
                rpow *= sol.r_root;
            }
            CHECK(std::abs(residual) < 1e-12);
            CHECK(sol.dimension >= 0.0);
            CHECK(sol.dimension <= 1.0);
        }
    }
}

TEST_CASE("naive upper bound values and its line identity") {
    CHECK(naive_upper_bound(kHalf) == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(naive_upper_bound(kThird) == doctest::Approx(1.3774437510817343).epsilon(1e-13));
    for (const std::int64_t alpha : {2, 3, 5}) {
        for (int i = 1; i <= 5; ++i) {
            const double p = 0.1 * i;
            const auto params = validate_params(alpha, 1, p);
            CHECK(std::abs(naive_upper_bound(params) -
                           dim_upper_line(p / (1.0 - p), params)) < 1e-12);
        }
    }
}

TEST_CASE("bounds from a digit-frequency vector") {
    XiVector uniform;
    uniform.xi = {0.5, 0.5};
    uniform.truncation_n = 2;
    const auto app = check_applicability(kThird);
    const auto u = bounds_from_xi(uniform, kThird, app);
    CHECK(u.hausdorff_upper == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(u.mean_digit == doctest::Approx(0.5).epsilon(1e-13));
    REQUIRE(u.hausdorff_lower.has_value());
    CHECK(*u.hausdorff_lower <= u.hausdorff_upper + 1e-12);
    CHECK(*u.packing_lower == *u.hausdorff_lower);
    CHECK(*u.packing_upper == doctest::Approx(dim_upper_line(0.5, kThird)).epsilon(1e-13));

    // hypotheses off: only the always-computable fields are present
    const auto loose = validate_params(2, 1, 0.75);
    const auto b = bounds_from_xi(uniform, loose, check_applicability(loose));
    CHECK_FALSE(b.hausdorff_lower.has_value());
    CHECK_FALSE(b.packing_lower.has_value());
    CHECK_FALSE(b.packing_upper.has_value());
    CHECK(b.hausdorff_upper == doctest::Approx(1.0).epsilon(1e-13));
}
