#include <doctest.h>

#include <cstdint>
#include <vector>

#include "pidim/digits.hpp"
#include "pidim/errors.hpp"
#include "pidim/rng.hpp"

using namespace pidim;

namespace {

// Second closed form of the exponent, kept independent of the library route:
// floor(n / alpha^k) plus the sum of the k lowest base-alpha digits of n.
std::int64_t mass_exponent_digit_form(std::int64_t n, std::int64_t k, std::int64_t alpha) {
    std::int64_t m = n;
    std::int64_t digit_sum = 0;
    for (std::int64_t i = 0; i < k; ++i) {
        digit_sum += m % alpha;
        m /= alpha;
    }
    return m + digit_sum;
}

std::vector<std::int32_t> digits_of(double x, std::int64_t b, std::int64_t n) {
    return normalized_digits(x, b, n).digits;
}

}  // namespace

TEST_CASE("normalized expansions of simple values") {
    CHECK(digits_of(1.0, 2, 3) == std::vector<std::int32_t>{1, 0, 0});
    CHECK(digits_of(5.0, 2, 4) == std::vector<std::int32_t>{1, 0, 1, 0});
    // 1/3 normalizes to 2/3 = 0.101010..._2
    CHECK(normalized_digits(make_rational(1, 3), 2, 4).digits ==
          std::vector<std::int32_t>{1, 0, 1, 0});
    CHECK(normalized_digits(make_rational(1, 3), 2, 4).scale_exponent == -1);
    CHECK(normalized_digits(make_rational(5, 1), 2, 4).scale_exponent == 3);
    // first digit is always nonzero
    for (const double x : {0.017, 0.3, 1.0, 7.25, 1000.5}) {
        CHECK(digits_of(x, 3, 1)[0] > 0);
    }
}

TEST_CASE("non-positive and malformed inputs are rejected") {
    CHECK_THROWS_AS(normalized_digits(0.0, 2, 4), NonPositiveInput);
    CHECK_THROWS_AS(normalized_digits(-1.5, 2, 4), NonPositiveInput);
    CHECK_THROWS_AS(normalized_digits(Rational{}, 2, 4), NonPositiveInput);
    CHECK_THROWS(normalized_digits(1.0, 1, 4));
    CHECK_THROWS(normalized_digits(1.0, 2, 0));
}

TEST_CASE("digit counts over prefixes") {
    const auto ds = normalized_digits(make_rational(1, 3), 2, 4);  // 1,0,1,0
    const auto c4 = digit_counts(ds, 4);
    CHECK(c4.counts == std::vector<std::int64_t>{2, 2});
    CHECK(c4.n == 4);

    const auto ds100 = normalized_digits(1.0, 2, 3);  // 1,0,0
    CHECK(digit_counts(ds100, 1).counts == std::vector<std::int64_t>{0, 1});

    const auto empty = digit_counts(ds, 0);
    CHECK(empty.counts == std::vector<std::int64_t>{0, 0});
    CHECK(empty.n == 0);

    CHECK_THROWS_AS(digit_counts(ds, 5), PrefixTooLong);
}

TEST_CASE("prefix digit means") {
    const auto ds = normalized_digits(make_rational(1, 3), 2, 4);
    CHECK(mean_digit_prefix(ds, 4) == 0.5);

    // constant digits: 8/9 = 0.22..._3
    const auto threes = normalized_digits(make_rational(8, 9), 3, 3);
    CHECK(threes.digits == std::vector<std::int32_t>{2, 2, 0});
    const auto constant = normalized_digits(make_rational(2, 3), 3, 3);
    CHECK(mean_digit_prefix(constant, 1) == 2.0);

    const auto one = normalized_digits(1.0, 2, 64);  // 1,0,0,...
    CHECK(mean_digit_prefix(one, 64) == 1.0 / 64.0);

    CHECK_THROWS_AS(mean_digit_prefix(ds, 0), EmptyPrefix);
}

TEST_CASE("mass exponent: hand values and the k = 0 identity") {
    for (const std::int64_t alpha : {2, 3, 5}) {
        for (std::int64_t n = 0; n <= 50; ++n) {
            CHECK(mass_exponent(n, 0, alpha) == n);
        }
    }
    CHECK(mass_exponent(5, 1, 2) == 3);
    CHECK(mass_exponent(8, 3, 2) == 1);
}

TEST_CASE("mass exponent: both closed forms agree exactly over the full grid") {
    for (const std::int64_t alpha : {2, 3, 5}) {
        for (std::int64_t n = 0; n <= 4096; ++n) {
            for (std::int64_t k = 0; k <= 12; ++k) {
                if (mass_exponent(n, k, alpha) != mass_exponent_digit_form(n, k, alpha)) {
                    FAIL("mismatch at alpha=", alpha, " n=", n, " k=", k);
                }
            }
        }
    }
    CHECK(true);
}

TEST_CASE("digit extraction is idempotent under reconstruction") {
    Xoshiro256pp rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        // ranges keep every reconstruction well inside 128 bits
        const std::int64_t b = 2 + static_cast<std::int64_t>(rng.next() % 5);
        const std::uint64_t num = 1 + rng.next() % 100000;
        const std::uint64_t den = 1 + rng.next() % 100000;
        const std::int64_t n = 1 + static_cast<std::int64_t>(rng.next() % 30);

        const auto ds = normalized_digits(make_rational(num, den), b, n);

        // value = (sum_i d_i b^(n-i)) * b^(L-n) as an exact rational
        unsigned __int128 acc = 0;
        for (const auto d : ds.digits) {
            acc = acc * static_cast<unsigned __int128>(b) + static_cast<unsigned __int128>(d);
        }
        if (acc == 0) continue;  // reconstruction of an all-zero prefix has no expansion
        const std::int64_t shift = ds.scale_exponent - n;
        Rational rebuilt;
        if (shift >= 0) {
            rebuilt.num = acc;
            rebuilt.den = 1;
            for (std::int64_t i = 0; i < shift; ++i) rebuilt.num *= static_cast<unsigned>(b);
        } else {
            rebuilt.num = acc;
            rebuilt.den = 1;
            for (std::int64_t i = 0; i < -shift; ++i) rebuilt.den *= static_cast<unsigned>(b);
        }
        const auto ds2 = normalized_digits(rebuilt, b, n);
        CHECK(ds2.digits == ds.digits);
        CHECK(ds2.scale_exponent == ds.scale_exponent);
    }
}

TEST_CASE("tie rule: expansions from b-power denominators never trail in (b-1)s") {
    Xoshiro256pp rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const std::int64_t b = 2 + static_cast<std::int64_t>(rng.next() % 4);
        std::uint64_t den = 1;
        const int exponent = 1 + static_cast<int>(rng.next() % 12);
        for (int i = 0; i < exponent; ++i) den *= static_cast<std::uint64_t>(b);
        const std::uint64_t num = 1 + rng.next() % den;

        const auto ds = normalized_digits(make_rational(num, den), b, 200);
        int trailing = 0;
        for (auto it = ds.digits.rbegin(); it != ds.digits.rend(); ++it) {
            if (*it != b - 1) break;
            ++trailing;
        }
        CHECK(trailing < 64);
    }
}

TEST_CASE("exact conversion from doubles") {
    const auto r = rational_from_double(0.375);
    CHECK(static_cast<std::uint64_t>(r.num) == 3);
    CHECK(static_cast<std::uint64_t>(r.den) == 8);
    const auto w = rational_from_double(6.0);
    CHECK(static_cast<std::uint64_t>(w.num) == 6);
    CHECK(static_cast<std::uint64_t>(w.den) == 1);
    CHECK_THROWS_AS(rational_from_double(0.0), NonPositiveInput);
    CHECK_THROWS_AS(rational_from_double(-2.0), NonPositiveInput);
}
