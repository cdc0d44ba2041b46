#include "pidim/digits.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "pidim/errors.hpp"

namespace pidim {

namespace {

using U128 = unsigned __int128;

constexpr U128 kU128Max = ~static_cast<U128>(0);

U128 checked_mul(U128 a, U128 b) {
    if (b != 0 && a > kU128Max / b) {
        throw std::overflow_error("rational arithmetic exceeds 128-bit range");
    }
    return a * b;
}

U128 gcd128(U128 a, U128 b) {
    while (b != 0) {
        const U128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Rational reduced(U128 num, U128 den) {
    const U128 g = gcd128(num, den);
    return Rational{num / g, den / g};
}

}  // namespace

Rational make_rational(std::uint64_t num, std::uint64_t den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    return reduced(num, den);
}

Rational rational_from_double(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw NonPositiveInput("expected a positive finite value, got " + std::to_string(x));
    }
    int exp = 0;
    const double mant = std::frexp(x, &exp);  // x = mant * 2^exp, mant in [0.5, 1)
    const auto scaled = static_cast<std::uint64_t>(std::ldexp(mant, 53));
    const int shift = exp - 53;  // x = scaled * 2^shift exactly
    if (shift >= 0) {
        if (shift > 74) throw std::overflow_error("value too large for exact conversion");
        return reduced(static_cast<U128>(scaled) << shift, 1);
    }
    if (shift < -74) throw std::overflow_error("value too small for exact conversion");
    return reduced(scaled, static_cast<U128>(1) << (-shift));
}

Rational rational_div(const Rational& x, std::int64_t divisor) {
    if (divisor <= 0) throw std::invalid_argument("divisor must be positive");
    return reduced(x.num, checked_mul(x.den, static_cast<U128>(divisor)));
}

DigitString normalized_digits(const Rational& x, std::int64_t base, std::int64_t count) {
    if (base < 2) throw std::invalid_argument("base must be >= 2");
    if (count < 1) throw std::invalid_argument("digit count must be >= 1");
    if (x.num == 0) throw NonPositiveInput("cannot expand a non-positive value");

    const auto b = static_cast<U128>(base);

    // Find L = floor(log_base x) + 1 by pure integer comparison, then scale
    // so the working fraction num/den sits in [1/base, 1).
    std::int64_t scale = 0;
    U128 num = x.num;
    U128 den = x.den;
    if (num >= den) {
        while (num >= den) {
            den = checked_mul(den, b);
            ++scale;
        }
    } else {
        while (checked_mul(num, b) < den) {
            num = num * b;
            --scale;
        }
    }

    DigitString out;
    out.base = base;
    out.source = x;
    out.scale_exponent = scale;
    out.digits.reserve(static_cast<std::size_t>(count));

    // Long division; remainder stays below den, so the expansion never
    // terminates in repeated (base-1)'s.
    U128 rem = num;
    for (std::int64_t i = 0; i < count; ++i) {
        rem = checked_mul(rem, b);
        out.digits.push_back(static_cast<std::int32_t>(rem / den));
        rem %= den;
    }
    return out;
}

DigitString normalized_digits(double x, std::int64_t base, std::int64_t count) {
    return normalized_digits(rational_from_double(x), base, count);
}

DigitCounts digit_counts(const DigitString& ds, std::int64_t n_prefix) {
    if (n_prefix < 0 || n_prefix > static_cast<std::int64_t>(ds.digits.size())) {
        throw PrefixTooLong("prefix of " + std::to_string(n_prefix) + " digits not available");
    }
    DigitCounts out;
    out.counts.assign(static_cast<std::size_t>(ds.base), 0);
    out.n = n_prefix;
    for (std::int64_t i = 0; i < n_prefix; ++i) {
        ++out.counts[static_cast<std::size_t>(ds.digits[static_cast<std::size_t>(i)])];
    }
    return out;
}

double mean_digit_prefix(const DigitString& ds, std::int64_t n_prefix) {
    if (n_prefix < 1) throw EmptyPrefix("prefix mean needs at least one digit");
    if (n_prefix > static_cast<std::int64_t>(ds.digits.size())) {
        throw PrefixTooLong("prefix of " + std::to_string(n_prefix) + " digits not available");
    }
    std::int64_t sum = 0;
    for (std::int64_t i = 0; i < n_prefix; ++i) {
        sum += ds.digits[static_cast<std::size_t>(i)];
    }
    return static_cast<double>(sum) / static_cast<double>(n_prefix);
}

std::int64_t mass_exponent(std::int64_t n, std::int64_t k, std::int64_t alpha) {
    if (n < 0 || k < 0) throw std::invalid_argument("mass_exponent needs n, k >= 0");
    if (alpha < 2) throw std::invalid_argument("alpha must be >= 2");
    std::int64_t floor_sum = 0;
    std::int64_t m = n;
    for (std::int64_t i = 0; i <= k; ++i) {
        floor_sum += m;
        m /= alpha;
    }
    return n * alpha + (1 - alpha) * floor_sum;
}

}  // namespace pidim
