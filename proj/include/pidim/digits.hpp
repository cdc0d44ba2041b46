#pragma once

#include <cstdint>
#include <vector>

namespace pidim {

// Exact nonnegative rational with 128-bit numerator and denominator.
// Wide enough for every double in [2^-74, 2^74] and for all the digit
// extraction this project needs; operations that would overflow throw.
struct Rational {
    unsigned __int128 num = 0;
    unsigned __int128 den = 1;
};

Rational make_rational(std::uint64_t num, std::uint64_t den);

// Exact conversion of a positive finite double via its binary representation.
Rational rational_from_double(double x);

// Divide by a positive integer, exactly.
Rational rational_div(const Rational& x, std::int64_t divisor);

// First digits of the normalized base-b expansion of a positive value x,
// i.e. of x / b^L(x) in [1/b, 1) where L(x) = floor(log_b x) + 1.
// Extraction is exact long division, so an expansion ending in repeated
// (b-1)'s is never produced and the first digit is nonzero.
struct DigitString {
    std::int64_t base = 2;
    std::vector<std::int32_t> digits;
    Rational source;                 // the value the digits were extracted from
    std::int64_t scale_exponent = 0; // L(x), found by integer comparison
};

DigitString normalized_digits(const Rational& x, std::int64_t base, std::int64_t count);
DigitString normalized_digits(double x, std::int64_t base, std::int64_t count);

// Occurrence counts of each digit over a prefix.
struct DigitCounts {
    std::vector<std::int64_t> counts;  // one slot per digit value
    std::int64_t n = 0;                // prefix length; counts sum to n
};

DigitCounts digit_counts(const DigitString& ds, std::int64_t n_prefix);

// Average of the first n_prefix digits.
double mean_digit_prefix(const DigitString& ds, std::int64_t n_prefix);

// The integer exponent controlling the fine-scale interval mass p^g:
//   mass_exponent(n, k) = n*alpha + (1 - alpha) * sum_{i=0}^{k} floor(n / alpha^i).
// Exact integer arithmetic throughout. Equal to floor(n / alpha^k) plus the
// sum of the k lowest base-alpha digits of n.
std::int64_t mass_exponent(std::int64_t n, std::int64_t k, std::int64_t alpha);

}  // namespace pidim
