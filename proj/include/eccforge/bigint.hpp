#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace eccforge {

using BigInt = mpz_class;

// Parses a base-10 integer with an optional leading '-'. Throws
// std::invalid_argument on anything else (including empty input).
BigInt parse_decimal(std::string_view text);

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

// Floor modulus: result always in [0, m) for m > 0.
BigInt mod_floor(const BigInt& v, const BigInt& m);

BigInt isqrt(const BigInt& v);

BigInt powm(const BigInt& base, const BigInt& exp, const BigInt& mod);

// Minimal big-endian magnitude bytes; zero encodes as a single 0x00.
std::vector<std::uint8_t> to_bytes_be(const BigInt& v);

double to_double(const BigInt& v);

// Natural logarithm of a positive integer, accurate for values far beyond
// the double exponent range.
double log_natural(const BigInt& v);

unsigned bit_length(const BigInt& v);

} // namespace eccforge
