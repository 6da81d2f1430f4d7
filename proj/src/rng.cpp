#include "eccforge/rng.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace eccforge {

namespace {

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace

Rng::Rng(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

double Rng::uniform01()
{
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::uint64_t Rng::below(std::uint64_t bound)
{
    if (bound == 0)
        throw std::invalid_argument("Rng::below: zero bound");
    // Reject the biased tail of the 64-bit range.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % bound;
}

BigInt Rng::random_bits(unsigned bits)
{
    BigInt out = 0;
    unsigned remaining = bits;
    while (remaining >= 64) {
        out <<= 64;
        BigInt word;
        std::uint64_t w = engine_();
        mpz_import(word.get_mpz_t(), 1, 1, sizeof(w), 0, 0, &w);
        out += word;
        remaining -= 64;
    }
    if (remaining > 0) {
        out <<= remaining;
        std::uint64_t w = engine_() >> (64 - remaining);
        BigInt word;
        mpz_import(word.get_mpz_t(), 1, 1, sizeof(w), 0, 0, &w);
        out += word;
    }
    return out;
}

BigInt Rng::below(const BigInt& bound)
{
    if (bound <= 0)
        throw std::invalid_argument("Rng::below: non-positive bound");
    const unsigned bits = bit_length(bound);
    BigInt x;
    do {
        x = random_bits(bits);
    } while (x >= bound);
    return x;
}

BigInt Rng::between(const BigInt& lo, const BigInt& hi)
{
    if (hi < lo)
        throw std::invalid_argument("Rng::between: empty range");
    return lo + below(BigInt(hi - lo + 1));
}

double Rng::gaussian(double mean, double stdev)
{
    // Box-Muller; 1 - u keeps the log argument in (0, 1].
    const double u1 = 1.0 - uniform01();
    const double u2 = uniform01();
    const double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    return mean + stdev * z;
}

Rng Rng::fork(std::uint64_t stream) const
{
    return Rng(splitmix64(seed_ ^ splitmix64(stream + 0x632be59bd9b4e019ULL)));
}

} // namespace eccforge
