#pragma once

#include <chrono>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "eccforge/bigint.hpp"
#include "eccforge/rng.hpp"

namespace eccforge {

class EcMathError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NonInvertible : public EcMathError {
public:
    using EcMathError::EcMathError;
};

class NotAResidue : public EcMathError {
public:
    using EcMathError::EcMathError;
};

class NoGeneratorPoint : public EcMathError {
public:
    using EcMathError::EcMathError;
};

class GeneratorTimeout : public EcMathError {
public:
    using EcMathError::EcMathError;
};

class TooLarge : public EcMathError {
public:
    using EcMathError::EcMathError;
};

/// Affine point with an explicit point-at-infinity flag.
struct ECPoint {
    BigInt x = 0;
    BigInt y = 0;
    bool infinity = false;

    static ECPoint at_infinity() { return ECPoint{0, 0, true}; }

    // All infinity points compare equal regardless of their coordinates.
    friend bool operator==(const ECPoint& l, const ECPoint& r)
    {
        if (l.infinity || r.infinity)
            return l.infinity == r.infinity;
        return l.x == r.x && l.y == r.y;
    }
};

/// Domain parameters (a, b, p, G, n, h) for y^2 = x^3 + ax + b over F_p.
///
/// Optimizer genomes reuse this type and may hold values that violate the
/// usual invariants (a >= p, n = 0, ...); validate_curve() is the gate.
struct CurveParams {
    BigInt a = 0;
    BigInt b = 0;
    BigInt p = 0;
    ECPoint G = ECPoint::at_infinity();
    BigInt n = 0;
    BigInt h = 1;

    friend bool operator==(const CurveParams&, const CurveParams&) = default;
};

std::string to_string(const ECPoint& pt);

BigInt mod_inverse(const BigInt& v, const BigInt& p);

/// Euler's criterion: 1 for a nonzero residue, -1 for a non-residue, 0 for a ≡ 0.
int legendre_symbol(const BigInt& a, const BigInt& p);

/// Modular square root of a quadratic residue. Uses the (p+1)/4 shortcut when
/// p ≡ 3 (mod 4); otherwise Tonelli-Shanks with z the smallest non-residue.
/// The returned root is not canonicalized.
BigInt tonelli_shanks(const BigInt& n, const BigInt& p);

bool is_on_curve(const ECPoint& pt, const BigInt& a, const BigInt& b, const BigInt& p);
inline bool is_on_curve(const ECPoint& pt, const CurveParams& c) { return is_on_curve(pt, c.a, c.b, c.p); }

ECPoint ec_negate(const ECPoint& pt, const BigInt& p);

/// Group law on affine points. Coordinates are reduced mod p on entry.
ECPoint ec_addition(const ECPoint& P, const ECPoint& Q, const BigInt& a, const BigInt& p);
inline ECPoint ec_addition(const ECPoint& P, const ECPoint& Q, const CurveParams& c) { return ec_addition(P, Q, c.a, c.p); }

/// s·P by right-to-left double-and-add. s must be non-negative.
ECPoint ec_scalar_multiplication(const ECPoint& P, const BigInt& s, const BigInt& a, const BigInt& p);
inline ECPoint ec_scalar_multiplication(const ECPoint& P, const BigInt& s, const CurveParams& c)
{
    return ec_scalar_multiplication(P, s, c.a, c.p);
}

inline constexpr unsigned kMillerRabinRounds = 40;

/// Small-prime sieve followed by `rounds` Miller-Rabin rounds with bases drawn from rng.
bool is_probable_prime(const BigInt& n, Rng& rng, unsigned rounds = kMillerRabinRounds);

/// Same test with the first `rounds` primes as fixed bases; no randomness consumed.
bool is_probable_prime(const BigInt& n, unsigned rounds = kMillerRabinRounds);

/// Random prime with exactly `bits` significant bits. bits must be >= 4.
BigInt get_prime_for_p(unsigned bits, Rng& rng);

struct GeneratorSearch {
    std::uint64_t scan_limit = 100000;
    std::chrono::duration<double> time_budget = std::chrono::seconds(5);
};

/// First (x, y) with x = 0, 1, 2, ... whose right-hand side is a nonzero
/// quadratic residue. Throws NoGeneratorPoint once the scan limit (or the
/// field) is exhausted and GeneratorTimeout when the wall-clock budget runs out.
ECPoint find_generator_point(const BigInt& a, const BigInt& b, const BigInt& p,
                             const GeneratorSearch& search = {});

inline constexpr std::uint64_t kMaxBruteForcePrime = 1u << 20;

/// #E(F_p) including the point at infinity, by enumerating x. p must be an odd
/// prime no larger than kMaxBruteForcePrime (TooLarge otherwise).
BigInt count_points_bruteforce(const BigInt& a, const BigInt& b, const BigInt& p);

} // namespace eccforge
