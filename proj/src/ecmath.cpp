#include "eccforge/ecmath.hpp"

#include <array>
#include <vector>

namespace eccforge {

namespace {

constexpr std::array<unsigned, 168> kSmallPrimes = [] {
    std::array<unsigned, 168> out{};
    std::size_t count = 0;
    for (unsigned c = 2; count < out.size(); ++c) {
        bool prime = true;
        for (unsigned d = 2; d * d <= c; ++d)
            if (c % d == 0) {
                prime = false;
                break;
            }
        if (prime)
            out[count++] = c;
    }
    return out;
}();

// Returns 1 for "prime", 0 for "composite", -1 when undecided by trial division.
int trial_division(const BigInt& n)
{
    if (n < 2)
        return 0;
    for (unsigned sp : kSmallPrimes) {
        if (n == sp)
            return 1;
        if (mpz_divisible_ui_p(n.get_mpz_t(), sp))
            return 0;
    }
    const unsigned largest = kSmallPrimes.back();
    if (n < BigInt(largest) * largest)
        return 1;
    return -1;
}

bool miller_rabin_round(const BigInt& n, const BigInt& n_minus_1, const BigInt& d, unsigned s,
                        const BigInt& base)
{
    BigInt x = powm(base, d, n);
    if (x == 1 || x == n_minus_1)
        return true;
    for (unsigned r = 1; r < s; ++r) {
        x = x * x % n;
        if (x == n_minus_1)
            return true;
        if (x == 1)
            return false;
    }
    return false;
}

template <typename NextBase>
bool miller_rabin(const BigInt& n, unsigned rounds, NextBase next_base)
{
    const BigInt n_minus_1 = n - 1;
    BigInt d = n_minus_1;
    unsigned s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d >>= 1;
        ++s;
    }
    for (unsigned i = 0; i < rounds; ++i)
        if (!miller_rabin_round(n, n_minus_1, d, s, next_base(i)))
            return false;
    return true;
}

// v itself when already in [0, p), else its reduction stored in scratch.
const BigInt& reduced(const BigInt& v, const BigInt& p, BigInt& scratch)
{
    if (v >= 0 && v < p)
        return v;
    scratch = mod_floor(v, p);
    return scratch;
}

} // namespace

std::string to_string(const ECPoint& pt)
{
    if (pt.infinity)
        return "O";
    return "(" + to_decimal(pt.x) + ", " + to_decimal(pt.y) + ")";
}

BigInt mod_inverse(const BigInt& v, const BigInt& p)
{
    BigInt r;
    if (mpz_invert(r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t()) == 0)
        throw NonInvertible("value " + to_decimal(v) + " has no inverse modulo " + to_decimal(p));
    return r;
}

int legendre_symbol(const BigInt& a, const BigInt& p)
{
    const BigInt ls = powm(mod_floor(a, p), BigInt((p - 1) / 2), p);
    if (ls == p - 1)
        return -1;
    return static_cast<int>(ls.get_si());
}

BigInt tonelli_shanks(const BigInt& n_in, const BigInt& p)
{
    const BigInt n = mod_floor(n_in, p);
    if (legendre_symbol(n, p) != 1)
        throw NotAResidue("n is not a quadratic residue modulo p");

    BigInt q = p - 1;
    unsigned s = 0;
    while (mpz_even_p(q.get_mpz_t())) {
        q >>= 1;
        ++s;
    }
    if (s == 1)
        return powm(n, BigInt((p + 1) / 4), p);

    BigInt z = 2;
    while (legendre_symbol(z, p) != -1)
        ++z;

    unsigned m = s;
    BigInt c = powm(z, q, p);
    BigInt t = powm(n, q, p);
    BigInt r = powm(n, BigInt((q + 1) / 2), p);
    while (t != 1) {
        unsigned i = 0;
        BigInt ti = t;
        while (ti != 1) {
            ti = ti * ti % p;
            ++i;
        }
        BigInt exponent = 1;
        exponent <<= (m - i - 1);
        const BigInt b = powm(c, exponent, p);
        r = r * b % p;
        t = t * b % p * b % p;
        c = b * b % p;
        m = i;
    }
    return r;
}

bool is_on_curve(const ECPoint& pt, const BigInt& a, const BigInt& b, const BigInt& p)
{
    if (pt.infinity || p == 0)
        return false;
    const BigInt lhs = pt.y * pt.y - pt.x * pt.x * pt.x - a * pt.x - b;
    return mod_floor(lhs, p) == 0;
}

ECPoint ec_negate(const ECPoint& pt, const BigInt& p)
{
    if (pt.infinity)
        return pt;
    return ECPoint{mod_floor(pt.x, p), mod_floor(BigInt(-pt.y), p), false};
}

ECPoint ec_addition(const ECPoint& P, const ECPoint& Q, const BigInt& a, const BigInt& p)
{
    if (P.infinity)
        return Q;
    if (Q.infinity)
        return P;

    BigInt scratch[4];
    const BigInt& px = reduced(P.x, p, scratch[0]);
    const BigInt& py = reduced(P.y, p, scratch[1]);
    const BigInt& qx = reduced(Q.x, p, scratch[2]);
    const BigInt& qy = reduced(Q.y, p, scratch[3]);

    BigInt m, t;
    if (px == qx) {
        t = py + qy;
        if (t == 0 || t == p)
            return ECPoint::at_infinity();
        m = px * px;
        m *= 3;
        m += a;
        m *= mod_inverse(BigInt(2 * py), p);
    } else {
        t = qx - px;
        if (t < 0)
            t += p;
        m = qy - py;
        m *= mod_inverse(t, p);
    }
    mpz_mod(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());

    ECPoint out;
    out.x = m * m;
    out.x -= px;
    out.x -= qx;
    mpz_mod(out.x.get_mpz_t(), out.x.get_mpz_t(), p.get_mpz_t());
    out.y = px - out.x;
    out.y *= m;
    out.y -= py;
    mpz_mod(out.y.get_mpz_t(), out.y.get_mpz_t(), p.get_mpz_t());
    return out;
}

ECPoint ec_scalar_multiplication(const ECPoint& P, const BigInt& s_in, const BigInt& a, const BigInt& p)
{
    if (s_in < 0)
        throw std::invalid_argument("negative scalar");
    ECPoint result = ECPoint::at_infinity();
    ECPoint addend = P;
    BigInt s = s_in;
    while (s != 0) {
        if (mpz_odd_p(s.get_mpz_t()))
            result = ec_addition(result, addend, a, p);
        s >>= 1;
        if (s != 0)
            addend = ec_addition(addend, addend, a, p);
    }
    return result;
}

bool is_probable_prime(const BigInt& n, Rng& rng, unsigned rounds)
{
    if (int verdict = trial_division(n); verdict >= 0)
        return verdict == 1;
    const BigInt span = n - 3; // bases in [2, n-2]
    return miller_rabin(n, rounds, [&](unsigned) { return BigInt(2 + rng.below(span)); });
}

bool is_probable_prime(const BigInt& n, unsigned rounds)
{
    if (int verdict = trial_division(n); verdict >= 0)
        return verdict == 1;
    if (rounds > kSmallPrimes.size())
        rounds = static_cast<unsigned>(kSmallPrimes.size());
    return miller_rabin(n, rounds, [](unsigned i) { return BigInt(kSmallPrimes[i]); });
}

BigInt get_prime_for_p(unsigned bits, Rng& rng)
{
    if (bits < 4)
        throw std::invalid_argument("prime size must be at least 4 bits");
    for (;;) {
        BigInt candidate = rng.random_bits(bits);
        mpz_setbit(candidate.get_mpz_t(), bits - 1);
        mpz_setbit(candidate.get_mpz_t(), 0);
        if (is_probable_prime(candidate, rng))
            return candidate;
    }
}

ECPoint find_generator_point(const BigInt& a, const BigInt& b, const BigInt& p, const GeneratorSearch& search)
{
    using clock = std::chrono::steady_clock;
    const auto deadline = clock::now() + std::chrono::duration_cast<clock::duration>(search.time_budget);

    BigInt x = 0;
    for (std::uint64_t scanned = 0; scanned < search.scan_limit && x < p; ++scanned, ++x) {
        if ((scanned & 0xff) == 0xff && clock::now() > deadline)
            throw GeneratorTimeout("generator search exceeded its time budget");
        const BigInt rhs = mod_floor(BigInt(x * x * x + a * x + b), p);
        if (legendre_symbol(rhs, p) == 1)
            return ECPoint{x, tonelli_shanks(rhs, p), false};
    }
    throw NoGeneratorPoint("no generator point found within the scan limit");
}

BigInt count_points_bruteforce(const BigInt& a, const BigInt& b, const BigInt& p)
{
    if (p > kMaxBruteForcePrime)
        throw TooLarge("brute-force point count refused for p > 2^20");
    if (p < 3)
        throw std::invalid_argument("point count needs an odd prime");

    const unsigned long pp = p.get_ui();
    // roots[v] = number of y with y^2 ≡ v.
    std::vector<unsigned char> roots(pp, 0);
    for (unsigned long y = 0; y < pp; ++y)
        ++roots[(y * y) % pp];

    const unsigned long ar = mod_floor(a, p).get_ui();
    const unsigned long br = mod_floor(b, p).get_ui();
    unsigned long total = 1;
    for (unsigned long x = 0; x < pp; ++x) {
        const unsigned long x2 = x * x % pp;
        const unsigned long rhs = (x2 * x % pp + ar * x % pp + br) % pp;
        total += roots[rhs];
    }
    return BigInt(total);
}

} // namespace eccforge
