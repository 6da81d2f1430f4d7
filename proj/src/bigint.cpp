#include "eccforge/bigint.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace eccforge {

BigInt parse_decimal(std::string_view text)
{
    std::string_view digits = text;
    if (!digits.empty() && digits.front() == '-')
        digits.remove_prefix(1);
    if (digits.empty())
        throw std::invalid_argument("empty integer");
    for (char c : digits)
        if (c < '0' || c > '9')
            throw std::invalid_argument("not a decimal integer: " + std::string(text));
    return BigInt(std::string(text), 10);
}

BigInt mod_floor(const BigInt& v, const BigInt& m)
{
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    return r;
}

BigInt isqrt(const BigInt& v)
{
    if (v < 0)
        throw std::domain_error("isqrt of negative value");
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
    return r;
}

BigInt powm(const BigInt& base, const BigInt& exp, const BigInt& mod)
{
    BigInt r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    return r;
}

std::vector<std::uint8_t> to_bytes_be(const BigInt& v)
{
    BigInt mag = abs(v);
    if (mag == 0)
        return {0};
    std::size_t count = (mpz_sizeinbase(mag.get_mpz_t(), 2) + 7) / 8;
    std::vector<std::uint8_t> out(count);
    std::size_t written = 0;
    mpz_export(out.data(), &written, 1, 1, 1, 0, mag.get_mpz_t());
    out.resize(written);
    return out;
}

double to_double(const BigInt& v) { return v.get_d(); }

double log_natural(const BigInt& v)
{
    if (v <= 0)
        throw std::domain_error("log of non-positive value");
    long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp2) * std::numbers::ln2;
}

unsigned bit_length(const BigInt& v)
{
    if (v == 0)
        return 0;
    return static_cast<unsigned>(mpz_sizeinbase(v.get_mpz_t(), 2));
}

} // namespace eccforge
