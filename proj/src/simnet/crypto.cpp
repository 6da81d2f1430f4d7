#include "eccforge/simnet/crypto.hpp"

#include <openssl/crypto.h>
#include <openssl/evp.h>
#include <openssl/hmac.h>

namespace eccforge::simnet {

namespace {

std::uint8_t keystream_byte(const ECPoint& shared)
{
    return static_cast<std::uint8_t>(mpz_get_ui(shared.x.get_mpz_t()) & 0xFF);
}

Bytes xor_with(std::span<const std::uint8_t> data, std::uint8_t key)
{
    Bytes out(data.begin(), data.end());
    for (auto& byte : out)
        byte ^= key;
    return out;
}

} // namespace

Digest sha256(std::span<const std::uint8_t> data)
{
    Digest out{};
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha256(), nullptr) != 1 || len != out.size())
        throw CryptoError("SHA-256 failed");
    return out;
}

Digest hmac_sign(std::span<const std::uint8_t> key, std::span<const std::uint8_t> message)
{
    Digest out{};
    unsigned int len = 0;
    static const std::uint8_t empty = 0;
    const auto* key_ptr = key.empty() ? &empty : key.data();
    const auto* msg_ptr = message.empty() ? &empty : message.data();
    if (HMAC(EVP_sha256(), key_ptr, static_cast<int>(key.size()), msg_ptr, message.size(), out.data(), &len) ==
            nullptr ||
        len != out.size())
        throw CryptoError("HMAC-SHA256 failed");
    return out;
}

bool hmac_verify(std::span<const std::uint8_t> key, std::span<const std::uint8_t> message,
                 std::span<const std::uint8_t> tag)
{
    if (tag.size() != Digest{}.size())
        return false;
    const Digest expected = hmac_sign(key, message);
    return CRYPTO_memcmp(expected.data(), tag.data(), expected.size()) == 0;
}

BigInt generate_private_key(const CurveParams& params, Rng& rng)
{
    if (params.n < 3)
        throw std::invalid_argument("group order too small for key generation");
    return rng.between(1, BigInt(params.n - 1));
}

ECPoint generate_public_key(const BigInt& private_key, const CurveParams& params)
{
    return ec_scalar_multiplication(params.G, private_key, params);
}

KeyPair generate_key_pair(const CurveParams& params, Rng& rng)
{
    for (;;) {
        KeyPair kp;
        kp.private_key = generate_private_key(params, rng);
        kp.public_key = generate_public_key(kp.private_key, params);
        if (!kp.public_key.infinity)
            return kp;
    }
}

Digest ecdh_shared_secret(const BigInt& own_private, const ECPoint& peer_public, const CurveParams& params)
{
    if (!is_on_curve(peer_public, params))
        throw OffCurve("peer public key is not on the curve");
    const ECPoint shared = ec_scalar_multiplication(peer_public, own_private, params);
    if (shared.infinity)
        throw InfinityResult("shared point is the point at infinity");
    const Bytes x = to_bytes_be(shared.x);
    return sha256(x);
}

Ciphertext encrypt_message_with_ephemeral(std::span<const std::uint8_t> message, const ECPoint& recipient_public,
                                          const CurveParams& params, const BigInt& ephemeral)
{
    if (!is_on_curve(recipient_public, params))
        throw InvalidPublicKey("Public key is not a valid point on the elliptic curve");
    if (ephemeral < 1 || ephemeral >= params.n)
        throw EncryptionFailed("Invalid scalar value");
    Ciphertext out;
    out.c1 = ec_scalar_multiplication(params.G, ephemeral, params);
    const ECPoint c2 = ec_scalar_multiplication(recipient_public, ephemeral, params);
    if (c2.infinity)
        throw EncryptionFailed("Encryption failed: kQ resulted in the point at infinity");
    out.bytes = xor_with(message, keystream_byte(c2));
    return out;
}

Ciphertext encrypt_message(std::span<const std::uint8_t> message, const ECPoint& recipient_public,
                           const CurveParams& params, Rng& rng)
{
    return encrypt_message_with_ephemeral(message, recipient_public, params, generate_private_key(params, rng));
}

Bytes decrypt_message(const ECPoint& c1, std::span<const std::uint8_t> ciphertext, const BigInt& private_key,
                      const CurveParams& params)
{
    if (!is_on_curve(c1, params))
        throw DecryptionFailed("C1 is not a valid curve point");
    const ECPoint c2 = ec_scalar_multiplication(c1, private_key, params);
    if (c2.infinity)
        throw DecryptionFailed("decryption produced the point at infinity");
    return xor_with(ciphertext, keystream_byte(c2));
}

} // namespace eccforge::simnet
