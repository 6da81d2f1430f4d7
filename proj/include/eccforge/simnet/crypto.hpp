#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "eccforge/ecmath.hpp"
#include "eccforge/rng.hpp"

namespace eccforge::simnet {

using Bytes = std::vector<std::uint8_t>;
using Digest = std::array<std::uint8_t, 32>;

class CryptoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InfinityResult : public CryptoError {
public:
    using CryptoError::CryptoError;
};

class OffCurve : public CryptoError {
public:
    using CryptoError::CryptoError;
};

class InvalidPublicKey : public CryptoError {
public:
    using CryptoError::CryptoError;
};

class EncryptionFailed : public CryptoError {
public:
    using CryptoError::CryptoError;
};

class DecryptionFailed : public CryptoError {
public:
    using CryptoError::CryptoError;
};

Digest sha256(std::span<const std::uint8_t> data);
Digest hmac_sign(std::span<const std::uint8_t> key, std::span<const std::uint8_t> message);
/// Constant-time tag comparison; tags of the wrong length never verify.
bool hmac_verify(std::span<const std::uint8_t> key, std::span<const std::uint8_t> message,
                 std::span<const std::uint8_t> tag);

struct KeyPair {
    BigInt private_key;
    ECPoint public_key;
};

/// Uniform scalar in [1, n - 1]; requires n >= 3.
BigInt generate_private_key(const CurveParams& params, Rng& rng);
ECPoint generate_public_key(const BigInt& private_key, const CurveParams& params);
/// Redraws until the public key is not the point at infinity.
KeyPair generate_key_pair(const CurveParams& params, Rng& rng);

/// SHA-256 over the minimal big-endian bytes of (own_private · peer_public).x.
/// The digest doubles as the HMAC key.
Digest ecdh_shared_secret(const BigInt& own_private, const ECPoint& peer_public, const CurveParams& params);

struct Ciphertext {
    ECPoint c1;
    Bytes bytes;
};

/// ElGamal-style toy cipher: C1 = k·G, C2 = k·recipient, every byte XORed
/// with the low byte of C2.x. A single key byte offers no real secrecy; the
/// HMAC carries all integrity guarantees.
Ciphertext encrypt_message(std::span<const std::uint8_t> message, const ECPoint& recipient_public,
                           const CurveParams& params, Rng& rng);
Ciphertext encrypt_message_with_ephemeral(std::span<const std::uint8_t> message, const ECPoint& recipient_public,
                                          const CurveParams& params, const BigInt& ephemeral);

Bytes decrypt_message(const ECPoint& c1, std::span<const std::uint8_t> ciphertext, const BigInt& private_key,
                      const CurveParams& params);

} // namespace eccforge::simnet
