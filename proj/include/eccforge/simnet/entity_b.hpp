#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "eccforge/simnet/crypto.hpp"
#include "eccforge/simnet/orders.hpp"

namespace eccforge::simnet {

class ServerStartupError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct EntityBConfig {
    std::string host = "127.0.0.1";
    int port = 0; // 0 picks an ephemeral port
    std::uint64_t seed = 0;
    // Test hook: pins the server key instead of drawing it.
    std::optional<BigInt> private_key;
};

struct ReceivedOrder {
    std::string order_id;
    std::string plaintext;
    OrderRecord record;
    nlohmann::json payload_meta;
};

/// ERP-side endpoint. Listens from construction until stop() or destruction.
///
///   GET  /ecc_params  -> {"status":"ok", "a":..., "b":..., "p":..., "Gx":..., "Gy":..., "n":..., "h":...}
///   GET  /public_key  -> {"status":"ok", "x":..., "y":...}
///   POST /order       -> 200 {"status":"accepted","order_id":...}
///                        400 malformed envelope, off-curve point or bad HMAC
///                        422 decryption or order parse failure
class EntityBServer {
public:
    /// Throws ServerStartupError when the curve fails validation or the
    /// address cannot be bound.
    EntityBServer(const CurveParams& params, const EntityBConfig& config = {});
    ~EntityBServer();

    EntityBServer(const EntityBServer&) = delete;
    EntityBServer& operator=(const EntityBServer&) = delete;

    int port() const;
    std::string url() const;
    const CurveParams& params() const;
    const KeyPair& key_pair() const;

    std::vector<ReceivedOrder> orders() const;
    std::size_t rejected_count() const;
    void dump_orders_csv(const std::filesystem::path& path) const;

    void stop();
    /// Blocks until the listener exits.
    void wait();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

} // namespace eccforge::simnet
