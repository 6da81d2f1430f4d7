#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "eccforge/simnet/crypto.hpp"

namespace eccforge::simnet {

class NetworkError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RetryPolicy {
    unsigned attempts = 3;
    double initial_backoff = 0.05; // seconds, doubled after each failure
    double timeout = 5.0;          // per-request connect/read timeout, seconds
};

struct ServerInfo {
    CurveParams params;
    ECPoint public_key;
};

/// Fetches /ecc_params and /public_key. Throws NetworkError once retries run out.
ServerInfo fetch_server_info(const std::string& url, const RetryPolicy& retry = {});

struct EntityAConfig {
    std::string server_url;
    std::filesystem::path orders_path;
    double duration = 10.0; // seconds
    double interval = 1.0;  // seconds between sends
    std::optional<std::size_t> max_orders;
    // Encrypt under these parameters instead of the server's.
    std::optional<CurveParams> params_override;
    RetryPolicy retry;
};

struct SentOrder {
    std::string request_id;
    std::string plaintext;
    int http_status = 0; // 0 when no response arrived
    std::string order_id;
    double latency = 0.0;
};

struct LatencyStats {
    std::size_t count = 0;
    double min = 0.0;
    double max = 0.0;
    double avg = 0.0;
};

struct TransactionSummary {
    std::size_t sent = 0;     // envelopes that got an HTTP response
    std::size_t accepted = 0; // 200 responses
    std::size_t rejected = 0; // non-200 responses
    std::size_t failures = 0; // orders lost to connection or local crypto errors
    std::size_t skipped_rows = 0;
    LatencyStats latency;
    std::vector<SentOrder> log;
};

LatencyStats summarize_latencies(const std::vector<double>& seconds);

/// Replays the orders file against Entity B until the duration elapses or
/// max_orders sends were made, cycling through the records.
TransactionSummary run_entity_a(const EntityAConfig& config, Rng& rng);

} // namespace eccforge::simnet
