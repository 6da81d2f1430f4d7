#include "eccforge/simnet/entity_a.hpp"

#include <algorithm>
#include <chrono>
#include <thread>

#include <fmt/format.h>

#include "httplib.h"

#include "eccforge/simnet/orders.hpp"
#include "eccforge/simnet/wire.hpp"

namespace eccforge::simnet {

namespace {

using clock_type = std::chrono::steady_clock;

void configure(httplib::Client& client, const RetryPolicy& retry)
{
    const auto t = std::chrono::duration<double>(retry.timeout);
    client.set_connection_timeout(std::chrono::duration_cast<std::chrono::microseconds>(t));
    client.set_read_timeout(std::chrono::duration_cast<std::chrono::microseconds>(t));
    client.set_write_timeout(std::chrono::duration_cast<std::chrono::microseconds>(t));
}

void backoff(const RetryPolicy& retry, unsigned attempt)
{
    const double delay = retry.initial_backoff * static_cast<double>(1u << std::min(attempt, 10u));
    std::this_thread::sleep_for(std::chrono::duration<double>(delay));
}

// Retries only transport failures; any HTTP response is returned as is.
template <typename Request>
httplib::Result with_retry(const RetryPolicy& retry, Request request)
{
    const unsigned attempts = std::max(retry.attempts, 1u);
    for (unsigned i = 0;; ++i) {
        auto res = request();
        if (res || i + 1 >= attempts)
            return res;
        backoff(retry, i);
    }
}

nlohmann::json get_json(httplib::Client& client, const std::string& path, const RetryPolicy& retry,
                        const std::string& url)
{
    auto res = with_retry(retry, [&] { return client.Get(path); });
    if (!res)
        throw NetworkError(fmt::format("GET {}{} failed: {}", url, path, httplib::to_string(res.error())));
    if (res->status != 200)
        throw NetworkError(fmt::format("GET {}{} returned HTTP {}", url, path, res->status));
    try {
        return nlohmann::json::parse(res->body);
    } catch (const nlohmann::json::exception& e) {
        throw NetworkError(fmt::format("GET {}{} returned malformed JSON: {}", url, path, e.what()));
    }
}

} // namespace

ServerInfo fetch_server_info(const std::string& url, const RetryPolicy& retry)
{
    httplib::Client client(url);
    if (!client.is_valid())
        throw NetworkError("invalid server address " + url);
    configure(client, retry);
    ServerInfo info;
    try {
        info.params = params_from_json(get_json(client, "/ecc_params", retry, url));
        info.public_key = point_from_json(get_json(client, "/public_key", retry, url));
    } catch (const WireError& e) {
        throw NetworkError(std::string("unexpected server response: ") + e.what());
    }
    return info;
}

LatencyStats summarize_latencies(const std::vector<double>& seconds)
{
    LatencyStats s;
    s.count = seconds.size();
    if (seconds.empty())
        return s;
    const auto [lo, hi] = std::minmax_element(seconds.begin(), seconds.end());
    s.min = *lo;
    s.max = *hi;
    double total = 0.0;
    for (double v : seconds)
        total += v;
    s.avg = total / static_cast<double>(seconds.size());
    return s;
}

TransactionSummary run_entity_a(const EntityAConfig& config, Rng& rng)
{
    TransactionSummary summary;
    const OrdersFile orders = read_orders_csv(config.orders_path);
    summary.skipped_rows = orders.skipped;
    if (orders.records.empty())
        throw OrdersError("orders file has no usable rows");

    const ServerInfo server = fetch_server_info(config.server_url, config.retry);
    const CurveParams params = config.params_override.value_or(server.params);
    const KeyPair own = generate_key_pair(params, rng);

    httplib::Client client(config.server_url);
    configure(client, config.retry);

    std::vector<double> latencies;
    const auto end = clock_type::now() + std::chrono::duration_cast<clock_type::duration>(
                                             std::chrono::duration<double>(config.duration));
    for (std::size_t i = 0;; ++i) {
        if (config.max_orders && i >= *config.max_orders)
            break;
        if (i > 0) {
            const auto next = clock_type::now() + std::chrono::duration_cast<clock_type::duration>(
                                                      std::chrono::duration<double>(config.interval));
            if (next >= end)
                break;
            std::this_thread::sleep_until(next);
        } else if (clock_type::now() >= end) {
            break;
        }

        SentOrder entry;
        entry.request_id = fmt::format("req-{}", i + 1);
        entry.plaintext = serialize_order(orders.records[i % orders.records.size()]);
        const auto start = clock_type::now();

        OrderEnvelope env;
        try {
            const Digest mac_key = ecdh_shared_secret(own.private_key, server.public_key, params);
            const Bytes plain(entry.plaintext.begin(), entry.plaintext.end());
            const Ciphertext ct = encrypt_message(plain, server.public_key, params, rng);
            env.c1 = ct.c1;
            env.ciphertext = ct.bytes;
            env.sender_public = own.public_key;
            env.payload_meta = {{"request_id", entry.request_id}};
            const Digest tag = hmac_sign(mac_key, mac_input(env));
            env.hmac_tag.assign(tag.begin(), tag.end());
        } catch (const CryptoError&) {
            ++summary.failures;
            summary.log.push_back(std::move(entry));
            continue;
        }

        const std::string body = envelope_to_json(env).dump();
        auto res = with_retry(config.retry, [&] { return client.Post("/order", body, "application/json"); });
        entry.latency = std::chrono::duration<double>(clock_type::now() - start).count();
        if (!res) {
            ++summary.failures;
        } else {
            ++summary.sent;
            entry.http_status = res->status;
            if (res->status == 200) {
                ++summary.accepted;
                latencies.push_back(entry.latency);
                try {
                    entry.order_id = nlohmann::json::parse(res->body).value("order_id", "");
                } catch (const nlohmann::json::exception&) {
                }
            } else {
                ++summary.rejected;
            }
        }
        summary.log.push_back(std::move(entry));
    }
    summary.latency = summarize_latencies(latencies);
    return summary;
}

} // namespace eccforge::simnet
