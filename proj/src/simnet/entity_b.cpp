#include "eccforge/simnet/entity_b.hpp"

#include <atomic>
#include <fstream>
#include <mutex>
#include <thread>

#include <fmt/format.h>

#include "httplib.h"

#include "eccforge/fitness.hpp"
#include "eccforge/simnet/wire.hpp"

namespace eccforge::simnet {

namespace {

void reply(httplib::Response& res, int status, nlohmann::json body)
{
    res.status = status;
    res.set_content(body.dump(), "application/json");
}

void reject(httplib::Response& res, int status, const std::string& error)
{
    reply(res, status, {{"status", "rejected"}, {"error", error}});
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

} // namespace

struct EntityBServer::Impl {
    CurveParams params;
    KeyPair keys;
    std::string host;
    int port = 0;

    httplib::Server server;
    std::thread listener;

    mutable std::mutex log_mutex;
    std::vector<ReceivedOrder> log;
    std::atomic<std::size_t> rejected{0};
    std::atomic<std::uint64_t> next_id{1};

    void handle_order(const httplib::Request& req, httplib::Response& res);
};

void EntityBServer::Impl::handle_order(const httplib::Request& req, httplib::Response& res)
{
    OrderEnvelope env;
    try {
        env = envelope_from_json(nlohmann::json::parse(req.body));
    } catch (const std::exception& e) {
        ++rejected;
        return reject(res, 400, std::string("malformed envelope: ") + e.what());
    }
    if (!is_on_curve(env.c1, params) || !is_on_curve(env.sender_public, params)) {
        ++rejected;
        return reject(res, 400, "point not on curve");
    }

    Digest mac_key;
    try {
        mac_key = ecdh_shared_secret(keys.private_key, env.sender_public, params);
    } catch (const CryptoError& e) {
        ++rejected;
        return reject(res, 400, e.what());
    }
    if (!hmac_verify(mac_key, mac_input(env), env.hmac_tag)) {
        ++rejected;
        return reject(res, 400, "HMAC verification failed");
    }

    ReceivedOrder order;
    try {
        const Bytes plain = decrypt_message(env.c1, env.ciphertext, keys.private_key, params);
        order.plaintext.assign(plain.begin(), plain.end());
        order.record = parse_order_json(order.plaintext);
    } catch (const std::exception& e) {
        ++rejected;
        return reject(res, 422, e.what());
    }
    order.payload_meta = env.payload_meta;
    order.order_id = fmt::format("ord-{:06}", next_id.fetch_add(1));
    const std::string id = order.order_id;
    {
        std::lock_guard lock(log_mutex);
        log.push_back(std::move(order));
    }
    reply(res, 200, {{"status", "accepted"}, {"order_id", id}});
}

EntityBServer::EntityBServer(const CurveParams& params, const EntityBConfig& config) : impl_(std::make_unique<Impl>())
{
    auto& im = *impl_;
    if (const auto check = fitness::validate_curve(params); !check.valid())
        throw ServerStartupError("invalid curve parameters: " + std::string(check.reason()));
    if (params.n < 3)
        throw ServerStartupError("group order too small");
    im.params = params;
    im.host = config.host;

    if (config.private_key) {
        if (*config.private_key < 1 || *config.private_key >= params.n)
            throw ServerStartupError("private key out of range");
        im.keys.private_key = *config.private_key;
        im.keys.public_key = generate_public_key(im.keys.private_key, params);
        if (im.keys.public_key.infinity)
            throw ServerStartupError("private key maps to the point at infinity");
    } else {
        Rng rng(config.seed);
        im.keys = generate_key_pair(params, rng);
    }

    im.server.Get("/ecc_params", [&im](const httplib::Request&, httplib::Response& res) {
        auto body = params_to_json(im.params);
        body["status"] = "ok";
        reply(res, 200, body);
    });
    im.server.Get("/public_key", [&im](const httplib::Request&, httplib::Response& res) {
        auto body = point_to_json(im.keys.public_key);
        body["status"] = "ok";
        reply(res, 200, body);
    });
    im.server.Post("/order",
                   [&im](const httplib::Request& req, httplib::Response& res) { im.handle_order(req, res); });

    if (config.port == 0)
        im.port = im.server.bind_to_any_port(im.host);
    else
        im.port = im.server.bind_to_port(im.host, config.port) ? config.port : -1;
    if (im.port <= 0)
        throw ServerStartupError(fmt::format("cannot bind {}:{}", im.host, config.port));

    im.listener = std::thread([&im] { im.server.listen_after_bind(); });
    im.server.wait_until_ready();
}

EntityBServer::~EntityBServer()
{
    stop();
    wait();
}

int EntityBServer::port() const { return impl_->port; }

std::string EntityBServer::url() const { return fmt::format("http://{}:{}", impl_->host, impl_->port); }

const CurveParams& EntityBServer::params() const { return impl_->params; }

const KeyPair& EntityBServer::key_pair() const { return impl_->keys; }

std::vector<ReceivedOrder> EntityBServer::orders() const
{
    std::lock_guard lock(impl_->log_mutex);
    return impl_->log;
}

std::size_t EntityBServer::rejected_count() const { return impl_->rejected.load(); }

void EntityBServer::dump_orders_csv(const std::filesystem::path& path) const
{
    const auto snapshot = orders();
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
    out << "OrderId,InvoiceNo,StockCode,Description,Quantity,InvoiceDate,UnitPrice,CustomerID,Country\n";
    for (const auto& o : snapshot) {
        const auto& r = o.record;
        out << o.order_id << ',' << csv_field(r.invoice_no) << ',' << csv_field(r.stock_code) << ','
            << csv_field(r.description) << ',' << r.quantity << ',' << csv_field(r.invoice_date) << ','
            << fmt::format("{}", r.unit_price) << ',' << csv_field(r.customer_id) << ',' << csv_field(r.country)
            << '\n';
    }
}

void EntityBServer::stop() { impl_->server.stop(); }

void EntityBServer::wait()
{
    if (impl_->listener.joinable())
        impl_->listener.join();
}

} // namespace eccforge::simnet
