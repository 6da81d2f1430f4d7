#include "fixtures.hpp"

#include <atomic>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <unistd.h>

#include "httplib.h"

#include "eccforge/simnet/params_file.hpp"
#include "eccforge/simnet/wire.hpp"

namespace fixtures {

eccforge::CurveParams toy_curve()
{
    eccforge::CurveParams c;
    c.a = 2;
    c.b = 2;
    c.p = 17;
    c.G = eccforge::ECPoint{5, 1, false};
    c.n = 19;
    c.h = 1;
    return c;
}

eccforge::ECPoint to_point(const oracle::Pt& pt)
{
    if (pt.inf)
        return eccforge::ECPoint::at_infinity();
    return eccforge::ECPoint{static_cast<long>(pt.x), static_cast<long>(pt.y), false};
}

oracle::Pt to_pt(const eccforge::ECPoint& pt)
{
    if (pt.infinity)
        return oracle::Pt{};
    return oracle::Pt{pt.x.get_si(), pt.y.get_si(), false};
}

eccforge::CurveParams prime_order_curve(std::int64_t p)
{
    for (std::int64_t a = 1; a < p; ++a)
        for (std::int64_t b = 1; b < p; ++b) {
            oracle::ToyGroup grp(a, b, p);
            const std::int64_t order = grp.order();
            if (grp.singular() || !oracle::is_prime(order) || order == p || order == p + 1)
                continue;
            eccforge::CurveParams c;
            c.a = static_cast<long>(a);
            c.b = static_cast<long>(b);
            c.p = static_cast<long>(p);
            c.G = to_point(grp.points()[1]);
            c.n = static_cast<long>(order);
            c.h = 1;
            return c;
        }
    throw std::runtime_error("no prime-order curve found");
}

std::filesystem::path data_dir() { return eccforge::simnet::default_data_dir(); }

TempDir::TempDir(const std::string& tag)
{
    static std::atomic<unsigned> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            ("eccforge-" + tag + "-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
}

TempDir::~TempDir()
{
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
}

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

nlohmann::json build_envelope(const eccforge::CurveParams& params, const eccforge::ECPoint& server_public,
                              const eccforge::simnet::KeyPair& sender, const std::string& plaintext,
                              const std::string& request_id, eccforge::Rng& rng)
{
    using namespace eccforge::simnet;
    const Bytes plain(plaintext.begin(), plaintext.end());
    const Ciphertext ct = encrypt_message(plain, server_public, params, rng);
    OrderEnvelope env;
    env.c1 = ct.c1;
    env.ciphertext = ct.bytes;
    env.sender_public = sender.public_key;
    env.payload_meta = {{"request_id", request_id}};
    const Digest key = ecdh_shared_secret(sender.private_key, server_public, params);
    const Digest tag = hmac_sign(key, mac_input(env));
    env.hmac_tag.assign(tag.begin(), tag.end());
    return envelope_to_json(env);
}

namespace {

HttpReply to_reply(const httplib::Result& res)
{
    HttpReply r;
    if (!res)
        return r;
    r.status = res->status;
    r.body = nlohmann::json::parse(res->body, nullptr, false);
    return r;
}

} // namespace

HttpReply http_get(const std::string& url, const std::string& path)
{
    httplib::Client client(url);
    client.set_connection_timeout(2);
    return to_reply(client.Get(path));
}

HttpReply http_post(const std::string& url, const std::string& path, const std::string& body)
{
    httplib::Client client(url);
    client.set_connection_timeout(2);
    return to_reply(client.Post(path, body, "application/json"));
}

} // namespace fixtures
