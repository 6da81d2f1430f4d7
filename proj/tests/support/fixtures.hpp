#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"

#include "eccforge/ecmath.hpp"
#include "eccforge/simnet/crypto.hpp"
#include "toy_group.hpp"

namespace fixtures {

/// y^2 = x^3 + 2x + 2 over F_17, G = (5, 1) of prime order 19.
eccforge::CurveParams toy_curve();

eccforge::ECPoint to_point(const oracle::Pt& pt);
oracle::Pt to_pt(const eccforge::ECPoint& pt);

/// First curve (a, b) over F_p, scanning a then b upward from 1, whose group
/// order is prime and differs from p and p + 1. G is its first affine point.
eccforge::CurveParams prime_order_curve(std::int64_t p);

std::filesystem::path data_dir();

class TempDir {
public:
    explicit TempDir(const std::string& tag);
    ~TempDir();
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }
    std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

private:
    std::filesystem::path path_;
};

std::string read_file(const std::filesystem::path& path);

/// A correctly encrypted and authenticated POST /order body.
nlohmann::json build_envelope(const eccforge::CurveParams& params, const eccforge::ECPoint& server_public,
                              const eccforge::simnet::KeyPair& sender, const std::string& plaintext,
                              const std::string& request_id, eccforge::Rng& rng);

struct HttpReply {
    int status = 0; // 0 when the request failed at the transport level
    nlohmann::json body;
};

HttpReply http_get(const std::string& url, const std::string& path);
HttpReply http_post(const std::string& url, const std::string& path, const std::string& body);

} // namespace fixtures
