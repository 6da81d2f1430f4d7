#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"

#include "eccforge/ecmath.hpp"
#include "eccforge/simnet/crypto.hpp"

namespace eccforge::simnet {

class WireError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string to_hex(std::span<const std::uint8_t> bytes);
/// Accepts lower- or upper-case digits; throws WireError on odd length or bad digits.
Bytes from_hex(std::string_view hex);

nlohmann::json params_to_json(const CurveParams& params);
CurveParams params_from_json(const nlohmann::json& j);

nlohmann::json point_to_json(const ECPoint& pt);
ECPoint point_from_json(const nlohmann::json& j);

struct OrderEnvelope {
    ECPoint c1;
    Bytes ciphertext;
    Bytes hmac_tag;
    ECPoint sender_public;
    // Free-form; clients put a request id here.
    nlohmann::json payload_meta = nlohmann::json::object();
};

nlohmann::json envelope_to_json(const OrderEnvelope& env);
/// Throws WireError on missing fields, non-decimal integers, bad hex or a tag
/// that is not 32 bytes.
OrderEnvelope envelope_from_json(const nlohmann::json& j);

/// Bytes covered by the envelope HMAC: "C1x:C1y:hex(ciphertext):payload_meta".
Bytes mac_input(const OrderEnvelope& env);

} // namespace eccforge::simnet
