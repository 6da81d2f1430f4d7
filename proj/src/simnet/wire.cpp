#include "eccforge/simnet/wire.hpp"

namespace eccforge::simnet {

namespace {

BigInt json_int(const nlohmann::json& j, const char* key)
{
    if (!j.contains(key) || !j.at(key).is_string())
        throw WireError(std::string("missing or non-string field '") + key + "'");
    try {
        return parse_decimal(j.at(key).get<std::string>());
    } catch (const std::invalid_argument&) {
        throw WireError(std::string("field '") + key + "' is not a decimal integer");
    }
}

std::string json_str(const nlohmann::json& j, const char* key)
{
    if (!j.contains(key) || !j.at(key).is_string())
        throw WireError(std::string("missing or non-string field '") + key + "'");
    return j.at(key).get<std::string>();
}

int hex_digit(char c)
{
    if (c >= '0' && c <= '9')
        return c - '0';
    if (c >= 'a' && c <= 'f')
        return c - 'a' + 10;
    if (c >= 'A' && c <= 'F')
        return c - 'A' + 10;
    return -1;
}

} // namespace

std::string to_hex(std::span<const std::uint8_t> bytes)
{
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (auto b : bytes) {
        out += digits[b >> 4];
        out += digits[b & 0xF];
    }
    return out;
}

Bytes from_hex(std::string_view hex)
{
    if (hex.size() % 2 != 0)
        throw WireError("hex string has odd length");
    Bytes out(hex.size() / 2);
    for (std::size_t i = 0; i < out.size(); ++i) {
        const int hi = hex_digit(hex[2 * i]);
        const int lo = hex_digit(hex[2 * i + 1]);
        if (hi < 0 || lo < 0)
            throw WireError("invalid hex digit");
        out[i] = static_cast<std::uint8_t>(hi << 4 | lo);
    }
    return out;
}

nlohmann::json params_to_json(const CurveParams& params)
{
    return {{"a", to_decimal(params.a)},     {"b", to_decimal(params.b)},     {"p", to_decimal(params.p)},
            {"Gx", to_decimal(params.G.x)}, {"Gy", to_decimal(params.G.y)}, {"n", to_decimal(params.n)},
            {"h", to_decimal(params.h)}};
}

CurveParams params_from_json(const nlohmann::json& j)
{
    if (!j.is_object())
        throw WireError("params body is not an object");
    CurveParams params;
    params.a = json_int(j, "a");
    params.b = json_int(j, "b");
    params.p = json_int(j, "p");
    params.G = ECPoint{json_int(j, "Gx"), json_int(j, "Gy"), false};
    params.n = json_int(j, "n");
    params.h = json_int(j, "h");
    return params;
}

nlohmann::json point_to_json(const ECPoint& pt)
{
    if (pt.infinity)
        throw WireError("the point at infinity has no wire encoding");
    return {{"x", to_decimal(pt.x)}, {"y", to_decimal(pt.y)}};
}

ECPoint point_from_json(const nlohmann::json& j)
{
    if (!j.is_object())
        throw WireError("point is not an object");
    return ECPoint{json_int(j, "x"), json_int(j, "y"), false};
}

nlohmann::json envelope_to_json(const OrderEnvelope& env)
{
    if (env.c1.infinity || env.sender_public.infinity)
        throw WireError("the point at infinity has no wire encoding");
    return {{"C1x", to_decimal(env.c1.x)},
            {"C1y", to_decimal(env.c1.y)},
            {"ciphertext", to_hex(env.ciphertext)},
            {"hmac", to_hex(env.hmac_tag)},
            {"sender_x", to_decimal(env.sender_public.x)},
            {"sender_y", to_decimal(env.sender_public.y)},
            {"payload_meta", env.payload_meta}};
}

OrderEnvelope envelope_from_json(const nlohmann::json& j)
{
    if (!j.is_object())
        throw WireError("envelope is not an object");
    OrderEnvelope env;
    env.c1 = ECPoint{json_int(j, "C1x"), json_int(j, "C1y"), false};
    env.ciphertext = from_hex(json_str(j, "ciphertext"));
    env.hmac_tag = from_hex(json_str(j, "hmac"));
    if (env.hmac_tag.size() != 32)
        throw WireError("hmac tag must be 32 bytes");
    env.sender_public = ECPoint{json_int(j, "sender_x"), json_int(j, "sender_y"), false};
    if (j.contains("payload_meta")) {
        if (!j.at("payload_meta").is_object())
            throw WireError("payload_meta must be an object");
        env.payload_meta = j.at("payload_meta");
    }
    return env;
}

Bytes mac_input(const OrderEnvelope& env)
{
    const std::string text = to_decimal(env.c1.x) + ":" + to_decimal(env.c1.y) + ":" + to_hex(env.ciphertext) + ":" +
                             env.payload_meta.dump();
    return Bytes(text.begin(), text.end());
}

} // namespace eccforge::simnet
