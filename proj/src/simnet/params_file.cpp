#include "eccforge/simnet/params_file.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace eccforge::simnet {

namespace {

constexpr std::array<std::string_view, 7> kKeys{"p", "a", "b", "Gx", "Gy", "n", "h"};

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

std::optional<std::string_view> named_file(std::string_view source)
{
    if (source == "1" || source == "ga")
        return "ga_ecc_params.txt";
    if (source == "2" || source == "pso")
        return "pso_ecc_params.txt";
    if (source.empty() || source == "3" || source == "secp256k1")
        return "secp256k1.txt";
    if (source == "4" || source == "brainpoolP256r1")
        return "brainpoolP256r1.txt";
    return std::nullopt;
}

} // namespace

std::string format_params(const CurveParams& c)
{
    std::ostringstream out;
    out << "p=" << to_decimal(c.p) << '\n'
        << "a=" << to_decimal(c.a) << '\n'
        << "b=" << to_decimal(c.b) << '\n'
        << "Gx=" << to_decimal(c.G.x) << '\n'
        << "Gy=" << to_decimal(c.G.y) << '\n'
        << "n=" << to_decimal(c.n) << '\n'
        << "h=" << to_decimal(c.h) << '\n';
    return out.str();
}

CurveParams parse_params(std::string_view text)
{
    std::map<std::string, BigInt, std::less<>> values;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto eol = text.find('\n');
        std::string_view line = trim(text.substr(0, eol));
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ParseError("line " + std::to_string(line_no) + ": expected key=value");
        const std::string key(trim(line.substr(0, eq)));
        if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end())
            throw ParseError("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
        if (values.count(key))
            throw ParseError("duplicate key '" + key + "'");
        try {
            values.emplace(key, parse_decimal(trim(line.substr(eq + 1))));
        } catch (const std::invalid_argument&) {
            throw ParseError("key '" + key + "' does not hold a decimal integer");
        }
    }
    for (auto key : kKeys)
        if (!values.count(key))
            throw MissingKey("missing key '" + std::string(key) + "'");

    CurveParams c;
    c.p = values.at("p");
    c.a = values.at("a");
    c.b = values.at("b");
    c.G = ECPoint{values.at("Gx"), values.at("Gy"), false};
    c.n = values.at("n");
    c.h = values.at("h");
    return c;
}

CurveParams read_params_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParamsIoError("cannot open parameter file " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_params(buffer.str());
}

void write_params_file(const CurveParams& params, const std::filesystem::path& path)
{
    if (params.G.infinity)
        throw std::invalid_argument("refusing to write parameters with G at infinity");
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw ParamsIoError("cannot open " + path.string() + " for writing");
    out << format_params(params);
    if (!out)
        throw ParamsIoError("failed writing " + path.string());
}

std::filesystem::path default_data_dir()
{
#ifdef ECCFORGE_DATA_DIR
    return ECCFORGE_DATA_DIR;
#else
    return "data";
#endif
}

std::filesystem::path resolve_params_source(std::string_view source,
                                            const std::vector<std::filesystem::path>& search_dirs)
{
    const auto name = named_file(source);
    if (!name)
        return std::filesystem::path(source);
    for (const auto& dir : search_dirs) {
        auto candidate = dir / *name;
        if (std::filesystem::exists(candidate))
            return candidate;
    }
    return search_dirs.empty() ? std::filesystem::path(*name) : search_dirs.front() / *name;
}

CurveParams load_params(std::string_view source, const std::vector<std::filesystem::path>& search_dirs)
{
    return read_params_file(resolve_params_source(source, search_dirs));
}

} // namespace eccforge::simnet
