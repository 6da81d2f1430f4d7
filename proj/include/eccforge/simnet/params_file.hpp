#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "eccforge/ecmath.hpp"

namespace eccforge::simnet {

class ParamsError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class MissingKey : public ParamsError {
public:
    using ParamsError::ParamsError;
};

class ParseError : public ParamsError {
public:
    using ParamsError::ParamsError;
};

class ParamsIoError : public ParamsError {
public:
    using ParamsError::ParamsError;
};

/// Seven `key=value` lines, keys p, a, b, Gx, Gy, n, h in that order, decimal
/// values, LF-terminated.
std::string format_params(const CurveParams& params);
CurveParams parse_params(std::string_view text);

CurveParams read_params_file(const std::filesystem::path& path);
void write_params_file(const CurveParams& params, const std::filesystem::path& path);

/// Directory holding the bundled well-known curve files and sample orders.
std::filesystem::path default_data_dir();

/// Maps a parameter source to a file name: "1"/"ga", "2"/"pso",
/// "3"/"secp256k1", "4"/"brainpoolP256r1"; an empty source means secp256k1.
/// Anything else is taken as a path. Named sources are looked up in
/// `search_dirs` in order; the first existing match wins.
std::filesystem::path resolve_params_source(std::string_view source,
                                            const std::vector<std::filesystem::path>& search_dirs);

CurveParams load_params(std::string_view source, const std::vector<std::filesystem::path>& search_dirs);

} // namespace eccforge::simnet
