#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "besselhr/core.hpp"

namespace besselhr::cli {

inline constexpr const char* version = "0.1.0";

// "0.3", "-0.1", "0.2+0.1i", "0.5i", "-i", "1e-3-2e-1i"
cplx parse_complex(const std::string& s);
std::vector<cplx> parse_complex_list(const std::string& s);
std::vector<int> parse_int_list(const std::string& s);
// "log:a:b:N", "lin:a:b:N" or a comma-separated list
std::vector<double> parse_grid(const std::string& s);
// "1", "-1", "i", "-i", or "k/2n" meaning xi = e(k/2n)
RootOfUnity parse_xi(const std::string& s, int n);

std::string fmt(double v);  // shortest round-trip form
nlohmann::json cplx_json(cplx v);

// FNV-1a over the serialized config
std::string config_hash(const nlohmann::json& config);

// header object embedded in every output: tool, version, command, config, hash, evaluation policy
nlohmann::json make_header(const std::string& command, const nlohmann::json& config);

}  // namespace besselhr::cli
