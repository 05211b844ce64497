#include "cli_util.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <sstream>

#include "besselhr/asympt.hpp"
#include "besselhr/coeffs.hpp"
#include "besselhr/mellinbarnes.hpp"
#include "besselhr/series.hpp"

namespace besselhr::cli {

namespace {

double to_double(const std::string& s, const std::string& whole)
{
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::logic_error&) {
        throw Error(Error::Kind::domain, "cannot parse number '" + whole + "'");
    }
    if (used != s.size()) throw Error(Error::Kind::domain, "cannot parse number '" + whole + "'");
    return v;
}

std::string trim(const std::string& s)
{
    const auto a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(trim(item));
    return out;
}

}  // namespace

cplx parse_complex(const std::string& raw)
{
    const std::string s = trim(raw);
    if (s.empty()) throw Error(Error::Kind::domain, "empty complex literal");
    if (s.back() != 'i' && s.back() != 'j') return {to_double(s, raw), 0.0};
    const std::string body = s.substr(0, s.size() - 1);
    // split at the last sign that is not the leading one and not an exponent sign
    std::size_t cut = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            cut = k;
            break;
        }
    }
    if (cut == std::string::npos) return {0.0, to_double(body, raw)};
    return {to_double(body.substr(0, cut), raw), to_double(body.substr(cut), raw)};
}

std::vector<cplx> parse_complex_list(const std::string& s)
{
    std::vector<cplx> out;
    for (const auto& item : split(s, ',')) out.push_back(parse_complex(item));
    if (out.empty()) throw Error(Error::Kind::domain, "empty list");
    return out;
}

std::vector<int> parse_int_list(const std::string& s)
{
    std::vector<int> out;
    for (const auto& item : split(s, ',')) {
        int v = 0;
        auto [p, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (ec != std::errc() || p != item.data() + item.size())
            throw Error(Error::Kind::domain, "cannot parse integer '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw Error(Error::Kind::domain, "empty list");
    return out;
}

std::vector<double> parse_grid(const std::string& s)
{
    const auto parts = split(s, ':');
    if (parts.size() == 4 && (parts[0] == "log" || parts[0] == "lin")) {
        const double a = to_double(parts[1], s), b = to_double(parts[2], s);
        const int n = static_cast<int>(to_double(parts[3], s));
        if (n < 1) throw Error(Error::Kind::domain, "grid needs at least one point");
        std::vector<double> g;
        if (parts[0] == "log") {
            if (a == 0.0 || b == 0.0 || (a > 0) != (b > 0))
                throw Error(Error::Kind::domain, "log grid ends must be nonzero with equal signs");
            const double sg = a > 0 ? 1.0 : -1.0, la = std::log(std::abs(a)), lb = std::log(std::abs(b));
            for (int k = 0; k < n; ++k) g.push_back(sg * std::exp(n == 1 ? la : la + (lb - la) * k / (n - 1)));
        } else {
            for (int k = 0; k < n; ++k) g.push_back(n == 1 ? a : a + (b - a) * k / (n - 1));
        }
        return g;
    }
    std::vector<double> g;
    for (const auto& item : split(s, ',')) g.push_back(to_double(item, s));
    if (g.empty()) throw Error(Error::Kind::domain, "empty grid");
    return g;
}

RootOfUnity parse_xi(const std::string& raw, int n)
{
    const std::string s = trim(raw);
    if (s == "1") return {n, 0};
    if (s == "-1") return {n, n};
    if (s == "i" || s == "-i") {
        if (n % 2) throw Error(Error::Kind::domain, "xi = +-i needs even n");
        return {n, s == "i" ? n / 2 : 3 * n / 2};
    }
    const auto slash = s.find('/');
    if (slash == std::string::npos) throw Error(Error::Kind::domain, "xi must be 1, -1, i, -i or k/2n");
    const long k = static_cast<long>(to_double(s.substr(0, slash), raw));
    const long d = static_cast<long>(to_double(s.substr(slash + 1), raw));
    if (d != 2L * n) throw Error(Error::Kind::domain, "xi denominator must be 2n");
    return {n, k};
}

std::string fmt(double v)
{
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, p);
}

nlohmann::json cplx_json(cplx v)
{
    return {{"re", v.real()}, {"im", v.imag()}};
}

std::string config_hash(const nlohmann::json& config)
{
    const std::string s = config.dump();
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

nlohmann::json make_header(const std::string& command, const nlohmann::json& config)
{
    const AsymptOptions a;
    const MBOptions m;
    nlohmann::json policy = {
        {"series", {{"generic_threshold", generic_threshold}, {"limit_radius", limit_radius},
                    {"limit_points", limit_points}, {"precision_tiers_digits", {16, 50, 100, 200, 400}}}},
        {"asympt", {{"theta", a.theta}, {"m_cap", a.m_cap}, {"floor", "|z| > 4 frak_e^2"},
                    {"truncation", "smallest term"}, {"b_max_terms", b_max_terms}}},
        {"mb", {{"tol", m.tol}, {"contour", "vertical line plus 135-degree ray for equal signs; "
                                             "vertical line through the saddle for mixed signs"},
                {"rule", "adaptive Gauss-Kronrod 15/7"}}},
    };
    return {{"tool", "besselhr"}, {"version", version}, {"command", command},
            {"config", config}, {"config_hash", config_hash(config)}, {"policy", policy}};
}

}  // namespace besselhr::cli
