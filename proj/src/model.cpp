#include "groupcast/model.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace groupcast {

SystemParams::SystemParams(int n_, int m_, Rational M_, int L_) : n(n_), m(m_), M(M_), L(L_) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    if (M < Rational(0) || M > Rational(m)) throw std::invalid_argument("M must satisfy 0 <= M <= m");
    if (L < 1 || L > m) throw std::invalid_argument("L must satisfy 1 <= L <= m");
}

std::optional<long long> SystemParams::integer_t() const {
    Rational tv = t();
    if (!tv.is_integer()) return std::nullopt;
    return tv.floor_ll();
}

int SystemParams::require_integer_t() const {
    auto ti = integer_t();
    if (!ti) {
        throw std::invalid_argument("t = nM/m = " + t().str() +
                                    " is not an integer; interpolate between the placements given "
                                    "by memory_share_points instead");
    }
    return static_cast<int>(*ti);
}

void RequestMatrix::validate() const {
    if (n < 1 || m < 1 || L < 1) throw std::invalid_argument("request matrix: bad dimensions");
    if (L > m) throw std::invalid_argument("request matrix: L > m");
    if ((int)rows.size() != n) throw std::invalid_argument("request matrix: wrong row count");
    for (int u = 1; u <= n; ++u) {
        const auto& r = rows[u - 1];
        if ((int)r.size() != L)
            throw std::invalid_argument("request matrix: user " + std::to_string(u) +
                                        " must request exactly L files");
        std::set<int> seen;
        for (int f : r) {
            if (f < 1 || f > m)
                throw std::invalid_argument("request matrix: file id out of range for user " +
                                            std::to_string(u));
            if (!seen.insert(f).second)
                throw std::invalid_argument("request matrix: duplicate file for user " +
                                            std::to_string(u));
        }
    }
}

RequestMatrix RequestMatrix::from_json_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    RequestMatrix F;
    F.n = j.at("n").get<int>();
    F.m = j.at("m").get<int>();
    F.L = j.at("L").get<int>();
    F.rows = j.at("requests").get<std::vector<std::vector<int>>>();
    F.validate();
    return F;
}

RequestMatrix RequestMatrix::from_csv_text(const std::string& text, int m) {
    RequestMatrix F;
    F.m = m;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<int> row;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) row.push_back(std::stoi(cell));
        F.rows.push_back(std::move(row));
    }
    F.n = (int)F.rows.size();
    F.L = F.rows.empty() ? 0 : (int)F.rows[0].size();
    F.validate();
    return F;
}

RequestMatrix RequestMatrix::load_file(const std::string& path, int m_hint) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open demand file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    size_t i = text.find_first_not_of(" \t\r\n");
    if (i != std::string::npos && text[i] == '{') return from_json_text(text);
    return from_csv_text(text, m_hint);
}

std::string RequestMatrix::to_json_text() const {
    nlohmann::json j;
    j["n"] = n;
    j["m"] = m;
    j["L"] = L;
    j["requests"] = rows;
    return j.dump();
}

CachePlacement place_caches(const SystemParams& params) {
    int t = params.require_integer_t();
    CachePlacement pl;
    pl.params = params;
    pl.t = t;
    pl.cached.assign(params.n, {});
    auto subs = subsets_of_size(params.n, t);
    for (int u = 1; u <= params.n; ++u) {
        auto& list = pl.cached[u - 1];
        for (int f = 1; f <= params.m; ++f) {
            for (uint32_t s : subs) {
                if (subset_contains(s, u)) list.push_back(PacketLabel{f, s});
            }
        }
    }
    return pl;
}

std::vector<std::pair<int, PacketLabel>> requested_vertices(const CachePlacement& placement,
                                                            const RequestMatrix& F) {
    F.validate();
    const auto& params = placement.params;
    if (F.n != params.n || F.m != params.m || F.L != params.L)
        throw std::invalid_argument("request matrix inconsistent with placement parameters");
    auto subs = subsets_of_size(params.n, placement.t);
    std::vector<std::pair<int, PacketLabel>> out;
    for (int u = 1; u <= params.n; ++u) {
        std::vector<int> files = F.rows[u - 1];
        std::sort(files.begin(), files.end());
        for (int f : files) {
            for (uint32_t s : subs) {
                if (!subset_contains(s, u)) out.emplace_back(u, PacketLabel{f, s});
            }
        }
    }
    return out;
}

std::vector<MemoryPoint> memory_share_points(const SystemParams& params) {
    Rational t = params.t();
    if (t.is_integer()) return {MemoryPoint{params.M, Rational(1)}};
    long long t0 = t.floor_ll();
    long long t1 = t0 + 1;
    Rational m_over_n = Rational(params.m) / Rational(params.n);
    Rational w1 = t - Rational(t0);  // fractional part; weight of the upper point
    Rational w0 = Rational(1) - w1;
    return {MemoryPoint{Rational(t0) * m_over_n, w0}, MemoryPoint{Rational(t1) * m_over_n, w1}};
}

}  // namespace groupcast
