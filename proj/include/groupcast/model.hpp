#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "groupcast/combinatorics.hpp"
#include "groupcast/rational.hpp"

namespace groupcast {

// n users, m files, cache size M in file units, L requests per user.
// The derived packetization parameter is t = nM/m.
struct SystemParams {
    int n = 0;
    int m = 0;
    Rational M;
    int L = 1;

    SystemParams() = default;
    SystemParams(int n_, int m_, Rational M_, int L_);

    Rational t() const { return Rational(n) * M / Rational(m); }
    std::optional<long long> integer_t() const;

    // throws when t is fractional, pointing the caller at memory_share_points
    int require_integer_t() const;
};

// One packet: file id plus the user subset labelling it (|subset| == t).
struct PacketLabel {
    int file = 0;          // 1..m
    uint32_t subset = 0;   // bitmask, bit u-1 set means user u caches this packet

    friend bool operator==(const PacketLabel& a, const PacketLabel& b) {
        return a.file == b.file && a.subset == b.subset;
    }
    friend bool operator!=(const PacketLabel& a, const PacketLabel& b) { return !(a == b); }
    friend bool operator<(const PacketLabel& a, const PacketLabel& b) {
        if (a.file != b.file) return a.file < b.file;
        return subset_lex_less(a.subset, b.subset);
    }
    std::string str() const { return "W" + std::to_string(file) + subset_str(subset); }
};

inline bool subset_contains(uint32_t mask, int user) { return (mask >> (user - 1)) & 1u; }

// L distinct file ids per user. rows[u-1] preserves the order given by the caller.
struct RequestMatrix {
    int n = 0;
    int m = 0;
    int L = 0;
    std::vector<std::vector<int>> rows;

    void validate() const;  // throws std::invalid_argument

    static RequestMatrix from_json_text(const std::string& text);
    static RequestMatrix from_csv_text(const std::string& text, int m);
    // sniffs JSON vs CSV by content; m_hint is used for CSV input
    static RequestMatrix load_file(const std::string& path, int m_hint);
    std::string to_json_text() const;
};

struct CachePlacement {
    SystemParams params;
    int t = 0;
    // cached[u-1]: the labels with u in subset, sorted by (file, subset)
    std::vector<std::vector<PacketLabel>> cached;

    bool caches(int user, const PacketLabel& p) const { return subset_contains(p.subset, user); }
};

// The combinatorial placement: each file split into C(n,t) packets, user u
// caching every packet whose label contains u. Requires integer t.
CachePlacement place_caches(const SystemParams& params);

// For each user u and each file u requests, the C(n-1,t) labels of that file
// not cached at u. Sorted by (user, file, subset); this is the conflict-graph
// vertex order.
std::vector<std::pair<int, PacketLabel>> requested_vertices(const CachePlacement& placement,
                                                            const RequestMatrix& F);

struct MemoryPoint {
    Rational M;
    Rational weight;
};

// The integer-t memory points bracketing M with convex weights summing to 1;
// a single point when t is already an integer.
std::vector<MemoryPoint> memory_share_points(const SystemParams& params);

}  // namespace groupcast
