#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "groupcast/model.hpp"

using namespace groupcast;

TEST_CASE("binomial values and edge cases") {
    CHECK(binomial(3, 1) == 3);
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(3, 0) == 1);
    CHECK(binomial(3, 3) == 1);
    CHECK(binomial(3, 4) == 0);
    CHECK(binomial(2, -1) == 0);
    CHECK(binomial(32, 16) == 601080390);
}

TEST_CASE("subset enumeration is lexicographic on element lists") {
    auto subs = subsets_of_size(4, 2);
    REQUIRE(subs.size() == 6);
    CHECK(subset_elements(subs[0]) == std::vector<int>{1, 2});
    CHECK(subset_elements(subs[1]) == std::vector<int>{1, 3});
    CHECK(subset_elements(subs[2]) == std::vector<int>{1, 4});
    CHECK(subset_elements(subs[3]) == std::vector<int>{2, 3});
    CHECK(subset_elements(subs[5]) == std::vector<int>{3, 4});
    for (size_t i = 0; i + 1 < subs.size(); ++i) CHECK(subset_lex_less(subs[i], subs[i + 1]));
    CHECK(subsets_of_size(3, 0) == std::vector<uint32_t>{0});
}

TEST_CASE("system params validation") {
    CHECK_THROWS_AS(SystemParams(0, 3, Rational(1), 1), std::invalid_argument);
    // formula bounds accept large n; packetized placement does not
    CHECK_NOTHROW(SystemParams(100, 100, Rational(20), 1));
    CHECK_THROWS_AS(place_caches(SystemParams(33, 33, Rational(1), 1)), std::invalid_argument);
    CHECK_THROWS_AS(SystemParams(3, 3, Rational(4), 1), std::invalid_argument);
    CHECK_THROWS_AS(SystemParams(3, 3, Rational(-1), 1), std::invalid_argument);
    CHECK_THROWS_AS(SystemParams(3, 3, Rational(1), 0), std::invalid_argument);
    CHECK_THROWS_AS(SystemParams(3, 3, Rational(1), 4), std::invalid_argument);

    SystemParams p(3, 3, Rational(1), 2);
    CHECK(p.t() == Rational(1));
    CHECK(p.integer_t().value() == 1);

    SystemParams frac(4, 4, Rational(3, 2), 1);
    CHECK(frac.t() == Rational(3, 2));
    CHECK(!frac.integer_t());
    CHECK_THROWS_AS(frac.require_integer_t(), std::invalid_argument);

    CHECK(SystemParams(3, 3, Rational(0), 1).integer_t().value() == 0);  // M=0 -> t=0
    CHECK(SystemParams(3, 3, Rational(3), 1).integer_t().value() == 3);  // M=m -> t=n
}

TEST_CASE("place_caches: n=3 m=3 M=1 gives one single-user label per file") {
    SystemParams p(3, 3, Rational(1), 1);
    CachePlacement pl = place_caches(p);
    CHECK(pl.t == 1);
    for (int u = 1; u <= 3; ++u) {
        REQUIRE(pl.cached[u - 1].size() == 3);  // one packet per file, label {u}
        for (const auto& label : pl.cached[u - 1]) {
            CHECK(subset_elements(label.subset) == std::vector<int>{u});
        }
    }
}

TEST_CASE("place_caches: zero memory and full memory") {
    CachePlacement empty = place_caches(SystemParams(3, 3, Rational(0), 1));
    for (const auto& c : empty.cached) CHECK(c.empty());

    CachePlacement full = place_caches(SystemParams(3, 3, Rational(3), 1));
    for (const auto& c : full.cached) CHECK((long long)c.size() == 3 * binomial(2, 2));
}

TEST_CASE("place_caches: n=4 m=2 M=1 gives t=2 and 6 packets per user") {
    SystemParams p(4, 2, Rational(1), 1);
    CachePlacement pl = place_caches(p);
    CHECK(pl.t == 2);
    REQUIRE(pl.cached[0].size() == 6);  // 2 * C(3,1)
    std::set<std::vector<int>> got;
    for (const auto& label : pl.cached[0]) got.insert(subset_elements(label.subset));
    CHECK(got == std::set<std::vector<int>>{{1, 2}, {1, 3}, {1, 4}});
}

TEST_CASE("place_caches rejects non-integer t") {
    CHECK_THROWS_WITH_AS(place_caches(SystemParams(4, 4, Rational(3, 2), 1)),
                         doctest::Contains("memory_share_points"), std::invalid_argument);
}

TEST_CASE("cache size identity: per-user packets equal M file units") {
    for (int n = 2; n <= 4; ++n) {
        for (int m = 2; m <= 4; ++m) {
            for (int t = 0; t <= n; ++t) {
                SystemParams p(n, m, Rational(t) * Rational(m) / Rational(n), 1);
                CachePlacement pl = place_caches(p);
                for (int u = 1; u <= n; ++u) {
                    long long count = (long long)pl.cached[u - 1].size();
                    CHECK(count == (long long)m * binomial(n - 1, t - 1));
                    // m*C(n-1,t-1) packets of size 1/C(n,t) each come to M files
                    CHECK(Rational::make(count, binomial(n, t)) == p.M);
                }
            }
        }
    }
}

TEST_CASE("request matrix validation") {
    RequestMatrix F;
    F.n = 2;
    F.m = 3;
    F.L = 2;
    F.rows = {{1, 2}, {2, 3}};
    CHECK_NOTHROW(F.validate());

    RequestMatrix dup = F;
    dup.rows[0] = {1, 1};
    CHECK_THROWS_AS(dup.validate(), std::invalid_argument);

    RequestMatrix range = F;
    range.rows[1] = {2, 4};
    CHECK_THROWS_AS(range.validate(), std::invalid_argument);

    RequestMatrix short_row = F;
    short_row.rows[0] = {1};
    CHECK_THROWS_AS(short_row.validate(), std::invalid_argument);
}

TEST_CASE("requested_vertices counts: L n C(n-1,t)") {
    SystemParams p(3, 3, Rational(1), 1);
    CachePlacement pl = place_caches(p);
    RequestMatrix F{3, 3, 1, {{1}, {2}, {3}}};
    auto verts = requested_vertices(pl, F);
    CHECK(verts.size() == 6);  // 3 * C(2,1)

    SystemParams p2(3, 3, Rational(1), 2);
    CachePlacement pl2 = place_caches(p2);
    RequestMatrix F2{3, 3, 2, {{1, 2}, {2, 3}, {3, 1}}};
    CHECK(requested_vertices(pl2, F2).size() == 12);

    // everything cached: nothing requested
    SystemParams p3(3, 3, Rational(3), 2);
    CachePlacement pl3 = place_caches(p3);
    CHECK(requested_vertices(pl3, F2).empty());
}

TEST_CASE("cached and requested labels partition each requested file") {
    SystemParams p(4, 3, Rational(3, 2), 2);  // t = 2
    CachePlacement pl = place_caches(p);
    RequestMatrix F{4, 3, 2, {{1, 2}, {2, 3}, {3, 1}, {1, 3}}};
    auto verts = requested_vertices(pl, F);
    for (int u = 1; u <= 4; ++u) {
        for (int f : F.rows[u - 1]) {
            std::set<uint32_t> labels;
            for (auto& [vu, label] : verts) {
                if (vu == u && label.file == f) labels.insert(label.subset);
            }
            long long cached_count = 0;
            for (const auto& label : pl.cached[u - 1]) {
                if (label.file == f) ++cached_count;
            }
            CHECK((long long)labels.size() == binomial(3, 2));       // C(n-1,t)
            CHECK(cached_count == binomial(3, 1));                   // C(n-1,t-1)
            CHECK(cached_count + (long long)labels.size() == binomial(4, 2));
        }
    }
}

TEST_CASE("requested_vertices is equivariant under user relabeling") {
    SystemParams p(4, 4, Rational(1), 2);
    CachePlacement pl = place_caches(p);
    RequestMatrix F{4, 4, 2, {{1, 2}, {2, 3}, {3, 4}, {4, 1}}};
    std::mt19937 rng(11);
    for (int round = 0; round < 10; ++round) {
        std::vector<int> perm(4);
        std::iota(perm.begin(), perm.end(), 1);
        std::shuffle(perm.begin(), perm.end(), rng);

        RequestMatrix Fp = F;
        for (int u = 1; u <= 4; ++u) Fp.rows[perm[u - 1] - 1] = F.rows[u - 1];
        auto base = requested_vertices(pl, F);
        auto moved = requested_vertices(pl, Fp);

        std::set<std::pair<int, std::pair<int, uint32_t>>> a, b;
        for (auto& [u, label] : base) {
            uint32_t mapped = 0;
            for (int e : subset_elements(label.subset)) mapped |= 1u << (perm[e - 1] - 1);
            a.insert({perm[u - 1], {label.file, mapped}});
        }
        for (auto& [u, label] : moved) b.insert({u, {label.file, label.subset}});
        CHECK(a == b);
    }
}

TEST_CASE("memory share points bracket fractional t") {
    auto single = memory_share_points(SystemParams(3, 3, Rational(1), 1));
    REQUIRE(single.size() == 1);
    CHECK(single[0].M == Rational(1));
    CHECK(single[0].weight == Rational(1));

    auto mid = memory_share_points(SystemParams(4, 4, Rational(3, 2), 1));  // t = 1.5
    REQUIRE(mid.size() == 2);
    CHECK(mid[0].M == Rational(1));
    CHECK(mid[1].M == Rational(2));
    CHECK(mid[0].weight == Rational(1, 2));
    CHECK(mid[1].weight == Rational(1, 2));

    auto low = memory_share_points(SystemParams(4, 4, Rational(1, 4), 1));  // t = 0.25
    REQUIRE(low.size() == 2);
    CHECK(low[0].M == Rational(0));
    CHECK(low[1].M == Rational(1));
    CHECK(low[0].weight == Rational(3, 4));
    CHECK(low[1].weight == Rational(1, 4));
    CHECK(low[0].weight * low[0].M + low[1].weight * low[1].M == Rational(1, 4));
}
