#include <doctest.h>

#include <stdexcept>

#include "groupcast/bounds.hpp"

using namespace groupcast;

namespace {

// independent envelope oracle: the lower hull value at M equals the smallest
// chord through two anchor points whose spans bracket M
Rational chord_envelope(const SystemParams& p, int L, const Rational& M) {
    std::vector<std::pair<Rational, Rational>> pts;
    for (int t = 0; t <= p.n; ++t) {
        Rational Mt = Rational(t) * Rational(p.m) / Rational(p.n);
        Rational coded = Rational(L) * Rational(p.n - t) / Rational(1 + t);
        Rational cap = Rational(p.m) - Mt;
        pts.emplace_back(Mt, min(coded, cap));
    }
    Rational best(0);
    bool have = false;
    for (size_t i = 0; i < pts.size(); ++i) {
        for (size_t j = i; j < pts.size(); ++j) {
            if (M < pts[i].first || M > pts[j].first) continue;
            Rational val;
            if (i == j) {
                if (M != pts[i].first) continue;
                val = pts[i].second;
            } else {
                val = pts[i].second + (pts[j].second - pts[i].second) * (M - pts[i].first) /
                                          (pts[j].first - pts[i].first);
            }
            if (!have || val < best) {
                best = val;
                have = true;
            }
        }
    }
    REQUIRE(have);
    return best;
}

SystemParams at_t(int n, int m, int t, int L) {
    return SystemParams(n, m, Rational(t) * Rational(m) / Rational(n), L);
}

}  // namespace

TEST_CASE("rate_mn values") {
    CHECK(rate_mn(SystemParams(3, 3, Rational(0), 1)) == Rational(3));  // min(n, m) at M=0
    CHECK(rate_mn(SystemParams(2, 4, Rational(0), 1)) == Rational(2));
    CHECK(rate_mn(SystemParams(4, 2, Rational(0), 1)) == Rational(2));
    CHECK(rate_mn(SystemParams(3, 3, Rational(1), 1)) == Rational(1));  // min{(n-t)/(1+t), m-M}
    CHECK(rate_mn(SystemParams(3, 3, Rational(3), 1)) == Rational(0));
}

TEST_CASE("rate_direct is L times rate_mn") {
    CHECK(rate_direct(SystemParams(3, 3, Rational(1), 2)) == Rational(2));
    SystemParams p(4, 3, Rational(3, 2), 1);
    CHECK(rate_direct(p) == rate_mn(p));
    CHECK(rate_direct(SystemParams(3, 3, Rational(3), 2)) == Rational(0));
}

TEST_CASE("rate_lc_ub: the hull dips below the single-t anchor at the fig. 2 point") {
    SystemParams p(3, 3, Rational(1), 2);
    // anchors (0,3),(1,2),(2,2/3),(3,0): the hull skips (1,2)
    CHECK(rate_lc_ub(p) == Rational(11, 6));
    CHECK(rate_lc_ub(p) == chord_envelope(p, 2, p.M));
    CHECK(rate_lc_ub(SystemParams(3, 3, Rational(3), 2)) == Rational(0));
    SystemParams single(4, 4, Rational(2), 1);
    CHECK(rate_lc_ub(single) == rate_mn(single));
}

TEST_CASE("hull evaluation matches the chord oracle on rational grids") {
    for (int n = 2; n <= 4; ++n) {
        for (int m = 2; m <= 4; ++m) {
            for (int L = 1; L <= m; ++L) {
                for (int num = 0; num <= 4 * m; ++num) {
                    Rational M(num, 4);
                    if (M > Rational(m)) continue;
                    SystemParams p(n, m, M, L);
                    CHECK(rate_lc_ub(p) == chord_envelope(p, L, M));
                    CHECK(rate_mn(p) == chord_envelope(p, 1, M));
                }
            }
        }
    }
}

TEST_CASE("rate_mn is non-increasing in M") {
    for (int n = 2; n <= 4; ++n) {
        for (int m = 2; m <= 4; ++m) {
            Rational prev = rate_mn(SystemParams(n, m, Rational(0), 1));
            for (int num = 1; num <= 4 * m; ++num) {
                Rational M(num, 4);
                Rational cur = rate_mn(SystemParams(n, m, M, 1));
                CHECK(cur <= prev);
                prev = cur;
            }
        }
    }
}

TEST_CASE("hull values are convex in M (midpoint inequality)") {
    for (int n = 2; n <= 4; ++n) {
        for (int L = 1; L <= 3; ++L) {
            int m = 3;
            for (int a = 0; a <= 2 * m - 2; ++a) {
                Rational M1(a, 2), M2(a + 2, 2);
                Rational mid = (M1 + M2) / Rational(2);
                Rational f1 = rate_lc_ub(SystemParams(n, m, M1, L));
                Rational f2 = rate_lc_ub(SystemParams(n, m, M2, L));
                Rational fm = rate_lc_ub(SystemParams(n, m, mid, L));
                CHECK(fm <= (f1 + f2) / Rational(2));
            }
        }
    }
}

TEST_CASE("cut-set lower bound values") {
    CHECK(rate_lower_bound(SystemParams(3, 3, Rational(1), 2)) == Rational(1));
    CHECK(rate_lower_bound(SystemParams(3, 3, Rational(0), 3)) == Rational(3));  // whole library
    CHECK(rate_lower_bound(SystemParams(3, 3, Rational(3), 2)) == Rational(0));
    CHECK(rate_lower_bound(SystemParams(4, 4, Rational(0), 1)) == Rational(4));  // Ls at s=n
    // n=m=3, M=1, L=1: s=1 gives 1-1/3=2/3, s=2 gives 2-2*1/1=0, s=3: 3-3/1=0; second term 2/3
    CHECK(rate_lower_bound(SystemParams(3, 3, Rational(1), 1)) == Rational(2, 3));
}

TEST_CASE("canonical form: idempotent, symmetric, counts match enumeration") {
    RequestMatrix F{3, 3, 2, {{2, 3}, {1, 2}, {1, 3}}};
    RequestMatrix c = canonical_form(F);
    CHECK(canonical_form(c).rows == c.rows);

    // a user permutation and a file permutation land in the same class
    RequestMatrix perm{3, 3, 2, {{1, 3}, {2, 3}, {1, 2}}};
    CHECK(canonical_form(perm).rows == c.rows);
    RequestMatrix fperm{3, 3, 2, {{1, 3}, {1, 2}, {2, 3}}};  // files swapped 2<->3... rows reordered
    CHECK(canonical_form(fperm).rows == c.rows);

    CHECK(canonical_request_matrices(SystemParams(3, 3, Rational(1), 1)).size() == 3);
    CHECK(canonical_request_matrices(SystemParams(3, 3, Rational(1), 2)).size() == 3);
    CHECK(canonical_request_matrices(SystemParams(3, 3, Rational(1), 3)).size() == 1);
}

TEST_CASE("fig. 2 exact rates for L = 1, 2, 3") {
    CHECK(achievable_rate_exact(at_t(3, 3, 1, 1)).rate == Rational(1));
    auto two = achievable_rate_exact(at_t(3, 3, 1, 2));
    CHECK(two.rate == Rational(5, 3));
    CHECK(two.chi_l == 5);
    CHECK(two.canonical_count == 3);
    CHECK(achievable_rate_exact(at_t(3, 3, 1, 3)).rate == Rational(2));
}

TEST_CASE("shared single request with no caches broadcasts one file") {
    SystemParams p(2, 2, Rational(0), 1);
    RequestMatrix F{2, 2, 1, {{1}, {1}}};
    CHECK(achievable_rate_exact(p, F).rate == Rational(1));
}

TEST_CASE("single-demand exact rate never exceeds the worst case") {
    SystemParams p = at_t(3, 3, 1, 2);
    RequestMatrix F{3, 3, 2, {{1, 2}, {2, 3}, {1, 3}}};
    auto single = achievable_rate_exact(p, F);
    auto worst = achievable_rate_exact(p);
    CHECK(single.rate <= worst.rate);
    CHECK(single.rate == Rational::make(single.chi_l, 3));
}

TEST_CASE("memory sharing: envelope over the integer-t placement rates") {
    SystemParams p(4, 4, Rational(3, 2), 2);  // t = 1.5
    auto shared = achievable_rate_exact(p);
    CHECK(shared.chi_l == -1);
    CHECK(!shared.placement_rate.has_value());

    // independent chord oracle over the pure placement values
    std::vector<std::pair<Rational, Rational>> pts;
    for (int t = 0; t <= 4; ++t) {
        SystemParams sub(4, 4, Rational(t), 2);
        pts.emplace_back(Rational(t), placement_rate_exact(sub).rate);
    }
    Rational best(0);
    bool have = false;
    for (size_t i = 0; i < pts.size(); ++i) {
        for (size_t j = i + 1; j < pts.size(); ++j) {
            if (p.M < pts[i].first || p.M > pts[j].first) continue;
            Rational val = pts[i].second + (pts[j].second - pts[i].second) * (p.M - pts[i].first) /
                                               (pts[j].first - pts[i].first);
            if (!have || val < best) {
                best = val;
                have = true;
            }
        }
    }
    REQUIRE(have);
    CHECK(shared.rate == best);
    // never worse than blending just the two bracketing placements
    CHECK(shared.rate <= (pts[1].second + pts[2].second) / Rational(2));
}

TEST_CASE("memory sharing can beat the pure placement at an integer t") {
    SystemParams p(4, 2, Rational(1, 2), 1);  // t = 1
    auto res = achievable_rate_exact(p);
    REQUIRE(res.placement_rate.has_value());
    CHECK(*res.placement_rate == Rational(3, 2));  // chi_l = 6 over C(4,1)
    CHECK(res.chi_l == 6);
    CHECK(res.rate == Rational(4, 3));  // mixing the t=0 and t=2 placements
    CHECK(res.rate <= rate_lc_ub(p));
    CHECK(rate_lower_bound(p) <= res.rate);
}

TEST_CASE("sandwich, thm 2, thm 3 on the n,m <= 3 sweep") {
    for (int n = 2; n <= 3; ++n) {
        for (int m = 2; m <= 3; ++m) {
            for (int t = 0; t <= n; ++t) {
                for (int L = 1; L <= m; ++L) {
                    SystemParams p = at_t(n, m, t, L);
                    Rational exact = achievable_rate_exact(p).rate;
                    Rational lb = rate_lower_bound(p);
                    Rational ub = rate_lc_ub(p);
                    CHECK(lb <= exact);
                    CHECK(exact <= ub);
                    CHECK(ub <= Rational(L) * rate_mn(p));
                    CHECK(exact <= rate_direct(p));
                    CHECK(exact <= Rational((long long)L * n));     // sanity ceilings
                    CHECK(exact <= Rational(m) - p.M);
                    if (L == 1) CHECK(exact <= rate_mn(p));
                    if (L == m) CHECK(exact <= Rational(m) - p.M);
                }
            }
        }
    }
}

TEST_CASE("worst-case random linear baseline at the fig. 2 point") {
    CHECK(worst_case_random_linear_rate(at_t(3, 3, 1, 2)) == Rational(2));
}

TEST_CASE("gap report: fig. 2 point") {
    RateReport r = gap_report(at_t(3, 3, 1, 2), true);
    REQUIRE(r.r_exact.has_value());
    CHECK(*r.r_exact == Rational(5, 3));
    CHECK(r.r_lb == Rational(1));
    CHECK(r.gap == Rational(5, 3));
    CHECK(r.r_direct == Rational(2));
    REQUIRE(r.r_rand.has_value());
    CHECK(*r.r_rand == Rational(2));
    REQUIRE(r.worst_demands.has_value());
    CHECK(achievable_rate_exact(r.params, *r.worst_demands).rate == Rational(5, 3));
}

TEST_CASE("gap report: degenerate all-zero point reports gap 1") {
    RateReport r = gap_report(SystemParams(3, 3, Rational(3), 2), true);
    CHECK(r.r_lb == Rational(0));
    CHECK(*r.r_exact == Rational(0));
    CHECK(r.gap == Rational(1));
}

TEST_CASE("gap report: formula-only mode uses the upper bound") {
    RateReport r = gap_report(SystemParams(100, 100, Rational(20), 10), false);
    CHECK(!r.r_exact.has_value());
    CHECK(r.gap == r.r_lc_ub / r.r_lb);
    CHECK(r.gap <= Rational(18));
}

TEST_CASE("formula values at the large benchmark point") {
    // n=m=100, M=20 (t=20): coded term (n-t)/(1+t) = 80/21, far below the cap
    CHECK(rate_mn(SystemParams(100, 100, Rational(20), 1)) == Rational(80, 21));
    // L=2: s=2 wins the cut-set max: 4 - 40/25 = 12/5
    CHECK(rate_lower_bound(SystemParams(100, 100, Rational(20), 2)) == Rational(12, 5));
    CHECK(rate_lower_bound(SystemParams(100, 100, Rational(20), 100)) == Rational(80));
}
