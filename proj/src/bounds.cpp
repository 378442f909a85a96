#include "groupcast/bounds.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "groupcast/codec.hpp"
#include "groupcast/conflict_graph.hpp"

namespace groupcast {

namespace {

using Point = std::pair<Rational, Rational>;

// anchors: at each integer-t memory point, the smaller of the coded term and
// the send-everything-uncached cap
std::vector<Point> envelope_anchors(const SystemParams& p, int L) {
    std::vector<Point> pts;
    for (int t = 0; t <= p.n; ++t) {
        Rational Mt = Rational(t) * Rational(p.m) / Rational(p.n);
        Rational coded = Rational(L) * Rational(p.n - t) / Rational(1 + t);
        Rational cap = Rational(p.m) - Mt;
        pts.emplace_back(Mt, min(coded, cap));
    }
    return pts;
}

Rational cross(const Point& o, const Point& a, const Point& b) {
    return (a.first - o.first) * (b.second - o.second) -
           (a.second - o.second) * (b.first - o.first);
}

std::vector<Point> lower_hull(const std::vector<Point>& pts) {
    std::vector<Point> hull;
    for (const auto& p : pts) {  // pts already sorted by increasing M
        while (hull.size() >= 2 && !(cross(hull[hull.size() - 2], hull.back(), p) > Rational(0)))
            hull.pop_back();
        hull.push_back(p);
    }
    return hull;
}

Rational hull_value(const std::vector<Point>& pts, const Rational& M) {
    auto hull = lower_hull(pts);
    if (M < hull.front().first || M > hull.back().first)
        throw std::invalid_argument("memory point outside the hull range");
    for (size_t i = 0; i + 1 < hull.size(); ++i) {
        if (M >= hull[i].first && M <= hull[i + 1].first) {
            const auto& [x1, y1] = hull[i];
            const auto& [x2, y2] = hull[i + 1];
            return y1 + (y2 - y1) * (M - x1) / (x2 - x1);
        }
    }
    return hull.back().second;  // M == right endpoint
}

int sweep_thread_count(int requested, size_t items) {
    int hw = (int)std::thread::hardware_concurrency();
    if (hw <= 0) hw = 1;
    int k = requested > 0 ? requested : hw;
    if (const char* env = std::getenv("CODED_GROUPCAST_THREADS")) {
        int cap = std::atoi(env);
        if (cap > 0) k = std::min(k, cap);
    }
    k = std::min<long long>(k, (long long)items);
    return std::max(1, k);
}

// runs fn(i) for i in [0, items) on worker threads; exceptions are rethrown
template <typename Fn>
void parallel_for(size_t items, int threads, Fn&& fn) {
    int k = sweep_thread_count(threads, items);
    if (k <= 1) {
        for (size_t i = 0; i < items; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    auto worker = [&] {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= items) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mu);
                if (!error) error = std::current_exception();
                next.store(items);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < k; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

std::vector<std::vector<int>> file_choices(int m, int L) {
    std::vector<std::vector<int>> out;
    for (uint32_t mask : subsets_of_size(m, L)) out.push_back(subset_elements(mask));
    return out;
}

}  // namespace

Rational rate_mn(const SystemParams& p) { return hull_value(envelope_anchors(p, 1), p.M); }

Rational rate_direct(const SystemParams& p) { return Rational(p.L) * rate_mn(p); }

Rational rate_lc_ub(const SystemParams& p) { return hull_value(envelope_anchors(p, p.L), p.M); }

Rational rate_lower_bound(const SystemParams& p) {
    long long mL = p.m / p.L;
    Rational first(0);  // negative cut-set terms are vacuous
    long long smax = std::min<long long>(mL, p.n);
    for (long long s = 1; s <= smax; ++s) {
        long long inner = mL / s;
        Rational term = Rational((long long)p.L * s) - Rational(s) * p.M / Rational(inner);
        first = max(first, term);
    }
    long long ceil_mL = (p.m + p.L - 1) / p.L;
    Rational second = (Rational(p.m) - p.M) / Rational(ceil_mL);
    return max(first, second);
}

RequestMatrix canonical_form(const RequestMatrix& F) {
    F.validate();
    std::vector<int> perm(F.m);
    for (int i = 0; i < F.m; ++i) perm[i] = i + 1;
    std::vector<std::vector<int>> best;
    do {
        std::vector<std::vector<int>> rows = F.rows;
        for (auto& row : rows) {
            for (auto& f : row) f = perm[f - 1];
            std::sort(row.begin(), row.end());
        }
        std::sort(rows.begin(), rows.end());
        if (best.empty() || rows < best) best = std::move(rows);
    } while (std::next_permutation(perm.begin(), perm.end()));
    RequestMatrix out = F;
    out.rows = best;
    return out;
}

std::vector<RequestMatrix> canonical_request_matrices(const SystemParams& params) {
    if (params.m > 8) throw SolverGuardError("worst-case sweep limited to m <= 8");
    auto choices = file_choices(params.m, params.L);
    long long total = 1;
    for (int u = 0; u < params.n; ++u) {
        total *= (long long)choices.size();
        if (total > 2000000) throw SolverGuardError("worst-case sweep too large");
    }
    std::vector<RequestMatrix> out;
    std::vector<size_t> idx(params.n, 0);
    while (true) {
        RequestMatrix F;
        F.n = params.n;
        F.m = params.m;
        F.L = params.L;
        for (int u = 0; u < params.n; ++u) F.rows.push_back(choices[idx[u]]);
        if (F.rows == canonical_form(F).rows) out.push_back(std::move(F));
        int pos = params.n - 1;
        while (pos >= 0 && ++idx[pos] == choices.size()) idx[pos--] = 0;
        if (pos < 0) break;
    }
    return out;
}

ExactRateResult achievable_rate_exact(const SystemParams& params, const RequestMatrix& F,
                                      const SweepOptions& opts) {
    CachePlacement placement = place_caches(params);
    ConflictGraph g = build_conflict_graph(placement, F);
    auto col = exact_local_chromatic(g, false, opts.limits);
    ExactRateResult res;
    res.chi_l = col.chi_l;
    res.rate = Rational::make(col.chi_l, binomial(params.n, placement.t));
    res.placement_rate = res.rate;
    res.worst = F;
    res.canonical_count = 1;
    return res;
}

ExactRateResult placement_rate_exact(const SystemParams& params, const SweepOptions& opts) {
    CachePlacement placement = place_caches(params);
    auto matrices = canonical_request_matrices(params);
    std::vector<int> chi(matrices.size(), 0);
    parallel_for(matrices.size(), opts.threads, [&](size_t i) {
        ConflictGraph g = build_conflict_graph(placement, matrices[i]);
        chi[i] = exact_local_chromatic(g, false, opts.limits).chi_l;
    });

    ExactRateResult res;
    res.canonical_count = (long long)matrices.size();
    size_t argmax = 0;
    for (size_t i = 1; i < matrices.size(); ++i) {
        if (chi[i] > chi[argmax]) argmax = i;
    }
    res.chi_l = chi[argmax];
    res.worst = matrices[argmax];
    res.rate = Rational::make(res.chi_l, binomial(params.n, placement.t));
    res.placement_rate = res.rate;
    return res;
}

ExactRateResult achievable_rate_exact(const SystemParams& params, const SweepOptions& opts) {
    std::vector<Point> pts;
    ExactRateResult at_query;
    bool have_query = false;
    for (int t = 0; t <= params.n; ++t) {
        Rational Mt = Rational(t) * Rational(params.m) / Rational(params.n);
        SystemParams sub(params.n, params.m, Mt, params.L);
        ExactRateResult pure = placement_rate_exact(sub, opts);
        if (Mt == params.M) {
            at_query = pure;
            have_query = true;
        }
        pts.emplace_back(Mt, pure.rate);
    }
    ExactRateResult res;
    if (have_query) res = at_query;  // keep the pure placement's report
    res.rate = hull_value(pts, params.M);
    return res;
}

Rational worst_case_random_linear_rate(const SystemParams& params, const SweepOptions& opts) {
    CachePlacement placement = place_caches(params);
    auto matrices = canonical_request_matrices(params);
    std::vector<Rational> rates(matrices.size(), Rational(0));
    parallel_for(matrices.size(), opts.threads, [&](size_t i) {
        ConflictGraph g = build_conflict_graph(placement, matrices[i]);
        rates[i] = random_linear_rate(g, opts.rand_trials, opts.rand_q, opts.rand_seed);
    });
    Rational best(0);
    for (const auto& r : rates) best = max(best, r);
    return best;
}

RateReport gap_report(const SystemParams& params, bool use_exact, const SweepOptions& opts) {
    RateReport r;
    r.params = params;
    r.r_mn = rate_mn(params);
    r.r_direct = rate_direct(params);
    r.r_lc_ub = rate_lc_ub(params);
    r.r_lb = rate_lower_bound(params);
    if (use_exact) {
        ExactRateResult er = achievable_rate_exact(params, opts);
        r.r_exact = er.rate;
        r.r_exact_placement = er.placement_rate;
        if (er.chi_l >= 0) {
            r.worst_demands = er.worst;
            r.r_rand = worst_case_random_linear_rate(params, opts);
            r.rand_seed = opts.rand_seed;
        }
    }

    Rational achieved = r.r_exact ? *r.r_exact : r.r_lc_ub;
    if (r.r_lb > achieved) throw std::logic_error("lower bound exceeds achievable rate");
    if (r.r_exact && *r.r_exact > r.r_lc_ub)
        throw std::logic_error("exact rate exceeds its upper bound");
    if (r.r_lb.is_zero()) {
        if (!achieved.is_zero()) throw std::logic_error("zero lower bound with nonzero rate");
        r.gap = Rational(1);  // degenerate all-zero point
    } else {
        r.gap = achieved / r.r_lb;
    }
    if (r.gap > Rational(18)) throw std::logic_error("gap exceeds the factor-18 bound");
    return r;
}

std::string RateReport::to_json() const {
    nlohmann::json j;
    j["params"] = {{"n", params.n},
                   {"m", params.m},
                   {"M", params.M.str()},
                   {"L", params.L},
                   {"t", params.t().str()}};
    j["r_mn"] = r_mn.str();
    j["r_direct"] = r_direct.str();
    j["r_lc_ub"] = r_lc_ub.str();
    j["r_lb"] = r_lb.str();
    j["gap"] = gap.str();
    if (r_exact) j["r_exact"] = r_exact->str();
    if (r_exact_placement) j["r_exact_placement"] = r_exact_placement->str();
    if (r_rand) j["r_rand"] = r_rand->str();
    if (worst_demands) j["worst_demands"] = worst_demands->rows;
    if (rand_seed) j["rand_seed"] = *rand_seed;
    return j.dump(2);
}

namespace {

std::string dec(const Rational& r) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", r.to_double());
    return buf;
}

void put(std::ostringstream& os, const std::optional<Rational>& r) {
    if (r) {
        os << r->str() << ',' << dec(*r);
    } else {
        os << ',';
    }
}

}  // namespace

std::string rate_csv_header() {
    return "n,m,M,M_dec,L,r_exact,r_exact_dec,r_mn,r_mn_dec,r_direct,r_direct_dec,"
           "r_lc_ub,r_lc_ub_dec,r_rand,r_rand_dec,r_lb,r_lb_dec,gap,gap_dec";
}

std::string rate_csv_row(const RateReport& r) {
    std::ostringstream os;
    os << r.params.n << ',' << r.params.m << ',' << r.params.M.str() << ',' << dec(r.params.M)
       << ',' << r.params.L << ',';
    put(os, r.r_exact);
    os << ',' << r.r_mn.str() << ',' << dec(r.r_mn);
    os << ',' << r.r_direct.str() << ',' << dec(r.r_direct);
    os << ',' << r.r_lc_ub.str() << ',' << dec(r.r_lc_ub) << ',';
    put(os, r.r_rand);
    os << ',' << r.r_lb.str() << ',' << dec(r.r_lb);
    os << ',' << r.gap.str() << ',' << dec(r.gap);
    return os.str();
}

}  // namespace groupcast
