#pragma once

#include <optional>
#include <string>
#include <vector>

#include "groupcast/coloring.hpp"
#include "groupcast/model.hpp"
#include "groupcast/rational.hpp"

namespace groupcast {

struct SweepOptions {
    // the worst-case sweep evaluates chi_l on the vertex-level graph, which
    // reaches L*n*C(n-1,t) vertices; the default guard covers n,m <= 4
    SweepOptions() { limits.max_exact_vertices = 48; }

    SolverLimits limits;
    int threads = 0;  // 0 = hardware concurrency, capped by CODED_GROUPCAST_THREADS
    int rand_trials = 6;
    int rand_q = 16;
    uint64_t rand_seed = 0x67726f757063ULL;
};

// Achievable rate through the coloring pipeline.
// `rate` is what the scheme family achieves at memory M: the lower convex
// envelope, over the integer-t memory points, of the per-placement worst-case
// values max_F chi_l / C(n,t) (memory sharing may beat the pure placement even
// at an integer t, e.g. n=4, m=2, M=1/2). When t is an integer the pure
// placement's numbers are reported alongside.
struct ExactRateResult {
    Rational rate;                            // envelope value at M
    std::optional<Rational> placement_rate;   // max_F chi_l / C(n,t) at integer t
    int chi_l = -1;                           // worst-case chi_l of that placement
    RequestMatrix worst;                      // a maximizing canonical matrix
    long long canonical_count = 0;
};

// convex lower envelope (over integer-t memory points) of
// min{ n(1-M/m)/(1+nM/m), m-M }
Rational rate_mn(const SystemParams& params);

// the single-request scheme repeated L times
Rational rate_direct(const SystemParams& params);

// convex lower envelope of min{ Ln(1-M/m)/(1+nM/m), m-M }
Rational rate_lc_ub(const SystemParams& params);

// cut-set bound: max{ max_s (Ls - sM/floor(floor(m/L)/s)), (m-M)/ceil(m/L) },
// first term clamped at zero
Rational rate_lower_bound(const SystemParams& params);

// canonical form under joint user and file permutations (rows sorted, then
// the lexicographically least matrix over file relabelings)
RequestMatrix canonical_form(const RequestMatrix& F);

// every canonical demand matrix for (n, m, L), in enumeration order
std::vector<RequestMatrix> canonical_request_matrices(const SystemParams& params);

// worst-case chi_l / C(n,t) for the single integer-t placement (no sharing)
ExactRateResult placement_rate_exact(const SystemParams& params, const SweepOptions& opts = {});

ExactRateResult achievable_rate_exact(const SystemParams& params, const SweepOptions& opts = {});
ExactRateResult achievable_rate_exact(const SystemParams& params, const RequestMatrix& F,
                                      const SweepOptions& opts = {});

// worst-case random linear coding baseline over canonical demands
Rational worst_case_random_linear_rate(const SystemParams& params, const SweepOptions& opts = {});

struct RateReport {
    SystemParams params;
    std::optional<Rational> r_exact;            // envelope value
    std::optional<Rational> r_exact_placement;  // pure integer-t value, when it exists
    std::optional<Rational> r_rand;
    Rational r_mn, r_direct, r_lc_ub, r_lb, gap;
    std::optional<RequestMatrix> worst_demands;
    std::optional<uint64_t> rand_seed;

    std::string to_json() const;
};

// Fills every computable field; gap = (r_exact if available else r_lc_ub)/r_lb
// with the degenerate all-zero point reported as 1. Violations of the
// sandwich or of the factor-18 bound throw std::logic_error.
RateReport gap_report(const SystemParams& params, bool use_exact, const SweepOptions& opts = {});

std::string rate_csv_header();
std::string rate_csv_row(const RateReport& r);

}  // namespace groupcast
