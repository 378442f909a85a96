#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "groupcast/conflict_graph.hpp"
#include "groupcast/rational.hpp"

namespace groupcast {

// Proper coloring of the undirected view; colors are 1..palette and every
// color is used by at least one vertex.
struct Coloring {
    std::vector<int> color;
    int palette = 0;
};

struct LocalColoringResult {
    Coloring coloring;
    int chi_l = 0;
};

// Optimal value of the independent-set LP relaxation plus the supporting
// weights x_I (only sets with x_I > 0 are listed).
struct FractionalResult {
    Rational value;
    std::vector<std::pair<std::vector<int>, Rational>> weights;
};

struct SolverLimits {
    int max_exact_vertices = 26;    // quotient vertices admitted to the exact search
    int max_lp_vertices = 20;       // vertices admitted to the independent-set LP / ILP
    long long max_lp_sets = 20000;  // enumerated independent sets
};

class SolverGuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// max over vertices of the number of distinct colors in the closed
// out-neighborhood; 0 on the empty graph
int local_chromatic_value(const ConflictGraph& g, const std::vector<int>& color);

bool is_proper_coloring(const ConflictGraph& g, const std::vector<int>& color);

// Packet-consistent first-fit coloring in descending closed-out-neighborhood
// order; an upper bound usable at any scale.
LocalColoringResult greedy_local_coloring(const ConflictGraph& g);

// Exhaustive branch-and-bound for the directed local chromatic number. With
// packet_consistent set, all vertices of one packet share a color (the search
// runs on the packet quotient; the value is still evaluated on the original
// directed graph).
LocalColoringResult exact_local_chromatic(const ConflictGraph& g, bool packet_consistent = true,
                                          const SolverLimits& limits = {});

// Independent oracle: the 0/1 covering program over independent sets.
// Equals exact_local_chromatic(g, false).
int local_chromatic_ilp(const ConflictGraph& g, const SolverLimits& limits = {});

// LP relaxation of the covering program, solved exactly in rationals.
FractionalResult fractional_local_chromatic(const ConflictGraph& g, const SolverLimits& limits = {});

}  // namespace groupcast
