#include "groupcast/coloring.hpp"

#include <algorithm>
#include <numeric>

#include "groupcast/lp.hpp"

namespace groupcast {

namespace {

// Vertex-class view the solvers run on: the packet quotient, or the identity
// when packet consistency is not requested.
struct Quotient {
    int nq = 0;
    std::vector<int> cls;                    // original vertex -> class
    std::vector<std::vector<char>> adj;      // class adjacency (undirected)
    std::vector<std::vector<int>> adj_list;
    std::vector<std::vector<int>> watch;     // original v -> classes in N+[v]
    std::vector<std::vector<int>> watchers;  // class -> original vertices watching it
};

Quotient make_quotient(const ConflictGraph& g, bool packet_consistent) {
    Quotient q;
    int V = g.vertex_count();
    if (packet_consistent) {
        q.cls = g.packet_class;
        q.nq = (int)g.classes.size();
    } else {
        q.cls.resize(V);
        std::iota(q.cls.begin(), q.cls.end(), 0);
        q.nq = V;
    }
    q.adj.assign(q.nq, std::vector<char>(q.nq, 0));
    for (int i = 0; i < V; ++i) {
        for (int j : g.undirected[i]) {
            int a = q.cls[i], b = q.cls[j];
            if (a != b) q.adj[a][b] = q.adj[b][a] = 1;
        }
    }
    q.adj_list.assign(q.nq, {});
    for (int a = 0; a < q.nq; ++a) {
        for (int b = 0; b < q.nq; ++b) {
            if (q.adj[a][b]) q.adj_list[a].push_back(b);
        }
    }
    q.watch.assign(V, {});
    q.watchers.assign(q.nq, {});
    for (int v = 0; v < V; ++v) {
        std::vector<int> w{q.cls[v]};
        for (int j : g.out[v]) w.push_back(q.cls[j]);
        std::sort(w.begin(), w.end());
        w.erase(std::unique(w.begin(), w.end()), w.end());
        q.watch[v] = w;
        for (int c : w) q.watchers[c].push_back(v);
    }
    return q;
}

bool adjacent(const ConflictGraph& g, int a, int b) {
    return std::binary_search(g.undirected[a].begin(), g.undirected[a].end(), b);
}

// budgeted Bron-Kerbosch max clique on an induced vertex set
struct CliqueSearch {
    const ConflictGraph& g;
    long long budget;
    int best = 0;

    void extend(std::vector<int>& clique, std::vector<int> cand) {
        if (--budget < 0) return;
        if ((int)clique.size() > best) best = (int)clique.size();
        if ((int)(clique.size() + cand.size()) <= best) return;
        while (!cand.empty()) {
            if ((int)(clique.size() + cand.size()) <= best) return;
            int u = cand.back();
            cand.pop_back();
            std::vector<int> next;
            for (int w : cand) {
                if (adjacent(g, u, w)) next.push_back(w);
            }
            clique.push_back(u);
            extend(clique, std::move(next));
            clique.pop_back();
        }
    }
};

// A clique inside some closed out-neighborhood forces that many colors there,
// so its size lower-bounds chi_l.
int clique_lower_bound(const ConflictGraph& g) {
    int V = g.vertex_count();
    int best = V > 0 ? 1 : 0;
    // one user's distinct requested packets are pairwise bidirected
    if (g.has_params) {
        std::vector<std::vector<int>> per_user;
        for (int v = 0; v < V; ++v) {
            int u = g.vertices[v].mu;
            if ((int)per_user.size() < u) per_user.resize(u);
            per_user[u - 1].push_back(g.packet_class[v]);
        }
        for (auto& pkts : per_user) {
            std::sort(pkts.begin(), pkts.end());
            pkts.erase(std::unique(pkts.begin(), pkts.end()), pkts.end());
            best = std::max(best, (int)pkts.size());
        }
    }
    CliqueSearch search{g, 200000, best};
    for (int v = 0; v < V; ++v) {
        std::vector<int> cand = closed_out_neighborhood(g, v);
        std::vector<int> clique;
        search.extend(clique, std::move(cand));
        if (search.budget < 0) break;
    }
    return std::max(best, search.best);
}

LocalColoringResult greedy_on_quotient(const ConflictGraph& g, const Quotient& q) {
    int V = g.vertex_count();
    LocalColoringResult res;
    if (V == 0) return res;

    // class order: descending size of the merged closed out-neighborhood
    std::vector<std::vector<char>> seen(q.nq, std::vector<char>(q.nq, 0));
    std::vector<int> reach(q.nq, 0);
    for (int v = 0; v < V; ++v) {
        int c = q.cls[v];
        for (int w : q.watch[v]) {
            if (!seen[c][w]) {
                seen[c][w] = 1;
                ++reach[c];
            }
        }
    }
    std::vector<int> order(q.nq);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (reach[a] != reach[b]) return reach[a] > reach[b];
        return a < b;
    });

    std::vector<int> qcolor(q.nq, 0);
    int palette = 0;
    for (int c : order) {
        std::vector<char> used(q.nq + 2, 0);
        for (int b : q.adj_list[c]) {
            if (qcolor[b] > 0) used[qcolor[b]] = 1;
        }
        int col = 1;
        while (used[col]) ++col;
        qcolor[c] = col;
        palette = std::max(palette, col);
    }

    res.coloring.color.resize(V);
    for (int v = 0; v < V; ++v) res.coloring.color[v] = qcolor[q.cls[v]];
    res.coloring.palette = palette;
    res.chi_l = local_chromatic_value(g, res.coloring.color);
    return res;
}

struct ExactSearch {
    const ConflictGraph& g;
    const Quotient& q;
    int V, nq;
    std::vector<int> order;
    std::vector<int> color;                // per class, 0 = unassigned
    std::vector<std::vector<int>> cnt;     // original v x color -> watched classes with that color
    std::vector<int> distinct;             // original v -> distinct assigned colors in watch[v]
    int best;
    std::vector<int> best_color;
    int lower;
    bool done = false;

    ExactSearch(const ConflictGraph& g_, const Quotient& q_, int seed_best, int lower_)
        : g(g_), q(q_), V(g_.vertex_count()), nq(q_.nq), best(seed_best), lower(lower_) {
        color.assign(nq, 0);
        cnt.assign(V, std::vector<int>(nq + 2, 0));
        distinct.assign(V, 0);
        order.resize(nq);
        std::iota(order.begin(), order.end(), 0);
        std::vector<int> deg(nq);
        for (int c = 0; c < nq; ++c) deg[c] = (int)q.adj_list[c].size();
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (deg[a] != deg[b]) return deg[a] > deg[b];
            return a < b;
        });
    }

    bool assign(int c, int col) {
        bool ok = true;
        for (int v : q.watchers[c]) {
            if (cnt[v][col]++ == 0 && ++distinct[v] >= best) ok = false;
        }
        return ok;
    }

    void retract(int c, int col) {
        for (int v : q.watchers[c]) {
            if (--cnt[v][col] == 0) --distinct[v];
        }
    }

    void dfs(int i, int maxused) {
        if (done) return;
        if (i == nq) {
            int val = 0;
            for (int v = 0; v < V; ++v) val = std::max(val, distinct[v]);
            best = val;
            best_color = color;
            if (best <= lower) done = true;
            return;
        }
        int c = order[i];
        int cap = std::min(maxused + 1, nq);
        for (int col = 1; col <= cap; ++col) {
            bool proper = true;
            for (int b : q.adj_list[c]) {
                if (color[b] == col) {
                    proper = false;
                    break;
                }
            }
            if (!proper) continue;
            color[c] = col;
            if (assign(c, col)) dfs(i + 1, std::max(maxused, col));
            retract(c, col);
            color[c] = 0;
            if (done) return;
        }
    }
};

// independent sets of the undirected view as bitmasks, ascending, excluding
// the empty set; guarded by limits
std::vector<uint32_t> enumerate_independent_sets(const ConflictGraph& g, const SolverLimits& limits,
                                                 const char* who) {
    int V = g.vertex_count();
    if (V > limits.max_lp_vertices) {
        throw SolverGuardError(std::string("instance too large for ") + who + ": " +
                               std::to_string(V) + " vertices exceeds the guard of " +
                               std::to_string(limits.max_lp_vertices));
    }
    std::vector<uint32_t> adjmask(V, 0);
    for (int v = 0; v < V; ++v) {
        for (int w : g.undirected[v]) adjmask[v] |= (1u << w);
    }
    std::vector<uint32_t> sets;
    std::vector<char> indep(1u << V, 0);
    indep[0] = 1;
    for (uint32_t m = 1; m < (1u << V); ++m) {
        int low = __builtin_ctz(m);
        uint32_t rest = m & (m - 1);
        indep[m] = indep[rest] && ((adjmask[low] & rest) == 0);
        if (indep[m]) {
            sets.push_back(m);
            if ((long long)sets.size() > limits.max_lp_sets) {
                throw SolverGuardError(std::string("instance too large for ") + who +
                                       ": more than " + std::to_string(limits.max_lp_sets) +
                                       " independent sets");
            }
        }
    }
    return sets;
}

}  // namespace

int local_chromatic_value(const ConflictGraph& g, const std::vector<int>& color) {
    int V = g.vertex_count();
    if ((int)color.size() != V) throw std::invalid_argument("coloring has wrong length");
    int best = 0;
    std::vector<char> seen;
    for (int v = 0; v < V; ++v) {
        seen.assign(V + 2, 0);
        int cnt = 0;
        for (int u : closed_out_neighborhood(g, v)) {
            int c = color[u];
            if (c <= 0 || c > V) throw std::invalid_argument("color id out of range");
            if (!seen[c]) {
                seen[c] = 1;
                ++cnt;
            }
        }
        best = std::max(best, cnt);
    }
    return best;
}

bool is_proper_coloring(const ConflictGraph& g, const std::vector<int>& color) {
    if ((int)color.size() != g.vertex_count()) return false;
    for (int v = 0; v < g.vertex_count(); ++v) {
        for (int u : g.undirected[v]) {
            if (color[u] == color[v]) return false;
        }
    }
    return true;
}

LocalColoringResult greedy_local_coloring(const ConflictGraph& g) {
    Quotient q = make_quotient(g, true);
    return greedy_on_quotient(g, q);
}

LocalColoringResult exact_local_chromatic(const ConflictGraph& g, bool packet_consistent,
                                          const SolverLimits& limits) {
    LocalColoringResult res;
    if (g.vertex_count() == 0) return res;

    Quotient q = make_quotient(g, packet_consistent);
    if (q.nq > limits.max_exact_vertices) {
        throw SolverGuardError("instance too large for exact solver: " + std::to_string(q.nq) +
                               " quotient vertices exceeds the guard of " +
                               std::to_string(limits.max_exact_vertices));
    }

    LocalColoringResult seed = greedy_on_quotient(g, q);
    int lower = clique_lower_bound(g);
    // the packet-consistent optimum is a cheap incumbent for the vertex-level
    // search (its search graph is the much smaller quotient)
    if (!packet_consistent && (int)g.classes.size() < g.vertex_count()) {
        LocalColoringResult merged = exact_local_chromatic(g, true, limits);
        if (merged.chi_l < seed.chi_l) seed = merged;
    }
    if (seed.chi_l <= lower) return seed;

    ExactSearch search(g, q, seed.chi_l, lower);
    search.dfs(0, 0);
    if (search.best_color.empty()) return seed;  // the incumbent was already optimal

    int V = g.vertex_count();
    res.coloring.color.resize(V);
    int palette = 0;
    for (int v = 0; v < V; ++v) {
        res.coloring.color[v] = search.best_color[q.cls[v]];
        palette = std::max(palette, res.coloring.color[v]);
    }
    res.coloring.palette = palette;
    res.chi_l = search.best;
    return res;
}

int local_chromatic_ilp(const ConflictGraph& g, const SolverLimits& limits) {
    int V = g.vertex_count();
    if (V == 0) return 0;
    auto sets = enumerate_independent_sets(g, limits, "the covering ILP");
    int S = (int)sets.size();

    std::vector<uint32_t> nmask(V, 0);
    for (int v = 0; v < V; ++v) {
        for (int u : closed_out_neighborhood(g, v)) nmask[v] |= (1u << u);
    }
    std::vector<uint32_t> hit(S, 0);  // vertices whose N+[v] the set intersects
    for (int s = 0; s < S; ++s) {
        for (int v = 0; v < V; ++v) {
            if (nmask[v] & sets[s]) hit[s] |= (1u << v);
        }
    }
    std::vector<std::vector<int>> with_vertex(V);
    for (int s = 0; s < S; ++s) {
        for (int v = 0; v < V; ++v) {
            if (sets[s] & (1u << v)) with_vertex[v].push_back(s);
        }
    }

    uint32_t full = (V == 32) ? ~0u : ((1u << V) - 1);
    std::vector<int> counts(V, 0);
    long long budget = 200000000;

    // depth-first cover search: pick the lowest uncovered vertex, try the
    // independent sets containing it
    auto dfs = [&](auto&& self, uint32_t covered, int k) -> bool {
        if (--budget < 0) throw SolverGuardError("covering ILP search budget exceeded");
        if (covered == full) return true;
        int u = __builtin_ctz(~covered);
        for (int s : with_vertex[u]) {
            bool ok = true;
            for (uint32_t h = hit[s]; h; h &= h - 1) {
                if (counts[__builtin_ctz(h)] + 1 > k) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            for (uint32_t h = hit[s]; h; h &= h - 1) ++counts[__builtin_ctz(h)];
            bool found = self(self, covered | sets[s], k);
            for (uint32_t h = hit[s]; h; h &= h - 1) --counts[__builtin_ctz(h)];
            if (found) return true;
        }
        return false;
    };

    for (int k = 1; k <= V; ++k) {
        std::fill(counts.begin(), counts.end(), 0);
        if (dfs(dfs, 0, k)) return k;
    }
    throw std::logic_error("covering ILP found no solution");  // unreachable: singletons cover
}

FractionalResult fractional_local_chromatic(const ConflictGraph& g, const SolverLimits& limits) {
    FractionalResult res;
    res.value = Rational(0);
    int V = g.vertex_count();
    if (V == 0) return res;
    auto sets = enumerate_independent_sets(g, limits, "the fractional LP");
    int S = (int)sets.size();

    std::vector<uint32_t> nmask(V, 0);
    for (int v = 0; v < V; ++v) {
        for (int u : closed_out_neighborhood(g, v)) nmask[v] |= (1u << u);
    }

    // variables: x_0..x_{S-1}, then k
    int nvars = S + 1;
    std::vector<std::vector<Rational>> A;
    std::vector<Rational> b;
    for (int v = 0; v < V; ++v) {  // sum of sets touching N+[v] minus k <= 0
        std::vector<Rational> row(nvars, Rational(0));
        for (int s = 0; s < S; ++s) {
            if (nmask[v] & sets[s]) row[s] = Rational(1);
        }
        row[S] = Rational(-1);
        A.push_back(std::move(row));
        b.push_back(Rational(0));
    }
    for (int v = 0; v < V; ++v) {  // coverage: sum of sets containing v >= 1
        std::vector<Rational> row(nvars, Rational(0));
        for (int s = 0; s < S; ++s) {
            if (sets[s] & (1u << v)) row[s] = Rational(-1);
        }
        A.push_back(std::move(row));
        b.push_back(Rational(-1));
    }
    std::vector<Rational> c(nvars, Rational(0));
    c[S] = Rational(1);

    LpSolution sol = solve_lp_min(A, b, c);
    res.value = sol.value;
    for (int s = 0; s < S; ++s) {
        Rational w = groupcast::min(sol.x[s], Rational(1));  // x_I > 1 never buys anything
        if (!(w > Rational(0))) continue;
        std::vector<int> members;
        for (int v = 0; v < V; ++v) {
            if (sets[s] & (1u << v)) members.push_back(v);
        }
        res.weights.emplace_back(std::move(members), w);
    }

    // recheck the reported certificate against the definition
    std::vector<Rational> cover(V, Rational(0)), local(V, Rational(0));
    for (const auto& [members, w] : res.weights) {
        uint32_t mask = 0;
        for (int v : members) mask |= (1u << v);
        for (int v = 0; v < V; ++v) {
            if (mask & (1u << v)) cover[v] += w;
            if (mask & nmask[v]) local[v] += w;
        }
    }
    Rational maxlocal(0);
    for (int v = 0; v < V; ++v) {
        if (cover[v] < Rational(1)) throw std::logic_error("fractional LP: coverage violated");
        maxlocal = groupcast::max(maxlocal, local[v]);
    }
    if (maxlocal != res.value) throw std::logic_error("fractional LP: value does not match weights");
    return res;
}

}  // namespace groupcast
