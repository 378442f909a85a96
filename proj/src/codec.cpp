#include "groupcast/codec.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace groupcast {

namespace {

// reduced row echelon form over GF(2^q); the last (width - nvars) columns are
// carried along as the augmented part
struct Echelon {
    std::vector<std::vector<uint32_t>> m;
    std::vector<int> pivot_row;  // per variable column, -1 if free
    int rank = 0;
};

Echelon rref(const Field& f, std::vector<std::vector<uint32_t>> m, int nvars) {
    Echelon e;
    int rows = (int)m.size();
    int width = rows ? (int)m[0].size() : 0;
    e.pivot_row.assign(nvars, -1);
    int r = 0;
    for (int c = 0; c < nvars && r < rows; ++c) {
        int sel = -1;
        for (int i = r; i < rows; ++i) {
            if (m[i][c] != 0) {
                sel = i;
                break;
            }
        }
        if (sel < 0) continue;
        std::swap(m[r], m[sel]);
        uint32_t invp = f.inv(m[r][c]);
        for (int j = c; j < width; ++j) m[r][j] = f.mul(m[r][j], invp);
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            uint32_t factor = m[i][c];
            for (int j = c; j < width; ++j) m[i][j] = f.sub(m[i][j], f.mul(factor, m[r][j]));
        }
        e.pivot_row[c] = r;
        ++r;
    }
    e.rank = r;
    e.m = std::move(m);
    return e;
}

// x_c is the same in every solution iff c is a pivot column whose row touches
// no other variable column
bool uniquely_determined(const Echelon& e, int c, int nvars) {
    int r = e.pivot_row[c];
    if (r < 0) return false;
    for (int j = 0; j < nvars; ++j) {
        if (j != c && e.m[r][j] != 0) return false;
    }
    return true;
}

int class_color(const ConflictGraph& g, const LocalColoringResult& col, int cls) {
    int v0 = g.classes[cls].front();
    return col.coloring.color[v0];
}

void check_packet_consistent(const ConflictGraph& g, const LocalColoringResult& col) {
    if ((int)col.coloring.color.size() != g.vertex_count())
        throw std::invalid_argument("coloring has wrong length");
    for (const auto& members : g.classes) {
        for (int v : members) {
            if (col.coloring.color[v] != col.coloring.color[members.front()])
                throw std::invalid_argument("coloring is not packet-consistent");
        }
    }
}

}  // namespace

int auto_field_degree(int ncols, int q_requested) {
    int q = std::max(1, q_requested);
    while (q <= 16 && (1 << q) <= ncols) ++q;
    if (q > 16) throw std::invalid_argument("no supported field is large enough for " +
                                            std::to_string(ncols) + " coding vectors");
    return q;
}

GeneratorMatrix build_mds_generator(int k, int ncols, int q) {
    if (k < 0 || ncols < 0 || k > ncols)
        throw std::invalid_argument("generator needs 0 <= k <= ncols");
    if ((1 << q) <= ncols)
        throw std::invalid_argument("field GF(2^" + std::to_string(q) + ") has too few nonzero " +
                                    "elements for " + std::to_string(ncols) +
                                    " columns; raise q");
    Field f(q);
    GeneratorMatrix gen;
    gen.rows = k;
    gen.cols = ncols;
    gen.q = q;
    gen.a.assign((size_t)k * ncols, 0);
    for (int j = 0; j < ncols; ++j) {
        uint32_t alpha = (uint32_t)(j + 1);  // first ncols nonzero elements
        for (int i = 0; i < k; ++i) gen.a[(size_t)i * ncols + j] = f.pow(alpha, i);
    }
    return gen;
}

int generator_subset_rank(const GeneratorMatrix& gen, const std::vector<int>& columns) {
    Field f(gen.q);
    std::vector<std::vector<uint32_t>> m(gen.rows, std::vector<uint32_t>(columns.size(), 0));
    for (int i = 0; i < gen.rows; ++i) {
        for (size_t j = 0; j < columns.size(); ++j) m[i][j] = gen.at(i, columns[j]);
    }
    return rref(f, std::move(m), (int)columns.size()).rank;
}

std::vector<uint32_t> encode(const ConflictGraph& g, const LocalColoringResult& col,
                             const GeneratorMatrix& gen, const SymbolMap& symbols) {
    if (g.vertex_count() == 0) return {};
    check_packet_consistent(g, col);
    if (gen.cols < col.coloring.palette)
        throw std::invalid_argument("generator has fewer columns than the palette needs");
    Field f(gen.q);
    std::vector<uint32_t> x(gen.rows, 0);
    for (int cls = 0; cls < (int)g.classes.size(); ++cls) {
        auto it = symbols.find(g.class_packet[cls]);
        if (it == symbols.end())
            throw std::invalid_argument("missing symbol for requested packet " +
                                        g.class_packet[cls].str());
        uint32_t omega = it->second;
        int color = class_color(g, col, cls);
        for (int i = 0; i < gen.rows; ++i)
            x[i] = f.add(x[i], f.mul(omega, gen.at(i, color - 1)));
    }
    return x;
}

SymbolMap decode_user(const ConflictGraph& g, const LocalColoringResult& col,
                      const GeneratorMatrix& gen, int user, const std::vector<uint32_t>& codeword,
                      const SymbolMap& cached_symbols) {
    SymbolMap out;
    if (g.vertex_count() == 0) return out;
    check_packet_consistent(g, col);
    if ((int)codeword.size() != gen.rows) throw std::invalid_argument("codeword length mismatch");
    Field f(gen.q);

    // peel off the contributions of this user's cached packets
    std::vector<uint32_t> residual = codeword;
    std::vector<int> unknown;  // class ids, ascending
    for (int cls = 0; cls < (int)g.classes.size(); ++cls) {
        const PacketLabel& p = g.class_packet[cls];
        if (subset_contains(p.subset, user)) {
            auto it = cached_symbols.find(p);
            if (it == cached_symbols.end())
                throw std::invalid_argument("cached symbol missing for packet " + p.str());
            int color = class_color(g, col, cls);
            for (int i = 0; i < gen.rows; ++i)
                residual[i] = f.sub(residual[i], f.mul(it->second, gen.at(i, color - 1)));
        } else {
            unknown.push_back(cls);
        }
    }

    std::vector<int> requested;  // positions in `unknown` the user actually wants
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.vertices[v].mu != user) continue;
        int cls = g.packet_class[v];
        auto it = std::lower_bound(unknown.begin(), unknown.end(), cls);
        if (it == unknown.end() || *it != cls)
            throw std::logic_error("requested packet unexpectedly cached");
        requested.push_back((int)(it - unknown.begin()));
    }
    std::sort(requested.begin(), requested.end());
    requested.erase(std::unique(requested.begin(), requested.end()), requested.end());
    if (requested.empty()) return out;

    int nvars = (int)unknown.size();
    std::vector<std::vector<uint32_t>> m(gen.rows, std::vector<uint32_t>(nvars + 1, 0));
    for (int i = 0; i < gen.rows; ++i) {
        for (int j = 0; j < nvars; ++j) {
            m[i][j] = gen.at(i, class_color(g, col, unknown[j]) - 1);
        }
        m[i][nvars] = residual[i];
    }
    Echelon e = rref(f, std::move(m), nvars);
    for (const auto& row : e.m) {
        bool allzero = true;
        for (int j = 0; j < nvars; ++j) {
            if (row[j] != 0) {
                allzero = false;
                break;
            }
        }
        if (allzero && row[nvars] != 0) throw DecodeError("residual system inconsistent");
    }
    for (int j : requested) {
        if (!uniquely_determined(e, j, nvars))
            throw DecodeError("requested packet " + g.class_packet[unknown[j]].str() +
                              " not uniquely determined for user " + std::to_string(user));
        out[g.class_packet[unknown[j]]] = e.m[e.pivot_row[j]][nvars];
    }
    return out;
}

Rational random_linear_rate(const ConflictGraph& g, int trials, int q, uint64_t seed) {
    if (!g.has_params) throw std::invalid_argument("random_linear_rate needs a placement graph");
    int S = (int)g.classes.size();
    long long denom = g.packets_per_file();

    std::vector<std::vector<int>> unknown_of(g.n + 1), requested_of(g.n + 1);
    for (int cls = 0; cls < S; ++cls) {
        for (int u = 1; u <= g.n; ++u) {
            if (!subset_contains(g.class_packet[cls].subset, u)) unknown_of[u].push_back(cls);
        }
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        requested_of[g.vertices[v].mu].push_back(g.packet_class[v]);
    bool any = false;
    for (int u = 1; u <= g.n; ++u) {
        auto& r = requested_of[u];
        std::sort(r.begin(), r.end());
        r.erase(std::unique(r.begin(), r.end()), r.end());
        any = any || !r.empty();
    }
    if (!any) return Rational(0);

    Field f(q);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<uint32_t> dist(0, f.size() - 1);
    for (int nu = 1; nu <= S; ++nu) {
        bool all_ok = true;
        for (int trial = 0; trial < trials && all_ok; ++trial) {
            std::vector<std::vector<uint32_t>> V(nu, std::vector<uint32_t>(S));
            for (auto& row : V)
                for (auto& x : row) x = dist(rng);
            for (int u = 1; u <= g.n && all_ok; ++u) {
                if (requested_of[u].empty()) continue;
                const auto& unk = unknown_of[u];
                std::vector<std::vector<uint32_t>> m(nu, std::vector<uint32_t>(unk.size()));
                for (int i = 0; i < nu; ++i)
                    for (size_t j = 0; j < unk.size(); ++j) m[i][j] = V[i][unk[j]];
                Echelon e = rref(f, std::move(m), (int)unk.size());
                for (int cls : requested_of[u]) {
                    int j = (int)(std::lower_bound(unk.begin(), unk.end(), cls) - unk.begin());
                    if (!uniquely_determined(e, j, (int)unk.size())) {
                        all_ok = false;
                        break;
                    }
                }
            }
        }
        if (all_ok) return Rational::make(nu, denom);
    }
    throw std::logic_error("random linear baseline found no feasible length");  // nu = S always works
}

std::string codeword_to_hex(const std::vector<uint32_t>& codeword, int q) {
    int width = (q + 3) / 4;
    std::ostringstream os;
    for (size_t i = 0; i < codeword.size(); ++i) {
        if (i) os << ' ';
        char buf[16];
        std::snprintf(buf, sizeof buf, "%0*x", width, codeword[i]);
        os << buf;
    }
    return os.str();
}

std::vector<uint32_t> codeword_from_hex(const std::string& text, int q) {
    std::vector<uint32_t> out;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        uint32_t v = (uint32_t)std::stoul(tok, nullptr, 16);
        if (v >= (1u << q)) throw std::invalid_argument("hex symbol out of field range");
        out.push_back(v);
    }
    return out;
}

std::vector<std::vector<uint32_t>> split_file_symbols(const std::vector<uint8_t>& bytes,
                                                      long long num_chunks, int q) {
    if (q != 8 && q != 16) throw std::invalid_argument("binary symbol import supports q=8 or q=16");
    if (num_chunks <= 0) throw std::invalid_argument("num_chunks must be positive");
    int bytes_per_symbol = q / 8;
    long long total_symbols = ((long long)bytes.size() + bytes_per_symbol - 1) / bytes_per_symbol;
    long long per_chunk = (total_symbols + num_chunks - 1) / num_chunks;
    if (per_chunk == 0) per_chunk = 1;
    std::vector<std::vector<uint32_t>> chunks((size_t)num_chunks,
                                              std::vector<uint32_t>((size_t)per_chunk, 0));
    for (long long s = 0; s < total_symbols; ++s) {
        uint32_t v = 0;
        for (int b = 0; b < bytes_per_symbol; ++b) {
            size_t idx = (size_t)s * bytes_per_symbol + b;
            v = (v << 8) | (idx < bytes.size() ? bytes[idx] : 0);
        }
        chunks[(size_t)(s / per_chunk)][(size_t)(s % per_chunk)] = v;
    }
    return chunks;
}

}  // namespace groupcast
