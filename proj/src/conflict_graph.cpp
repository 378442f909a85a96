#include "groupcast/conflict_graph.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace groupcast {

ConflictGraph build_conflict_graph(const CachePlacement& placement, const RequestMatrix& F) {
    ConflictGraph g;
    g.has_params = true;
    g.n = placement.params.n;
    g.m = placement.params.m;
    g.L = placement.params.L;
    g.t = placement.t;

    for (auto& [u, label] : requested_vertices(placement, F)) g.vertices.push_back(Vertex{label, u});

    int V = g.vertex_count();
    g.out.assign(V, {});
    g.undirected.assign(V, {});
    for (int i = 0; i < V; ++i) {
        for (int j = 0; j < V; ++j) {
            if (i == j) continue;
            // j interferes with i: j's packet is not i's packet and not cached at mu(i)
            if (g.vertices[i].rho != g.vertices[j].rho &&
                !subset_contains(g.vertices[j].rho.subset, g.vertices[i].mu)) {
                g.out[i].push_back(j);
            }
        }
    }
    for (int i = 0; i < V; ++i) {
        for (int j : g.out[i]) {
            g.undirected[i].push_back(j);
            g.undirected[j].push_back(i);
        }
    }
    for (auto& adj : g.undirected) {
        std::sort(adj.begin(), adj.end());
        adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    }

    g.packet_class.assign(V, -1);
    std::map<PacketLabel, int> cls;
    for (int i = 0; i < V; ++i) {
        auto [it, fresh] = cls.try_emplace(g.vertices[i].rho, (int)g.classes.size());
        if (fresh) {
            g.classes.emplace_back();
            g.class_packet.push_back(g.vertices[i].rho);
        }
        g.packet_class[i] = it->second;
        g.classes[it->second].push_back(i);
    }
    return g;
}

std::vector<int> closed_out_neighborhood(const ConflictGraph& g, int v) {
    if (v < 0 || v >= g.vertex_count()) throw std::out_of_range("vertex index out of range");
    std::vector<int> nb = g.out[v];
    nb.push_back(v);
    std::sort(nb.begin(), nb.end());
    return nb;
}

std::vector<std::vector<int>> packet_classes(const ConflictGraph& g) { return g.classes; }

std::string to_edge_list(const ConflictGraph& g) {
    std::ostringstream os;
    os << "vertices " << g.vertex_count() << "\n";
    if (g.has_params) {
        for (int i = 0; i < g.vertex_count(); ++i) {
            const auto& v = g.vertices[i];
            os << "vertex " << i << " user=" << v.mu << " file=" << v.rho.file << " subset=";
            bool first = true;
            for (int u : subset_elements(v.rho.subset)) {
                if (!first) os << ',';
                os << u;
                first = false;
            }
            if (first) os << '-';
            os << "\n";
        }
    }
    for (int i = 0; i < g.vertex_count(); ++i) {
        for (int j : g.out[i]) os << i << ' ' << j << "\n";
    }
    return os.str();
}

ConflictGraph graph_from_edge_list(const std::string& text) {
    ConflictGraph g;
    g.has_params = false;
    std::istringstream in(text);
    std::string line;
    long long declared = -1;
    std::vector<std::pair<int, int>> edges;
    int max_idx = -1;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t h = line.find('#');
        if (h != std::string::npos) line = line.substr(0, h);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "vertices") {
            if (!(ls >> declared) || declared < 0)
                throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                            ": bad vertex count");
            continue;
        }
        if (tok == "vertex") continue;  // label metadata, structure comes from edges
        int a, b;
        try {
            a = std::stoi(tok);
        } catch (...) {
            throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                        ": expected edge 'a b'");
        }
        if (!(ls >> b))
            throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                        ": expected edge 'a b'");
        if (a < 0 || b < 0 || a == b)
            throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                        ": bad edge endpoints");
        edges.emplace_back(a, b);
        max_idx = std::max({max_idx, a, b});
    }
    long long V64 = declared >= 0 ? declared : max_idx + 1;
    if (V64 > 100000) throw std::invalid_argument("edge list declares too many vertices");
    int V = (int)V64;
    if (max_idx >= V) throw std::invalid_argument("edge endpoint exceeds declared vertex count");

    g.vertices.resize(V);
    for (int i = 0; i < V; ++i) g.vertices[i] = Vertex{PacketLabel{i + 1, 0}, i + 1};
    g.out.assign(V, {});
    g.undirected.assign(V, {});
    for (auto [a, b] : edges) g.out[a].push_back(b);
    for (auto& succ : g.out) {
        std::sort(succ.begin(), succ.end());
        succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
    }
    for (int i = 0; i < V; ++i) {
        for (int j : g.out[i]) {
            g.undirected[i].push_back(j);
            g.undirected[j].push_back(i);
        }
    }
    for (auto& adj : g.undirected) {
        std::sort(adj.begin(), adj.end());
        adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    }
    g.packet_class.resize(V);
    for (int i = 0; i < V; ++i) {
        g.packet_class[i] = i;
        g.classes.push_back({i});
        g.class_packet.push_back(g.vertices[i].rho);
    }
    return g;
}

}  // namespace groupcast
