#pragma once

#include <string>
#include <vector>

#include "groupcast/model.hpp"

namespace groupcast {

// One requested packet instance: packet identity rho, requesting user mu.
// The same packet requested by several users appears as several vertices.
struct Vertex {
    PacketLabel rho;
    int mu = 0;
};

// Directed conflict graph. A directed edge v2 -> v1 means v1's packet
// interferes with v2: it is neither v2's own packet nor cached at v2's user.
// The undirected view (edge union) is what colorings must be proper on.
struct ConflictGraph {
    bool has_params = false;  // false for digraphs imported from edge lists
    int n = 0, m = 0, L = 0, t = 0;

    std::vector<Vertex> vertices;
    std::vector<std::vector<int>> out;         // sorted successor indices
    std::vector<std::vector<int>> undirected;  // sorted edge-union adjacency

    std::vector<int> packet_class;             // vertex -> class of equal rho
    std::vector<std::vector<int>> classes;     // class -> member vertices
    std::vector<PacketLabel> class_packet;     // class -> packet identity

    int vertex_count() const { return (int)vertices.size(); }
    long long packets_per_file() const { return binomial(n, t); }  // C(n,t)
};

ConflictGraph build_conflict_graph(const CachePlacement& placement, const RequestMatrix& F);

// {v} together with the heads of v's out-edges, sorted
std::vector<int> closed_out_neighborhood(const ConflictGraph& g, int v);

// partition of the vertex set by equal rho; each class is an independent set
std::vector<std::vector<int>> packet_classes(const ConflictGraph& g);

// Text export: "vertices N" header, optional "vertex i ..." label lines,
// then one "a b" directed edge per line (0-based indices).
std::string to_edge_list(const ConflictGraph& g);

// Parses the format written by to_edge_list; also accepts bare "a b" pairs
// without a header. Imported vertices form singleton packet classes.
ConflictGraph graph_from_edge_list(const std::string& text);

}  // namespace groupcast
