#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nullity/f2.hpp"

namespace nullity {

// Simple undirected graph. Edges are stored as (u, v) with u < v, sorted
// lexicographically; the position in `edges` is the edge index used by all
// edge-set bit vectors.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> adj;       // sorted neighbor lists
    std::vector<std::vector<int>> adj_edge;  // edge index parallel to adj

    int edge_count() const { return int(edges.size()); }
    int degree(int v) const { return int(adj[std::size_t(v)].size()); }
    int edge_index(int u, int v) const;  // -1 when not adjacent
};

// Validates (no loops, no parallel edges, endpoints in range), normalizes
// pair order and sorts. Throws std::invalid_argument on violations.
Graph make_graph(int n, std::vector<std::pair<int, int>> edge_list);

struct GraphStats {
    int v = 0, e = 0, c = 0;
    int c_e = 0;              // components where every vertex has even degree
    int v_e = 0, v_o = 0;     // even- / odd-degree vertex counts
    int theta = 0;            // e - v + c
    int parity_indicator = 0; // 0 iff every degree is even, else 1
    BitVec degree_parities;   // bit v set iff degree(v) is odd
};

GraphStats compute_stats(const Graph& g);

// g itself when even; otherwise g plus one external vertex adjacent to
// exactly the odd-degree vertices.
Graph make_even(const Graph& g);

// g plus one pendant neighbor per even-degree vertex.
Graph make_odd(const Graph& g);

Graph cycle_graph(int k);     // k >= 3
Graph path_graph(int k);      // k >= 1 vertices
Graph complete_graph(int k);  // k >= 0
Graph star_graph(int k);      // K_{1,k}, k >= 1
Graph h_tree();               // 6-vertex tree a1-a2-a3, b1-b2-b3, a2-b2
Graph bowtie();               // two triangles sharing one vertex
// Cycles chained so that consecutive cycles share one cut vertex.
Graph cactus_chain(const std::vector<int>& lengths);  // each length >= 3

// Name-based dispatch for the CLI; params are family specific
// (single size, or the cycle lengths for cactus_chain).
Graph generate(const std::string& family, const std::vector<int>& params);

Graph disjoint_union(const Graph& a, const Graph& b);

// Graph on n vertices whose edge set is given by `mask` over the
// lexicographically ordered vertex pairs. Requires C(n,2) <= 64.
Graph from_edge_mask(int n, std::uint64_t mask);

struct Graph6Error : std::runtime_error {
    std::size_t offset;  // byte position in the input line
    Graph6Error(const std::string& what, std::size_t off)
        : std::runtime_error(what), offset(off) {}
};

// One line of standard graph6, n <= 62 (single-byte size form). An optional
// leading ">>graph6<<" header is accepted and skipped.
Graph parse_graph6(std::string_view line);
std::string emit_graph6(const Graph& g);

}  // namespace nullity
