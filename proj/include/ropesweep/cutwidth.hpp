#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ropesweep/errors.hpp"

namespace ropesweep {

// Small general graph for the cutwidth solvers. Parallel edges are allowed;
// self-loops are not. Directed instances list edges as (tail, head).
struct SmallGraph {
    int num_vertices = 0;
    bool directed = false;
    std::vector<std::pair<int, int>> edges;

    int degree(int v) const;
    void check() const;  // throws on malformed input
};

struct LinearOrder {
    std::vector<int> order;  // permutation of vertices
    std::vector<int> cuts;   // cut size after each position
    int width() const;
};

struct CutwidthOptions {
    int max_vertices = 16;
    std::uint64_t max_states = 200'000'000;
    bool want_witness = true;
};

struct CutwidthResult {
    int width = 0;
    LinearOrder order;
};

// Cut sizes of an order: edges with exactly one endpoint among the first i
// vertices. For topological orders of a DAG this is the directed cut.
std::vector<int> cut_sizes(const SmallGraph& g, const std::vector<int>& order);

bool is_topological(const SmallGraph& g, const std::vector<int>& order);

// Exact cutwidth of an undirected graph by subset dynamic programming.
CutwidthResult cutwidth_exact(const SmallGraph& g, const CutwidthOptions& options = {});

// Exact directed cutwidth (minimum width over topological orders) of a DAG
// by dynamic programming over down-sets of the precedence order.
CutwidthResult directed_cutwidth_exact(const SmallGraph& g, const CutwidthOptions& options = {});

// Replaces every edge e = (v, w) by a new source s_e and sink t_e adjacent
// to both v and w. Vertex layout: the original vertices keep their ids; edge
// j contributes s = n + 2j and t = n + 2j + 1. Rejects inputs with isolated
// vertices or isolated edges.
SmallGraph reduce_to_dcw(const SmallGraph& g);

// Topological order of H = reduce_to_dcw(g) obtained from a vertex order of
// g by inserting each edge's source just before its first endpoint and its
// sink just after the second; width at most 2 * width(sigma_g) + 2.
LinearOrder order_g_to_h(const SmallGraph& g, const std::vector<int>& sigma_g);

// Vertex order of g induced by a topological order of H, repaired by
// exchanging improvable pairs (leftmost first) until none remain.
LinearOrder order_h_to_g(const SmallGraph& g, const std::vector<int>& sigma_h);

}  // namespace ropesweep
