#pragma once

#include <cstdint>
#include <vector>

#include "ropesweep/graph.hpp"

namespace ropesweep {

// A down-set of the sweep precedence: a set of inner faces such that every
// face's prerequisites (faces below it sharing an edge) are also in the set.
// Face f corresponds to bit f. Limited to 63 inner faces (n <= 10).
struct IdealState {
    std::uint64_t faces = 0;

    bool contains(FaceId f) const { return (faces >> f) & 1; }
    IdealState with(FaceId f) const { return {faces | (std::uint64_t{1} << f)}; }
    static IdealState all(int num_faces) {
        return {num_faces == 64 ? ~std::uint64_t{0}
                                : (std::uint64_t{1} << num_faces) - 1};
    }
};

bool is_down_set(const DualGraph& d, IdealState ideal);

// The unique rope whose below side is exactly the ideal: edges with right
// face in I (or t*) and left face outside. Empty ideal gives the lower hull,
// the full ideal the upper hull. Throws NotADownSet.
Rope rope_of_ideal(const ArrangementGraph& g, const DualGraph& d, IdealState ideal);

struct OptimalOptions {
    std::uint64_t max_ideals = 50'000'000;  // stored DP states; 0 = unlimited
    double max_seconds = 0;                 // 0 = unlimited
    bool want_witness = true;
};

struct OptimalResult {
    int rope_length = 0;
    // Face flip order attaining the optimum (lexicographically smallest
    // among optimal sweeps); empty when want_witness is false.
    std::vector<FaceId> witness;
    std::uint64_t ideals_explored = 0;
};

// Exact minimum, over all sweeps, of the maximum rope length; equals the
// directed cutwidth of the dual. Dynamic program over ideals explored
// best-first by bottleneck value with pruning against the primal-dual upper
// bound.
OptimalResult optimal_rope_length(const ArrangementGraph& g, const DualGraph& d,
                                  const OptimalOptions& options = {});

// Independent oracle: best-first bottleneck search on the explicit rope-flip
// graph (nodes are ropes, arcs are single face flips). Intended for small n.
int rope_flip_search(const ArrangementGraph& g, const OptimalOptions& options = {});

namespace detail {

// Everything the ideal DP needs, decoupled from the graph objects so the
// experiment harness can fill it straight from a wiring word.
struct FaceSystem {
    int n = 0;
    int num_faces = 0;
    int lower_hull_len = 0;
    int upper_bound = 0;                  // incumbent; 2n-2 is always safe
    std::vector<std::uint64_t> prereq;    // per face: bitset of faces to sweep first
    std::vector<int> delta;               // per face: |top chain| - |bottom chain|
};

FaceSystem face_system(const ArrangementGraph& g, const DualGraph& d);
void face_system_from_word(int n, std::span<const int> word, FaceSystem& out);

struct CoreResult {
    int value = 0;
    std::uint64_t states = 0;
};

// Bottleneck Dijkstra over ideals; returns the optimum and state count.
CoreResult solve_ideal_dp(const FaceSystem& fs, const OptimalOptions& options);

}  // namespace detail

}  // namespace ropesweep
