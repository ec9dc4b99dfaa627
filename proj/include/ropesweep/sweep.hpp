#pragma once

#include <string>
#include <vector>

#include "ropesweep/graph.hpp"

namespace ropesweep {

// A rope/dual-rope pair that cross in exactly one point. The active edge is
// the unique rope edge crossed by the dual rope; since dual edges are
// identified with the primal edges they cross, it appears in both sequences.
struct SweepState {
    Rope rope;
    DualRope dual_rope;
    int active_rope_pos = 0;
    int active_dual_pos = 0;

    EdgeId active_edge() const { return rope.edges[active_rope_pos]; }
};

// Lower hull paired with the fan of faces incident to s, active edge the
// bottommost outgoing edge of s.
SweepState initial_sweep_state(const ArrangementGraph& g, const DualGraph& d);

// Replaces the bottom chain of inner face F (which must lie on the rope) by
// its top chain.
Rope flip_face(const ArrangementGraph& g, const Rope& rope, FaceId f);

// Moves the dual rope from crossing all incoming edges of v to crossing all
// outgoing edges. v must not be s or t.
DualRope flip_vertex(const ArrangementGraph& g, const DualRope& dual, VertexId v);

struct HugViolation {
    int condition = 0;  // 1..4 as in the hugging definition
    EdgeId edge = 0;    // offending primal edge (conditions 1,2) or crossed edge (3,4)
};

// Evaluates the four hugging conditions edge by edge; empty result means the
// pair hugs. Throws NoCrossing / MultipleCrossings when the rope and dual
// rope do not cross exactly once.
std::vector<HugViolation> check_hugging(const ArrangementGraph& g, const DualGraph& d,
                                        const Rope& rope, const DualRope& dual);

// Structural claims that hold in every state of the primal-dual sweep:
// edges before the active edge enter their head on the top incoming edge,
// edges after it leave their tail on the bottom outgoing edge, and walking
// from s to the crossing point the pseudoline indices are non-decreasing
// with one contiguous encounter per line. Returns human-readable violations.
std::vector<std::string> check_sweep_claims(const ArrangementGraph& g, const SweepState& state);

struct SweepMove {
    enum class Kind { Face, Vertex };
    Kind kind = Kind::Face;
    int id = 0;  // face id or vertex id
    int rope_len_after = 0;
};

struct SweepTrace {
    int n = 0;
    Rope initial_rope;
    DualRope initial_dual;
    std::vector<SweepMove> moves;
    int max_rope_len = 0;
    Rope final_rope;
};

struct SweepOptions {
    // Run check_hugging and check_sweep_claims after every move; violations
    // raise InvariantViolation.
    bool verify_each_step = false;
};

// The coordinated primal-dual sweep: repeatedly flip the rope across the
// face left of the active edge when that edge is not top-incoming at its
// head, otherwise flip the dual rope across the head. Ends at the upper
// hull after n^2 - 1 moves with every inner face flipped exactly once.
SweepTrace primal_dual_sweep(const ArrangementGraph& g, const DualGraph& d,
                             const SweepOptions& options = {});

// Applies a recorded move to a state (used for trace replay).
void apply_move(const ArrangementGraph& g, const DualGraph& d, SweepState& state,
                const SweepMove& move);

}  // namespace ropesweep
