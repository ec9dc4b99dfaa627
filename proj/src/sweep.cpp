#include "ropesweep/sweep.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace ropesweep {

namespace {

std::string edge_str(const ArrangementGraph& g, EdgeId e) {
    const Edge& ed = g.edge(e);
    return "edge " + std::to_string(e) + " (" + std::to_string(ed.tail) + "->" +
           std::to_string(ed.head) + ", line " + std::to_string(ed.index) + ")";
}

// Position of the subsequence `part` inside `whole`, or -1.
int find_segment(const std::vector<EdgeId>& whole, const std::vector<EdgeId>& part) {
    if (part.empty() || whole.size() < part.size()) return -1;
    auto it = std::find(whole.begin(), whole.end(), part.front());
    if (it == whole.end()) return -1;
    const std::size_t i0 = static_cast<std::size_t>(it - whole.begin());
    if (i0 + part.size() > whole.size()) return -1;
    if (!std::equal(part.begin(), part.end(), whole.begin() + i0)) return -1;
    return static_cast<int>(i0);
}

}  // namespace

SweepState initial_sweep_state(const ArrangementGraph& g, const DualGraph& d) {
    (void)d;
    SweepState st;
    st.rope = g.lower_hull();
    // Duals of the outgoing edges of s, top to bottom, run through all faces
    // incident to s.
    auto outs = g.out_edges(g.source());
    st.dual_rope.edges.assign(outs.begin(), outs.end());
    st.active_rope_pos = 0;
    st.active_dual_pos = static_cast<int>(st.dual_rope.edges.size()) - 1;
    assert(st.rope.edges[st.active_rope_pos] == st.dual_rope.edges[st.active_dual_pos]);
    return st;
}

Rope flip_face(const ArrangementGraph& g, const Rope& rope, FaceId f) {
    if (f < 0 || f >= g.num_faces()) {
        fail(ErrorCode::NotInnerFace, "face " + std::to_string(f) + " is not an inner face");
    }
    const Face& face = g.face(f);
    const int i0 = find_segment(rope.edges, face.bottom_chain);
    if (i0 < 0) {
        fail(ErrorCode::BottomChainNotOnRope,
             "bottom chain of face " + std::to_string(f) + " is not on the rope");
    }
    Rope out;
    out.edges.reserve(rope.edges.size() - face.bottom_chain.size() + face.top_chain.size());
    out.edges.insert(out.edges.end(), rope.edges.begin(), rope.edges.begin() + i0);
    out.edges.insert(out.edges.end(), face.top_chain.begin(), face.top_chain.end());
    out.edges.insert(out.edges.end(), rope.edges.begin() + i0 + face.bottom_chain.size(),
                     rope.edges.end());
    return out;
}

DualRope flip_vertex(const ArrangementGraph& g, const DualRope& dual, VertexId v) {
    if (v == g.source() || v == g.sink()) {
        fail(ErrorCode::TerminalVertex, "cannot flip across s or t");
    }
    if (v < 0 || v >= g.num_vertices()) {
        fail(ErrorCode::PreconditionNotMet, "no such vertex " + std::to_string(v));
    }
    auto ins = g.in_edges(v);
    std::vector<EdgeId> in_seq(ins.begin(), ins.end());
    const int j0 = find_segment(dual.edges, in_seq);
    if (j0 < 0) {
        fail(ErrorCode::PreconditionNotMet,
             "dual rope does not cross all incoming edges of vertex " + std::to_string(v));
    }
    auto outs = g.out_edges(v);
    DualRope out;
    out.edges.reserve(dual.edges.size() - in_seq.size() + outs.size());
    out.edges.insert(out.edges.end(), dual.edges.begin(), dual.edges.begin() + j0);
    out.edges.insert(out.edges.end(), outs.begin(), outs.end());
    out.edges.insert(out.edges.end(), dual.edges.begin() + j0 + in_seq.size(), dual.edges.end());
    return out;
}

std::vector<HugViolation> check_hugging(const ArrangementGraph& g, const DualGraph& d,
                                        const Rope& rope, const DualRope& dual) {
    // Locate the unique crossing.
    std::vector<char> on_dual(g.num_edges(), 0);
    for (EdgeId e : dual.edges) on_dual[e] = 1;
    int crossings = 0;
    int active_rope_pos = -1;
    for (std::size_t i = 0; i < rope.edges.size(); ++i) {
        if (on_dual[rope.edges[i]]) {
            ++crossings;
            active_rope_pos = static_cast<int>(i);
        }
    }
    if (crossings == 0) fail(ErrorCode::NoCrossing, "rope and dual rope do not cross");
    if (crossings > 1) {
        fail(ErrorCode::MultipleCrossings,
             "rope and dual rope cross " + std::to_string(crossings) + " times");
    }
    const EdgeId active = rope.edges[active_rope_pos];

    std::vector<char> face_on_dual(d.num_vertices(), 0);
    for (EdgeId e : dual.edges) {
        face_on_dual[d.tail(e)] = 1;
        face_on_dual[d.head(e)] = 1;
    }
    std::vector<char> vertex_on_rope(g.num_vertices(), 0);
    for (EdgeId e : rope.edges) {
        vertex_on_rope[g.edge(e).tail] = 1;
        vertex_on_rope[g.edge(e).head] = 1;
    }

    std::vector<HugViolation> out;
    for (std::size_t i = 0; i < rope.edges.size(); ++i) {
        const EdgeId e = rope.edges[i];
        if (static_cast<int>(i) < active_rope_pos) {
            if (!face_on_dual[d.vertex_of_face(g.edge(e).left_face)]) out.push_back({1, e});
        } else if (static_cast<int>(i) > active_rope_pos) {
            if (!face_on_dual[d.vertex_of_face(g.edge(e).right_face)]) out.push_back({2, e});
        }
    }
    int active_dual_pos = -1;
    for (std::size_t j = 0; j < dual.edges.size(); ++j) {
        if (dual.edges[j] == active) active_dual_pos = static_cast<int>(j);
    }
    for (std::size_t j = 0; j < dual.edges.size(); ++j) {
        const EdgeId e = dual.edges[j];
        // Walking a dual edge from left face to right face, the primal tail
        // lies to its right and the primal head to its left.
        if (static_cast<int>(j) < active_dual_pos) {
            if (!vertex_on_rope[g.edge(e).tail]) out.push_back({3, e});
        } else if (static_cast<int>(j) > active_dual_pos) {
            if (!vertex_on_rope[g.edge(e).head]) out.push_back({4, e});
        }
    }
    return out;
}

std::vector<std::string> check_sweep_claims(const ArrangementGraph& g, const SweepState& state) {
    std::vector<std::string> out;
    const auto& rope = state.rope.edges;
    const int act = state.active_rope_pos;
    for (int i = 0; i < static_cast<int>(rope.size()); ++i) {
        const EdgeId e = rope[i];
        if (i < act && e != g.top_in(g.edge(e).head)) {
            out.push_back("not top incoming at head: " + edge_str(g, e));
        }
        if (i > act && e != g.bottom_out(g.edge(e).tail)) {
            out.push_back("not bottom outgoing at tail: " + edge_str(g, e));
        }
    }
    // Index monotonicity and contiguous encounters along pi(s, x).
    int prev = 0;
    std::vector<char> seen(g.n() + 1, 0);
    for (int i = 0; i <= act; ++i) {
        const int idx = g.edge(rope[i]).index;
        if (idx < prev) {
            out.push_back("pseudoline index decreases at " + edge_str(g, rope[i]));
        }
        if (idx != prev && seen[idx]) {
            out.push_back("second encounter with pseudoline " + std::to_string(idx));
        }
        seen[idx] = 1;
        prev = idx;
    }
    return out;
}

void apply_move(const ArrangementGraph& g, const DualGraph& d, SweepState& state,
                const SweepMove& move) {
    (void)d;
    if (move.kind == SweepMove::Kind::Face) {
        const Face& face = g.face(move.id);
        const int i0 = find_segment(state.rope.edges, face.bottom_chain);
        if (i0 < 0) {
            fail(ErrorCode::BottomChainNotOnRope,
                 "replay: bottom chain of face " + std::to_string(move.id) + " not on rope");
        }
        state.rope = flip_face(g, state.rope, move.id);
        state.active_rope_pos = i0;
        state.active_dual_pos -= 1;
    } else {
        // The old active edge is top incoming at v, so its dual is the first
        // of the in-segment; the new crossing dual edge (dual of the bottom
        // outgoing edge) is the last of the out-segment.
        state.dual_rope = flip_vertex(g, state.dual_rope, move.id);
        state.active_rope_pos += 1;
        state.active_dual_pos += static_cast<int>(g.out_edges(move.id).size()) - 1;
    }
}

SweepTrace primal_dual_sweep(const ArrangementGraph& g, const DualGraph& d,
                             const SweepOptions& options) {
    SweepTrace trace;
    trace.n = g.n();
    SweepState st = initial_sweep_state(g, d);
    trace.initial_rope = st.rope;
    trace.initial_dual = st.dual_rope;
    trace.max_rope_len = st.rope.length();

    std::vector<char> face_flipped(g.num_faces(), 0);
    const int expected_moves = g.n() * g.n() - 1;
    auto verify = [&](const char* when) {
        auto hug = check_hugging(g, d, st.rope, st.dual_rope);
        if (!hug.empty()) {
            fail(ErrorCode::InvariantViolation,
                 std::string("hugging violated ") + when + " (condition " +
                     std::to_string(hug.front().condition) + " at " +
                     edge_str(g, hug.front().edge) + ")");
        }
        auto claims = check_sweep_claims(g, st);
        if (!claims.empty()) {
            fail(ErrorCode::InvariantViolation,
                 std::string("sweep claim violated ") + when + ": " + claims.front());
        }
    };
    if (options.verify_each_step) verify("at the initial state");

    for (int step = 0; step < expected_moves + 1; ++step) {
        const EdgeId e = st.active_edge();
        const Edge& ed = g.edge(e);
        const VertexId v = ed.head;
        const FaceId f = ed.left_face;
        if (f == kFaceSStar && v == g.sink()) break;

        SweepMove move;
        if (v == g.sink() || e != g.top_in(v)) {
            // e is the last edge of the bottom chain of f: flip the face. The
            // new active edge is the first edge of the top chain of f.
            if (f < 0) {
                fail(ErrorCode::InvariantViolation, "face flip hit an outer face at " + edge_str(g, e));
            }
            if (face_flipped[f]) {
                fail(ErrorCode::InvariantViolation,
                     "face " + std::to_string(f) + " flipped twice");
            }
            face_flipped[f] = 1;
            move = {SweepMove::Kind::Face, f, 0};
        } else {
            move = {SweepMove::Kind::Vertex, v, 0};
        }
        apply_move(g, d, st, move);
        if (st.rope.edges[st.active_rope_pos] != st.dual_rope.edges[st.active_dual_pos]) {
            fail(ErrorCode::InvariantViolation, "active edge bookkeeping diverged");
        }
        move.rope_len_after = st.rope.length();
        trace.moves.push_back(move);
        trace.max_rope_len = std::max(trace.max_rope_len, st.rope.length());
        if (options.verify_each_step) verify("after a move");
        if (static_cast<int>(trace.moves.size()) > expected_moves) {
            fail(ErrorCode::InvariantViolation, "sweep did not terminate in n^2 - 1 moves");
        }
    }

    if (!(st.rope == g.upper_hull())) {
        fail(ErrorCode::InvariantViolation, "sweep did not end at the upper hull");
    }
    if (static_cast<int>(trace.moves.size()) != expected_moves) {
        fail(ErrorCode::InvariantViolation,
             "sweep made " + std::to_string(trace.moves.size()) + " moves, expected " +
                 std::to_string(expected_moves));
    }
    for (FaceId f = 0; f < g.num_faces(); ++f) {
        if (!face_flipped[f]) {
            fail(ErrorCode::InvariantViolation, "face " + std::to_string(f) + " never flipped");
        }
    }
    trace.final_rope = st.rope;
    return trace;
}

}  // namespace ropesweep
