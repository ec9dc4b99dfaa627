#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ropesweep/arrangement.hpp"

namespace ropesweep {

using VertexId = int;  // 0 = s, crossing k -> k+1 (left to right), last = t
using EdgeId = int;
using FaceId = int;    // inner faces 0..F-1; the two outer markers below

inline constexpr FaceId kFaceSStar = -1;  // face above the upper hull
inline constexpr FaceId kFaceTStar = -2;  // face below the lower hull

struct Edge {
    VertexId tail = 0;
    VertexId head = 0;
    int index = 0;          // supporting pseudoline label, 1..n
    FaceId left_face = 0;   // face above the edge
    FaceId right_face = 0;  // face below the edge
    int start_col = 0;      // s = column 0, crossing k = column k+1
    int end_col = 0;
};

struct Face {
    VertexId source = 0;
    VertexId sink = 0;
    std::vector<EdgeId> bottom_chain;  // edges below the face, left to right
    std::vector<EdgeId> top_chain;     // edges above the face
    int gap = 0;                       // track gap occupied (1..n-1)
    int open_col = 0;
    int close_col = 0;
};

// A directed s-t path (equivalently an x-monotone curve through the
// arrangement); length is the number of edges.
struct Rope {
    std::vector<EdgeId> edges;
    int length() const { return static_cast<int>(edges.size()); }
    bool operator==(const Rope& o) const { return edges == o.edges; }
};

// A directed path from s* to t* in the dual; dual edges are identified with
// the primal edges they cross.
struct DualRope {
    std::vector<EdgeId> edges;
    int length() const { return static_cast<int>(edges.size()); }
    bool operator==(const DualRope& o) const { return edges == o.edges; }
};

// The bipolar orientation G_A induced by a wiring diagram: one vertex per
// crossing plus s and t, all edges directed left to right. Immutable.
class ArrangementGraph {
public:
    explicit ArrangementGraph(const WiringDiagram& wd);

    int n() const { return n_; }
    int crossings() const { return m_; }
    VertexId source() const { return 0; }
    VertexId sink() const { return m_ + 1; }
    int num_vertices() const { return m_ + 2; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    int num_faces() const { return static_cast<int>(faces_.size()); }

    const Edge& edge(EdgeId e) const { return edges_[e]; }
    const Face& face(FaceId f) const { return faces_[f]; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Face>& faces() const { return faces_; }

    // Incoming/outgoing edges ordered top to bottom.
    std::span<const EdgeId> in_edges(VertexId v) const { return in_[v]; }
    std::span<const EdgeId> out_edges(VertexId v) const { return out_[v]; }
    EdgeId top_in(VertexId v) const { return in_[v].front(); }
    EdgeId bottom_in(VertexId v) const { return in_[v].back(); }
    EdgeId top_out(VertexId v) const { return out_[v].front(); }
    EdgeId bottom_out(VertexId v) const { return out_[v].back(); }

    // The two pseudolines meeting at a crossing (smaller label first) and the
    // track position of the swap.
    std::pair<int, int> crossing_lines(VertexId v) const { return cross_pair_[v]; }
    int crossing_position(VertexId v) const { return cross_pos_[v]; }

    const WiringDiagram& wiring() const { return wiring_; }

    Rope lower_hull() const;
    Rope upper_hull() const;

    std::vector<VertexId> rope_vertices(const Rope& rope) const;

private:
    int n_ = 0;
    int m_ = 0;
    WiringDiagram wiring_;
    std::vector<Edge> edges_;
    std::vector<Face> faces_;
    std::vector<std::vector<EdgeId>> in_, out_;
    std::vector<std::pair<int, int>> cross_pair_;
    std::vector<int> cross_pos_;
};

// The dual bipolar orientation G_A*: one vertex per inner face plus s* and
// t*; the dual of edge e runs from its left face to its right face and is
// identified with e (the bijection between primal and dual edges).
class DualGraph {
public:
    explicit DualGraph(const ArrangementGraph& g);

    int num_inner_faces() const { return inner_; }
    int s_star() const { return inner_; }
    int t_star() const { return inner_ + 1; }
    int num_vertices() const { return inner_ + 2; }
    int num_edges() const { return static_cast<int>(tail_.size()); }

    // Face-id domain (kFaceSStar / kFaceTStar) to dual-vertex domain.
    int vertex_of_face(FaceId f) const {
        if (f == kFaceSStar) return s_star();
        if (f == kFaceTStar) return t_star();
        return f;
    }
    FaceId face_of_vertex(int dv) const {
        if (dv == s_star()) return kFaceSStar;
        if (dv == t_star()) return kFaceTStar;
        return dv;
    }

    int tail(EdgeId e) const { return tail_[e]; }
    int head(EdgeId e) const { return head_[e]; }
    std::span<const EdgeId> out_edges(int dv) const { return out_[dv]; }
    std::span<const EdgeId> in_edges(int dv) const { return in_[dv]; }

    // Inner faces that must be swept before f (dual successors of f).
    std::span<const FaceId> sweep_prerequisites(FaceId f) const { return prereq_[f]; }

private:
    int inner_ = 0;
    std::vector<int> tail_, head_;
    std::vector<std::vector<EdgeId>> out_, in_;
    std::vector<std::vector<FaceId>> prereq_;
};

ArrangementGraph build_graph(const WiringDiagram& wd);
DualGraph build_dual(const ArrangementGraph& g);

// (lower, upper) outer-boundary ropes.
std::pair<Rope, Rope> hulls(const ArrangementGraph& g);

// Minimum edge count over directed u->v paths; nullopt when unreachable.
std::optional<int> shortest_xmonotone_path(const ArrangementGraph& g, VertexId u, VertexId v);

namespace detail {
// Shortest path with its vertex sequence, for verification witnesses.
std::optional<std::vector<VertexId>> shortest_path_witness(const ArrangementGraph& g,
                                                           VertexId u, VertexId v);
}  // namespace detail

}  // namespace ropesweep
