#include "ropesweep/graph.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <string>

namespace ropesweep {

namespace {

struct PendingEdge {
    VertexId tail = 0;
    FaceId left = 0;
    FaceId right = 0;
    int start_col = 0;
};

}  // namespace

ArrangementGraph::ArrangementGraph(const WiringDiagram& wd)
    : n_(wd.n()), m_(wd.crossings()), wiring_(wd) {
    const int n = n_;
    const int m = m_;
    const int num_inner = n - 1 + m;  // equals n(n+1)/2 - 1

    edges_.reserve(n * n);
    faces_.resize(num_inner);
    in_.resize(m + 2);
    out_.resize(m + 2);
    cross_pair_.assign(m + 2, {0, 0});
    cross_pos_.assign(m + 2, 0);

    std::vector<int> wire(n);
    for (int i = 0; i < n; ++i) wire[i] = i + 1;

    // Face currently occupying each track gap; gap 0 is s*, gap n is t*.
    std::vector<FaceId> gap_face(n + 1);
    gap_face[0] = kFaceSStar;
    gap_face[n] = kFaceTStar;
    for (int g = 1; g < n; ++g) {
        gap_face[g] = g - 1;
        faces_[g - 1].source = 0;
        faces_[g - 1].gap = g;
        faces_[g - 1].open_col = 0;
    }

    std::vector<PendingEdge> pending(n + 1);  // by wire label
    for (int track = 1; track <= n; ++track) {
        pending[wire[track - 1]] = {0, gap_face[track - 1], gap_face[track], 0};
    }

    auto finish_edge = [&](int label, VertexId head, int col) -> EdgeId {
        const PendingEdge& p = pending[label];
        const EdgeId id = static_cast<EdgeId>(edges_.size());
        edges_.push_back({p.tail, head, label, p.left, p.right, p.start_col, col});
        return id;
    };

    for (int k = 0; k < m; ++k) {
        const int p = wd.swaps()[k];
        const VertexId v = k + 1;
        const int a = wire[p - 1];  // upper wire; a < b since the pair is uncrossed
        const int b = wire[p];
        cross_pair_[v] = {a, b};
        cross_pos_[v] = p;

        const EdgeId ea = finish_edge(a, v, k + 1);
        const EdgeId eb = finish_edge(b, v, k + 1);
        in_[v] = {ea, eb};

        const FaceId closed = gap_face[p];
        if (closed >= 0) {
            faces_[closed].sink = v;
            faces_[closed].close_col = k + 1;
        }
        const FaceId opened = n - 1 + k;
        faces_[opened].source = v;
        faces_[opened].gap = p;
        faces_[opened].open_col = k + 1;
        gap_face[p] = opened;

        wire[p - 1] = b;
        wire[p] = a;
        pending[b] = {v, gap_face[p - 1], opened, k + 1};
        pending[a] = {v, opened, gap_face[p + 1], k + 1};
    }

    // Edges into t, top to bottom.
    in_[m + 1].reserve(n);
    for (int track = 1; track <= n; ++track) {
        in_[m + 1].push_back(finish_edge(wire[track - 1], m + 1, m + 1));
    }
    for (Face& f : faces_) {
        if (f.close_col == 0) {
            f.sink = m + 1;
            f.close_col = m + 1;
        }
    }

    // Outgoing adjacency. At s: wires 1..n top to bottom. At a crossing the
    // lower label leaves on top.
    out_[0].resize(n);
    std::vector<std::pair<EdgeId, EdgeId>> cross_out(m + 2, {-1, -1});  // (top, bottom)
    for (EdgeId e = 0; e < static_cast<EdgeId>(edges_.size()); ++e) {
        const Edge& ed = edges_[e];
        if (ed.tail == 0) {
            out_[0][ed.index - 1] = e;
        } else {
            auto [a, b] = cross_pair_[ed.tail];
            if (ed.index == b) {
                cross_out[ed.tail].first = e;
            } else {
                assert(ed.index == a);
                cross_out[ed.tail].second = e;
            }
        }
    }
    for (VertexId v = 1; v <= m; ++v) {
        out_[v] = {cross_out[v].first, cross_out[v].second};
    }

    // Chains: an edge lies on the bottom chain of its left face and the top
    // chain of its right face. Edge ids increase left to right along a wire,
    // so collecting in id order then sorting by start column is stable.
    for (EdgeId e = 0; e < static_cast<EdgeId>(edges_.size()); ++e) {
        const Edge& ed = edges_[e];
        if (ed.left_face >= 0) faces_[ed.left_face].bottom_chain.push_back(e);
        if (ed.right_face >= 0) faces_[ed.right_face].top_chain.push_back(e);
    }
    for (Face& f : faces_) {
        auto by_col = [&](EdgeId x, EdgeId y) {
            return edges_[x].start_col < edges_[y].start_col;
        };
        std::sort(f.bottom_chain.begin(), f.bottom_chain.end(), by_col);
        std::sort(f.top_chain.begin(), f.top_chain.end(), by_col);
    }
}

Rope ArrangementGraph::lower_hull() const {
    Rope rope;
    for (EdgeId e = 0; e < num_edges(); ++e) {
        if (edges_[e].right_face == kFaceTStar) rope.edges.push_back(e);
    }
    std::sort(rope.edges.begin(), rope.edges.end(), [&](EdgeId a, EdgeId b) {
        return edges_[a].start_col < edges_[b].start_col;
    });
    return rope;
}

Rope ArrangementGraph::upper_hull() const {
    Rope rope;
    for (EdgeId e = 0; e < num_edges(); ++e) {
        if (edges_[e].left_face == kFaceSStar) rope.edges.push_back(e);
    }
    std::sort(rope.edges.begin(), rope.edges.end(), [&](EdgeId a, EdgeId b) {
        return edges_[a].start_col < edges_[b].start_col;
    });
    return rope;
}

std::vector<VertexId> ArrangementGraph::rope_vertices(const Rope& rope) const {
    std::vector<VertexId> vs;
    vs.reserve(rope.edges.size() + 1);
    if (rope.edges.empty()) return vs;
    vs.push_back(edges_[rope.edges.front()].tail);
    for (EdgeId e : rope.edges) vs.push_back(edges_[e].head);
    return vs;
}

ArrangementGraph build_graph(const WiringDiagram& wd) { return ArrangementGraph(wd); }

DualGraph::DualGraph(const ArrangementGraph& g) {
    inner_ = g.num_faces();
    const int ne = g.num_edges();
    tail_.resize(ne);
    head_.resize(ne);
    out_.resize(inner_ + 2);
    in_.resize(inner_ + 2);
    prereq_.resize(inner_);
    for (EdgeId e = 0; e < ne; ++e) {
        const Edge& ed = g.edge(e);
        tail_[e] = vertex_of_face(ed.left_face);
        head_[e] = vertex_of_face(ed.right_face);
        out_[tail_[e]].push_back(e);
        in_[head_[e]].push_back(e);
        if (ed.left_face >= 0 && ed.right_face >= 0) {
            prereq_[ed.left_face].push_back(ed.right_face);
        }
    }
    for (auto& v : prereq_) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }
}

DualGraph build_dual(const ArrangementGraph& g) { return DualGraph(g); }

std::pair<Rope, Rope> hulls(const ArrangementGraph& g) {
    return {g.lower_hull(), g.upper_hull()};
}

std::optional<int> shortest_xmonotone_path(const ArrangementGraph& g, VertexId u, VertexId v) {
    auto path = detail::shortest_path_witness(g, u, v);
    if (!path) return std::nullopt;
    return static_cast<int>(path->size()) - 1;
}

namespace detail {

std::optional<std::vector<VertexId>> shortest_path_witness(const ArrangementGraph& g,
                                                           VertexId u, VertexId v) {
    if (u == v) return std::vector<VertexId>{u};
    std::vector<EdgeId> via(g.num_vertices(), -1);
    std::vector<char> seen(g.num_vertices(), 0);
    std::deque<VertexId> queue{u};
    seen[u] = 1;
    while (!queue.empty()) {
        const VertexId x = queue.front();
        queue.pop_front();
        for (EdgeId e : g.out_edges(x)) {
            const VertexId y = g.edge(e).head;
            if (!seen[y]) {
                seen[y] = 1;
                via[y] = e;
                if (y == v) {
                    std::vector<VertexId> path{v};
                    VertexId cur = v;
                    while (cur != u) {
                        cur = g.edge(via[cur]).tail;
                        path.push_back(cur);
                    }
                    std::reverse(path.begin(), path.end());
                    return path;
                }
                queue.push_back(y);
            }
        }
    }
    return std::nullopt;
}

}  // namespace detail

}  // namespace ropesweep
