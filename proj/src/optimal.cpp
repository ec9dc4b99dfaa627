#include "ropesweep/optimal.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <chrono>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace ropesweep {

bool is_down_set(const DualGraph& d, IdealState ideal) {
    for (FaceId f = 0; f < d.num_inner_faces(); ++f) {
        if (!ideal.contains(f)) continue;
        for (FaceId g : d.sweep_prerequisites(f)) {
            if (!ideal.contains(g)) return false;
        }
    }
    return true;
}

Rope rope_of_ideal(const ArrangementGraph& g, const DualGraph& d, IdealState ideal) {
    if (g.num_faces() > 63) {
        fail(ErrorCode::ResourceLimit,
             "ideal bitsets support at most 63 inner faces, got " +
                 std::to_string(g.num_faces()));
    }
    if (!is_down_set(d, ideal)) {
        fail(ErrorCode::NotADownSet, "face set is not closed under sweep prerequisites");
    }
    auto below = [&](FaceId f) { return f == kFaceTStar || (f >= 0 && ideal.contains(f)); };
    Rope rope;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const Edge& ed = g.edge(e);
        if (below(ed.right_face) && !below(ed.left_face)) rope.edges.push_back(e);
    }
    std::sort(rope.edges.begin(), rope.edges.end(), [&](EdgeId a, EdgeId b) {
        return g.edge(a).start_col < g.edge(b).start_col;
    });
    // The edge filter yields a directed cut; check it forms a path.
    for (std::size_t i = 0; i + 1 < rope.edges.size(); ++i) {
        if (g.edge(rope.edges[i]).head != g.edge(rope.edges[i + 1]).tail) {
            fail(ErrorCode::InvariantViolation, "ideal boundary is not a path");
        }
    }
    return rope;
}

namespace detail {

FaceSystem face_system(const ArrangementGraph& g, const DualGraph& d) {
    if (g.num_faces() > 63) {
        fail(ErrorCode::ResourceLimit,
             "exact solver supports at most 63 inner faces, got " +
                 std::to_string(g.num_faces()));
    }
    FaceSystem fs;
    fs.n = g.n();
    fs.num_faces = g.num_faces();
    fs.lower_hull_len = g.lower_hull().length();
    fs.upper_bound = 2 * g.n() - 2;
    fs.prereq.assign(fs.num_faces, 0);
    fs.delta.assign(fs.num_faces, 0);
    for (FaceId f = 0; f < fs.num_faces; ++f) {
        const Face& face = g.face(f);
        fs.delta[f] = static_cast<int>(face.top_chain.size()) -
                      static_cast<int>(face.bottom_chain.size());
        for (FaceId p : d.sweep_prerequisites(f)) fs.prereq[f] |= std::uint64_t{1} << p;
    }
    return fs;
}

void face_system_from_word(int n, std::span<const int> word, FaceSystem& fs) {
    const int m = static_cast<int>(word.size());
    const int num_faces = n - 1 + m;
    if (num_faces > 63) {
        fail(ErrorCode::ResourceLimit, "exact solver supports at most 63 inner faces");
    }
    fs.n = n;
    fs.num_faces = num_faces;
    fs.lower_hull_len = 0;
    fs.upper_bound = 2 * n - 2;
    fs.prereq.assign(num_faces, 0);
    fs.delta.assign(num_faces, 0);

    constexpr int kSStar = -1, kTStar = -2;
    // gap faces; wires themselves are irrelevant here, only face geometry.
    static thread_local std::vector<int> gap;
    gap.assign(n + 1, 0);
    gap[0] = kSStar;
    gap[n] = kTStar;
    for (int t = 1; t < n; ++t) gap[t] = t - 1;

    auto add_edge = [&](int left, int right) {
        if (left >= 0) {
            --fs.delta[left];
            if (right >= 0) fs.prereq[left] |= std::uint64_t{1} << right;
        }
        if (right >= 0) ++fs.delta[right];
        if (right == kTStar) ++fs.lower_hull_len;
    };

    for (int t = 1; t <= n; ++t) add_edge(gap[t - 1], gap[t]);
    for (int k = 0; k < m; ++k) {
        const int p = word[k];
        const int opened = n - 1 + k;
        gap[p] = opened;
        add_edge(gap[p - 1], opened);
        add_edge(opened, gap[p + 1]);
    }
}

namespace {

inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Open-addressing map from ideal bitset to (tentative value, boundary).
class IdealTable {
public:
    explicit IdealTable(std::size_t initial = 1 << 10) { rehash(initial); }

    struct Entry {
        std::int8_t dist;
        std::int8_t bnd;
    };

    static constexpr std::uint64_t kEmpty = ~std::uint64_t{0};

    std::size_t size() const { return size_; }

    // Returns slot; creates with dist = -1 when absent.
    std::size_t slot(std::uint64_t key) {
        if (size_ * 10 >= keys_.size() * 7) rehash(keys_.size() * 2);
        std::size_t i = mix64(key) & mask_;
        while (keys_[i] != kEmpty && keys_[i] != key) i = (i + 1) & mask_;
        if (keys_[i] == kEmpty) {
            keys_[i] = key;
            entries_[i] = {-1, 0};
            ++size_;
        }
        return i;
    }

    // Lookup without insertion; returns npos when absent.
    std::size_t find(std::uint64_t key) const {
        std::size_t i = mix64(key) & mask_;
        while (keys_[i] != kEmpty) {
            if (keys_[i] == key) return i;
            i = (i + 1) & mask_;
        }
        return npos;
    }

    static constexpr std::size_t npos = ~std::size_t{0};

    Entry& entry(std::size_t slot) { return entries_[slot]; }
    const Entry& entry(std::size_t slot) const { return entries_[slot]; }
    std::uint64_t key(std::size_t slot) const { return keys_[slot]; }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t i = 0; i < keys_.size(); ++i) {
            if (keys_[i] != kEmpty) fn(keys_[i], entries_[i]);
        }
    }

private:
    void rehash(std::size_t cap) {
        std::vector<std::uint64_t> old_keys = std::move(keys_);
        std::vector<Entry> old_entries = std::move(entries_);
        keys_.assign(cap, kEmpty);
        entries_.assign(cap, {-1, 0});
        mask_ = cap - 1;
        for (std::size_t i = 0; i < old_keys.size(); ++i) {
            if (old_keys[i] == kEmpty) continue;
            std::size_t j = mix64(old_keys[i]) & mask_;
            while (keys_[j] != kEmpty) j = (j + 1) & mask_;
            keys_[j] = old_keys[i];
            entries_[j] = old_entries[i];
        }
    }

    std::vector<std::uint64_t> keys_;
    std::vector<Entry> entries_;
    std::size_t mask_ = 0;
    std::size_t size_ = 0;
};

struct DpRun {
    IdealTable table;
    std::vector<std::vector<std::uint64_t>> buckets;
    int optimum = -1;
};

// Bottleneck Dijkstra from the empty ideal. When drain_to_value is true the
// run finalizes every state with value <= optimum (needed for witnesses).
DpRun run_ideal_dp(const FaceSystem& fs, const OptimalOptions& options, bool drain) {
    DpRun run;
    const int nf = fs.num_faces;
    const std::uint64_t full = IdealState::all(nf).faces;
    const int ub = fs.upper_bound;
    run.buckets.assign(ub + 1, {});

    const auto t_start = std::chrono::steady_clock::now();
    auto check_budget = [&](std::size_t states) {
        if (options.max_ideals && states > options.max_ideals) {
            fail(ErrorCode::ResourceLimit,
                 "ideal budget exceeded (" + std::to_string(states) + " states)");
        }
        if (options.max_seconds > 0) {
            const double el = std::chrono::duration<double>(
                                  std::chrono::steady_clock::now() - t_start)
                                  .count();
            if (el > options.max_seconds) {
                fail(ErrorCode::ResourceLimit, "time budget exceeded in exact solver");
            }
        }
    };

    {
        const std::size_t s0 = run.table.slot(0);
        run.table.entry(s0) = {static_cast<std::int8_t>(fs.lower_hull_len),
                               static_cast<std::int8_t>(fs.lower_hull_len)};
        run.buckets[fs.lower_hull_len].push_back(0);
    }

    std::uint64_t pops = 0;
    for (int value = fs.lower_hull_len; value <= ub; ++value) {
        auto& bucket = run.buckets[value];
        for (std::size_t bi = 0; bi < bucket.size(); ++bi) {
            const std::uint64_t ideal = bucket[bi];
            const std::size_t slot = run.table.find(ideal);
            if (slot == IdealTable::npos || run.table.entry(slot).dist != value) continue;
            if (ideal == full && run.optimum < 0) {
                run.optimum = value;
                if (!drain) return run;
            }
            if (run.optimum >= 0 && value > run.optimum) return run;
            if (((++pops) & 0xfff) == 0) check_budget(run.table.size());

            const int boundary = run.table.entry(slot).bnd;
            std::uint64_t rest = full & ~ideal;
            while (rest) {
                const int f = std::countr_zero(rest);
                rest &= rest - 1;
                if (fs.prereq[f] & ~ideal) continue;
                const std::uint64_t next = ideal | (std::uint64_t{1} << f);
                const int nb = boundary + fs.delta[f];
                const int nv = std::max(value, nb);
                if (nv > ub) continue;
                const std::size_t ns = run.table.slot(next);
                auto& en = run.table.entry(ns);
                if (en.dist < 0 || en.dist > nv) {
                    en.dist = static_cast<std::int8_t>(nv);
                    en.bnd = static_cast<std::int8_t>(nb);
                    run.buckets[nv].push_back(next);
                }
            }
        }
        if (run.optimum >= 0 && value >= run.optimum) return run;
    }
    if (run.optimum < 0) {
        fail(ErrorCode::InvariantViolation, "ideal DP never reached the full sweep");
    }
    return run;
}

}  // namespace

CoreResult solve_ideal_dp(const FaceSystem& fs, const OptimalOptions& options) {
    DpRun run = run_ideal_dp(fs, options, /*drain=*/false);
    return {run.optimum, run.table.size()};
}

}  // namespace detail

OptimalResult optimal_rope_length(const ArrangementGraph& g, const DualGraph& d,
                                  const OptimalOptions& options) {
    detail::FaceSystem fs = detail::face_system(g, d);
    OptimalResult res;
    if (!options.want_witness) {
        auto core = detail::solve_ideal_dp(fs, options);
        res.rope_length = core.value;
        res.ideals_explored = core.states;
        return res;
    }

    auto run = detail::run_ideal_dp(fs, options, /*drain=*/true);
    const int w = run.optimum;
    res.rope_length = w;
    res.ideals_explored = run.table.size();

    // States usable by some all-boundaries-<=w sweep; scanning by decreasing
    // popcount marks those that can still finish.
    std::vector<std::uint64_t> feasible;
    run.table.for_each([&](std::uint64_t key, const detail::IdealTable::Entry& en) {
        if (en.dist >= 0 && en.dist <= w) feasible.push_back(key);
    });
    std::sort(feasible.begin(), feasible.end(), [](std::uint64_t a, std::uint64_t b) {
        const int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa > pb : a < b;
    });
    const std::uint64_t full = IdealState::all(fs.num_faces).faces;
    std::unordered_set<std::uint64_t> cofeasible;
    cofeasible.reserve(feasible.size());
    auto usable = [&](std::uint64_t key) {
        const std::size_t slot = run.table.find(key);
        return slot != detail::IdealTable::npos && run.table.entry(slot).dist >= 0 &&
               run.table.entry(slot).dist <= w && cofeasible.count(key) > 0;
    };
    for (std::uint64_t key : feasible) {
        if (key == full) {
            cofeasible.insert(key);
            continue;
        }
        std::uint64_t rest = full & ~key;
        bool ok = false;
        while (rest && !ok) {
            const int f = std::countr_zero(rest);
            rest &= rest - 1;
            if (fs.prereq[f] & ~key) continue;
            ok = usable(key | (std::uint64_t{1} << f));
        }
        if (ok) cofeasible.insert(key);
    }

    // Lexicographically smallest face order among optimal sweeps.
    std::uint64_t cur = 0;
    res.witness.reserve(fs.num_faces);
    for (int step = 0; step < fs.num_faces; ++step) {
        bool advanced = false;
        for (FaceId f = 0; f < fs.num_faces && !advanced; ++f) {
            const std::uint64_t bit = std::uint64_t{1} << f;
            if ((cur & bit) || (fs.prereq[f] & ~cur)) continue;
            if (usable(cur | bit)) {
                res.witness.push_back(f);
                cur |= bit;
                advanced = true;
            }
        }
        if (!advanced) {
            fail(ErrorCode::InvariantViolation, "witness reconstruction stalled");
        }
    }
    return res;
}

int rope_flip_search(const ArrangementGraph& g, const OptimalOptions& options) {
    struct VecHash {
        std::size_t operator()(const std::vector<EdgeId>& v) const {
            std::uint64_t h = 0xcbf29ce484222325ull;
            for (EdgeId e : v) {
                h ^= static_cast<std::uint64_t>(e) + 0x9e3779b9;
                h *= 0x100000001b3ull;
            }
            return static_cast<std::size_t>(h);
        }
    };

    const Rope start = g.lower_hull();
    const Rope goal = g.upper_hull();
    const int ub = 2 * g.n() - 2;

    std::unordered_map<std::vector<EdgeId>, int, VecHash> dist;
    std::vector<std::vector<std::vector<EdgeId>>> buckets(ub + 1);
    dist[start.edges] = start.length();
    buckets[start.length()].push_back(start.edges);

    const auto t_start = std::chrono::steady_clock::now();
    std::uint64_t pops = 0;

    for (int value = start.length(); value <= ub; ++value) {
        auto& bucket = buckets[value];
        for (std::size_t bi = 0; bi < bucket.size(); ++bi) {
            std::vector<EdgeId> rope = bucket[bi];
            auto it = dist.find(rope);
            if (it == dist.end() || it->second != value) continue;
            if (rope == goal.edges) return value;
            if (((++pops) & 0xfff) == 0) {
                if (options.max_ideals && dist.size() > options.max_ideals) {
                    fail(ErrorCode::ResourceLimit, "rope-flip search budget exceeded");
                }
                if (options.max_seconds > 0 &&
                    std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start)
                            .count() > options.max_seconds) {
                    fail(ErrorCode::ResourceLimit, "rope-flip search time budget exceeded");
                }
            }

            // Candidate flips: faces whose entire bottom chain lies on the rope.
            for (std::size_t i = 0; i < rope.size(); ++i) {
                const FaceId f = g.edge(rope[i]).left_face;
                if (f < 0) continue;
                const auto& bc = g.face(f).bottom_chain;
                // Test at the position where the first chain edge would sit.
                if (rope[i] != bc.front()) continue;
                if (i + bc.size() > rope.size()) continue;
                if (!std::equal(bc.begin(), bc.end(), rope.begin() + i)) continue;
                std::vector<EdgeId> next;
                const auto& tc = g.face(f).top_chain;
                next.reserve(rope.size() - bc.size() + tc.size());
                next.insert(next.end(), rope.begin(), rope.begin() + i);
                next.insert(next.end(), tc.begin(), tc.end());
                next.insert(next.end(), rope.begin() + i + bc.size(), rope.end());
                const int nv = std::max(value, static_cast<int>(next.size()));
                if (nv > ub) continue;
                auto [jt, inserted] = dist.try_emplace(next, nv);
                if (inserted || jt->second > nv) {
                    jt->second = nv;
                    buckets[nv].push_back(std::move(next));
                }
            }
        }
    }
    fail(ErrorCode::InvariantViolation, "rope-flip search never reached the upper hull");
}

}  // namespace ropesweep
