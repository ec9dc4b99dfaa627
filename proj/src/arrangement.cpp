#include "ropesweep/arrangement.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <queue>
#include <string>
#include <thread>

namespace ropesweep {

WiringDiagram WiringDiagram::validate(int n, std::vector<int> swaps) {
    if (n < 2) {
        fail(ErrorCode::PositionOutOfRange,
             "need at least 2 pseudolines, got n=" + std::to_string(n));
    }
    const std::size_t want = static_cast<std::size_t>(n) * (n - 1) / 2;
    if (swaps.size() != want) {
        fail(ErrorCode::WrongSwapCount,
             "expected " + std::to_string(want) + " swaps for n=" +
                 std::to_string(n) + ", got " + std::to_string(swaps.size()));
    }
    for (std::size_t k = 0; k < swaps.size(); ++k) {
        if (swaps[k] < 1 || swaps[k] >= n) {
            fail(ErrorCode::PositionOutOfRange,
                 "swap position " + std::to_string(swaps[k]) + " at step " +
                     std::to_string(k) + " not in [1, " + std::to_string(n - 1) + "]");
        }
    }
    // Simulate: a pair has crossed iff its current order is inverted, so a
    // swap is legal iff the upper wire has the smaller label.
    std::vector<int> wire(n);
    for (int i = 0; i < n; ++i) wire[i] = i + 1;
    for (std::size_t k = 0; k < swaps.size(); ++k) {
        const int p = swaps[k];
        if (wire[p - 1] > wire[p]) {
            fail(ErrorCode::RepeatedCrossing,
                 "wires " + std::to_string(wire[p]) + " and " +
                     std::to_string(wire[p - 1]) + " cross twice at step " +
                     std::to_string(k));
        }
        std::swap(wire[p - 1], wire[p]);
    }
    return WiringDiagram(n, std::move(swaps));
}

WiringDiagram canonicalize(const WiringDiagram& wd) {
    // Greedy minimal-occurrence linearization of the dependence order
    // (occurrences at track distance <= 1 are ordered as in the input);
    // picking the smallest available letter yields the lex normal form.
    const std::vector<int>& w = wd.swaps();
    const int len = static_cast<int>(w.size());
    std::vector<int> pred_count(len, 0);
    std::vector<std::vector<int>> succs(len);
    std::vector<int> last(wd.n() + 2, -1);
    for (int i = 0; i < len; ++i) {
        for (int q = w[i] - 1; q <= w[i] + 1; ++q) {
            if (q >= 1 && q < wd.n() && last[q] >= 0) {
                succs[last[q]].push_back(i);
                ++pred_count[i];
            }
        }
        last[w[i]] = i;
    }
    using Item = std::pair<int, int>;  // (letter, occurrence)
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> ready;
    for (int i = 0; i < len; ++i) {
        if (pred_count[i] == 0) ready.emplace(w[i], i);
    }
    std::vector<int> out;
    out.reserve(len);
    while (!ready.empty()) {
        auto [letter, i] = ready.top();
        ready.pop();
        out.push_back(letter);
        for (int j : succs[i]) {
            if (--pred_count[j] == 0) ready.emplace(w[j], j);
        }
    }
    return WiringDiagram::validate(wd.n(), std::move(out));
}

WiringDiagram reflect_horizontal(const WiringDiagram& wd) {
    std::vector<int> swaps(wd.swaps().rbegin(), wd.swaps().rend());
    return WiringDiagram::validate(wd.n(), std::move(swaps));
}

WiringDiagram reflect_vertical(const WiringDiagram& wd) {
    std::vector<int> swaps;
    swaps.reserve(wd.swaps().size());
    for (int p : wd.swaps()) swaps.push_back(wd.n() - p);
    return WiringDiagram::validate(wd.n(), std::move(swaps));
}

namespace detail {

bool is_canonical_word(std::span<const int> word) {
    // Canonical iff no letter can commute backwards past a larger letter.
    for (std::size_t i = 0; i < word.size(); ++i) {
        for (std::size_t j = i; j-- > 0;) {
            if (std::abs(word[j] - word[i]) <= 1) break;
            if (word[j] > word[i]) return false;
        }
    }
    return true;
}

namespace {

struct EnumState {
    int n = 0;
    std::vector<int> wire;
    std::vector<int> word;

    explicit EnumState(int n_lines) : n(n_lines), wire(n_lines) {
        for (int i = 0; i < n_lines; ++i) wire[i] = i + 1;
        word.reserve(n_lines * (n_lines - 1) / 2);
    }

    // Lex filter: every letter in the maximal trailing run commuting with p
    // must be smaller than p.
    bool lex_ok(int p) const {
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
            if (std::abs(*it - p) <= 1) return true;
            if (*it > p) return false;
        }
        return true;
    }

    bool swap_ok(int p) const { return wire[p - 1] < wire[p]; }

    void push(int p) {
        std::swap(wire[p - 1], wire[p]);
        word.push_back(p);
    }

    void pop() {
        const int p = word.back();
        word.pop_back();
        std::swap(wire[p - 1], wire[p]);
    }
};

struct Budget {
    std::uint64_t max_classes = 0;
    std::chrono::steady_clock::time_point deadline{};
    bool has_deadline = false;
    std::atomic<std::uint64_t>* counter = nullptr;
    std::atomic<bool>* stop = nullptr;

    // Returns false when the enumeration must abort.
    bool on_leaf() const {
        const std::uint64_t c = 1 + counter->fetch_add(1, std::memory_order_relaxed);
        if (max_classes && c > max_classes) {
            stop->store(true, std::memory_order_relaxed);
            return false;
        }
        if (has_deadline && (c & 0x3ff) == 0 &&
            std::chrono::steady_clock::now() > deadline) {
            stop->store(true, std::memory_order_relaxed);
            return false;
        }
        return true;
    }
};

void dfs(EnumState& st, std::size_t target_len,
         const std::function<void(std::span<const int>)>& visitor,
         const Budget& budget) {
    if (st.word.size() == target_len) {
        if (!budget.on_leaf()) return;
        visitor(std::span<const int>(st.word));
        return;
    }
    if (budget.stop->load(std::memory_order_relaxed)) return;
    for (int p = 1; p < st.n; ++p) {
        if (st.swap_ok(p) && st.lex_ok(p)) {
            st.push(p);
            dfs(st, target_len, visitor, budget);
            st.pop();
        }
    }
}

// Canonical prefixes of the given length, used as independent subtree roots.
std::vector<std::vector<int>> collect_roots(int n, std::size_t depth) {
    std::vector<std::vector<int>> roots;
    EnumState st(n);
    std::function<void()> rec = [&]() {
        if (st.word.size() == depth) {
            roots.push_back(st.word);
            return;
        }
        for (int p = 1; p < n; ++p) {
            if (st.swap_ok(p) && st.lex_ok(p)) {
                st.push(p);
                rec();
                st.pop();
            }
        }
    };
    rec();
    return roots;
}

}  // namespace

std::uint64_t enumerate_words(int n,
                              const std::function<void(std::span<const int>)>& visitor,
                              const EnumerateOptions& options) {
    if (n < 2) fail(ErrorCode::PositionOutOfRange, "n must be >= 2");
    const std::size_t target_len = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::atomic<std::uint64_t> counter{0};
    std::atomic<bool> stop{false};
    Budget budget;
    budget.max_classes = options.max_classes;
    budget.counter = &counter;
    budget.stop = &stop;
    if (options.max_seconds > 0) {
        budget.has_deadline = true;
        budget.deadline = std::chrono::steady_clock::now() +
                          std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                              std::chrono::duration<double>(options.max_seconds));
    }

    const int jobs = std::max(1, options.jobs);
    if (jobs == 1 || n <= 4) {
        EnumState st(n);
        dfs(st, target_len, visitor, budget);
    } else {
        const std::size_t depth = std::min<std::size_t>(target_len, 5);
        auto roots = collect_roots(n, depth);
        std::atomic<std::size_t> next{0};
        auto work = [&]() {
            EnumState st(n);
            for (;;) {
                const std::size_t r = next.fetch_add(1, std::memory_order_relaxed);
                if (r >= roots.size() || stop.load(std::memory_order_relaxed)) return;
                while (!st.word.empty()) st.pop();
                for (int p : roots[r]) st.push(p);
                dfs(st, target_len, visitor, budget);
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (int i = 0; i < jobs; ++i) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    if (stop.load()) {
        fail(ErrorCode::ResourceLimit,
             "enumeration budget exceeded at n=" + std::to_string(n));
    }
    return counter.load();
}

}  // namespace detail

std::uint64_t enumerate_arrangements(int n,
                                     const std::function<void(const WiringDiagram&)>& visitor,
                                     const EnumerateOptions& options) {
    return detail::enumerate_words(
        n,
        [&](std::span<const int> word) {
            visitor(WiringDiagram::validate(n, std::vector<int>(word.begin(), word.end())));
        },
        options);
}

std::uint64_t count_arrangements(int n, const EnumerateOptions& options) {
    return detail::enumerate_words(n, [](std::span<const int>) {}, options);
}

}  // namespace ropesweep
