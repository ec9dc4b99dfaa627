#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "ropesweep/errors.hpp"

namespace ropesweep {

// A simple arrangement of n x-monotone pseudolines encoded as a wiring
// diagram: a left-to-right sequence of adjacent track swaps, track 1 topmost.
// Lines are labeled 1..n by their top-to-bottom order at the left end.
class WiringDiagram {
public:
    // Checks that every position is in [1, n-1], the word has length
    // n(n-1)/2 and no pair of wires crosses twice.
    static WiringDiagram validate(int n, std::vector<int> swaps);

    int n() const { return n_; }
    const std::vector<int>& swaps() const { return swaps_; }
    int crossings() const { return static_cast<int>(swaps_.size()); }

    bool operator==(const WiringDiagram& other) const {
        return n_ == other.n_ && swaps_ == other.swaps_;
    }

private:
    WiringDiagram(int n, std::vector<int> swaps)
        : n_(n), swaps_(std::move(swaps)) {}

    int n_ = 0;
    std::vector<int> swaps_;
};

// Lexicographically least word in the commutation class (swaps at track
// distance >= 2 commute). Two diagrams encode the same arrangement iff their
// canonical forms are equal.
WiringDiagram canonicalize(const WiringDiagram& wd);

// Mirror about a vertical axis: word reversed, positions unchanged.
WiringDiagram reflect_horizontal(const WiringDiagram& wd);

// Top-bottom mirror: each position p becomes n-p.
WiringDiagram reflect_vertical(const WiringDiagram& wd);

struct EnumerateOptions {
    int jobs = 1;
    // 0 = unlimited. Exceeding either budget raises ResourceLimit.
    std::uint64_t max_classes = 0;
    double max_seconds = 0;
};

// Calls the visitor once per commutation class with the canonical
// representative and returns the class count (OEIS A006245). With jobs > 1
// the visitor runs concurrently and must be thread-safe.
std::uint64_t enumerate_arrangements(int n,
                                     const std::function<void(const WiringDiagram&)>& visitor,
                                     const EnumerateOptions& options = {});

// Count-only variant.
std::uint64_t count_arrangements(int n, const EnumerateOptions& options = {});

namespace detail {

// Low-overhead enumeration core: the visitor sees the canonical word as a
// span valid only during the call. Used by the experiment harness.
std::uint64_t enumerate_words(int n,
                              const std::function<void(std::span<const int>)>& visitor,
                              const EnumerateOptions& options);

bool is_canonical_word(std::span<const int> word);

}  // namespace detail

}  // namespace ropesweep
