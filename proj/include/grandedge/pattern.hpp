#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace grandedge {

// Streams every subset of {0..length-1} of size <= max_weight: the empty
// pattern first, then weight 1, 2, ... with combinations in lexicographic
// order inside a weight class. max_weight is capped at length.
class HardPatternGen {
public:
    HardPatternGen(std::size_t length, std::size_t max_weight);

    // Steps to the next pattern; current() views it until the next call.
    bool advance();
    std::span<const std::uint32_t> current() const { return comb_; }

    // Writes the next flip set (ascending positions) and returns true, or
    // returns false once the schedule is exhausted.
    bool next(std::vector<std::uint32_t>& flips) {
        if (!advance()) return false;
        flips.assign(comb_.begin(), comb_.end());
        return true;
    }

    std::uint64_t budget() const { return budget(length_, max_weight_); }

    // Total pattern count: sum of C(length, w) for w = 0..max_weight,
    // saturating at UINT64_MAX.
    static std::uint64_t budget(std::size_t length, std::size_t max_weight);

private:
    std::size_t length_;
    std::size_t max_weight_;
    bool started_ = false;
    bool done_ = false;
    std::vector<std::uint32_t> comb_;
};

// Sum of 1-indexed reliability ranks; the empty pattern weighs 0.
std::uint64_t logistic_weight(std::span<const std::uint32_t> ranks);

// Streams rank sets in nondecreasing logistic-weight order: for each target
// LW m = 0..lw_max, every partition of m into distinct parts <= length.
// Within one target the descent picks the largest part first, descending,
// which fixes a deterministic (and documented) tie order among equal-LW
// patterns. Ranks are 1-indexed; rank 1 is the least reliable bit.
class OrbPatternGen {
public:
    OrbPatternGen(std::size_t length, std::uint64_t lw_max);

    // Steps to the next rank set; current() views it until the next call.
    bool advance();
    std::span<const std::uint32_t> current() const { return parts_; }

    bool next(std::vector<std::uint32_t>& ranks) {
        if (!advance()) return false;
        ranks.assign(parts_.begin(), parts_.end());
        return true;
    }

    std::uint64_t budget() const { return budget(length_, lw_max_); }

    // Count of distinct-part partitions with parts <= length and sum
    // <= lw_max, saturating at UINT64_MAX.
    static std::uint64_t budget(std::size_t length, std::uint64_t lw_max);

private:
    void fill_greedy(std::uint64_t remaining, std::uint32_t first);

    std::size_t length_;
    std::uint64_t lw_max_;
    std::uint64_t max_sum_;
    std::uint64_t target_ = 0;
    bool started_ = false;
    bool done_ = false;
    std::vector<std::uint32_t> parts_;
};

// Positions sorted by |llr| ascending, stable in the original index on
// ties; result[rank-1] is the bit position holding that reliability rank.
std::vector<std::uint32_t> reliability_ranking(std::span<const double> llr);

}  // namespace grandedge
