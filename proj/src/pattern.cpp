#include "grandedge/pattern.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace grandedge {

namespace {

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    return a > std::numeric_limits<std::uint64_t>::max() - b
               ? std::numeric_limits<std::uint64_t>::max()
               : a + b;
}

}  // namespace

HardPatternGen::HardPatternGen(std::size_t length, std::size_t max_weight)
    : length_(length), max_weight_(std::min(max_weight, length)) {}

bool HardPatternGen::advance() {
    if (done_) return false;
    if (!started_) {
        started_ = true;
        comb_.clear();
        return true;
    }
    const std::size_t w = comb_.size();
    // advance the current combination in lexicographic order
    for (std::size_t i = w; i-- > 0;) {
        if (comb_[i] < length_ - (w - i)) {
            ++comb_[i];
            for (std::size_t j = i + 1; j < w; ++j) comb_[j] = comb_[j - 1] + 1;
            return true;
        }
    }
    // weight class exhausted; open the next one
    if (w + 1 > max_weight_) {
        done_ = true;
        return false;
    }
    comb_.resize(w + 1);
    std::iota(comb_.begin(), comb_.end(), 0u);
    return true;
}

std::uint64_t HardPatternGen::budget(std::size_t length, std::size_t max_weight) {
    max_weight = std::min(max_weight, length);
    std::uint64_t total = 1;  // the empty pattern
    __uint128_t binom = 1;
    for (std::size_t w = 1; w <= max_weight; ++w) {
        binom = binom * (length - w + 1) / w;
        if (binom > std::numeric_limits<std::uint64_t>::max())
            return std::numeric_limits<std::uint64_t>::max();
        total = sat_add(total, static_cast<std::uint64_t>(binom));
    }
    return total;
}

std::uint64_t logistic_weight(std::span<const std::uint32_t> ranks) {
    std::uint64_t lw = 0;
    for (auto r : ranks) lw += r;
    return lw;
}

OrbPatternGen::OrbPatternGen(std::size_t length, std::uint64_t lw_max)
    : length_(length), lw_max_(lw_max) {
    const std::uint64_t len = length_;
    max_sum_ = len * (len + 1) / 2;
    parts_.reserve(32);
}

void OrbPatternGen::fill_greedy(std::uint64_t remaining, std::uint32_t first) {
    // caller guarantees remaining - first fits under parts < first
    std::uint32_t p = first;
    parts_.push_back(p);
    remaining -= p;
    while (remaining > 0) {
        p = static_cast<std::uint32_t>(std::min<std::uint64_t>(p - 1, remaining));
        parts_.push_back(p);
        remaining -= p;
    }
}

bool OrbPatternGen::advance() {
    if (done_) return false;
    if (!started_) {
        started_ = true;
        target_ = 0;
        parts_.clear();  // LW 0: the empty pattern
        return true;
    }
    // backtrack: shrink the most recent choice and refill greedily
    std::uint64_t rem = 0;
    while (!parts_.empty()) {
        const std::uint32_t prev = parts_.back();
        parts_.pop_back();
        rem += prev;
        for (std::uint32_t cand = prev - 1; cand >= 1; --cand) {
            if (cand <= rem && rem - cand <= std::uint64_t{cand} * (cand - 1) / 2) {
                fill_greedy(rem, cand);
                return true;
            }
            if (cand == 1) break;
        }
    }
    // all partitions of the current target emitted; move on
    ++target_;
    if (target_ > lw_max_ || target_ > max_sum_) {
        done_ = true;
        return false;
    }
    parts_.clear();
    fill_greedy(target_, static_cast<std::uint32_t>(std::min<std::uint64_t>(length_, target_)));
    return true;
}

std::uint64_t OrbPatternGen::budget(std::size_t length, std::uint64_t lw_max) {
    // cap the table at the largest reachable sum; beyond it nothing changes
    const std::uint64_t len = length;
    const std::uint64_t cap = std::min(lw_max, len * (len + 1) / 2);
    std::vector<std::uint64_t> ways(static_cast<std::size_t>(cap) + 1, 0);
    ways[0] = 1;
    const std::uint64_t pmax = std::min<std::uint64_t>(len, cap);
    for (std::uint64_t p = 1; p <= pmax; ++p)
        for (std::uint64_t m = cap; m >= p; --m)
            ways[static_cast<std::size_t>(m)] =
                sat_add(ways[static_cast<std::size_t>(m)], ways[static_cast<std::size_t>(m - p)]);
    std::uint64_t total = 0;
    for (auto w : ways) total = sat_add(total, w);
    return total;
}

std::vector<std::uint32_t> reliability_ranking(std::span<const double> llr) {
    std::vector<std::uint32_t> order(llr.size());
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        return std::abs(llr[a]) < std::abs(llr[b]);
    });
    return order;
}

}  // namespace grandedge
