#pragma once

#include <bit>
#include <cstdint>

namespace grandedge {

constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Counter-derived substream seed for one simulated frame. Decoders are
// deliberately not part of the hash: every decoder at a given sweep point
// sees the same frames, which makes the reversion rows comparable and the
// BLER-ordering comparisons paired. Adding points never perturbs others.
inline std::uint64_t trial_seed(std::uint64_t master, double snr_db, double epsilon,
                                std::uint64_t trial) {
    std::uint64_t s = splitmix64(master);
    s = splitmix64(s ^ std::bit_cast<std::uint64_t>(snr_db));
    s = splitmix64(s ^ std::bit_cast<std::uint64_t>(epsilon));
    s = splitmix64(s ^ trial);
    return s;
}

}  // namespace grandedge
