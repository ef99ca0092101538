#pragma once

#include <cstdint>

#include "grandedge/gf2.hpp"

namespace grandedge {

// (n, k) random linear code in systematic form: G = [I_k | P] with P drawn
// from a seeded RNG, H = [P^T | I_{n-k}]. Immutable after generation.
struct LinearCode {
    std::size_t n = 0;
    std::size_t k = 0;
    std::uint64_t seed = 0;
    BitMatrix generator;     // k x n
    BitMatrix parity_check;  // (n-k) x n

    std::size_t redundancy() const { return n - k; }
};

LinearCode generate_rlc(std::size_t n, std::size_t k, std::uint64_t seed);

BitVec encode(const LinearCode& code, const BitVec& message);

// Inverse of encode on codewords. With the systematic generator this is the
// first-k-bits projection; the caller is expected to have checked membership.
BitVec recover_message(const LinearCode& code, const BitVec& codeword);

bool is_codeword(const LinearCode& code, const BitVec& word);

}  // namespace grandedge
