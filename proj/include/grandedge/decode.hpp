#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "grandedge/channel.hpp"
#include "grandedge/code.hpp"
#include "grandedge/gf2.hpp"

namespace grandedge {

enum class DecodeStatus {
    success,
    abandoned,
    erasure_overflow,  // more erasures than parity equations
    rank_deficient,    // erased columns not independent, no unique solution
};

const char* to_string(DecodeStatus status);

struct DecodeResult {
    DecodeStatus status = DecodeStatus::abandoned;
    std::optional<BitVec> codeword;
    std::optional<BitVec> message;
    std::uint64_t queries = 0;  // codebook membership / EDGE checks performed
};

// Per-frame state shared by every EDGE check: the received word and parity
// matrix split into erased / non-erased parts, plus the elimination matrix
// that brings H_e to reduced row-echelon form.
struct EdgeContext {
    BitVec r_c;              // hard decisions at the kept positions
    BitMatrix h_c;           // (n-k) x (n-e) kept columns of H
    BitMatrix elimination;   // (n-k) x (n-k), E * H_e = rref(H_e)
    std::vector<std::uint32_t> erased;  // q, strictly increasing
    std::vector<std::uint32_t> kept;    // complement of q, ascending
    std::size_t block_length = 0;
    bool overflow = false;   // e > n-k
    bool full_rank = true;   // rank(H_e) == e

    std::size_t erasure_count() const { return erased.size(); }
};

EdgeContext edge_init(const BitVec& received, const BitMatrix& parity_check,
                      std::span<const std::uint32_t> q);

// One EDGE check: s* = E * (H_c * trial^T). If any of the last n-k-e
// entries is nonzero the trial is inconsistent and nullopt is returned;
// otherwise the first e entries are the solved erased bits and the full
// restored word (which satisfies H * r^T = 0) is reassembled through q.
std::optional<BitVec> edge_check(const EdgeContext& ctx, const BitVec& r_c_trial);

DecodeResult grand_decode(const BitVec& hard, const LinearCode& code, std::size_t max_weight);

DecodeResult orbgrand_decode(const ReceivedFrame& frame, const LinearCode& code,
                             std::uint64_t lw_max);

DecodeResult grand_edge_decode(const ReceivedFrame& frame, const LinearCode& code,
                               std::size_t max_weight);

// Like grand_edge_decode but with the logistic-weight schedule built from
// the |llr| ranking of the non-erased positions only.
DecodeResult orbgrand_edge_decode(const ReceivedFrame& frame, const LinearCode& code,
                                  std::uint64_t lw_max);

// Order-l ordered statistics decoding: Gaussian elimination over the k most
// reliable independent generator columns, then re-encode every basis flip
// pattern of weight <= order and keep the best soft correlation.
DecodeResult osd_decode(const ReceivedFrame& frame, const LinearCode& code, std::size_t order);

enum class MlMetric { hamming, euclidean };

// Exhaustive maximum-likelihood scan over all 2^k codewords; test oracle
// only, refuses k > 20. Ties break to the lexicographically smallest word.
BitVec ml_oracle(const ReceivedFrame& frame, const LinearCode& code, MlMetric metric);

}  // namespace grandedge
