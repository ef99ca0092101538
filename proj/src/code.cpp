#include "grandedge/code.hpp"

#include <cassert>
#include <random>
#include <stdexcept>

namespace grandedge {

LinearCode generate_rlc(std::size_t n, std::size_t k, std::uint64_t seed) {
    if (k == 0 || k >= n) throw std::invalid_argument("generate_rlc: need 0 < k < n");
    LinearCode code;
    code.n = n;
    code.k = k;
    code.seed = seed;

    const std::size_t m = n - k;
    std::mt19937_64 rng(seed);
    BitMatrix p(k, m);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < m; ++c) p.set(r, c, rng() & 1u);

    code.generator = BitMatrix(k, n);
    for (std::size_t r = 0; r < k; ++r) {
        code.generator.set(r, r, true);
        for (std::size_t c = 0; c < m; ++c) code.generator.set(r, k + c, p.get(r, c));
    }

    code.parity_check = BitMatrix(m, n);
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < k; ++c) code.parity_check.set(r, c, p.get(c, r));
        code.parity_check.set(r, k + r, true);
    }

    // systematic form cannot be rank-deficient; keep it checked anyway
    assert(rref_with_elimination(code.generator).rank == k);
    assert(rref_with_elimination(code.parity_check).rank == m);
    return code;
}

BitVec encode(const LinearCode& code, const BitVec& message) {
    if (message.size() != code.k) throw std::invalid_argument("encode: message length != k");
    BitVec c(code.n);
    auto dst = c.words();
    for (std::size_t i = 0; i < code.k; ++i) {
        if (message.get(i)) {
            auto src = code.generator.row_words(i);
            for (std::size_t w = 0; w < src.size(); ++w) dst[w] ^= src[w];
        }
    }
    return c;
}

BitVec recover_message(const LinearCode& code, const BitVec& codeword) {
    if (codeword.size() != code.n) throw std::invalid_argument("recover_message: length != n");
    BitVec u(code.k);
    for (std::size_t i = 0; i < code.k; ++i) u.set(i, codeword.get(i));
    return u;
}

bool is_codeword(const LinearCode& code, const BitVec& word) {
    if (word.size() != code.n) throw std::invalid_argument("is_codeword: length != n");
    return matvec(code.parity_check, word).is_zero();
}

}  // namespace grandedge
