#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace grandedge {

// Dense GF(2) vector. Bits are packed little-endian into 64-bit words
// (bit i lives in word i/64 at position i%64); bits past size() in the
// last word are kept zero so whole-word XOR/compare are valid.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t len) : len_(len), words_((len + 63) / 64, 0) {}

    static BitVec from_bits(std::initializer_list<int> bits);
    static BitVec from_string(std::string_view s);

    std::size_t size() const { return len_; }
    bool empty() const { return len_ == 0; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v) {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (v)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    void clear();
    void xor_with(const BitVec& other);
    bool is_zero() const;
    std::size_t popcount() const;
    std::size_t hamming_distance(const BitVec& other) const;

    std::span<const std::uint64_t> words() const { return words_; }
    std::span<std::uint64_t> words() { return words_; }

    std::string to_string() const;

    friend bool operator==(const BitVec&, const BitVec&) = default;

private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

// true if a precedes b when both are read as bit strings from index 0.
bool lex_less(const BitVec& a, const BitVec& b);

// Dense GF(2) matrix, row-major, each row padded to whole words so the
// elementary row operations are word-wise XOR / row exchange.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), words_(rows * wpr_, 0) {}

    static BitMatrix identity(std::size_t n);
    static BitMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words_per_row() const { return wpr_; }

    bool get(std::size_t r, std::size_t c) const {
        return (words_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v) {
        const std::uint64_t mask = std::uint64_t{1} << (c & 63);
        if (v)
            words_[r * wpr_ + (c >> 6)] |= mask;
        else
            words_[r * wpr_ + (c >> 6)] &= ~mask;
    }

    std::span<const std::uint64_t> row_words(std::size_t r) const {
        return {words_.data() + r * wpr_, wpr_};
    }
    std::span<std::uint64_t> row_words(std::size_t r) { return {words_.data() + r * wpr_, wpr_}; }

    BitVec row(std::size_t r) const;
    BitVec column(std::size_t c) const;
    void set_row(std::size_t r, const BitVec& v);

    void row_swap(std::size_t a, std::size_t b);
    void row_xor(std::size_t dst, std::size_t src);

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<std::uint64_t> words_;
};

// Output of Gaussian elimination: the reduced row-echelon form together
// with the accumulated elementary row operations as a square matrix, so
// that elimination * input == rref.
struct RrefResult {
    BitMatrix rref;
    BitMatrix elimination;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
};

// M * v^T over GF(2); result has M.rows() bits.
BitVec matvec(const BitMatrix& m, const BitVec& v);

// RREF via row swap / row add only, pivots chosen topmost-first per column.
// Rank deficiency is reported through rank/pivot_cols, never as an error.
RrefResult rref_with_elimination(const BitMatrix& m);

// E * s^T; same contract as matvec, kept as a named operation because the
// stored elimination matrix is reapplied to every erasure syndrome.
BitVec apply_elimination(const BitMatrix& elimination, const BitVec& s);

BitMatrix matmul(const BitMatrix& a, const BitMatrix& b);
BitMatrix transpose(const BitMatrix& m);

}  // namespace grandedge
