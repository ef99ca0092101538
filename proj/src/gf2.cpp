#include "grandedge/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <utility>

namespace grandedge {

BitVec BitVec::from_bits(std::initializer_list<int> bits) {
    BitVec v(bits.size());
    std::size_t i = 0;
    for (int b : bits) v.set(i++, b != 0);
    return v;
}

BitVec BitVec::from_string(std::string_view s) {
    BitVec v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != '0' && s[i] != '1') throw std::invalid_argument("BitVec: expected '0'/'1'");
        v.set(i, s[i] == '1');
    }
    return v;
}

void BitVec::clear() {
    std::fill(words_.begin(), words_.end(), 0);
}

void BitVec::xor_with(const BitVec& other) {
    if (other.len_ != len_) throw std::invalid_argument("BitVec::xor_with: length mismatch");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
}

bool BitVec::is_zero() const {
    for (auto w : words_)
        if (w) return false;
    return true;
}

std::size_t BitVec::popcount() const {
    std::size_t n = 0;
    for (auto w : words_) n += std::popcount(w);
    return n;
}

std::size_t BitVec::hamming_distance(const BitVec& other) const {
    if (other.len_ != len_) throw std::invalid_argument("BitVec::hamming_distance: length mismatch");
    std::size_t n = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) n += std::popcount(words_[w] ^ other.words_[w]);
    return n;
}

std::string BitVec::to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

bool lex_less(const BitVec& a, const BitVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("lex_less: length mismatch");
    auto wa = a.words(), wb = b.words();
    for (std::size_t w = 0; w < wa.size(); ++w) {
        const std::uint64_t diff = wa[w] ^ wb[w];
        if (diff) {
            // lowest set bit of diff is the first position where they differ
            const int bit = std::countr_zero(diff);
            return ((wa[w] >> bit) & 1u) == 0;
        }
    }
    return false;
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BitMatrix BitMatrix::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows.begin()->size() : 0;
    BitMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw std::invalid_argument("BitMatrix: ragged rows");
        std::size_t j = 0;
        for (int b : row) m.set(i, j++, b != 0);
        ++i;
    }
    return m;
}

BitVec BitMatrix::row(std::size_t r) const {
    BitVec v(cols_);
    auto src = row_words(r);
    auto dst = v.words();
    for (std::size_t w = 0; w < wpr_; ++w) dst[w] = src[w];
    return v;
}

BitVec BitMatrix::column(std::size_t c) const {
    BitVec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.set(r, get(r, c));
    return v;
}

void BitMatrix::set_row(std::size_t r, const BitVec& v) {
    if (v.size() != cols_) throw std::invalid_argument("BitMatrix::set_row: length mismatch");
    auto src = v.words();
    auto dst = row_words(r);
    for (std::size_t w = 0; w < wpr_; ++w) dst[w] = src[w];
}

void BitMatrix::row_swap(std::size_t a, std::size_t b) {
    if (a == b) return;
    auto ra = row_words(a), rb = row_words(b);
    for (std::size_t w = 0; w < wpr_; ++w) std::swap(ra[w], rb[w]);
}

void BitMatrix::row_xor(std::size_t dst, std::size_t src) {
    auto rd = row_words(dst), rs = row_words(src);
    for (std::size_t w = 0; w < wpr_; ++w) rd[w] ^= rs[w];
}

BitVec matvec(const BitMatrix& m, const BitVec& v) {
    if (v.size() != m.cols()) throw std::invalid_argument("matvec: v.len != M.cols");
    BitVec out(m.rows());
    const auto vw = v.words();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        const auto rw = m.row_words(r);
        std::uint64_t acc = 0;
        for (std::size_t w = 0; w < rw.size(); ++w) acc ^= rw[w] & vw[w];
        out.set(r, std::popcount(acc) & 1u);
    }
    return out;
}

RrefResult rref_with_elimination(const BitMatrix& m) {
    RrefResult out;
    out.rref = m;
    out.elimination = BitMatrix::identity(m.rows());
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
        // topmost row at or below the pivot row holding a 1 in this column
        std::size_t sel = pivot_row;
        while (sel < m.rows() && !out.rref.get(sel, col)) ++sel;
        if (sel == m.rows()) continue;
        if (sel != pivot_row) {
            out.rref.row_swap(sel, pivot_row);
            out.elimination.row_swap(sel, pivot_row);
        }
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r != pivot_row && out.rref.get(r, col)) {
                out.rref.row_xor(r, pivot_row);
                out.elimination.row_xor(r, pivot_row);
            }
        }
        out.pivot_cols.push_back(col);
        ++pivot_row;
    }
    out.rank = pivot_row;
    return out;
}

BitVec apply_elimination(const BitMatrix& elimination, const BitVec& s) {
    return matvec(elimination, s);
}

BitMatrix matmul(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul: inner dimensions differ");
    BitMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        auto dst = out.row_words(r);
        for (std::size_t i = 0; i < a.cols(); ++i) {
            if (a.get(r, i)) {
                auto src = b.row_words(i);
                for (std::size_t w = 0; w < src.size(); ++w) dst[w] ^= src[w];
            }
        }
    }
    return out;
}

BitMatrix transpose(const BitMatrix& m) {
    BitMatrix out(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m.get(r, c)) out.set(c, r, true);
    return out;
}

}  // namespace grandedge
