#include "grandedge/decode.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "grandedge/pattern.hpp"

namespace grandedge {

namespace {

// Precomputed syndrome-domain state for a guessing loop. Flipping position
// p of the trial word XORs cols[p] into the base syndrome, so each check is
// a handful of word operations; the pattern stream order is untouched.
struct SyndromeTable {
    std::size_t words = 0;
    std::vector<std::uint64_t> base;
    std::vector<std::uint64_t> cols;  // positions x words
    std::vector<std::uint64_t> mask;  // residual bits that must vanish

    bool test(std::span<const std::uint32_t> flips, std::vector<std::uint64_t>& acc) const {
        acc.assign(base.begin(), base.end());
        for (auto p : flips) {
            const std::uint64_t* c = cols.data() + std::size_t{p} * words;
            for (std::size_t w = 0; w < words; ++w) acc[w] ^= c[w];
        }
        for (std::size_t w = 0; w < words; ++w)
            if (acc[w] & mask[w]) return false;
        return true;
    }
};

std::vector<std::uint64_t> residual_mask(std::size_t nbits, std::size_t lo) {
    std::vector<std::uint64_t> m((nbits + 63) / 64, 0);
    for (std::size_t i = lo; i < nbits; ++i) m[i >> 6] |= std::uint64_t{1} << (i & 63);
    return m;
}

void pack_columns(const BitMatrix& m, SyndromeTable& table) {
    table.words = (m.rows() + 63) / 64;
    table.cols.assign(m.cols() * table.words, 0);
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m.get(r, c))
                table.cols[c * table.words + (r >> 6)] |= std::uint64_t{1} << (r & 63);
}

SyndromeTable make_grand_table(const LinearCode& code, const BitVec& hard) {
    SyndromeTable table;
    pack_columns(code.parity_check, table);
    const BitVec s = matvec(code.parity_check, hard);
    table.base.assign(s.words().begin(), s.words().end());
    table.mask = residual_mask(code.redundancy(), 0);
    return table;
}

SyndromeTable make_edge_table(const EdgeContext& ctx) {
    SyndromeTable table;
    const BitMatrix reduced = matmul(ctx.elimination, ctx.h_c);  // E * H_c
    pack_columns(reduced, table);
    const BitVec s = matvec(reduced, ctx.r_c);
    table.base.assign(s.words().begin(), s.words().end());
    table.mask = residual_mask(ctx.h_c.rows(), ctx.erasure_count());
    return table;
}

struct GuessOutcome {
    bool found = false;
    std::uint64_t queries = 0;
    std::vector<std::uint32_t> flips;
};

// pattern stream already in position space
struct HardSource {
    HardPatternGen gen;
    bool advance() { return gen.advance(); }
    std::span<const std::uint32_t> positions() const { return gen.current(); }
};

// rank stream routed through the reliability permutation
struct OrbSource {
    OrbPatternGen gen;
    const std::vector<std::uint32_t>& ranking;
    std::vector<std::uint32_t> mapped;

    bool advance() {
        if (!gen.advance()) return false;
        const auto ranks = gen.current();
        mapped.resize(ranks.size());
        for (std::size_t i = 0; i < ranks.size(); ++i) mapped[i] = ranking[ranks[i] - 1];
        return true;
    }
    std::span<const std::uint32_t> positions() const { return mapped; }
};

template <typename Source>
GuessOutcome run_guess_loop(const SyndromeTable& table, Source& src) {
    GuessOutcome out;
    if (table.words == 1) {  // n-k <= 64: single-word syndromes
        const std::uint64_t base = table.base[0];
        const std::uint64_t mask = table.mask[0];
        const std::uint64_t* cols = table.cols.data();
        while (src.advance()) {
            ++out.queries;
            std::uint64_t acc = base;
            for (auto p : src.positions()) acc ^= cols[p];
            if (!(acc & mask)) {
                out.found = true;
                const auto pos = src.positions();
                out.flips.assign(pos.begin(), pos.end());
                return out;
            }
        }
        return out;
    }
    std::vector<std::uint64_t> acc(table.words);
    while (src.advance()) {
        ++out.queries;
        if (table.test(src.positions(), acc)) {
            out.found = true;
            const auto pos = src.positions();
            out.flips.assign(pos.begin(), pos.end());
            return out;
        }
    }
    return out;
}

DecodeResult result_for_status(DecodeStatus status) {
    DecodeResult out;
    out.status = status;
    out.queries = 0;
    return out;
}

DecodeResult finish_edge(const EdgeContext& ctx, const LinearCode& code, GuessOutcome&& res) {
    DecodeResult out;
    out.queries = res.queries;
    if (!res.found) {
        out.status = DecodeStatus::abandoned;
        return out;
    }
    BitVec trial = ctx.r_c;
    for (auto p : res.flips) trial.flip(p);
    auto restored = edge_check(ctx, trial);
    assert(restored.has_value());  // the word-level test already passed
    out.status = DecodeStatus::success;
    out.message = recover_message(code, *restored);
    out.codeword = std::move(*restored);
    return out;
}

}  // namespace

const char* to_string(DecodeStatus status) {
    switch (status) {
        case DecodeStatus::success: return "success";
        case DecodeStatus::abandoned: return "abandoned";
        case DecodeStatus::erasure_overflow: return "erasure_overflow";
        case DecodeStatus::rank_deficient: return "rank_deficient";
    }
    return "unknown";
}

EdgeContext edge_init(const BitVec& received, const BitMatrix& parity_check,
                      std::span<const std::uint32_t> q) {
    const std::size_t n = parity_check.cols();
    const std::size_t redundancy = parity_check.rows();
    if (received.size() != n) throw std::invalid_argument("edge_init: received length != n");
    for (std::size_t i = 0; i < q.size(); ++i)
        if (q[i] >= n || (i > 0 && q[i] <= q[i - 1]))
            throw std::invalid_argument("edge_init: q must be strictly increasing and < n");

    EdgeContext ctx;
    ctx.block_length = n;
    ctx.erased.assign(q.begin(), q.end());
    const std::size_t e = ctx.erased.size();

    ctx.kept.reserve(n - e);
    std::size_t qi = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (qi < e && ctx.erased[qi] == i)
            ++qi;
        else
            ctx.kept.push_back(static_cast<std::uint32_t>(i));
    }

    if (e > redundancy) {
        // more unknowns than equations: no unique solution, terminate
        ctx.overflow = true;
        ctx.full_rank = false;
        return ctx;
    }

    ctx.r_c = BitVec(n - e);
    for (std::size_t j = 0; j < ctx.kept.size(); ++j) ctx.r_c.set(j, received.get(ctx.kept[j]));
    ctx.h_c = BitMatrix(redundancy, n - e);
    for (std::size_t r = 0; r < redundancy; ++r)
        for (std::size_t j = 0; j < ctx.kept.size(); ++j)
            if (parity_check.get(r, ctx.kept[j])) ctx.h_c.set(r, j, true);

    if (e == 0) {
        // no erasures: E acts as the identity and the check reduces to Eq. (1)
        ctx.elimination = BitMatrix::identity(redundancy);
        ctx.full_rank = true;
        return ctx;
    }

    BitMatrix h_e(redundancy, e);
    for (std::size_t r = 0; r < redundancy; ++r)
        for (std::size_t j = 0; j < e; ++j)
            if (parity_check.get(r, ctx.erased[j])) h_e.set(r, j, true);

    auto rr = rref_with_elimination(h_e);
    ctx.elimination = std::move(rr.elimination);
    ctx.full_rank = (rr.rank == e);
    return ctx;
}

std::optional<BitVec> edge_check(const EdgeContext& ctx, const BitVec& r_c_trial) {
    if (ctx.overflow) throw std::logic_error("edge_check: context flagged erasure overflow");
    if (r_c_trial.size() != ctx.h_c.cols())
        throw std::invalid_argument("edge_check: trial length != n-e");
    const std::size_t e = ctx.erasure_count();
    const std::size_t redundancy = ctx.h_c.rows();

    const BitVec s = matvec(ctx.h_c, r_c_trial);
    const BitVec s_star = apply_elimination(ctx.elimination, s);
    for (std::size_t i = e; i < redundancy; ++i)
        if (s_star.get(i)) return std::nullopt;

    BitVec restored(ctx.block_length);
    for (std::size_t j = 0; j < ctx.kept.size(); ++j)
        if (r_c_trial.get(j)) restored.set(ctx.kept[j], true);
    for (std::size_t i = 0; i < e; ++i)
        if (s_star.get(i)) restored.set(ctx.erased[i], true);
    return restored;
}

DecodeResult grand_decode(const BitVec& hard, const LinearCode& code, std::size_t max_weight) {
    if (hard.size() != code.n) throw std::invalid_argument("grand_decode: length != n");
    const SyndromeTable table = make_grand_table(code, hard);
    HardSource src{HardPatternGen(code.n, max_weight)};
    auto res = run_guess_loop(table, src);

    DecodeResult out;
    out.queries = res.queries;
    if (!res.found) {
        out.status = DecodeStatus::abandoned;
        return out;
    }
    BitVec cw = hard;
    for (auto p : res.flips) cw.flip(p);
    out.status = DecodeStatus::success;
    out.message = recover_message(code, cw);
    out.codeword = std::move(cw);
    return out;
}

DecodeResult orbgrand_decode(const ReceivedFrame& frame, const LinearCode& code,
                             std::uint64_t lw_max) {
    if (frame.hard.size() != code.n || frame.llr.size() != code.n)
        throw std::invalid_argument("orbgrand_decode: frame does not match code");
    const auto ranking = reliability_ranking(frame.llr);
    const SyndromeTable table = make_grand_table(code, frame.hard);
    OrbSource src{OrbPatternGen(code.n, lw_max), ranking, {}};
    auto res = run_guess_loop(table, src);

    DecodeResult out;
    out.queries = res.queries;
    if (!res.found) {
        out.status = DecodeStatus::abandoned;
        return out;
    }
    BitVec cw = frame.hard;
    for (auto p : res.flips) cw.flip(p);
    out.status = DecodeStatus::success;
    out.message = recover_message(code, cw);
    out.codeword = std::move(cw);
    return out;
}

DecodeResult grand_edge_decode(const ReceivedFrame& frame, const LinearCode& code,
                               std::size_t max_weight) {
    auto ctx = edge_init(frame.hard, code.parity_check, frame.erased);
    if (ctx.overflow) return result_for_status(DecodeStatus::erasure_overflow);
    if (!ctx.full_rank) return result_for_status(DecodeStatus::rank_deficient);

    const SyndromeTable table = make_edge_table(ctx);
    HardSource src{HardPatternGen(ctx.kept.size(), max_weight)};
    auto res = run_guess_loop(table, src);
    return finish_edge(ctx, code, std::move(res));
}

DecodeResult orbgrand_edge_decode(const ReceivedFrame& frame, const LinearCode& code,
                                  std::uint64_t lw_max) {
    if (frame.llr.size() != code.n)
        throw std::invalid_argument("orbgrand_edge_decode: frame does not match code");
    auto ctx = edge_init(frame.hard, code.parity_check, frame.erased);
    if (ctx.overflow) return result_for_status(DecodeStatus::erasure_overflow);
    if (!ctx.full_rank) return result_for_status(DecodeStatus::rank_deficient);

    std::vector<double> kept_llr(ctx.kept.size());
    for (std::size_t j = 0; j < ctx.kept.size(); ++j) kept_llr[j] = frame.llr[ctx.kept[j]];
    const auto ranking = reliability_ranking(kept_llr);

    const SyndromeTable table = make_edge_table(ctx);
    OrbSource src{OrbPatternGen(ctx.kept.size(), lw_max), ranking, {}};
    auto res = run_guess_loop(table, src);
    return finish_edge(ctx, code, std::move(res));
}

DecodeResult osd_decode(const ReceivedFrame& frame, const LinearCode& code, std::size_t order) {
    const std::size_t n = code.n;
    const std::size_t k = code.k;
    if (frame.hard.size() != n || frame.llr.size() != n || frame.y.size() != n)
        throw std::invalid_argument("osd_decode: frame does not match code");

    // most reliable positions first, stable in the original index
    std::vector<std::uint32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    std::stable_sort(perm.begin(), perm.end(), [&](std::uint32_t a, std::uint32_t b) {
        return std::abs(frame.llr[a]) > std::abs(frame.llr[b]);
    });

    BitMatrix g_perm(k, n);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t t = 0; t < n; ++t)
            if (code.generator.get(r, perm[t])) g_perm.set(r, t, true);

    auto rr = rref_with_elimination(g_perm);
    if (rr.rank != k) throw std::logic_error("osd_decode: generator rank deficient");

    // pivot columns are the k most reliable linearly independent positions;
    // dependent columns in between get skipped exactly as usual for OSD
    BitVec base(n);
    auto base_words = base.words();
    for (std::size_t j = 0; j < k; ++j) {
        if (frame.hard.get(perm[rr.pivot_cols[j]])) {
            auto row = rr.rref.row_words(j);
            for (std::size_t w = 0; w < row.size(); ++w) base_words[w] ^= row[w];
        }
    }

    std::vector<double> y_perm(n);
    for (std::size_t t = 0; t < n; ++t) y_perm[t] = frame.y[perm[t]];
    auto correlation = [&](const BitVec& c) {
        double s = 0.0;
        for (std::size_t t = 0; t < n; ++t) s += c.get(t) ? -y_perm[t] : y_perm[t];
        return s;
    };

    HardPatternGen gen(k, order);
    std::vector<std::uint32_t> flips;
    BitVec cand(n);
    BitVec best;
    double best_corr = -std::numeric_limits<double>::infinity();
    std::uint64_t queries = 0;
    while (gen.next(flips)) {
        ++queries;
        cand = base;
        auto cand_words = cand.words();
        for (auto j : flips) {
            auto row = rr.rref.row_words(j);
            for (std::size_t w = 0; w < row.size(); ++w) cand_words[w] ^= row[w];
        }
        const double s = correlation(cand);
        if (s > best_corr) {
            best_corr = s;
            best = cand;
        }
    }

    BitVec cw(n);
    for (std::size_t t = 0; t < n; ++t)
        if (best.get(t)) cw.set(perm[t], true);

    DecodeResult out;
    out.status = DecodeStatus::success;
    out.queries = queries;
    out.message = recover_message(code, cw);
    out.codeword = std::move(cw);
    return out;
}

BitVec ml_oracle(const ReceivedFrame& frame, const LinearCode& code, MlMetric metric) {
    if (code.k > 20) throw std::invalid_argument("ml_oracle: refusing k > 20");
    if (frame.hard.size() != code.n) throw std::invalid_argument("ml_oracle: frame does not match code");
    if (metric == MlMetric::euclidean && frame.y.size() != code.n)
        throw std::invalid_argument("ml_oracle: euclidean metric needs channel samples");

    auto score = [&](const BitVec& c) -> double {
        if (metric == MlMetric::hamming) return static_cast<double>(c.hamming_distance(frame.hard));
        double s = 0.0;
        for (std::size_t i = 0; i < code.n; ++i) {
            const double d = frame.y[i] - (c.get(i) ? -1.0 : 1.0);
            s += d * d;
        }
        return s;
    };

    // Gray-code walk: step i toggles message bit ctz(i), one row XOR each
    BitVec current(code.n);
    BitVec best = current;
    double best_score = score(current);
    const std::uint64_t total = std::uint64_t{1} << code.k;
    for (std::uint64_t i = 1; i < total; ++i) {
        const unsigned bit = static_cast<unsigned>(std::countr_zero(i));
        auto dst = current.words();
        auto src = code.generator.row_words(bit);
        for (std::size_t w = 0; w < src.size(); ++w) dst[w] ^= src[w];
        const double s = score(current);
        if (s < best_score || (s == best_score && lex_less(current, best))) {
            best_score = s;
            best = current;
        }
    }
    return best;
}

}  // namespace grandedge
