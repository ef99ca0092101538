// Acceptance suite: exercises the toolkit end to end and prints one
// PASS/FAIL line per criterion. Exit code is the number of failures.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "grandedge/channel.hpp"
#include "grandedge/decode.hpp"
#include "grandedge/pattern.hpp"
#include "grandedge/rng.hpp"
#include "grandedge/sim.hpp"

using namespace grandedge;

namespace {

int g_failures = 0;

void report(int index, const char* name, bool pass, const std::string& detail) {
    std::printf("[%s] %d. %s — %s\n", pass ? "PASS" : "FAIL", index, name, detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

BitVec random_message(const LinearCode& code, std::mt19937_64& rng) {
    BitVec u(code.k);
    for (std::size_t i = 0; i < code.k; ++i) u.set(i, rng() & 1u);
    return u;
}

// the same per-trial pipeline the sweep driver uses
ReceivedFrame pipeline_frame(const LinearCode& code, const ChannelParams& params,
                             std::mt19937_64& rng, BitVec* message_out = nullptr) {
    const BitVec u = random_message(code, rng);
    if (message_out) *message_out = u;
    ReceivedFrame frame = receive(transmit(modulate_bpsk(encode(code, u)), params, rng), params);
    if (params.epsilon == 0.0) frame.erased.clear();  // jamming path off
    return frame;
}

// ---------------------------------------------------------------- 1 ----

void criterion_1() {
    std::uint64_t failures = 0, checked = 0;

    {  // exhaustive at (8,4): every codeword x every erasure set |q| <= 4
        const LinearCode code = generate_rlc(8, 4, 1);
        for (std::uint64_t msg = 0; msg < 16; ++msg) {
            BitVec u(4);
            for (int i = 0; i < 4; ++i) u.set(i, (msg >> i) & 1u);
            const BitVec c = encode(code, u);
            for (std::uint64_t mask = 0; mask < 256; ++mask) {
                std::vector<std::uint32_t> q;
                for (std::uint32_t i = 0; i < 8; ++i)
                    if ((mask >> i) & 1u) q.push_back(i);
                if (q.size() > 4) continue;
                const auto ctx = edge_init(c, code.parity_check, q);
                if (ctx.overflow || !ctx.full_rank) continue;
                ++checked;
                const auto restored = edge_check(ctx, ctx.r_c);
                if (!restored || *restored != c) ++failures;
            }
        }
    }

    std::uint64_t rand_checked = 0;
    {  // randomized at (128,105), e uniform in [0,23]
        const LinearCode code = generate_rlc(128, 105, 1);
        std::mt19937_64 rng(2024);
        std::vector<std::uint32_t> all(128);
        std::iota(all.begin(), all.end(), 0u);
        for (int t = 0; t < 10000; ++t) {
            const BitVec c = encode(code, random_message(code, rng));
            const std::size_t e = rng() % 24;
            std::shuffle(all.begin(), all.end(), rng);
            std::vector<std::uint32_t> q(all.begin(), all.begin() + e);
            std::sort(q.begin(), q.end());
            const auto ctx = edge_init(c, code.parity_check, q);
            if (ctx.overflow || !ctx.full_rank) continue;
            ++rand_checked;
            const auto restored = edge_check(ctx, ctx.r_c);
            if (!restored || *restored != c) ++failures;
        }
    }

    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "%llu exhaustive + %llu randomized full-rank restorations, %llu failures",
                  (unsigned long long)checked, (unsigned long long)rand_checked,
                  (unsigned long long)failures);
    report(1, "erasure restoration exactness", failures == 0 && checked > 0 && rand_checked > 9000,
           buf);
}

// ---------------------------------------------------------------- 2 ----

void criterion_2() {
    const LinearCode code = generate_rlc(128, 105, 1);
    ChannelParams params;
    params.snr_db = 7.0;
    params.epsilon = 0.0;
    std::uint64_t mismatches = 0;
    for (int t = 0; t < 1000; ++t) {
        std::mt19937_64 rng(trial_seed(404, params.snr_db, params.epsilon, t));
        const auto frame = pipeline_frame(code, params, rng);

        const auto g = grand_decode(frame.hard, code, 3);
        const auto ge = grand_edge_decode(frame, code, 3);
        if (g.status != ge.status || g.queries != ge.queries || g.message != ge.message)
            ++mismatches;

        const auto o = orbgrand_decode(frame, code, 104);
        const auto oe = orbgrand_edge_decode(frame, code, 104);
        if (o.status != oe.status || o.queries != oe.queries || o.message != oe.message)
            ++mismatches;
    }
    char buf[120];
    std::snprintf(buf, sizeof(buf), "1000 frames at 7 dB, epsilon 0: %llu per-frame mismatches",
                  (unsigned long long)mismatches);
    report(2, "reversion equivalence", mismatches == 0, buf);
}

// ---------------------------------------------------------------- 3 ----

void criterion_3() {
    const LinearCode code = generate_rlc(16, 10, 1);
    ChannelParams params;
    params.snr_db = 5.0;
    params.epsilon = 0.0;
    std::uint64_t successes = 0, mismatches = 0;
    std::mt19937_64 rng(31);
    for (int t = 0; t < 1000; ++t) {
        const auto frame = pipeline_frame(code, params, rng);
        const auto res = grand_decode(frame.hard, code, 3);
        if (res.status != DecodeStatus::success) continue;
        ++successes;
        const BitVec ml = ml_oracle(frame, code, MlMetric::hamming);
        if (res.codeword->hamming_distance(frame.hard) != ml.hamming_distance(frame.hard))
            ++mismatches;
    }
    char buf[120];
    std::snprintf(buf, sizeof(buf), "%llu successes, %llu distance mismatches against the oracle",
                  (unsigned long long)successes, (unsigned long long)mismatches);
    report(3, "ML-oracle consistency", mismatches == 0 && successes > 500, buf);
}

// ---------------------------------------------------------------- 4 ----

void criterion_4() {
    bool ok = true;
    std::string detail;

    // hard schedules vs. brute-force subset enumeration
    for (std::size_t length : {1, 4, 8, 12, 16}) {
        for (std::size_t w : {0, 1, 2, 3}) {
            std::vector<std::vector<std::uint32_t>> expect;
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << length); ++mask) {
                std::vector<std::uint32_t> s;
                for (std::size_t i = 0; i < length; ++i)
                    if ((mask >> i) & 1u) s.push_back(static_cast<std::uint32_t>(i));
                if (s.size() <= w) expect.push_back(std::move(s));
            }
            std::sort(expect.begin(), expect.end(),
                      [](const auto& a, const auto& b) {
                          return a.size() != b.size() ? a.size() < b.size() : a < b;
                      });
            HardPatternGen gen(length, w);
            std::vector<std::vector<std::uint32_t>> got;
            std::vector<std::uint32_t> p;
            while (gen.next(p)) got.push_back(p);
            if (got != expect) {
                ok = false;
                detail = "hard stream diverges at length " + std::to_string(length);
            }
        }
    }

    // ORB schedules vs. brute-force rank subsets with sum <= lw_max
    for (std::size_t length : {1, 2, 5, 8, 12}) {
        for (std::uint64_t lw : {0, 3, 8, 20}) {
            std::set<std::vector<std::uint32_t>> expect;
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << length); ++mask) {
                std::vector<std::uint32_t> s;
                std::uint64_t sum = 0;
                for (std::size_t i = 0; i < length; ++i)
                    if ((mask >> i) & 1u) {
                        s.push_back(static_cast<std::uint32_t>(i + 1));
                        sum += i + 1;
                    }
                if (sum <= lw) expect.insert(std::move(s));
            }
            OrbPatternGen gen(length, lw);
            std::set<std::vector<std::uint32_t>> got;
            std::vector<std::uint32_t> p;
            std::uint64_t prev = 0;
            bool sorted_ok = true;
            while (gen.next(p)) {
                const std::uint64_t cur = logistic_weight(p);
                if (cur < prev) sorted_ok = false;
                prev = cur;
                std::sort(p.begin(), p.end());
                got.insert(p);
            }
            if (got != expect || !sorted_ok || got.size() != OrbPatternGen::budget(length, lw)) {
                ok = false;
                detail = "orb stream diverges at length " + std::to_string(length) + " lw " +
                         std::to_string(lw);
            }
        }
    }

    if (ok) detail = "hard and ORB streams equal brute-force enumeration";
    report(4, "pattern-schedule correctness", ok, detail);
}

// ------------------------------------------------------------- 5-7 ----

SweepConfig paper_config() {
    SweepConfig config;
    config.n = 128;
    config.k = 105;
    config.code_seed = 1;
    config.master_seed = 1001;
    config.trials = 1000;
    config.min_block_errors = 100;
    config.max_weight = 3;
    config.lw_max = 104;
    config.osd_order = 2;
    config.threads = 0;
    return config;
}

void criterion_5() {
    SweepConfig config = paper_config();
    config.decoders = {DecoderKind::grand, DecoderKind::grand_edge};
    config.snr_db = {8.0, 9.0, 10.0};
    config.epsilon = {0.02};
    const auto recs = run_sweep(config);
    bool ok = true;
    std::ostringstream detail;
    for (int i = 0; i < 3; ++i) {
        const auto& g = recs[i];
        const auto& ge = recs[3 + i];
        const bool point_ok = ge.bler < g.bler && ge.avg_queries < g.avg_queries;
        ok = ok && point_ok;
        detail << (i ? "; " : "") << g.snr_db << "dB bler " << ge.bler << "<" << g.bler
               << " queries " << ge.avg_queries << "<" << g.avg_queries;
    }
    report(5, "GRAND-EDGE beats GRAND at eps=0.02 (BLER and queries)", ok, detail.str());
}

void criterion_6() {
    SweepConfig config = paper_config();
    config.decoders = {DecoderKind::orbgrand, DecoderKind::orbgrand_edge};
    config.snr_db = {6.0, 8.0};
    config.epsilon = {0.1};
    const auto recs = run_sweep(config);
    bool ok = true;
    std::ostringstream detail;
    for (int i = 0; i < 2; ++i) {
        const auto& o = recs[i];
        const auto& oe = recs[2 + i];
        bool point_ok = oe.bler <= o.bler && oe.avg_queries < o.avg_queries;
        if (i == 1) point_ok = point_ok && o.avg_queries >= 10.0 * oe.avg_queries;
        ok = ok && point_ok;
        detail << (i ? "; " : "") << o.snr_db << "dB bler " << oe.bler << "<=" << o.bler
               << " queries " << oe.avg_queries << " vs " << o.avg_queries;
    }
    report(6, "ORBGRAND-EDGE beats ORBGRAND at eps=0.1 (>=10x queries at 8 dB)", ok,
           detail.str());
}

void criterion_7() {
    SweepConfig config = paper_config();
    config.decoders = {DecoderKind::orbgrand_edge, DecoderKind::osd};
    config.snr_db = {8.0, 10.0};
    config.epsilon = {0.05};
    const auto recs = run_sweep(config);
    bool ok = true;
    std::ostringstream detail;
    for (int i = 0; i < 2; ++i) {
        const auto& oe = recs[i];
        const auto& osd = recs[2 + i];
        ok = ok && oe.bler < osd.bler;
        detail << (i ? "; " : "") << oe.snr_db << "dB bler " << oe.bler << "<" << osd.bler;
    }
    report(7, "ORBGRAND-EDGE beats order-2 OSD at eps=0.05", ok, detail.str());
}

// ---------------------------------------------------------------- 8 ----

double normal_cdf(double x) {
    return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

// probability that a sample lands inside the union of the two 3-sigma balls
double p_inside_balls(double mean, double sd, double radius) {
    const double lo1 = -1.0 - radius, hi1 = -1.0 + radius;
    const double lo2 = 1.0 - radius, hi2 = 1.0 + radius;
    auto mass = [&](double lo, double hi) {
        return normal_cdf((hi - mean) / sd) - normal_cdf((lo - mean) / sd);
    };
    if (hi1 >= lo2) return mass(lo1, hi2);  // balls overlap
    return mass(lo1, hi1) + mass(lo2, hi2);
}

double binomial_tail_above(int n, double p, int threshold) {
    // P(X > threshold) via log-domain terms
    double total = 0.0;
    for (int i = threshold + 1; i <= n; ++i) {
        const double logc = std::lgamma(n + 1.0) - std::lgamma(i + 1.0) - std::lgamma(n - i + 1.0);
        total += std::exp(logc + i * std::log(p) + (n - i) * std::log1p(-p));
    }
    return std::min(total, 1.0);
}

void criterion_8() {
    const LinearCode code = generate_rlc(128, 105, 1);
    ChannelParams params;
    params.snr_db = 8.0;  // channel SNR for this check
    params.epsilon = 0.5;

    std::uint64_t overflows = 0;
    const int trials = 10000;
    for (int t = 0; t < trials; ++t) {
        std::mt19937_64 rng(trial_seed(808, params.snr_db, params.epsilon, t));
        const auto frame = pipeline_frame(code, params, rng);
        const auto res = grand_edge_decode(frame, code, 3);
        if (res.status == DecodeStatus::erasure_overflow) ++overflows;
    }
    const double fraction = static_cast<double>(overflows) / trials;

    const double sigma = noise_sigma(params.snr_db);
    const double radius = params.sigma_multiplier * sigma;
    const double jam_sd = std::sqrt(sigma * sigma + std::pow(10.0, 10.0));  // -100 dB jammer
    const double p_clean = 1.0 - p_inside_balls(1.0, sigma, radius);
    const double p_jam = 1.0 - p_inside_balls(1.0, jam_sd, radius);
    const double p_flag = params.epsilon * p_jam + (1.0 - params.epsilon) * p_clean;
    const double expected = binomial_tail_above(128, p_flag, 23);
    const double tol = 3.0 * std::sqrt(std::max(expected * (1.0 - expected), 1e-12) / trials);

    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "overflow fraction %.6f vs P(Bin(128,%.5f)>23)=%.6f, tol %.2e", fraction,
                  p_flag, expected, tol);
    report(8, "erasure-overflow fraction matches the binomial tail", std::abs(fraction - expected) <= tol,
           buf);
}

// ---------------------------------------------------------------- 9 ----

void criterion_9() {
    std::uint64_t failures = 0;

    // elimination * M = rref and idempotence, exhaustive up to 4x4
    for (std::size_t rows = 1; rows <= 4; ++rows)
        for (std::size_t cols = 1; cols <= 4; ++cols) {
            const std::uint64_t total = std::uint64_t{1} << (rows * cols);
            for (std::uint64_t idx = 0; idx < total; ++idx) {
                BitMatrix m(rows, cols);
                std::uint64_t bits = idx;
                for (std::size_t r = 0; r < rows; ++r)
                    for (std::size_t c = 0; c < cols; ++c) {
                        if (bits & 1u) m.set(r, c, true);
                        bits >>= 1;
                    }
                const auto rr = rref_with_elimination(m);
                if (matmul(rr.elimination, m) != rr.rref) ++failures;
                if (rref_with_elimination(rr.rref).rref != rr.rref) ++failures;
            }
        }

    // orthogonality across seeds and sizes
    for (std::uint64_t seed = 0; seed < 16; ++seed) {
        const LinearCode code = generate_rlc(64, 45, seed);
        if (!(matmul(code.generator, transpose(code.parity_check)) == BitMatrix(45, 19)))
            ++failures;
    }

    // encode/recover round trip, exhaustive at (16,10)
    const LinearCode code = generate_rlc(16, 10, 3);
    for (std::uint64_t idx = 0; idx < (1u << 10); ++idx) {
        BitVec u(10);
        for (int i = 0; i < 10; ++i) u.set(i, (idx >> i) & 1u);
        const BitVec c = encode(code, u);
        if (!is_codeword(code, c)) ++failures;
        if (!(recover_message(code, c) == u)) ++failures;
    }

    char buf[96];
    std::snprintf(buf, sizeof(buf), "%llu failures across the exhaustive GF(2) checks",
                  (unsigned long long)failures);
    report(9, "GF(2) invariant suite", failures == 0, buf);
}

}  // namespace

int main() {
    std::printf("grandedge acceptance suite\n");
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    if (g_failures == 0)
        std::printf("all criteria passed\n");
    else
        std::printf("%d criterion(s) failed\n", g_failures);
    return g_failures;
}
