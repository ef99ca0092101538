#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "grandedge/code.hpp"
#include "grandedge/decode.hpp"

namespace grandedge {

enum class DecoderKind { grand, orbgrand, grand_edge, orbgrand_edge, osd };

std::string_view decoder_name(DecoderKind kind);
std::optional<DecoderKind> parse_decoder(std::string_view name);

struct SweepConfig {
    std::size_t n = 128;
    std::size_t k = 105;
    std::uint64_t code_seed = 1;
    std::uint64_t master_seed = 1;
    std::vector<DecoderKind> decoders;
    std::vector<double> snr_db;
    std::vector<double> epsilon;
    std::uint64_t trials = 1000;
    std::uint64_t min_block_errors = 100;  // 0 disables early stop
    std::size_t max_weight = 3;
    std::uint64_t lw_max = 104;
    std::size_t osd_order = 2;
    double jammer_snr_db = -100.0;
    double sigma_multiplier = 3.0;
    unsigned threads = 0;  // 0: one worker per hardware thread
};

struct SweepRecord {
    DecoderKind decoder;
    double snr_db = 0.0;
    double epsilon = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t block_errors = 0;
    double bler = 0.0;
    double avg_queries = 0.0;
    double avg_erasures = 0.0;
    std::uint64_t overflow_count = 0;
    std::uint64_t abandon_count = 0;
    std::uint64_t rank_deficient_count = 0;
    double wall_time = 0.0;  // seconds
};

struct TrialOutcome {
    bool block_error = false;
    DecodeStatus status = DecodeStatus::abandoned;
    std::uint64_t queries = 0;
    std::uint32_t erasures = 0;
};

// message -> encode -> BPSK -> jammed AWGN -> erasure detection -> decode,
// with the frame drawn from the counter-derived substream for trial_index.
TrialOutcome run_trial(const LinearCode& code, const SweepConfig& config, DecoderKind decoder,
                       double snr_db, double epsilon, std::uint64_t trial_index);

// Aggregates config.trials trials (stopping early once min_block_errors is
// reached, if enabled). Deterministic for a fixed config regardless of the
// worker count: trials are folded in index order.
SweepRecord run_point(const LinearCode& code, const SweepConfig& config, DecoderKind decoder,
                      double snr_db, double epsilon);

using RowCallback = std::function<void(const SweepRecord&)>;

// Cartesian product decoder-major, then SNR, then epsilon.
std::vector<SweepRecord> run_sweep(const SweepConfig& config, const RowCallback& on_row = {});

// One '#' parameter comment line, a header row naming every SweepRecord
// field in declared order, then one row per record. '.' decimal separator.
void write_csv(const SweepConfig& config, std::span<const SweepRecord> records, std::ostream& os);

// Two-column gnuplot-style series per curve, for convenience plotting:
// <prefix><decoder>_eps<value>.dat holding "snr_db bler" when the sweep
// varies SNR, else <prefix><decoder>_snr<value>.dat holding "epsilon bler".
void write_series(const SweepConfig& config, std::span<const SweepRecord> records,
                  const std::string& prefix);

}  // namespace grandedge
