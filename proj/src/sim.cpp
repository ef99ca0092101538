#include "grandedge/sim.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <fstream>
#include <map>
#include <random>
#include <stdexcept>
#include <thread>

#include "grandedge/channel.hpp"
#include "grandedge/rng.hpp"

namespace grandedge {

std::string_view decoder_name(DecoderKind kind) {
    switch (kind) {
        case DecoderKind::grand: return "grand";
        case DecoderKind::orbgrand: return "orbgrand";
        case DecoderKind::grand_edge: return "grand-edge";
        case DecoderKind::orbgrand_edge: return "orbgrand-edge";
        case DecoderKind::osd: return "osd";
    }
    return "unknown";
}

std::optional<DecoderKind> parse_decoder(std::string_view name) {
    if (name == "grand") return DecoderKind::grand;
    if (name == "orbgrand") return DecoderKind::orbgrand;
    if (name == "grand-edge") return DecoderKind::grand_edge;
    if (name == "orbgrand-edge") return DecoderKind::orbgrand_edge;
    if (name == "osd") return DecoderKind::osd;
    return std::nullopt;
}

TrialOutcome run_trial(const LinearCode& code, const SweepConfig& config, DecoderKind decoder,
                       double snr_db, double epsilon, std::uint64_t trial_index) {
    std::mt19937_64 rng(trial_seed(config.master_seed, snr_db, epsilon, trial_index));

    BitVec message(code.k);
    for (std::size_t i = 0; i < code.k; ++i) message.set(i, rng() & 1u);
    const BitVec codeword = encode(code, message);

    ChannelParams params;
    params.snr_db = snr_db;
    params.epsilon = epsilon;
    params.jammer_snr_db = config.jammer_snr_db;
    params.sigma_multiplier = config.sigma_multiplier;

    ReceivedFrame frame = receive(transmit(modulate_bpsk(codeword), params, rng), params);
    // With no jammer configured the receiver's jamming path is off. The
    // detector's false flags would otherwise make the EDGE variants diverge
    // from their base decoders on a channel that has no erasures to find.
    if (epsilon == 0.0) frame.erased.clear();

    DecodeResult res;
    switch (decoder) {
        case DecoderKind::grand: res = grand_decode(frame.hard, code, config.max_weight); break;
        case DecoderKind::orbgrand: res = orbgrand_decode(frame, code, config.lw_max); break;
        case DecoderKind::grand_edge:
            res = grand_edge_decode(frame, code, config.max_weight);
            break;
        case DecoderKind::orbgrand_edge:
            res = orbgrand_edge_decode(frame, code, config.lw_max);
            break;
        case DecoderKind::osd: res = osd_decode(frame, code, config.osd_order); break;
    }

    TrialOutcome out;
    out.status = res.status;
    out.queries = res.queries;
    out.erasures = static_cast<std::uint32_t>(frame.erased.size());
    out.block_error = res.status != DecodeStatus::success || !res.message || *res.message != message;
    return out;
}

namespace {

// Evaluate trials [base, base+count) into slots; deterministic because every
// slot depends only on its own trial index.
void evaluate_chunk(const LinearCode& code, const SweepConfig& config, DecoderKind decoder,
                    double snr_db, double epsilon, std::uint64_t base,
                    std::vector<TrialOutcome>& slots, unsigned workers) {
    const std::size_t count = slots.size();
    if (workers <= 1 || count <= 1) {
        for (std::size_t j = 0; j < count; ++j)
            slots[j] = run_trial(code, config, decoder, snr_db, epsilon, base + j);
        return;
    }
    const unsigned used = static_cast<unsigned>(std::min<std::size_t>(workers, count));
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(used);
    pool.reserve(used);
    for (unsigned t = 0; t < used; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (std::size_t j = t; j < count; j += used)
                    slots[j] = run_trial(code, config, decoder, snr_db, epsilon, base + j);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& err : errors)
        if (err) std::rethrow_exception(err);
}

}  // namespace

SweepRecord run_point(const LinearCode& code, const SweepConfig& config, DecoderKind decoder,
                      double snr_db, double epsilon) {
    const auto t0 = std::chrono::steady_clock::now();
    const unsigned workers =
        config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());

    SweepRecord rec;
    rec.decoder = decoder;
    rec.snr_db = snr_db;
    rec.epsilon = epsilon;

    std::uint64_t queries_sum = 0;
    std::uint64_t erasures_sum = 0;
    std::uint64_t next_trial = 0;
    bool stop = false;
    const std::uint64_t chunk = workers > 1 ? std::uint64_t{32} * workers : 64;

    while (!stop && next_trial < config.trials) {
        const std::uint64_t count = std::min<std::uint64_t>(chunk, config.trials - next_trial);
        std::vector<TrialOutcome> slots(static_cast<std::size_t>(count));
        evaluate_chunk(code, config, decoder, snr_db, epsilon, next_trial, slots, workers);
        // fold in trial order so early stop lands on the same trial no
        // matter how many workers ran
        for (const auto& r : slots) {
            ++rec.trials;
            rec.block_errors += r.block_error ? 1 : 0;
            queries_sum += r.queries;
            erasures_sum += r.erasures;
            switch (r.status) {
                case DecodeStatus::erasure_overflow: ++rec.overflow_count; break;
                case DecodeStatus::abandoned: ++rec.abandon_count; break;
                case DecodeStatus::rank_deficient: ++rec.rank_deficient_count; break;
                case DecodeStatus::success: break;
            }
            if (config.min_block_errors && rec.block_errors >= config.min_block_errors) {
                stop = true;
                break;
            }
        }
        next_trial += count;
    }

    rec.bler = rec.trials ? static_cast<double>(rec.block_errors) / static_cast<double>(rec.trials)
                          : 0.0;
    rec.avg_queries =
        rec.trials ? static_cast<double>(queries_sum) / static_cast<double>(rec.trials) : 0.0;
    rec.avg_erasures =
        rec.trials ? static_cast<double>(erasures_sum) / static_cast<double>(rec.trials) : 0.0;
    rec.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rec;
}

std::vector<SweepRecord> run_sweep(const SweepConfig& config, const RowCallback& on_row) {
    if (config.trials == 0) throw std::invalid_argument("run_sweep: trials must be positive");
    if (config.decoders.empty()) throw std::invalid_argument("run_sweep: no decoders selected");
    if (config.snr_db.empty()) throw std::invalid_argument("run_sweep: no SNR values");
    if (config.epsilon.empty()) throw std::invalid_argument("run_sweep: no epsilon values");
    for (double eps : config.epsilon)
        if (eps < 0.0 || eps > 1.0)
            throw std::invalid_argument("run_sweep: epsilon must be in [0,1]");
    if (config.sigma_multiplier <= 0.0)
        throw std::invalid_argument("run_sweep: sigma multiplier must be positive");

    const LinearCode code = generate_rlc(config.n, config.k, config.code_seed);
    std::vector<SweepRecord> records;
    records.reserve(config.decoders.size() * config.snr_db.size() * config.epsilon.size());
    for (DecoderKind decoder : config.decoders)
        for (double snr : config.snr_db)
            for (double eps : config.epsilon) {
                records.push_back(run_point(code, config, decoder, snr, eps));
                if (on_row) on_row(records.back());
            }
    return records;
}

namespace {

std::string format_double(double v, const char* fmt = "%.10g") {
    char buf[64];
    std::snprintf(buf, sizeof(buf), fmt, v);
    return buf;
}

}  // namespace

void write_csv(const SweepConfig& config, std::span<const SweepRecord> records, std::ostream& os) {
    os << "# grandedge sweep: n=" << config.n << " k=" << config.k
       << " code_seed=" << config.code_seed << " seed=" << config.master_seed
       << " trials=" << config.trials << " min_block_errors=" << config.min_block_errors
       << " max_weight=" << config.max_weight << " lw_max=" << config.lw_max
       << " osd_order=" << config.osd_order
       << " jammer_snr_db=" << format_double(config.jammer_snr_db)
       << " sigma_multiplier=" << format_double(config.sigma_multiplier) << "\n";
    os << "decoder,snr_db,epsilon,trials,block_errors,bler,avg_queries,avg_erasures,"
          "overflow_count,abandon_count,rank_deficient_count,wall_time\n";
    for (const auto& r : records) {
        os << decoder_name(r.decoder) << ',' << format_double(r.snr_db) << ','
           << format_double(r.epsilon) << ',' << r.trials << ',' << r.block_errors << ','
           << format_double(r.bler) << ',' << format_double(r.avg_queries) << ','
           << format_double(r.avg_erasures) << ',' << r.overflow_count << ',' << r.abandon_count
           << ',' << r.rank_deficient_count << ',' << format_double(r.wall_time, "%.3f") << "\n";
    }
}

void write_series(const SweepConfig& config, std::span<const SweepRecord> records,
                  const std::string& prefix) {
    const bool snr_axis = config.snr_db.size() > 1 || config.epsilon.size() <= 1;
    std::map<std::string, std::ofstream> files;
    for (const auto& r : records) {
        std::string name(decoder_name(r.decoder));
        std::string path = snr_axis
                               ? prefix + name + "_eps" + format_double(r.epsilon, "%g") + ".dat"
                               : prefix + name + "_snr" + format_double(r.snr_db, "%g") + ".dat";
        auto it = files.find(path);
        if (it == files.end()) {
            it = files.emplace(path, std::ofstream(path)).first;
            if (!it->second) throw std::runtime_error("write_series: cannot open " + path);
            it->second << "# " << (snr_axis ? "snr_db" : "epsilon") << " bler\n";
        }
        it->second << format_double(snr_axis ? r.snr_db : r.epsilon) << ' '
                   << format_double(r.bler) << "\n";
    }
}

}  // namespace grandedge
