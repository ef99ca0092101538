#include "grandedge.h"

#include <cstring>
#include <fstream>
#include <memory>
#include <new>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "grandedge/channel.hpp"
#include "grandedge/code.hpp"
#include "grandedge/decode.hpp"
#include "grandedge/sim.hpp"

using namespace grandedge;

struct ge_code {
    LinearCode code;
};

namespace {

constexpr const char* kVersion = "1.0.0";

template <typename Fn>
ge_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const std::invalid_argument&) {
        return GE_ERR_ARGUMENT;
    } catch (const std::ios_base::failure&) {
        return GE_ERR_IO;
    } catch (const std::bad_alloc&) {
        return GE_ERR_INTERNAL;
    } catch (const std::exception&) {
        return GE_ERR_INTERNAL;
    }
}

BitVec bits_from_bytes(const uint8_t* data, std::size_t len) {
    BitVec v(len);
    for (std::size_t i = 0; i < len; ++i)
        if (data[i]) v.set(i, true);
    return v;
}

void bytes_from_bits(const BitVec& v, uint8_t* out) {
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v.get(i) ? 1 : 0;
}

// Frame carrying caller-supplied soft values; any positive scaling of the
// channel outputs keeps every ranking and correlation decision identical.
ReceivedFrame frame_from_llr(const ge_code* code, const double* llr, const uint32_t* erased,
                             uint32_t erased_count) {
    const std::size_t n = code->code.n;
    ReceivedFrame frame;
    frame.y.assign(llr, llr + n);
    frame.llr.assign(llr, llr + n);
    frame.hard = BitVec(n);
    for (std::size_t i = 0; i < n; ++i) frame.hard.set(i, llr[i] < 0.0);
    frame.sigma = 1.0;
    if (erased && erased_count) frame.erased.assign(erased, erased + erased_count);
    return frame;
}

ge_status finish_decode(const DecodeResult& res, ge_decode_result* result_out,
                        uint8_t* codeword_out, uint8_t* message_out) {
    if (result_out) {
        result_out->status = static_cast<ge_decode_status>(res.status);
        result_out->queries = res.queries;
    }
    if (res.status == DecodeStatus::success) {
        if (codeword_out) bytes_from_bits(*res.codeword, codeword_out);
        if (message_out) bytes_from_bits(*res.message, message_out);
    }
    return GE_OK;
}

std::vector<DecoderKind> parse_decoder_list(const char* csv) {
    if (!csv || !*csv) throw std::invalid_argument("decoder list is empty");
    std::vector<DecoderKind> out;
    std::stringstream ss{std::string(csv)};
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto kind = parse_decoder(item);
        if (!kind) throw std::invalid_argument("unknown decoder: " + item);
        out.push_back(*kind);
    }
    if (out.empty()) throw std::invalid_argument("decoder list is empty");
    return out;
}

}  // namespace

extern "C" {

const char* ge_version(void) {
    return kVersion;
}

const char* ge_status_name(ge_status status) {
    switch (status) {
        case GE_OK: return "ok";
        case GE_ERR_ARGUMENT: return "invalid argument";
        case GE_ERR_IO: return "io error";
        case GE_ERR_INTERNAL: return "internal error";
    }
    return "unknown";
}

ge_status ge_code_create_rlc(uint32_t n, uint32_t k, uint64_t seed, ge_code** code_out) {
    if (!code_out) return GE_ERR_ARGUMENT;
    *code_out = nullptr;
    return guarded([&] {
        auto handle = std::make_unique<ge_code>();
        handle->code = generate_rlc(n, k, seed);
        *code_out = handle.release();
        return GE_OK;
    });
}

void ge_code_free(ge_code* code) {
    delete code;
}

uint32_t ge_code_blocklength(const ge_code* code) {
    return code ? static_cast<uint32_t>(code->code.n) : 0;
}

uint32_t ge_code_dimension(const ge_code* code) {
    return code ? static_cast<uint32_t>(code->code.k) : 0;
}

ge_status ge_code_encode(const ge_code* code, const uint8_t* message, uint8_t* codeword_out) {
    if (!code || !message || !codeword_out) return GE_ERR_ARGUMENT;
    return guarded([&] {
        bytes_from_bits(encode(code->code, bits_from_bytes(message, code->code.k)), codeword_out);
        return GE_OK;
    });
}

ge_status ge_code_contains(const ge_code* code, const uint8_t* word, int* is_member_out) {
    if (!code || !word || !is_member_out) return GE_ERR_ARGUMENT;
    return guarded([&] {
        *is_member_out = is_codeword(code->code, bits_from_bytes(word, code->code.n)) ? 1 : 0;
        return GE_OK;
    });
}

void ge_channel_params_init(ge_channel_params* params) {
    if (!params) return;
    params->snr_db = 7.0;
    params->epsilon = 0.0;
    params->jammer_snr_db = -100.0;
    params->sigma_multiplier = 3.0;
}

ge_status ge_channel_transmit(const ge_channel_params* params, uint64_t seed,
                              const uint8_t* codeword, uint32_t n, double* y_out, double* llr_out,
                              uint8_t* hard_out, uint32_t* erased_out,
                              uint32_t* erased_count_out) {
    if (!params || !codeword) return GE_ERR_ARGUMENT;
    if (erased_out && !erased_count_out) return GE_ERR_ARGUMENT;
    return guarded([&] {
        ChannelParams cp;
        cp.snr_db = params->snr_db;
        cp.epsilon = params->epsilon;
        cp.jammer_snr_db = params->jammer_snr_db;
        cp.sigma_multiplier = params->sigma_multiplier;
        std::mt19937_64 rng(seed);
        ReceivedFrame frame =
            receive(transmit(modulate_bpsk(bits_from_bytes(codeword, n)), cp, rng), cp);
        if (y_out) std::memcpy(y_out, frame.y.data(), n * sizeof(double));
        if (llr_out) std::memcpy(llr_out, frame.llr.data(), n * sizeof(double));
        if (hard_out) bytes_from_bits(frame.hard, hard_out);
        if (erased_out) {
            std::memcpy(erased_out, frame.erased.data(), frame.erased.size() * sizeof(uint32_t));
            *erased_count_out = static_cast<uint32_t>(frame.erased.size());
        } else if (erased_count_out) {
            *erased_count_out = static_cast<uint32_t>(frame.erased.size());
        }
        return GE_OK;
    });
}

ge_status ge_grand_decode(const ge_code* code, const uint8_t* hard, uint32_t max_weight,
                          ge_decode_result* result_out, uint8_t* codeword_out,
                          uint8_t* message_out) {
    if (!code || !hard) return GE_ERR_ARGUMENT;
    return guarded([&] {
        auto res = grand_decode(bits_from_bytes(hard, code->code.n), code->code, max_weight);
        return finish_decode(res, result_out, codeword_out, message_out);
    });
}

ge_status ge_orbgrand_decode(const ge_code* code, const double* llr, uint64_t lw_max,
                             ge_decode_result* result_out, uint8_t* codeword_out,
                             uint8_t* message_out) {
    if (!code || !llr) return GE_ERR_ARGUMENT;
    return guarded([&] {
        auto res = orbgrand_decode(frame_from_llr(code, llr, nullptr, 0), code->code, lw_max);
        return finish_decode(res, result_out, codeword_out, message_out);
    });
}

ge_status ge_grand_edge_decode(const ge_code* code, const uint8_t* hard, const uint32_t* erased,
                               uint32_t erased_count, uint32_t max_weight,
                               ge_decode_result* result_out, uint8_t* codeword_out,
                               uint8_t* message_out) {
    if (!code || !hard || (erased_count && !erased)) return GE_ERR_ARGUMENT;
    return guarded([&] {
        ReceivedFrame frame;
        frame.hard = bits_from_bytes(hard, code->code.n);
        if (erased_count) frame.erased.assign(erased, erased + erased_count);
        auto res = grand_edge_decode(frame, code->code, max_weight);
        return finish_decode(res, result_out, codeword_out, message_out);
    });
}

ge_status ge_orbgrand_edge_decode(const ge_code* code, const double* llr, const uint32_t* erased,
                                  uint32_t erased_count, uint64_t lw_max,
                                  ge_decode_result* result_out, uint8_t* codeword_out,
                                  uint8_t* message_out) {
    if (!code || !llr || (erased_count && !erased)) return GE_ERR_ARGUMENT;
    return guarded([&] {
        auto res = orbgrand_edge_decode(frame_from_llr(code, llr, erased, erased_count),
                                        code->code, lw_max);
        return finish_decode(res, result_out, codeword_out, message_out);
    });
}

ge_status ge_osd_decode(const ge_code* code, const double* llr, uint32_t order,
                        ge_decode_result* result_out, uint8_t* codeword_out,
                        uint8_t* message_out) {
    if (!code || !llr) return GE_ERR_ARGUMENT;
    return guarded([&] {
        auto res = osd_decode(frame_from_llr(code, llr, nullptr, 0), code->code, order);
        return finish_decode(res, result_out, codeword_out, message_out);
    });
}

void ge_sweep_params_init(ge_sweep_params* params) {
    if (!params) return;
    std::memset(params, 0, sizeof(*params));
    params->n = 128;
    params->k = 105;
    params->code_seed = 1;
    params->master_seed = 1;
    params->trials = 1000;
    params->min_block_errors = 100;
    params->max_weight = 3;
    params->lw_max = 104;
    params->osd_order = 2;
    params->jammer_snr_db = -100.0;
    params->sigma_multiplier = 3.0;
}

ge_status ge_sweep_run(const ge_sweep_params* params, const char* csv_path,
                       const char* series_prefix, ge_sweep_row_fn on_row, void* user) {
    if (!params || !csv_path) return GE_ERR_ARGUMENT;
    if (!params->snr_db || !params->snr_count) return GE_ERR_ARGUMENT;
    if (!params->epsilon || !params->epsilon_count) return GE_ERR_ARGUMENT;
    return guarded([&] {
        SweepConfig config;
        config.n = params->n;
        config.k = params->k;
        config.code_seed = params->code_seed;
        config.master_seed = params->master_seed;
        config.decoders = parse_decoder_list(params->decoders);
        config.snr_db.assign(params->snr_db, params->snr_db + params->snr_count);
        config.epsilon.assign(params->epsilon, params->epsilon + params->epsilon_count);
        config.trials = params->trials;
        config.min_block_errors = params->min_block_errors;
        config.max_weight = params->max_weight;
        config.lw_max = params->lw_max;
        config.osd_order = params->osd_order;
        config.jammer_snr_db = params->jammer_snr_db;
        config.sigma_multiplier = params->sigma_multiplier;
        config.threads = params->threads;

        RowCallback cb;
        if (on_row) {
            cb = [&](const SweepRecord& rec) {
                ge_sweep_row row;
                std::string name(decoder_name(rec.decoder));
                row.decoder = name.c_str();
                row.snr_db = rec.snr_db;
                row.epsilon = rec.epsilon;
                row.trials = rec.trials;
                row.block_errors = rec.block_errors;
                row.bler = rec.bler;
                row.avg_queries = rec.avg_queries;
                row.avg_erasures = rec.avg_erasures;
                row.overflow_count = rec.overflow_count;
                row.abandon_count = rec.abandon_count;
                row.rank_deficient_count = rec.rank_deficient_count;
                row.wall_time = rec.wall_time;
                on_row(&row, user);
            };
        }

        auto records = run_sweep(config, cb);

        std::ofstream os(csv_path);
        if (!os) return GE_ERR_IO;
        write_csv(config, records, os);
        os.flush();
        if (!os) return GE_ERR_IO;
        if (series_prefix) write_series(config, records, series_prefix);
        return GE_OK;
    });
}

}  // extern "C"
