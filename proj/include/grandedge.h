/*
 * grandedge — universal error-and-erasure decoding for linear block codes.
 *
 * C interface to the shared library. Handles are opaque; every function
 * returns a ge_status error code (GE_OK on success) and writes results
 * through caller-owned buffers. Bit buffers are one byte per bit, 0 or 1.
 *
 * SNR convention everywhere: snr_db = 10*log10(Es/sigma^2) with unit
 * symbol energy, so sigma^2 = 10^(-snr_db/10).
 */
#ifndef GRANDEDGE_H
#define GRANDEDGE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ge_status {
    GE_OK = 0,
    GE_ERR_ARGUMENT = 1,  /* invalid or inconsistent argument */
    GE_ERR_IO = 2,        /* an output file could not be written */
    GE_ERR_INTERNAL = 3
} ge_status;

typedef enum ge_decode_status {
    GE_DECODE_SUCCESS = 0,
    GE_DECODE_ABANDONED = 1,        /* pattern budget exhausted */
    GE_DECODE_ERASURE_OVERFLOW = 2, /* more erasures than parity bits */
    GE_DECODE_RANK_DEFICIENT = 3    /* erased columns not independent */
} ge_decode_status;

const char* ge_version(void);
const char* ge_status_name(ge_status status);

/* ---- random linear codes ---------------------------------------------- */

typedef struct ge_code ge_code;

/* Systematic (n, k) random linear code; deterministic in (n, k, seed). */
ge_status ge_code_create_rlc(uint32_t n, uint32_t k, uint64_t seed, ge_code** code_out);
void ge_code_free(ge_code* code);

uint32_t ge_code_blocklength(const ge_code* code); /* n */
uint32_t ge_code_dimension(const ge_code* code);   /* k */

/* message: k bits in, codeword_out: n bits out */
ge_status ge_code_encode(const ge_code* code, const uint8_t* message, uint8_t* codeword_out);

/* *is_member_out = 1 iff the n-bit word has an all-zero syndrome */
ge_status ge_code_contains(const ge_code* code, const uint8_t* word, int* is_member_out);

/* ---- channel ----------------------------------------------------------- */

typedef struct ge_channel_params {
    double snr_db;
    double epsilon;          /* per-bit jamming probability in [0,1] */
    double jammer_snr_db;    /* default -100 */
    double sigma_multiplier; /* erasure threshold in channel sigmas, default 3 */
} ge_channel_params;

void ge_channel_params_init(ge_channel_params* params);

/*
 * BPSK-modulate an n-bit codeword, add AWGN and Bernoulli jamming, flag
 * erasures and demodulate, all from the given seed. Output pointers may be
 * NULL to skip that output. erased_out needs room for n indices;
 * *erased_count_out receives how many were flagged.
 */
ge_status ge_channel_transmit(const ge_channel_params* params, uint64_t seed,
                              const uint8_t* codeword, uint32_t n, double* y_out,
                              double* llr_out, uint8_t* hard_out, uint32_t* erased_out,
                              uint32_t* erased_count_out);

/* ---- decoders ----------------------------------------------------------- */

typedef struct ge_decode_result {
    ge_decode_status status;
    uint64_t queries; /* codebook membership / EDGE checks performed */
} ge_decode_result;

/*
 * All decoders fill result_out and, on GE_DECODE_SUCCESS, write the decoded
 * codeword (n bits) and message (k bits) into the optional output buffers.
 * llr buffers may hold true LLRs or any positively scaled channel values;
 * only signs and relative magnitudes matter. erased must be strictly
 * increasing indices.
 */
ge_status ge_grand_decode(const ge_code* code, const uint8_t* hard, uint32_t max_weight,
                          ge_decode_result* result_out, uint8_t* codeword_out,
                          uint8_t* message_out);

ge_status ge_orbgrand_decode(const ge_code* code, const double* llr, uint64_t lw_max,
                             ge_decode_result* result_out, uint8_t* codeword_out,
                             uint8_t* message_out);

ge_status ge_grand_edge_decode(const ge_code* code, const uint8_t* hard, const uint32_t* erased,
                               uint32_t erased_count, uint32_t max_weight,
                               ge_decode_result* result_out, uint8_t* codeword_out,
                               uint8_t* message_out);

ge_status ge_orbgrand_edge_decode(const ge_code* code, const double* llr, const uint32_t* erased,
                                  uint32_t erased_count, uint64_t lw_max,
                                  ge_decode_result* result_out, uint8_t* codeword_out,
                                  uint8_t* message_out);

ge_status ge_osd_decode(const ge_code* code, const double* llr, uint32_t order,
                        ge_decode_result* result_out, uint8_t* codeword_out,
                        uint8_t* message_out);

/* ---- Monte-Carlo sweeps -------------------------------------------------- */

typedef struct ge_sweep_params {
    uint32_t n;
    uint32_t k;
    uint64_t code_seed;
    uint64_t master_seed;
    const char* decoders; /* comma list: grand,orbgrand,grand-edge,orbgrand-edge,osd */
    const double* snr_db;
    size_t snr_count;
    const double* epsilon;
    size_t epsilon_count;
    uint64_t trials;
    uint64_t min_block_errors; /* 0 disables early stop */
    uint32_t max_weight;
    uint64_t lw_max;
    uint32_t osd_order;
    double jammer_snr_db;
    double sigma_multiplier;
    uint32_t threads; /* 0: one worker per hardware thread */
} ge_sweep_params;

void ge_sweep_params_init(ge_sweep_params* params);

typedef struct ge_sweep_row {
    const char* decoder;
    double snr_db;
    double epsilon;
    uint64_t trials;
    uint64_t block_errors;
    double bler;
    double avg_queries;
    double avg_erasures;
    uint64_t overflow_count;
    uint64_t abandon_count;
    uint64_t rank_deficient_count;
    double wall_time;
} ge_sweep_row;

/* Called after each point completes; row is valid only during the call. */
typedef void (*ge_sweep_row_fn)(const ge_sweep_row* row, void* user);

/*
 * Run the cartesian sweep (decoder-major, then SNR, then epsilon) and write
 * the CSV to csv_path. series_prefix, when non-NULL, additionally emits
 * two-column gnuplot series per curve. Deterministic in the params for
 * everything except the wall_time column.
 */
ge_status ge_sweep_run(const ge_sweep_params* params, const char* csv_path,
                       const char* series_prefix, ge_sweep_row_fn on_row, void* user);

#ifdef __cplusplus
}
#endif

#endif /* GRANDEDGE_H */
