#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "grandedge/gf2.hpp"

namespace grandedge {

// AWGN channel hit by a Bernoulli bit-level jammer. SNR convention
// throughout: snr_db = 10*log10(Es/sigma^2) with unit symbol energy Es = 1,
// so sigma^2 = 10^(-snr_db/10). The jammer is zero-mean Gaussian with
// sigma_j^2 = 10^(-jammer_snr_db/10) and fires per bit with probability
// epsilon, independent of the channel noise.
struct ChannelParams {
    double snr_db = 7.0;
    double epsilon = 0.0;
    double jammer_snr_db = -100.0;
    double sigma_multiplier = 3.0;  // erasure detector threshold, in channel sigmas
};

double noise_sigma(double snr_db);

// Channel outputs for one frame. erased is the detector's flag set q,
// strictly increasing; hard/llr are computed for every index including the
// flagged ones (baseline decoders consume them, EDGE decoders ignore them).
// Sign convention: y >= 0 maps to bit 0, llr = 2y/sigma^2.
struct ReceivedFrame {
    std::vector<double> y;
    BitVec hard;
    std::vector<double> llr;
    std::vector<std::uint32_t> erased;
    double sigma = 0.0;
};

// bit 0 -> +1.0, bit 1 -> -1.0
std::vector<double> modulate_bpsk(const BitVec& codeword);

std::vector<double> transmit(std::span<const double> x, const ChannelParams& params,
                             std::mt19937_64& rng);

// Flags index i iff min(|y[i]-1|, |y[i]+1|) > multiplier*sigma; a sample
// exactly on the boundary counts as non-jammed. Missed detections flow
// through on purpose: a jammed sample inside the ball is not flagged.
std::vector<std::uint32_t> detect_erasures(std::span<const double> y, double sigma,
                                           double multiplier);

std::pair<BitVec, std::vector<double>> demodulate(std::span<const double> y, double sigma);

// detect_erasures + demodulate with sigma taken from params.
ReceivedFrame receive(std::vector<double> y, const ChannelParams& params);

}  // namespace grandedge
