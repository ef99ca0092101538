#include "grandedge/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace grandedge {

double noise_sigma(double snr_db) {
    return std::pow(10.0, -snr_db / 20.0);
}

std::vector<double> modulate_bpsk(const BitVec& codeword) {
    std::vector<double> x(codeword.size());
    for (std::size_t i = 0; i < codeword.size(); ++i) x[i] = codeword.get(i) ? -1.0 : 1.0;
    return x;
}

std::vector<double> transmit(std::span<const double> x, const ChannelParams& params,
                             std::mt19937_64& rng) {
    if (params.epsilon < 0.0 || params.epsilon > 1.0)
        throw std::invalid_argument("transmit: epsilon must be in [0,1]");
    const double sigma = noise_sigma(params.snr_db);
    const double jam_sigma = noise_sigma(params.jammer_snr_db);

    std::normal_distribution<double> noise(0.0, sigma > 0.0 ? sigma : 1.0);
    std::normal_distribution<double> jam(0.0, jam_sigma > 0.0 ? jam_sigma : 1.0);
    std::bernoulli_distribution jammed(params.epsilon);

    std::vector<double> y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        double s = x[i];
        if (sigma > 0.0) s += noise(rng);
        if (params.epsilon > 0.0 && jammed(rng) && jam_sigma > 0.0) s += jam(rng);
        y[i] = s;
    }
    return y;
}

std::vector<std::uint32_t> detect_erasures(std::span<const double> y, double sigma,
                                           double multiplier) {
    if (sigma <= 0.0) throw std::invalid_argument("detect_erasures: sigma must be positive");
    if (multiplier <= 0.0) throw std::invalid_argument("detect_erasures: multiplier must be positive");
    const double radius = multiplier * sigma;
    std::vector<std::uint32_t> q;
    for (std::size_t i = 0; i < y.size(); ++i) {
        const double d = std::min(std::abs(y[i] - 1.0), std::abs(y[i] + 1.0));
        if (d > radius) q.push_back(static_cast<std::uint32_t>(i));
    }
    return q;
}

std::pair<BitVec, std::vector<double>> demodulate(std::span<const double> y, double sigma) {
    if (sigma <= 0.0) throw std::invalid_argument("demodulate: sigma must be positive");
    BitVec hard(y.size());
    std::vector<double> llr(y.size());
    const double scale = 2.0 / (sigma * sigma);
    for (std::size_t i = 0; i < y.size(); ++i) {
        hard.set(i, y[i] < 0.0);
        llr[i] = scale * y[i];
    }
    return {std::move(hard), std::move(llr)};
}

ReceivedFrame receive(std::vector<double> y, const ChannelParams& params) {
    ReceivedFrame frame;
    frame.sigma = noise_sigma(params.snr_db);
    frame.erased = detect_erasures(y, frame.sigma, params.sigma_multiplier);
    auto [hard, llr] = demodulate(y, frame.sigma);
    frame.hard = std::move(hard);
    frame.llr = std::move(llr);
    frame.y = std::move(y);
    return frame;
}

}  // namespace grandedge
