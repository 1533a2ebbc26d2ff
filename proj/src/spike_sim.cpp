#include "spikegs/spike_sim.hpp"

#include <cmath>
#include <stdexcept>

#include "spikegs/rng.hpp"

namespace spikegs {

IntegratorState IntegratorState::uniform_random(int w, int h, double threshold, uint64_t seed) {
    IntegratorState s = zeros(w, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            Rng rng(mix_seed(seed, static_cast<uint64_t>(y) * w + x));
            s.at(x, y) = rng.uniform() * threshold;
        }
    return s;
}

void SpikeCamParams::validate() const {
    if (!(threshold > 0.0)) throw std::invalid_argument("spike cam: threshold must be > 0");
    if (!(conversion > 0.0)) throw std::invalid_argument("spike cam: conversion must be > 0");
    if (tau_ns == 0) throw std::invalid_argument("spike cam: tau must be > 0");
    if (!(photon_scale > 0.0)) throw std::invalid_argument("spike cam: photon scale must be > 0");
    if (!(dark_rate >= 0.0)) throw std::invalid_argument("spike cam: dark rate must be >= 0");
}

SpikeStream simulate_ideal(const IntensitySequence& frames, const SpikeCamParams& params,
                           const IntegratorState& initial) {
    params.validate();
    frames.validate();
    if (initial.width != frames.width || initial.height != frames.height)
        throw std::invalid_argument("simulate_ideal: integrator state dimension mismatch");

    const int w = frames.width, h = frames.height, n = frames.num_frames();
    SpikeStream out(w, h, n, params.tau_ns);
    std::vector<double> v = initial.voltage;
    for (int k = 0; k < n; ++k) {
        const Image& f = frames.frames[k];
        for (int y = 0; y < h; ++y) {
            for (int x = 0; x < w; ++x) {
                size_t p = static_cast<size_t>(y) * w + x;
                double vv = v[p] + params.conversion * f.at(x, y);
                if (vv >= params.threshold) {
                    out.set(x, y, k, 1);
                    vv = std::fmod(vv, params.threshold);
                }
                v[p] = vv;
            }
        }
    }
    return out;
}

SpikeStream simulate_poisson(const IntensitySequence& frames, const SpikeCamParams& params,
                             uint64_t seed) {
    params.validate();
    frames.validate();

    const int w = frames.width, h = frames.height, n = frames.num_frames();
    const double charge_per_count = params.conversion / params.photon_scale;
    SpikeStream out(w, h, n, params.tau_ns);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            Rng rng(mix_seed(seed, static_cast<uint64_t>(y) * w + x));
            double v = rng.uniform() * params.threshold;
            for (int k = 0; k < n; ++k) {
                double mean = params.photon_scale * frames.frames[k].at(x, y) + params.dark_rate;
                double vv = v + charge_per_count * static_cast<double>(rng.poisson(mean));
                if (vv >= params.threshold) {
                    out.set(x, y, k, 1);
                    vv = std::fmod(vv, params.threshold);
                }
                v = vv;
            }
        }
    }
    return out;
}

}  // namespace spikegs
