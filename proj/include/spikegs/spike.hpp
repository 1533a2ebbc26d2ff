#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "spikegs/image.hpp"

namespace spikegs {

// Ordered ground-truth intensity frames, one per readout interval.
struct IntensitySequence {
    int width = 0;
    int height = 0;
    std::vector<Image> frames;

    int num_frames() const { return static_cast<int>(frames.size()); }

    void validate() const {
        if (frames.empty()) throw std::invalid_argument("intensity sequence: no frames");
        for (const Image& f : frames) {
            if (f.width != width || f.height != height)
                throw std::invalid_argument("intensity sequence: frame dimension mismatch");
            for (double v : f.data)
                if (!(v >= 0.0 && v <= 1.0))
                    throw std::invalid_argument("intensity sequence: value outside [0,1]");
        }
    }
};

// Binary readouts S[x,y,k]. Storage is one byte per bit, frame-major; the
// bit-packed layout exists only in the .spk file format.
struct SpikeStream {
    int width = 0;
    int height = 0;
    int num_readouts = 0;
    uint32_t tau_ns = 25000;  // readout interval; 25000 ns = 25 us
    std::vector<uint8_t> bits;

    SpikeStream() = default;
    SpikeStream(int w, int h, int n, uint32_t tau = 25000)
        : width(w), height(h), num_readouts(n), tau_ns(tau),
          bits(static_cast<size_t>(w) * h * n, 0) {}

    double tau_us() const { return tau_ns / 1000.0; }

    size_t index(int x, int y, int k) const {
        return (static_cast<size_t>(k) * height + y) * width + x;
    }
    uint8_t at(int x, int y, int k) const { return bits[index(x, y, k)]; }
    void set(int x, int y, int k, uint8_t v) { bits[index(x, y, k)] = v ? 1 : 0; }

    // total spikes at a pixel
    long pixel_count(int x, int y) const {
        long c = 0;
        for (int k = 0; k < num_readouts; ++k) c += at(x, y, k);
        return c;
    }
};

// Per-pixel residual integrator voltage, in [0, threshold).
struct IntegratorState {
    int width = 0;
    int height = 0;
    std::vector<double> voltage;

    static IntegratorState zeros(int w, int h) {
        IntegratorState s;
        s.width = w;
        s.height = h;
        s.voltage.assign(static_cast<size_t>(w) * h, 0.0);
        return s;
    }

    // per-pixel uniform in [0, threshold), independent of traversal order
    static IntegratorState uniform_random(int w, int h, double threshold, uint64_t seed);

    double& at(int x, int y) { return voltage[static_cast<size_t>(y) * width + x]; }
    double at(int x, int y) const { return voltage[static_cast<size_t>(y) * width + x]; }
};

}  // namespace spikegs
