#pragma once

#include "spikegs/image.hpp"
#include "spikegs/spike.hpp"

namespace spikegs {

// Reconstruction window of odd length 2*half_width+1 centered at a readout.
// Windows touching the stream ends are clipped and the divisor is the clipped
// length; a center outside the stream is rejected.
struct ReconWindow {
    int center = 0;
    int half_width = 16;

    int length() const { return 2 * half_width + 1; }
};

// Windowed firing rate: per pixel, spike count in the window divided by the
// (clipped) window length. Values lie in [0,1].
Image tfp(const SpikeStream& stream, const ReconWindow& window);

// Inter-spike-interval image: per pixel, threshold/(conversion * gap) for the
// two spikes bracketing t (the two nearest on the same side when t is not
// bracketed), clamped to [0,1]. Pixels with fewer than two spikes in the
// whole stream fall back to the global-window firing rate.
Image tfi(const SpikeStream& stream, int t, double theta_over_sigma = 1.0);

// The exposure-like supervision target; identical computation to tfp, named
// separately so training code refers to it explicitly.
Image exposure_target(const SpikeStream& stream, const ReconWindow& window);

}  // namespace spikegs
