#include "spikegs/recon.hpp"

#include <stdexcept>

namespace spikegs {

Image tfp(const SpikeStream& stream, const ReconWindow& window) {
    if (window.half_width < 0) throw std::invalid_argument("tfp: negative half width");
    if (window.center < 0 || window.center >= stream.num_readouts)
        throw std::invalid_argument("tfp: window center outside stream");
    const int lo = std::max(0, window.center - window.half_width);
    const int hi = std::min(stream.num_readouts - 1, window.center + window.half_width);
    const double inv_len = 1.0 / static_cast<double>(hi - lo + 1);

    Image out(stream.width, stream.height);
    for (int k = lo; k <= hi; ++k)
        for (int y = 0; y < stream.height; ++y)
            for (int x = 0; x < stream.width; ++x)
                out.at(x, y) += stream.at(x, y, k);
    for (double& v : out.data) v *= inv_len;
    return out;
}

Image exposure_target(const SpikeStream& stream, const ReconWindow& window) {
    return tfp(stream, window);
}

Image tfi(const SpikeStream& stream, int t, double theta_over_sigma) {
    if (t < 0 || t >= stream.num_readouts)
        throw std::invalid_argument("tfi: readout index outside stream");

    // fallback image: firing rate over the whole stream
    ReconWindow whole{stream.num_readouts / 2, stream.num_readouts};
    Image fallback = tfp(stream, whole);

    Image out(stream.width, stream.height);
    for (int y = 0; y < stream.height; ++y) {
        for (int x = 0; x < stream.width; ++x) {
            int prev1 = -1, prev2 = -1;  // two most recent spikes at or before t
            for (int k = t; k >= 0 && prev2 < 0; --k) {
                if (stream.at(x, y, k)) {
                    if (prev1 < 0)
                        prev1 = k;
                    else
                        prev2 = k;
                }
            }
            int next1 = -1, next2 = -1;  // two earliest spikes after t
            for (int k = t + 1; k < stream.num_readouts && next2 < 0; ++k) {
                if (stream.at(x, y, k)) {
                    if (next1 < 0)
                        next1 = k;
                    else
                        next2 = k;
                }
            }

            int gap = 0;
            if (prev1 >= 0 && next1 >= 0)
                gap = next1 - prev1;  // bracketing pair
            else if (prev2 >= 0)
                gap = prev1 - prev2;  // none follow: two most recent
            else if (next2 >= 0)
                gap = next2 - next1;  // none precede: mirrored rule
            if (gap > 0)
                out.at(x, y) = clamp01(theta_over_sigma / static_cast<double>(gap));
            else
                out.at(x, y) = fallback.at(x, y);  // fewer than 2 spikes in stream
        }
    }
    return out;
}

}  // namespace spikegs
