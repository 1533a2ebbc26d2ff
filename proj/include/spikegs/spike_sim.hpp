#pragma once

#include <cstdint>

#include "spikegs/spike.hpp"

namespace spikegs {

// Integrate-and-fire camera parameters. Default normalization: threshold ==
// conversion == 1 in readout units, so constant intensity 1 fires every
// readout and reconstructions live in [0,1] without rescaling.
struct SpikeCamParams {
    double threshold = 1.0;     // accumulated-charge units, > 0
    double conversion = 1.0;    // charge per unit intensity per readout, > 0
    uint32_t tau_ns = 25000;    // readout interval, > 0
    double photon_scale = 200.0;  // Poisson mode: expected photons per unit intensity per readout
    double dark_rate = 0.0;       // expected spurious counts per readout, >= 0

    void validate() const;
};

// Deterministic accumulation: per readout the pixel voltage rises by
// conversion * I; a spike is emitted iff the voltage crosses the threshold
// within that readout, and the voltage wraps modulo the threshold (multiple
// crossings in one interval still read out a single binary spike).
SpikeStream simulate_ideal(const IntensitySequence& frames, const SpikeCamParams& params,
                           const IntegratorState& initial);

// Photon-count accumulation: per readout the increment is
// poisson(photon_scale * I + dark_rate) * conversion / photon_scale, which
// matches the ideal firing rate in expectation when dark_rate is zero.
// Initial voltages are per-pixel uniform in [0, threshold), derived from the
// seed. Each pixel owns an independent RNG stream (seed + pixel index), so
// results do not depend on traversal or parallel schedule.
SpikeStream simulate_poisson(const IntensitySequence& frames, const SpikeCamParams& params,
                             uint64_t seed);

}  // namespace spikegs
