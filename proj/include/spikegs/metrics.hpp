#pragma once

#include "spikegs/image.hpp"

namespace spikegs {

struct MetricReport {
    double psnr = 0.0;  // dB; +inf for identical images
    double ssim = 0.0;
};

// 10*log10(1/MSE) with peak 1. Identical images report +infinity.
double psnr(const Image& a, const Image& b);

// Single-scale SSIM, 11x11 Gaussian window sigma=1.5, K1=0.01, K2=0.03,
// dynamic range 1, mean over pixels where the full window fits.
double ssim(const Image& a, const Image& b);

MetricReport evaluate(const Image& a, const Image& b);

}  // namespace spikegs
