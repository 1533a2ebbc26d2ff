#include "spikegs/metrics.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace spikegs {

double psnr(const Image& a, const Image& b) {
    if (!a.same_shape(b)) throw std::invalid_argument("psnr: dimension mismatch");
    double mse = 0.0;
    for (size_t i = 0; i < a.data.size(); ++i) {
        double d = a.data[i] - b.data[i];
        mse += d * d;
    }
    mse /= static_cast<double>(a.data.size());
    if (mse == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(1.0 / mse);
}

namespace {

constexpr int kWin = 11;
constexpr int kHalf = kWin / 2;
constexpr double kC1 = 0.01 * 0.01;
constexpr double kC2 = 0.03 * 0.03;

std::array<double, kWin> gaussian_kernel() {
    std::array<double, kWin> k{};
    const double sigma = 1.5;
    double sum = 0.0;
    for (int i = 0; i < kWin; ++i) {
        double d = i - kHalf;
        k[i] = std::exp(-d * d / (2.0 * sigma * sigma));
        sum += k[i];
    }
    for (double& v : k) v /= sum;
    return k;
}

// separable Gaussian filter, valid region only (output is (w-10)x(h-10))
Image filter_valid(const Image& im) {
    static const std::array<double, kWin> k = gaussian_kernel();
    const int vw = im.width - 2 * kHalf, vh = im.height - 2 * kHalf;
    Image tmp(vw, im.height);
    for (int y = 0; y < im.height; ++y)
        for (int x = 0; x < vw; ++x) {
            double s = 0.0;
            for (int i = 0; i < kWin; ++i) s += k[i] * im.at(x + i, y);
            tmp.at(x, y) = s;
        }
    Image out(vw, vh);
    for (int y = 0; y < vh; ++y)
        for (int x = 0; x < vw; ++x) {
            double s = 0.0;
            for (int i = 0; i < kWin; ++i) s += k[i] * tmp.at(x, y + i);
            out.at(x, y) = s;
        }
    return out;
}

Image dot(const Image& a, const Image& b) {
    Image out(a.width, a.height);
    for (size_t i = 0; i < a.data.size(); ++i) out.data[i] = a.data[i] * b.data[i];
    return out;
}

}  // namespace

double ssim(const Image& a, const Image& b) {
    if (!a.same_shape(b)) throw std::invalid_argument("ssim: dimension mismatch");
    if (a.width < kWin || a.height < kWin)
        throw std::invalid_argument("ssim: image smaller than filter window");

    Image mu_a = filter_valid(a);
    Image mu_b = filter_valid(b);
    Image aa = filter_valid(dot(a, a));
    Image bb = filter_valid(dot(b, b));
    Image ab = filter_valid(dot(a, b));

    double total = 0.0;
    for (size_t i = 0; i < mu_a.data.size(); ++i) {
        double ma = mu_a.data[i], mb = mu_b.data[i];
        double va = aa.data[i] - ma * ma;
        double vb = bb.data[i] - mb * mb;
        double cov = ab.data[i] - ma * mb;
        double num = (2.0 * ma * mb + kC1) * (2.0 * cov + kC2);
        double den = (ma * ma + mb * mb + kC1) * (va + vb + kC2);
        total += num / den;
    }
    return total / static_cast<double>(mu_a.data.size());
}

MetricReport evaluate(const Image& a, const Image& b) {
    return MetricReport{psnr(a, b), ssim(a, b)};
}

}  // namespace spikegs
