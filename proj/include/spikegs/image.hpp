#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <vector>

namespace spikegs {

// Grayscale intensity field, row-major, values nominally in [0,1].
struct Image {
    int width = 0;
    int height = 0;
    std::vector<double> data;

    Image() = default;
    Image(int w, int h, double fill = 0.0)
        : width(w), height(h), data(static_cast<size_t>(w) * h, fill) {}

    double& at(int x, int y) { return data[static_cast<size_t>(y) * width + x]; }
    double at(int x, int y) const { return data[static_cast<size_t>(y) * width + x]; }

    size_t pixel_count() const { return data.size(); }

    bool same_shape(const Image& o) const {
        return width == o.width && height == o.height;
    }
};

inline double mean_abs_diff(const Image& a, const Image& b) {
    assert(a.same_shape(b));
    double s = 0.0;
    for (size_t i = 0; i < a.data.size(); ++i) s += std::abs(a.data[i] - b.data[i]);
    return a.data.empty() ? 0.0 : s / static_cast<double>(a.data.size());
}

inline double max_abs_diff(const Image& a, const Image& b) {
    assert(a.same_shape(b));
    double m = 0.0;
    for (size_t i = 0; i < a.data.size(); ++i) m = std::max(m, std::abs(a.data[i] - b.data[i]));
    return m;
}

inline double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

}  // namespace spikegs
