#pragma once

#include <optional>

#include "spikegs/camera.hpp"
#include "spikegs/gaussian.hpp"
#include "spikegs/image.hpp"

namespace spikegs {

// Screen-space footprint of a projected Gaussian.
struct Projected2D {
    Eigen::Vector2d mean;
    Eigen::Matrix2d cov;  // includes the 0.3 px^2 isotropic floor
    double depth;
};

// EWA-style projection: cov2d = J * W * Sigma * W^T * J^T with W the view
// rotation and J the perspective Jacobian at the mean. Returns nullopt when
// the Gaussian lies behind the near plane (culled, not an error).
std::optional<Projected2D> project(const Gaussian3D& g, const PinholeCamera& cam);

struct RenderOutput {
    Image image;
    Image transmittance;            // remaining T per pixel, in [0,1]
    std::vector<int> contributing;  // composited Gaussian count per pixel
};

// Front-to-back alpha compositing over the depth-sorted cloud (ties broken by
// index). Contributions with alpha < 1/255 or beyond 3 sigma are skipped;
// remaining transmittance multiplies the background.
RenderOutput render(const GaussianCloud& cloud, const PinholeCamera& cam,
                    double background);

// Exact reverse-mode gradients of sum(upstream * image) with respect to every
// Gaussian parameter. The alpha/3-sigma cutoffs and the depth ordering are
// treated as constants. Optionally accumulates per-Gaussian screen-space mean
// gradients (used by adaptive density control).
SplatGradients render_backward(const GaussianCloud& cloud, const PinholeCamera& cam,
                               double background, const Image& upstream,
                               std::vector<Eigen::Vector2d>* mean2d_grads = nullptr);

}  // namespace spikegs
