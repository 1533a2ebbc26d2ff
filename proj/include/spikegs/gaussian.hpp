#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <vector>

namespace spikegs {

inline double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }
inline double logit(double p) { return std::log(p / (1.0 - p)); }

// One monochrome 3D Gaussian primitive. Scales are stored in log space and
// opacity/intensity as logits so every stored parameter is unconstrained;
// activations are applied at render time.
struct Gaussian3D {
    Eigen::Vector3d position = Eigen::Vector3d::Zero();
    Eigen::Vector3d log_scale = Eigen::Vector3d::Zero();
    Eigen::Vector4d rotation = Eigen::Vector4d(1, 0, 0, 0);  // quaternion (w,x,y,z)
    double opacity_logit = 0.0;
    double intensity_logit = 0.0;

    double opacity() const { return sigmoid(opacity_logit); }
    double intensity() const { return sigmoid(intensity_logit); }
    Eigen::Vector3d scale() const { return log_scale.array().exp(); }
};

using GaussianCloud = std::vector<Gaussian3D>;

// Per-Gaussian parameter gradients, same layout as Gaussian3D.
struct GaussianGrad {
    Eigen::Vector3d position = Eigen::Vector3d::Zero();
    Eigen::Vector3d log_scale = Eigen::Vector3d::Zero();
    Eigen::Vector4d rotation = Eigen::Vector4d::Zero();
    double opacity_logit = 0.0;
    double intensity_logit = 0.0;
};

using SplatGradients = std::vector<GaussianGrad>;

}  // namespace spikegs
