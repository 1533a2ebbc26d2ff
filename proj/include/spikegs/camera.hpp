#pragma once

#include <Eigen/Dense>

namespace spikegs {

// Pinhole camera. Extrinsics are world-to-camera: x_cam = R * x_world + t.
// Camera frame: +x right, +y down, +z forward. Pixel (ix,iy) samples the
// continuous image point (ix, iy); projection is u = fx*x/z + cx.
struct PinholeCamera {
    Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
    Eigen::Vector3d translation = Eigen::Vector3d::Zero();
    double fx = 100.0, fy = 100.0;
    double cx = 0.0, cy = 0.0;
    int width = 0, height = 0;
    double near_plane = 0.1;
};

// Camera at `position` looking toward `target`, with `up` fixing the roll.
inline PinholeCamera look_at_camera(const Eigen::Vector3d& position,
                                    const Eigen::Vector3d& target,
                                    const Eigen::Vector3d& up, double fx, double fy,
                                    double cx, double cy, int width, int height,
                                    double near_plane = 0.1) {
    Eigen::Vector3d forward = (target - position).normalized();
    Eigen::Vector3d right = forward.cross(up);
    if (right.norm() < 1e-9) {
        // forward parallel to up: pick any perpendicular axis
        Eigen::Vector3d alt = std::abs(forward.x()) < 0.9 ? Eigen::Vector3d::UnitX()
                                                          : Eigen::Vector3d::UnitY();
        right = forward.cross(alt);
    }
    right.normalize();
    Eigen::Vector3d down = forward.cross(right);

    PinholeCamera cam;
    cam.rotation.row(0) = right;
    cam.rotation.row(1) = down;
    cam.rotation.row(2) = forward;
    cam.translation = -cam.rotation * position;
    cam.fx = fx;
    cam.fy = fy;
    cam.cx = cx;
    cam.cy = cy;
    cam.width = width;
    cam.height = height;
    cam.near_plane = near_plane;
    return cam;
}

}  // namespace spikegs
