/*
 * Copyright (C) 2026 The gsr Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef GSR_TYPES_HPP
#define GSR_TYPES_HPP

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <array>
#include <cstdint>
#include <vector>

namespace gsr {

using Vec3 = Eigen::Vector3d;
using Vec2 = Eigen::Vector2d;
using Mat3 = Eigen::Matrix3d;
using Mat2 = Eigen::Matrix2d;
using Quat = Eigen::Quaterniond;

// Real spherical-harmonics coefficients, bands 0..3, 16 scalars.
// Ordering is (l,m) = (0,0),(1,-1),(1,0),(1,1),(2,-2),...,(3,3).
struct SHCoeffs {
    std::array<double, 16> c{};

    double& operator[](int i) { return c[static_cast<size_t>(i)]; }
    double operator[](int i) const { return c[static_cast<size_t>(i)]; }

    static constexpr int kCount = 16;
};

// One splat: geometry, material and SH light-transport attributes.
struct GaussianPoint {
    Vec3 position = Vec3::Zero();
    Quat rotation = Quat::Identity();   // unit, (w,x,y,z)
    Vec3 scale = Vec3::Ones();          // per-axis std-dev, > 0
    double opacity = 1.0;               // [0,1]
    Vec3 normal = Vec3::UnitZ();        // unit
    SHCoeffs visibility;                // v, 16 scalars
    Vec3 albedo = Vec3::Zero();         // [0,1]^3
    double roughness = 0.5;             // [0,1]
    std::array<SHCoeffs, 3> indirect;   // l_ind, RGB x 16
};

struct GaussianScene {
    std::vector<GaussianPoint> points;  // order is identity for tie-breaking
    Vec3 bbox_min = Vec3::Zero();
    Vec3 bbox_max = Vec3::Zero();

    void recompute_bbox();
};

// Pinhole camera, world-to-camera R|t, pixel intrinsics.
struct Camera {
    double fx = 1.0, fy = 1.0, cx = 0.0, cy = 0.0;
    Mat3 R = Mat3::Identity();
    Vec3 t = Vec3::Zero();
    int width = 0, height = 0;

    Vec3 center() const { return -R.transpose() * t; }
    Vec3 to_camera(const Vec3& x) const { return R * x + t; }
};

// H x W x C float image with an optional per-pixel foreground mask.
struct AttributeImage {
    int width = 0, height = 0, channels = 0;
    std::vector<float> data;          // row-major, size W*H*C
    std::vector<uint8_t> mask;        // empty, or size W*H (1 = foreground)

    AttributeImage() = default;
    AttributeImage(int w, int h, int c)
        : width(w), height(h), channels(c),
          data(static_cast<size_t>(w) * h * c, 0.0f) {}

    bool has_mask() const { return !mask.empty(); }
    bool foreground(int x, int y) const {
        return mask.empty() || mask[static_cast<size_t>(y) * width + x] != 0;
    }
    float& at(int x, int y, int c) {
        return data[(static_cast<size_t>(y) * width + x) * channels + c];
    }
    float at(int x, int y, int c) const {
        return data[(static_cast<size_t>(y) * width + x) * channels + c];
    }
};

}  // namespace gsr

#endif  // GSR_TYPES_HPP
