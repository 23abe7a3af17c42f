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

#ifndef GSR_GEOMETRY_HPP
#define GSR_GEOMETRY_HPP

#include "gsr/types.hpp"

namespace gsr {

struct FeatureTensor {
    int width = 0, height = 0, channels = 0;
    std::vector<float> data;  // row-major, W*H*C

    FeatureTensor() = default;
    FeatureTensor(int w, int h, int c)
        : width(w), height(h), channels(c),
          data(static_cast<size_t>(w) * h * c, 0.0f) {}
    float& at(int x, int y, int c) {
        return data[(static_cast<size_t>(y) * width + x) * channels + c];
    }
    float at(int x, int y, int c) const {
        return data[(static_cast<size_t>(y) * width + x) * channels + c];
    }
};

// All-pairs feature correlations per row: m[i,j,k] = <left(i,j), right(i,k)>.
struct CorrelationVolume {
    int height = 0, width = 0;
    std::vector<float> m;  // H*W*W

    float at(int i, int j, int k) const {
        return m[(static_cast<size_t>(i) * width + j) * width + k];
    }
};

// X = R^T (K^-1 (u,v,1) * depth - t). Throws for depth <= 0.
Vec3 unproject(double u, double v, double depth, const Camera& cam);

// Inverse of unproject: pixel coordinates and camera-space depth of a
// world point.
void project_point(const Camera& cam, const Vec3& x, double& u, double& v,
                   double& depth);

// Per-pixel unprojection of a depth map. Background (mask-false or
// depth <= 0) pixels are zeroed and masked out in the result.
AttributeImage position_map(const AttributeImage& depth, const Camera& cam);

// Cross product of horizontal and vertical position gradients, normalized,
// then flipped so every normal faces the camera center. Forward differences,
// falling back to backward differences at the right/bottom borders.
// Degenerate (zero-gradient) pixels are invalidated in the mask.
AttributeImage coarse_normals(const AttributeImage& position,
                              const Camera& cam);

// N_f = (N_c + dN) / ||N_c + dN||; pixels where the sum nearly vanishes
// are invalidated.
AttributeImage refine_normals(const AttributeImage& coarse,
                              const AttributeImage& delta);

CorrelationVolume correlation_volume(const FeatureTensor& left,
                                     const FeatureTensor& right);

// Deterministic winner-take-all disparity from the correlation volume:
// disparity(i,j) = j - argmax_{k<=j} m[i,j,k], ties broken toward the
// smaller disparity; depth = fx * baseline / disparity. Pixels with
// disparity <= 0 are invalidated.
AttributeImage stereo_depth_baseline(const CorrelationVolume& vol, double fx,
                                     double baseline);

// Each fine pixel is a softmax-weighted convex combination of its 3x3
// coarse neighborhood (edge-replicated). Weights live at coarse
// resolution with 9*f^2 channels, laid out as
// (sub_y * f + sub_x) * 9 + (ny * 3 + nx).
AttributeImage convex_upsample(const AttributeImage& field,
                               const AttributeImage& weights, int factor);

}  // namespace gsr

#endif  // GSR_GEOMETRY_HPP
