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

#ifndef GSR_RASTERIZER_HPP
#define GSR_RASTERIZER_HPP

#include <optional>

#include "gsr/shading.hpp"
#include "gsr/types.hpp"

namespace gsr {

struct Splat2D {
    Vec2 mean2d = Vec2::Zero();
    Mat2 cov2d = Mat2::Identity();  // regularized (+0.3 on the diagonal)
    double view_depth = 0.0;
    size_t index = 0;
};

// EWA projection of one Gaussian. Sigma_3d = R diag(s)^2 R^T is pushed
// through the camera rotation and the perspective Jacobian at the point.
// Returns nullopt when the point is behind the near plane (z <= 0.01) or
// its 3-sigma footprint misses the viewport.
std::optional<Splat2D> project_gaussian(const GaussianPoint& g,
                                        const Camera& cam);

enum class Channel {
    kPbr,
    kAlbedo,
    kNormal,
    kAo,
    kRoughness,
    kDirect,
    kIndirect,
};

int channel_count(Channel ch);

// Per-Gaussian values for a channel, laid out N x channel_count.
// kPbr/kDirect/kIndirect need the prefiltered environment; the others
// ignore it.
std::vector<float> gaussian_channel_values(const GaussianScene& scene,
                                           const Camera& cam, Channel ch,
                                           const EnvMap* prefiltered,
                                           double s_d,
                                           const ShadingConfig& cfg);

struct RasterResult {
    AttributeImage image;
    AttributeImage alpha;  // 1 channel, 1 - prod(1 - alpha_i)
};

// Alpha-blend per-Gaussian values front to back. Splats are sorted by
// view depth, ties by source index. Per pixel:
//   alpha_i = min(0.99, opacity * exp(-0.5 d^T cov^-1 d))
// with contributions dropped beyond the 3-sigma ellipse (d^T cov^-1 d > 9)
// or below 1/255. The footprint loop only visits the 3-sigma bounding
// box, which is exact because of the ellipse cutoff.
RasterResult rasterize_values(const GaussianScene& scene, const Camera& cam,
                              const std::vector<float>& values, int channels);

RasterResult rasterize(const GaussianScene& scene, const Camera& cam,
                       Channel ch, const EnvMap* prefiltered, double s_d,
                       const ShadingConfig& cfg);

}  // namespace gsr

#endif  // GSR_RASTERIZER_HPP
