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

#ifndef GSR_ENVLIGHT_HPP
#define GSR_ENVLIGHT_HPP

#include <utility>

#include "gsr/types.hpp"

namespace gsr {

// Equirectangular direction convention, frozen for every map in the
// toolkit: polar angle theta measured from +Y, azimuth phi from +X
// toward +Z, texel centers at half-pixel offsets:
//   theta = pi * (v + 0.5) / H
//   phi   = 2pi * (u + 0.5) / W
//   d     = (sin t cos p, cos t, sin t sin p)
Vec3 pixel_to_dir(double u, double v, int width, int height);

// Rounded inverse of pixel_to_dir (texel containing the direction).
std::pair<int, int> dir_to_pixel(const Vec3& d, int width, int height);

// Per-texel solid angle of row v: sin(theta_v) * (pi/H) * (2pi/W).
double texel_solid_angle(int v, int width, int height);

// Equirectangular HDR radiance map, RGB row-major.
struct EnvMap {
    int width = 0, height = 0;
    std::vector<float> rgb;  // size 3*W*H

    EnvMap() = default;
    EnvMap(int w, int h)
        : width(w), height(h), rgb(static_cast<size_t>(3) * w * h, 0.0f) {}

    Vec3 texel(int u, int v) const {
        size_t i = (static_cast<size_t>(v) * width + u) * 3;
        return Vec3(rgb[i], rgb[i + 1], rgb[i + 2]);
    }
    void set_texel(int u, int v, const Vec3& c) {
        size_t i = (static_cast<size_t>(v) * width + u) * 3;
        rgb[i] = static_cast<float>(c.x());
        rgb[i + 1] = static_cast<float>(c.y());
        rgb[i + 2] = static_cast<float>(c.z());
    }
    // Bilinear lookup at an arbitrary unit direction, wrapping in azimuth
    // and clamping at the poles.
    Vec3 sample(const Vec3& dir) const;
};

struct PrefilterConfig {
    double exponent = 16.0;  // Phong shininess, >= 1
    int out_width = 64;
    int out_height = 32;
};

// Cosine-power prefilter:
//   L'(w') = sum_texels max(0, w'.w)^l * L(w) * dOmega
// The kernel is deliberately unnormalized; the direct-light scaling
// factor s_d compensates globally for the lost energy.
EnvMap prefilter(const EnvMap& env, const PrefilterConfig& cfg);

// Mean of a 1-channel scaling map over its foreground mask (all pixels
// when no mask is present). Throws when the foreground is empty.
double average_scaling(const AttributeImage& sd_map);

// Incident radiance from direction w:
//   L(w) = V * (s_d * direct) + (1 - V) * indirect
// The V = 0 and V = 1 endpoints are returned exactly.
Vec3 compose_incident(double visibility, double s_d, const Vec3& direct,
                      const Vec3& indirect);

// Conversions to/from the generic image type (3-channel RGB).
EnvMap env_from_image(const AttributeImage& img);
AttributeImage image_from_env(const EnvMap& env);

}  // namespace gsr

#endif  // GSR_ENVLIGHT_HPP
