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

#include "gsr/rasterizer.hpp"

#include "gsr/sh.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gsr {

namespace {

constexpr double kNearPlane = 0.01;
constexpr double kCovRegularization = 0.3;
constexpr double kAlphaClamp = 0.99;
constexpr double kAlphaSkip = 1.0 / 255.0;
constexpr double kMahalanobisCutoff = 9.0;  // 3-sigma ellipse

double max_eigenvalue(const Mat2& m) {
    const double mid = 0.5 * (m(0, 0) + m(1, 1));
    const double det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    return mid + std::sqrt(std::max(0.0, mid * mid - det));
}

}  // namespace

std::optional<Splat2D> project_gaussian(const GaussianPoint& g,
                                        const Camera& cam) {
    const Vec3 xc = cam.to_camera(g.position);
    const double z = xc.z();
    if (z <= kNearPlane) return std::nullopt;

    Splat2D s;
    s.view_depth = z;
    s.mean2d = Vec2(cam.fx * xc.x() / z + cam.cx,
                    cam.fy * xc.y() / z + cam.cy);

    const Mat3 rot = g.rotation.toRotationMatrix();
    const Mat3 sigma3 =
        rot * g.scale.cwiseProduct(g.scale).asDiagonal() * rot.transpose();
    Eigen::Matrix<double, 2, 3> jac;
    jac << cam.fx / z, 0.0, -cam.fx * xc.x() / (z * z),
        0.0, cam.fy / z, -cam.fy * xc.y() / (z * z);
    const Eigen::Matrix<double, 2, 3> jw = jac * cam.R;
    s.cov2d = jw * sigma3 * jw.transpose();
    s.cov2d += kCovRegularization * Mat2::Identity();

    const double radius = 3.0 * std::sqrt(max_eigenvalue(s.cov2d));
    if (s.mean2d.x() + radius < 0.0 || s.mean2d.x() - radius > cam.width - 1 ||
        s.mean2d.y() + radius < 0.0 || s.mean2d.y() - radius > cam.height - 1)
        return std::nullopt;
    return s;
}

int channel_count(Channel ch) {
    switch (ch) {
        case Channel::kAo:
        case Channel::kRoughness:
            return 1;
        default:
            return 3;
    }
}

std::vector<float> gaussian_channel_values(const GaussianScene& scene,
                                           const Camera& cam, Channel ch,
                                           const EnvMap* prefiltered,
                                           double s_d,
                                           const ShadingConfig& cfg) {
    const bool needs_env = ch == Channel::kPbr || ch == Channel::kDirect ||
                           ch == Channel::kIndirect;
    if (needs_env && prefiltered == nullptr)
        throw std::runtime_error(
            "gaussian_channel_values: this channel needs an environment map");
    const int C = channel_count(ch);
    std::vector<float> values(scene.points.size() * static_cast<size_t>(C),
                              0.0f);
    const Vec3 center = cam.center();
    for (size_t i = 0; i < scene.points.size(); ++i) {
        const auto& g = scene.points[i];
        float* out = values.data() + i * static_cast<size_t>(C);
        switch (ch) {
            case Channel::kPbr: {
                const Vec3 c = shade_gaussian(g, center, *prefiltered, s_d, cfg);
                for (int k = 0; k < 3; ++k) out[k] = static_cast<float>(c[k]);
                break;
            }
            case Channel::kAlbedo:
                for (int k = 0; k < 3; ++k)
                    out[k] = static_cast<float>(g.albedo[k]);
                break;
            case Channel::kNormal:
                for (int k = 0; k < 3; ++k)
                    out[k] = static_cast<float>(g.normal[k]);
                break;
            case Channel::kAo:
                out[0] = static_cast<float>(
                    ambient_occlusion(g.visibility, g.normal));
                break;
            case Channel::kRoughness:
                out[0] = static_cast<float>(g.roughness);
                break;
            case Channel::kDirect:
            case Channel::kIndirect: {
                // Cosine-weighted hemisphere means of the two components
                // of the incident radiance split.
                const auto samples =
                    sample_hemisphere(g.normal, cfg.sample_count, cfg.seed);
                Vec3 acc = Vec3::Zero();
                for (const auto& [dir, pdf] : samples) {
                    (void)pdf;
                    double vis = sh_eval(g.visibility, dir, true);
                    if (cfg.shadow_mode == ShadowMode::kHard)
                        vis = vis >= cfg.hard_threshold ? 1.0 : 0.0;
                    if (ch == Channel::kDirect) {
                        acc += vis * s_d * prefiltered->sample(dir);
                    } else {
                        const Vec3 ind(sh_eval(g.indirect[0], dir),
                                       sh_eval(g.indirect[1], dir),
                                       sh_eval(g.indirect[2], dir));
                        acc += (1.0 - vis) * ind;
                    }
                }
                acc /= cfg.sample_count;
                for (int k = 0; k < 3; ++k) out[k] = static_cast<float>(acc[k]);
                break;
            }
        }
    }
    return values;
}

RasterResult rasterize_values(const GaussianScene& scene, const Camera& cam,
                              const std::vector<float>& values, int channels) {
    if (values.size() != scene.points.size() * static_cast<size_t>(channels))
        throw std::runtime_error("rasterize_values: value count mismatch");
    if (cam.width <= 0 || cam.height <= 0)
        throw std::runtime_error("rasterize_values: empty viewport");

    std::vector<Splat2D> splats;
    splats.reserve(scene.points.size());
    for (size_t i = 0; i < scene.points.size(); ++i) {
        auto s = project_gaussian(scene.points[i], cam);
        if (s) {
            s->index = i;
            splats.push_back(*s);
        }
    }
    std::sort(splats.begin(), splats.end(),
              [](const Splat2D& a, const Splat2D& b) {
                  if (a.view_depth != b.view_depth)
                      return a.view_depth < b.view_depth;
                  return a.index < b.index;
              });

    const int W = cam.width, H = cam.height;
    RasterResult res;
    res.image = AttributeImage(W, H, channels);
    res.alpha = AttributeImage(W, H, 1);
    std::vector<double> transmittance(static_cast<size_t>(W) * H, 1.0);
    std::vector<double> accum(static_cast<size_t>(W) * H * channels, 0.0);

    // Splats are globally depth-sorted, so walking them in order while
    // keeping per-pixel transmittance reproduces the per-pixel
    // front-to-back blend exactly.
    for (const auto& s : splats) {
        const double det =
            s.cov2d(0, 0) * s.cov2d(1, 1) - s.cov2d(0, 1) * s.cov2d(1, 0);
        if (!(det > 0.0)) continue;
        const double ia = s.cov2d(1, 1) / det;
        const double ib = -s.cov2d(0, 1) / det;
        const double ic = s.cov2d(0, 0) / det;
        const double radius = 3.0 * std::sqrt(max_eigenvalue(s.cov2d));
        const int x0 = std::max(0, static_cast<int>(
                                       std::floor(s.mean2d.x() - radius)));
        const int x1 = std::min(W - 1, static_cast<int>(
                                           std::ceil(s.mean2d.x() + radius)));
        const int y0 = std::max(0, static_cast<int>(
                                       std::floor(s.mean2d.y() - radius)));
        const int y1 = std::min(H - 1, static_cast<int>(
                                           std::ceil(s.mean2d.y() + radius)));
        const double opacity = scene.points[s.index].opacity;
        const float* val =
            values.data() + s.index * static_cast<size_t>(channels);
        for (int y = y0; y <= y1; ++y) {
            for (int x = x0; x <= x1; ++x) {
                const double dx = x - s.mean2d.x();
                const double dy = y - s.mean2d.y();
                const double q = ia * dx * dx + 2.0 * ib * dx * dy +
                                 ic * dy * dy;
                if (q > kMahalanobisCutoff) continue;
                const double alpha =
                    std::min(kAlphaClamp, opacity * std::exp(-0.5 * q));
                if (alpha < kAlphaSkip) continue;
                const size_t pix = static_cast<size_t>(y) * W + x;
                const double w = alpha * transmittance[pix];
                for (int c = 0; c < channels; ++c)
                    accum[pix * channels + c] += w * val[c];
                transmittance[pix] *= 1.0 - alpha;
            }
        }
    }

    for (size_t pix = 0; pix < transmittance.size(); ++pix) {
        res.alpha.data[pix] = static_cast<float>(1.0 - transmittance[pix]);
        for (int c = 0; c < channels; ++c)
            res.image.data[pix * channels + c] =
                static_cast<float>(accum[pix * channels + c]);
    }
    return res;
}

RasterResult rasterize(const GaussianScene& scene, const Camera& cam,
                       Channel ch, const EnvMap* prefiltered, double s_d,
                       const ShadingConfig& cfg) {
    const auto values =
        gaussian_channel_values(scene, cam, ch, prefiltered, s_d, cfg);
    return rasterize_values(scene, cam, values, channel_count(ch));
}

}  // namespace gsr
