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

#include "gsr/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace gsr {

Vec3 unproject(double u, double v, double depth, const Camera& cam) {
    if (!(depth > 0.0)) throw std::runtime_error("unproject: depth <= 0");
    const Vec3 ray((u - cam.cx) / cam.fx, (v - cam.cy) / cam.fy, 1.0);
    return cam.R.transpose() * (ray * depth - cam.t);
}

void project_point(const Camera& cam, const Vec3& x, double& u, double& v,
                   double& depth) {
    const Vec3 xc = cam.to_camera(x);
    depth = xc.z();
    u = cam.fx * xc.x() / xc.z() + cam.cx;
    v = cam.fy * xc.y() / xc.z() + cam.cy;
}

AttributeImage position_map(const AttributeImage& depth, const Camera& cam) {
    if (depth.channels != 1)
        throw std::runtime_error("position_map: depth must be 1-channel");
    AttributeImage out(depth.width, depth.height, 3);
    out.mask.assign(static_cast<size_t>(depth.width) * depth.height, 0);
    for (int y = 0; y < depth.height; ++y) {
        for (int x = 0; x < depth.width; ++x) {
            const double d = depth.at(x, y, 0);
            if (!depth.foreground(x, y) || !(d > 0.0)) continue;
            const Vec3 p = unproject(x, y, d, cam);
            out.at(x, y, 0) = static_cast<float>(p.x());
            out.at(x, y, 1) = static_cast<float>(p.y());
            out.at(x, y, 2) = static_cast<float>(p.z());
            out.mask[static_cast<size_t>(y) * depth.width + x] = 1;
        }
    }
    return out;
}

namespace {

inline Vec3 read_vec3(const AttributeImage& img, int x, int y) {
    return Vec3(img.at(x, y, 0), img.at(x, y, 1), img.at(x, y, 2));
}

inline void write_vec3(AttributeImage& img, int x, int y, const Vec3& v) {
    img.at(x, y, 0) = static_cast<float>(v.x());
    img.at(x, y, 1) = static_cast<float>(v.y());
    img.at(x, y, 2) = static_cast<float>(v.z());
}

}  // namespace

AttributeImage coarse_normals(const AttributeImage& position,
                              const Camera& cam) {
    if (position.channels != 3)
        throw std::runtime_error("coarse_normals: expected 3 channels");
    const int w = position.width, h = position.height;
    AttributeImage out(w, h, 3);
    out.mask.assign(static_cast<size_t>(w) * h, 0);
    const Vec3 center = cam.center();
    auto fg = [&](int x, int y) { return position.foreground(x, y); };
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            if (!fg(x, y)) continue;
            // Forward differences, backward at the image borders; a
            // neighbor off the foreground also falls back to backward.
            int xa = x, xb = x + 1;
            if (xb >= w || !fg(xb, y)) { xa = x - 1; xb = x; }
            int ya = y, yb = y + 1;
            if (yb >= h || !fg(x, yb)) { ya = y - 1; yb = y; }
            if (xa < 0 || ya < 0 || !fg(xa, y) || !fg(x, ya)) continue;
            const Vec3 du = read_vec3(position, xb, y) - read_vec3(position, xa, y);
            const Vec3 dv = read_vec3(position, x, yb) - read_vec3(position, x, ya);
            Vec3 n = du.cross(dv);
            const double len = n.norm();
            if (!(len > 0.0)) continue;  // degenerate gradient
            n /= len;
            if (n.dot(center - read_vec3(position, x, y)) < 0.0) n = -n;
            write_vec3(out, x, y, n);
            out.mask[static_cast<size_t>(y) * w + x] = 1;
        }
    }
    return out;
}

AttributeImage refine_normals(const AttributeImage& coarse,
                              const AttributeImage& delta) {
    if (coarse.width != delta.width || coarse.height != delta.height ||
        coarse.channels != 3 || delta.channels != 3)
        throw std::runtime_error("refine_normals: shape mismatch");
    AttributeImage out(coarse.width, coarse.height, 3);
    out.mask.assign(static_cast<size_t>(coarse.width) * coarse.height, 0);
    for (int y = 0; y < coarse.height; ++y) {
        for (int x = 0; x < coarse.width; ++x) {
            if (!coarse.foreground(x, y)) continue;
            const Vec3 s = read_vec3(coarse, x, y) + read_vec3(delta, x, y);
            const double len = s.norm();
            if (len < 1e-8) continue;
            write_vec3(out, x, y, s / len);
            out.mask[static_cast<size_t>(y) * coarse.width + x] = 1;
        }
    }
    return out;
}

CorrelationVolume correlation_volume(const FeatureTensor& left,
                                     const FeatureTensor& right) {
    if (left.width != right.width || left.height != right.height ||
        left.channels != right.channels)
        throw std::runtime_error("correlation_volume: shape mismatch");
    CorrelationVolume vol;
    vol.height = left.height;
    vol.width = left.width;
    vol.m.assign(static_cast<size_t>(vol.height) * vol.width * vol.width,
                 0.0f);
    const int C = left.channels;
    for (int i = 0; i < vol.height; ++i)
        for (int j = 0; j < vol.width; ++j)
            for (int k = 0; k < vol.width; ++k) {
                double dot = 0.0;
                for (int l = 0; l < C; ++l)
                    dot += static_cast<double>(left.at(j, i, l)) *
                           right.at(k, i, l);
                vol.m[(static_cast<size_t>(i) * vol.width + j) * vol.width +
                      k] = static_cast<float>(dot);
            }
    return vol;
}

AttributeImage stereo_depth_baseline(const CorrelationVolume& vol, double fx,
                                     double baseline) {
    if (!(baseline > 0.0))
        throw std::runtime_error("stereo_depth_baseline: baseline <= 0");
    AttributeImage depth(vol.width, vol.height, 1);
    depth.mask.assign(static_cast<size_t>(vol.width) * vol.height, 0);
    for (int i = 0; i < vol.height; ++i) {
        for (int j = 0; j < vol.width; ++j) {
            // Winner-take-all over k <= j; ties go to the larger k,
            // i.e. the smaller disparity.
            int best_k = 0;
            float best = vol.at(i, j, 0);
            for (int k = 1; k <= j; ++k) {
                const float m = vol.at(i, j, k);
                if (m >= best) {
                    best = m;
                    best_k = k;
                }
            }
            const int disparity = j - best_k;
            if (disparity <= 0) continue;
            depth.at(j, i, 0) = static_cast<float>(fx * baseline / disparity);
            depth.mask[static_cast<size_t>(i) * vol.width + j] = 1;
        }
    }
    return depth;
}

AttributeImage convex_upsample(const AttributeImage& field,
                               const AttributeImage& weights, int factor) {
    if (factor < 1) throw std::runtime_error("convex_upsample: factor < 1");
    if (weights.width != field.width || weights.height != field.height ||
        weights.channels != 9 * factor * factor)
        throw std::runtime_error(
            "convex_upsample: weights must be coarse-resolution with 9*f^2 "
            "channels");
    for (float w : weights.data)
        if (!std::isfinite(w))
            throw std::runtime_error("convex_upsample: non-finite weight");

    const int cw = field.width, ch = field.height, C = field.channels;
    AttributeImage out(cw * factor, ch * factor, C);
    auto clampi = [](int v, int lo, int hi) {
        return std::min(hi, std::max(lo, v));
    };
    for (int cy = 0; cy < ch; ++cy) {
        for (int cx = 0; cx < cw; ++cx) {
            for (int sy = 0; sy < factor; ++sy) {
                for (int sx = 0; sx < factor; ++sx) {
                    const int base = (sy * factor + sx) * 9;
                    // softmax over the 9 neighborhood logits
                    double logits[9];
                    double maxl = -1e300;
                    for (int n = 0; n < 9; ++n) {
                        logits[n] = weights.at(cx, cy, base + n);
                        maxl = std::max(maxl, logits[n]);
                    }
                    double wsum = 0.0, wv[9];
                    for (int n = 0; n < 9; ++n) {
                        wv[n] = std::exp(logits[n] - maxl);
                        wsum += wv[n];
                    }
                    const int fy = cy * factor + sy;
                    const int fx_ = cx * factor + sx;
                    for (int c = 0; c < C; ++c) {
                        double acc = 0.0;
                        for (int n = 0; n < 9; ++n) {
                            const int ny = clampi(cy + n / 3 - 1, 0, ch - 1);
                            const int nx = clampi(cx + n % 3 - 1, 0, cw - 1);
                            acc += wv[n] / wsum * field.at(nx, ny, c);
                        }
                        out.at(fx_, fy, c) = static_cast<float>(acc);
                    }
                }
            }
        }
    }
    return out;
}

}  // namespace gsr
