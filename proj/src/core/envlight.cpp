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

#include "gsr/envlight.hpp"

#include <cmath>
#include <stdexcept>

namespace gsr {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// x^l with a multiply chain when l is a small integer; pow() otherwise.
inline double cos_power(double x, double l, int int_l) {
    if (int_l >= 0) {
        double acc = 1.0, base = x;
        int e = int_l;
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }
    return std::pow(x, l);
}

}  // namespace

Vec3 pixel_to_dir(double u, double v, int width, int height) {
    if (u < -0.5 || u > width - 0.5 || v < -0.5 || v > height - 0.5)
        throw std::runtime_error("pixel_to_dir: pixel out of range");
    const double theta = kPi * (v + 0.5) / height;
    const double phi = 2.0 * kPi * (u + 0.5) / width;
    const double st = std::sin(theta);
    return Vec3(st * std::cos(phi), std::cos(theta), st * std::sin(phi));
}

std::pair<int, int> dir_to_pixel(const Vec3& d, int width, int height) {
    const double theta = std::acos(std::min(1.0, std::max(-1.0, d.y())));
    double phi = std::atan2(d.z(), d.x());
    if (phi < 0.0) phi += 2.0 * kPi;
    int u = static_cast<int>(std::lround(phi * width / (2.0 * kPi) - 0.5));
    int v = static_cast<int>(std::lround(theta * height / kPi - 0.5));
    u = ((u % width) + width) % width;
    v = std::min(height - 1, std::max(0, v));
    return {u, v};
}

double texel_solid_angle(int v, int width, int height) {
    const double theta = kPi * (v + 0.5) / height;
    return std::sin(theta) * (kPi / height) * (2.0 * kPi / width);
}

Vec3 EnvMap::sample(const Vec3& dir) const {
    const double theta = std::acos(std::min(1.0, std::max(-1.0, dir.y())));
    double phi = std::atan2(dir.z(), dir.x());
    if (phi < 0.0) phi += 2.0 * kPi;
    const double fu = phi * width / (2.0 * kPi) - 0.5;
    const double fv = theta * height / kPi - 0.5;
    const int u0 = static_cast<int>(std::floor(fu));
    const int v0 = static_cast<int>(std::floor(fv));
    const double au = fu - u0;
    const double av = fv - v0;
    auto wrap_u = [this](int u) { return ((u % width) + width) % width; };
    auto clamp_v = [this](int v) {
        return std::min(height - 1, std::max(0, v));
    };
    const Vec3 c00 = texel(wrap_u(u0), clamp_v(v0));
    const Vec3 c10 = texel(wrap_u(u0 + 1), clamp_v(v0));
    const Vec3 c01 = texel(wrap_u(u0), clamp_v(v0 + 1));
    const Vec3 c11 = texel(wrap_u(u0 + 1), clamp_v(v0 + 1));
    return (1.0 - av) * ((1.0 - au) * c00 + au * c10) +
           av * ((1.0 - au) * c01 + au * c11);
}

EnvMap prefilter(const EnvMap& env, const PrefilterConfig& cfg) {
    if (env.width <= 0 || env.height <= 0)
        throw std::runtime_error("prefilter: empty environment map");
    if (!(cfg.exponent >= 1.0))
        throw std::runtime_error("prefilter: exponent must be >= 1");
    if (cfg.out_width < 4 || cfg.out_height < 2)
        throw std::runtime_error("prefilter: output must be at least 4x2");
    for (float v : env.rgb)
        if (!std::isfinite(v))
            throw std::runtime_error("prefilter: non-finite input");

    const int int_l =
        (cfg.exponent == std::floor(cfg.exponent) && cfg.exponent <= 1024.0)
            ? static_cast<int>(cfg.exponent)
            : -1;

    // Input texel directions and solid angles, hoisted out of the loop.
    const size_t n_in = static_cast<size_t>(env.width) * env.height;
    std::vector<Vec3> dirs(n_in);
    std::vector<double> domega(n_in);
    std::vector<Vec3> radiance(n_in);
    for (int v = 0; v < env.height; ++v) {
        const double dw = texel_solid_angle(v, env.width, env.height);
        for (int u = 0; u < env.width; ++u) {
            const size_t i = static_cast<size_t>(v) * env.width + u;
            dirs[i] = pixel_to_dir(u, v, env.width, env.height);
            domega[i] = dw;
            radiance[i] = env.texel(u, v);
        }
    }

    EnvMap out(cfg.out_width, cfg.out_height);
    for (int ov = 0; ov < cfg.out_height; ++ov) {
        for (int ou = 0; ou < cfg.out_width; ++ou) {
            const Vec3 wprime =
                pixel_to_dir(ou, ov, cfg.out_width, cfg.out_height);
            Vec3 acc = Vec3::Zero();
            for (size_t i = 0; i < n_in; ++i) {
                const double c = wprime.dot(dirs[i]);
                if (c <= 0.0) continue;
                acc += cos_power(c, cfg.exponent, int_l) * domega[i] *
                       radiance[i];
            }
            out.set_texel(ou, ov, acc);
        }
    }
    return out;
}

double average_scaling(const AttributeImage& sd_map) {
    if (sd_map.channels != 1)
        throw std::runtime_error("average_scaling: expected 1 channel");
    double sum = 0.0;
    size_t count = 0;
    for (int y = 0; y < sd_map.height; ++y)
        for (int x = 0; x < sd_map.width; ++x)
            if (sd_map.foreground(x, y)) {
                sum += sd_map.at(x, y, 0);
                ++count;
            }
    if (count == 0)
        throw std::runtime_error("average_scaling: empty foreground");
    return sum / static_cast<double>(count);
}

EnvMap env_from_image(const AttributeImage& img) {
    if (img.channels != 3)
        throw std::runtime_error("env_from_image: expected 3 channels");
    for (float v : img.data)
        if (!std::isfinite(v) || v < 0.0f)
            throw std::runtime_error(
                "env_from_image: radiance must be nonnegative and finite");
    EnvMap env(img.width, img.height);
    env.rgb = img.data;
    return env;
}

AttributeImage image_from_env(const EnvMap& env) {
    AttributeImage img(env.width, env.height, 3);
    img.data = env.rgb;
    return img;
}

Vec3 compose_incident(double visibility, double s_d, const Vec3& direct,
                      const Vec3& indirect) {
    // Exact endpoints so that the unused branch has zero influence even
    // in floating point.
    if (visibility >= 1.0) return s_d * direct;
    if (visibility <= 0.0) return indirect;
    return visibility * (s_d * direct) + (1.0 - visibility) * indirect;
}

}  // namespace gsr
