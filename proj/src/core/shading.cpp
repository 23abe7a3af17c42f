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

#include "gsr/shading.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "gsr/sh.hpp"

namespace gsr {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kOpaqueOpacity = 0.5;  // ellipsoids below this don't occlude

uint32_t reverse_bits(uint32_t v) {
    v = (v << 16) | (v >> 16);
    v = ((v & 0x00ff00ffu) << 8) | ((v & 0xff00ff00u) >> 8);
    v = ((v & 0x0f0f0f0fu) << 4) | ((v & 0xf0f0f0f0u) >> 4);
    v = ((v & 0x33333333u) << 2) | ((v & 0xccccccccu) >> 2);
    v = ((v & 0x55555555u) << 1) | ((v & 0xaaaaaaaau) >> 1);
    return v;
}

uint32_t mix_seed(uint64_t seed, uint32_t salt) {
    uint64_t z = seed + 0x9e3779b97f4a7c15ull * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return static_cast<uint32_t>(z ^ (z >> 31));
}

// Orthonormal frame with n as the z axis.
void build_frame(const Vec3& n, Vec3& tangent, Vec3& bitangent) {
    const Vec3 ref =
        std::abs(n.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
    tangent = ref.cross(n).normalized();
    bitangent = n.cross(tangent);
}

// Deterministic uniform-sphere direction set (spherical Fibonacci).
std::vector<Vec3> fibonacci_sphere(int count) {
    std::vector<Vec3> dirs;
    dirs.reserve(static_cast<size_t>(count));
    const double golden = kPi * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < count; ++i) {
        const double y = 1.0 - 2.0 * (i + 0.5) / count;
        const double r = std::sqrt(std::max(0.0, 1.0 - y * y));
        const double phi = golden * i;
        dirs.emplace_back(r * std::cos(phi), y, r * std::sin(phi));
    }
    return dirs;
}

// Ray vs. the k_sigma-scaled ellipsoid of a Gaussian. Returns the
// nearest positive hit parameter, or a negative value on miss.
double ray_ellipsoid(const Vec3& origin, const Vec3& dir,
                     const GaussianPoint& g, double k_sigma) {
    const Mat3 rot = g.rotation.toRotationMatrix();
    const Vec3 axes = k_sigma * g.scale;
    const Vec3 p = (rot.transpose() * (origin - g.position)).cwiseQuotient(axes);
    const Vec3 u = (rot.transpose() * dir).cwiseQuotient(axes);
    const double a = u.squaredNorm();
    const double b = p.dot(u);
    const double c = p.squaredNorm() - 1.0;
    const double disc = b * b - a * c;
    if (disc < 0.0 || a <= 0.0) return -1.0;
    const double sq = std::sqrt(disc);
    const double t0 = (-b - sq) / a;
    if (t0 > 0.0) return t0;
    const double t1 = (-b + sq) / a;
    if (t1 > 0.0) return t1;
    return -1.0;
}

// Candidate occluders of one shading point, cone-culled per direction.
struct OccluderSet {
    struct Entry {
        size_t index;
        Vec3 to_center;   // unit
        double cos_cone;  // dot below this can't hit
        bool surrounds;   // origin inside the bounding sphere
    };
    std::vector<Entry> entries;

    OccluderSet(const GaussianScene& scene, size_t skip, const Vec3& origin,
                double k_sigma) {
        for (size_t j = 0; j < scene.points.size(); ++j) {
            if (j == skip) continue;
            const auto& o = scene.points[j];
            if (o.opacity < kOpaqueOpacity) continue;
            const Vec3 d = o.position - origin;
            const double dist = d.norm();
            const double radius = k_sigma * o.scale.maxCoeff();
            Entry e;
            e.index = j;
            if (dist <= radius || dist <= 0.0) {
                e.to_center = Vec3::UnitZ();
                e.cos_cone = 0.0;
                e.surrounds = true;
            } else {
                e.to_center = d / dist;
                const double s = radius / dist;
                e.cos_cone = std::sqrt(std::max(0.0, 1.0 - s * s));
                e.surrounds = false;
            }
            entries.push_back(e);
        }
    }

    // Nearest hit along dir; returns false when unoccluded.
    bool nearest(const GaussianScene& scene, const Vec3& origin,
                 const Vec3& dir, double k_sigma, size_t& hit_index,
                 double& hit_t) const {
        double best = -1.0;
        size_t best_j = 0;
        for (const auto& e : entries) {
            if (!e.surrounds && dir.dot(e.to_center) < e.cos_cone) continue;
            const double t =
                ray_ellipsoid(origin, dir, scene.points[e.index], k_sigma);
            if (t > 0.0 && (best < 0.0 || t < best)) {
                best = t;
                best_j = e.index;
            }
        }
        if (best < 0.0) return false;
        hit_index = best_j;
        hit_t = best;
        return true;
    }
};

double visibility_at(const GaussianPoint& g, const Vec3& dir,
                     const ShadingConfig& cfg) {
    double vis = sh_eval(g.visibility, dir, /*clamp01=*/true);
    if (cfg.shadow_mode == ShadowMode::kHard)
        vis = vis >= cfg.hard_threshold ? 1.0 : 0.0;
    return vis;
}

}  // namespace

std::vector<std::pair<Vec3, double>> sample_hemisphere(const Vec3& n,
                                                       int count,
                                                       uint64_t seed) {
    if (count < 1)
        throw std::runtime_error("sample_hemisphere: count must be >= 1");
    Vec3 tangent, bitangent;
    build_frame(n, tangent, bitangent);
    const uint32_t scramble = mix_seed(seed, 0);
    const double offset =
        mix_seed(seed, 1) * (1.0 / 4294967296.0);  // Cranley-Patterson shift

    std::vector<std::pair<Vec3, double>> samples;
    samples.reserve(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) {
        double u1 = (i + 0.5) / count + offset;
        if (u1 >= 1.0) u1 -= 1.0;
        const double u2 =
            (reverse_bits(static_cast<uint32_t>(i)) ^ scramble) *
            (1.0 / 4294967296.0);
        // cosine-weighted: pdf = cos(theta)/pi
        const double r = std::sqrt(u1);
        const double phi = 2.0 * kPi * u2;
        const double z = std::sqrt(1.0 - u1);
        const Vec3 dir = r * std::cos(phi) * tangent +
                         r * std::sin(phi) * bitangent + z * n;
        samples.emplace_back(dir, z / kPi);
    }
    return samples;
}

Vec3 shade_gaussian(const GaussianPoint& g, const Vec3& camera_center,
                    const EnvMap& prefiltered, double s_d,
                    const ShadingConfig& cfg) {
    if (cfg.sample_count < 1)
        throw std::runtime_error("shade_gaussian: sample_count must be >= 1");
    const Vec3 wo = (camera_center - g.position).normalized();
    if (!(wo.dot(g.normal) > 0.0)) return Vec3::Zero();  // facing away

    const auto samples = sample_hemisphere(g.normal, cfg.sample_count, cfg.seed);
    const BrdfMode mode =
        cfg.diffuse_only ? BrdfMode::kDiffuseOnly : BrdfMode::kFull;
    Vec3 acc = Vec3::Zero();
    for (const auto& [dir, pdf] : samples) {
        (void)pdf;  // cosine pdf cancels the (wi.n) factor: weight is pi
        const double vis = visibility_at(g, dir, cfg);
        const Vec3 direct = prefiltered.sample(dir);
        const Vec3 indirect(sh_eval(g.indirect[0], dir),
                            sh_eval(g.indirect[1], dir),
                            sh_eval(g.indirect[2], dir));
        const Vec3 radiance = compose_incident(vis, s_d, direct, indirect);
        const Vec3 f = brdf_eval(dir, wo, g.normal, g.albedo, g.roughness,
                                 mode, cfg.brdf);
        acc += kPi * radiance.cwiseProduct(f);
    }
    return (acc / cfg.sample_count).cwiseMax(0.0);
}

SHCoeffs bake_visibility(const GaussianScene& scene, size_t idx,
                         int dir_count, double k_sigma) {
    if (idx >= scene.points.size())
        throw std::runtime_error("bake_visibility: index out of range");
    if (dir_count < 64)
        throw std::runtime_error("bake_visibility: need at least 64 rays");
    const auto& g = scene.points[idx];
    const double eps = 1e-3 * g.scale.maxCoeff();
    const Vec3 origin = g.position + eps * g.normal;
    const OccluderSet occluders(scene, idx, origin, k_sigma);

    const auto dirs = fibonacci_sphere(dir_count);
    const double weight = 4.0 * kPi / dir_count;
    SHCoeffs v;
    for (const Vec3& dir : dirs) {
        size_t hit;
        double t;
        const bool occluded =
            occluders.nearest(scene, origin, dir, k_sigma, hit, t);
        if (occluded) continue;  // contributes 0
        const auto basis = sh_basis(dir);
        for (int i = 0; i < SHCoeffs::kCount; ++i) v[i] += weight * basis[i];
    }
    return v;
}

double ambient_occlusion(const SHCoeffs& visibility, const Vec3& n) {
    // Cosine-weighted sampling makes the plain mean the cosine-weighted
    // hemisphere average.
    const auto samples = sample_hemisphere(n, 256, /*seed=*/0);
    double acc = 0.0;
    for (const auto& [dir, pdf] : samples) {
        (void)pdf;
        acc += sh_eval(visibility, dir, /*clamp01=*/true);
    }
    return acc / 256.0;
}

std::array<SHCoeffs, 3> bake_indirect(const GaussianScene& scene, size_t idx,
                                      const EnvMap& prefiltered, double s_d,
                                      int dir_count, double k_sigma) {
    if (idx >= scene.points.size())
        throw std::runtime_error("bake_indirect: index out of range");
    if (dir_count < 64)
        throw std::runtime_error("bake_indirect: need at least 64 rays");
    const auto& g = scene.points[idx];
    const double eps = 1e-3 * g.scale.maxCoeff();
    const Vec3 origin = g.position + eps * g.normal;
    const OccluderSet occluders(scene, idx, origin, k_sigma);

    // One bounce: an occluded ray picks up the diffuse, direct-only
    // outgoing radiance of the Gaussian it hits. Cached per occluder.
    ShadingConfig bounce;
    bounce.sample_count = 64;
    bounce.diffuse_only = true;
    std::unordered_map<size_t, Vec3> shade_cache;
    auto occluder_shade = [&](size_t j) {
        auto it = shade_cache.find(j);
        if (it != shade_cache.end()) return it->second;
        GaussianPoint hit = scene.points[j];
        for (auto& ch : hit.indirect) ch = SHCoeffs{};  // direct light only
        const Vec3 toward = hit.position + hit.normal;
        const Vec3 shade = shade_gaussian(hit, toward, prefiltered, s_d, bounce);
        shade_cache.emplace(j, shade);
        return shade;
    };

    const auto dirs = fibonacci_sphere(dir_count);
    const double weight = 4.0 * kPi / dir_count;
    std::array<SHCoeffs, 3> l_ind{};
    for (const Vec3& dir : dirs) {
        size_t hit;
        double t;
        if (!occluders.nearest(scene, origin, dir, k_sigma, hit, t)) continue;
        const Vec3 radiance = occluder_shade(hit);
        const auto basis = sh_basis(dir);
        for (int ch = 0; ch < 3; ++ch)
            for (int i = 0; i < SHCoeffs::kCount; ++i)
                l_ind[static_cast<size_t>(ch)][i] +=
                    weight * radiance[ch] * basis[i];
    }
    return l_ind;
}

}  // namespace gsr
