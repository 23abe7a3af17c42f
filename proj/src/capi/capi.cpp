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

#include "gsr.h"

#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include "gsr/envlight.hpp"
#include "gsr/geometry.hpp"
#include "gsr/image_io.hpp"
#include "gsr/metrics.hpp"
#include "gsr/rasterizer.hpp"
#include "gsr/scene_io.hpp"
#include "gsr/shading.hpp"

struct gsr_scene {
    gsr::GaussianScene scene;
};
struct gsr_camera {
    gsr::Camera cam;
};
struct gsr_image {
    gsr::AttributeImage img;
};

namespace {

thread_local std::string g_last_error;

template <typename Fn>
gsr_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return GSR_OK;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return GSR_ERROR;
    }
}

std::string slurp(const char* path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error(std::string("cannot open ") + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const char* path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error(std::string("cannot open ") + path +
                                 " for writing");
    out << text;
    if (!out) throw std::runtime_error(std::string("short write to ") + path);
}

gsr::Channel parse_mode(const std::string& mode) {
    if (mode == "pbr") return gsr::Channel::kPbr;
    if (mode == "albedo") return gsr::Channel::kAlbedo;
    if (mode == "normal") return gsr::Channel::kNormal;
    if (mode == "ao") return gsr::Channel::kAo;
    if (mode == "roughness") return gsr::Channel::kRoughness;
    if (mode == "direct") return gsr::Channel::kDirect;
    if (mode == "indirect") return gsr::Channel::kIndirect;
    throw std::runtime_error("unknown render mode \"" + mode + "\"");
}

}  // namespace

extern "C" {

const char* gsr_last_error(void) { return g_last_error.c_str(); }

gsr_status gsr_scene_load(const char* path, gsr_scene** out) {
    return guarded([&] {
        auto s = std::make_unique<gsr_scene>();
        s->scene = gsr::parse_scene(slurp(path));
        *out = s.release();
    });
}

gsr_status gsr_scene_save(const gsr_scene* scene, const char* path) {
    return guarded([&] { spit(path, gsr::serialize_scene(scene->scene)); });
}

size_t gsr_scene_size(const gsr_scene* scene) {
    return scene->scene.points.size();
}

void gsr_scene_free(gsr_scene* scene) { delete scene; }

gsr_status gsr_camera_load(const char* path, gsr_camera** out) {
    return guarded([&] {
        auto c = std::make_unique<gsr_camera>();
        c->cam = gsr::parse_camera(slurp(path));
        *out = c.release();
    });
}

void gsr_camera_free(gsr_camera* cam) { delete cam; }

gsr_status gsr_image_load_pfm(const char* path, gsr_image** out) {
    return guarded([&] {
        auto i = std::make_unique<gsr_image>();
        i->img = gsr::read_pfm_file(path);
        *out = i.release();
    });
}

gsr_status gsr_image_save_pfm(const gsr_image* img, const char* path) {
    return guarded([&] { gsr::write_pfm_file(path, img->img); });
}

gsr_status gsr_image_save_png(const gsr_image* img, const char* path) {
    return guarded([&] { gsr::write_png_file(path, img->img); });
}

int gsr_image_width(const gsr_image* img) { return img->img.width; }
int gsr_image_height(const gsr_image* img) { return img->img.height; }
int gsr_image_channels(const gsr_image* img) { return img->img.channels; }
const float* gsr_image_data(const gsr_image* img) {
    return img->img.data.data();
}
void gsr_image_free(gsr_image* img) { delete img; }

gsr_status gsr_prefilter(const gsr_image* env, double exponent, int out_width,
                         int out_height, gsr_image** out) {
    return guarded([&] {
        gsr::PrefilterConfig cfg;
        cfg.exponent = exponent;
        cfg.out_width = out_width;
        cfg.out_height = out_height;
        const auto src = gsr::env_from_image(env->img);
        if (src.width != 2 * src.height)
            std::fputs("warning: environment map is not 2:1 equirectangular\n",
                       stderr);
        auto i = std::make_unique<gsr_image>();
        i->img = gsr::image_from_env(gsr::prefilter(src, cfg));
        *out = i.release();
    });
}

gsr_status gsr_average_scaling(const gsr_image* sd_map, double* out) {
    return guarded([&] { *out = gsr::average_scaling(sd_map->img); });
}

void gsr_render_opts_default(gsr_render_opts* opts) {
    opts->sample_count = 40;
    opts->seed = 0;
    opts->hard_shadow = 0;
    opts->hard_threshold = 0.5;
    opts->diffuse_only = 0;
    opts->s_d = 1.0;
}

gsr_status gsr_render(const gsr_scene* scene, const gsr_camera* cam,
                      const gsr_image* env, const char* mode,
                      const gsr_render_opts* opts, gsr_image** out) {
    return guarded([&] {
        gsr_render_opts defaults;
        gsr_render_opts_default(&defaults);
        if (!opts) opts = &defaults;
        gsr::ShadingConfig cfg;
        cfg.sample_count = opts->sample_count;
        cfg.seed = opts->seed;
        cfg.shadow_mode = opts->hard_shadow ? gsr::ShadowMode::kHard
                                            : gsr::ShadowMode::kSoft;
        cfg.hard_threshold = opts->hard_threshold;
        cfg.diffuse_only = opts->diffuse_only != 0;

        gsr::EnvMap prefiltered;
        const gsr::EnvMap* envp = nullptr;
        if (env) {
            prefiltered = gsr::env_from_image(env->img);
            envp = &prefiltered;
        }
        const auto res = gsr::rasterize(scene->scene, cam->cam,
                                        parse_mode(mode), envp, opts->s_d, cfg);
        auto i = std::make_unique<gsr_image>();
        i->img = res.image;
        *out = i.release();
    });
}

gsr_status gsr_normals_from_depth(const gsr_image* depth,
                                  const gsr_camera* cam,
                                  const gsr_image* delta, gsr_image** out) {
    return guarded([&] {
        const auto pos = gsr::position_map(depth->img, cam->cam);
        auto normals = gsr::coarse_normals(pos, cam->cam);
        if (delta) normals = gsr::refine_normals(normals, delta->img);
        auto i = std::make_unique<gsr_image>();
        i->img = normals;
        *out = i.release();
    });
}

gsr_status gsr_bake(gsr_scene* scene, const char* what, int dir_count,
                    double k_sigma, const gsr_image* env, double s_d) {
    return guarded([&] {
        const std::string kind = what ? what : "";
        auto& points = scene->scene.points;
        if (kind == "visibility") {
            std::vector<gsr::SHCoeffs> baked(points.size());
            for (size_t i = 0; i < points.size(); ++i)
                baked[i] = gsr::bake_visibility(scene->scene, i, dir_count,
                                                k_sigma);
            for (size_t i = 0; i < points.size(); ++i)
                points[i].visibility = baked[i];
        } else if (kind == "indirect") {
            if (!env)
                throw std::runtime_error(
                    "bake indirect needs an environment map");
            const auto prefiltered = gsr::env_from_image(env->img);
            std::vector<std::array<gsr::SHCoeffs, 3>> baked(points.size());
            for (size_t i = 0; i < points.size(); ++i)
                baked[i] = gsr::bake_indirect(scene->scene, i, prefiltered,
                                              s_d, dir_count, k_sigma);
            for (size_t i = 0; i < points.size(); ++i)
                points[i].indirect = baked[i];
        } else {
            throw std::runtime_error("unknown bake target \"" + kind + "\"");
        }
    });
}

gsr_status gsr_metric(const gsr_image* pred, const gsr_image* gt,
                      const gsr_image* mask, const char* metric, double* out) {
    return guarded([&] {
        gsr::AttributeImage p = pred->img;
        gsr::AttributeImage g = gt->img;
        if (mask) {
            const auto& m = mask->img;
            if (m.channels != 1 || m.width != p.width || m.height != p.height)
                throw std::runtime_error(
                    "mask must be 1-channel and match the images");
            std::vector<uint8_t> bits(m.data.size());
            for (size_t i = 0; i < m.data.size(); ++i)
                bits[i] = m.data[i] > 0.5f ? 1 : 0;
            p.mask = bits;
            g.mask = bits;
        }
        const std::string name = metric ? metric : "";
        if (name == "psnr")
            *out = gsr::psnr(p, g);
        else if (name == "mae")
            *out = gsr::mae_normals(p, g);
        else if (name == "l1")
            *out = gsr::l1_loss(p, g);
        else
            throw std::runtime_error("unknown metric \"" + name + "\"");
    });
}

}  // extern "C"
