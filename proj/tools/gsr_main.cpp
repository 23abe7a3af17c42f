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

// gsr command-line tool. Talks to the toolkit exclusively through the
// C API in gsr.h. Exit codes: 0 success, 1 IO/validation failure,
// 2 usage error.

#include <cstdio>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "gsr.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

[[noreturn]] void die() {
    std::fprintf(stderr, "error: %s\n", gsr_last_error());
    std::exit(kExitFailure);
}

using ImagePtr = std::unique_ptr<gsr_image, void (*)(gsr_image*)>;
using ScenePtr = std::unique_ptr<gsr_scene, void (*)(gsr_scene*)>;
using CameraPtr = std::unique_ptr<gsr_camera, void (*)(gsr_camera*)>;

ImagePtr load_image(const std::string& path) {
    gsr_image* img = nullptr;
    if (gsr_image_load_pfm(path.c_str(), &img) != GSR_OK) die();
    return ImagePtr(img, gsr_image_free);
}

ScenePtr load_scene(const std::string& path) {
    gsr_scene* s = nullptr;
    if (gsr_scene_load(path.c_str(), &s) != GSR_OK) die();
    return ScenePtr(s, gsr_scene_free);
}

CameraPtr load_camera(const std::string& path) {
    gsr_camera* c = nullptr;
    if (gsr_camera_load(path.c_str(), &c) != GSR_OK) die();
    return CameraPtr(c, gsr_camera_free);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"relightable Gaussian splatting toolkit"};
    app.require_subcommand(1);

    // prefilter
    auto* prefilter = app.add_subcommand(
        "prefilter", "cosine-power prefilter of an HDR environment map");
    std::string pf_env, pf_out;
    double pf_exp = 16.0;
    int pf_w = 64, pf_h = 32;
    prefilter->add_option("--env", pf_env, "input PFM")->required();
    prefilter->add_option("--out", pf_out, "output PFM")->required();
    prefilter->add_option("--exponent", pf_exp, "shininess exponent");
    prefilter->add_option("--width", pf_w, "output width");
    prefilter->add_option("--height", pf_h, "output height");

    // render
    auto* render = app.add_subcommand(
        "render", "rasterize a scene attribute or PBR color to an image");
    std::string r_scene, r_camera, r_env, r_mode = "pbr", r_out, r_png;
    std::string r_sd_map, r_shadow = "soft";
    int r_samples = 40;
    unsigned long long r_seed = 0;
    double r_sd = 1.0;
    bool r_diffuse_only = false;
    render->add_option("--scene", r_scene)->required();
    render->add_option("--camera", r_camera)->required();
    render->add_option("--env", r_env, "prefiltered environment PFM");
    render->add_option("--mode", r_mode,
                       "pbr|albedo|normal|ao|roughness|direct|indirect");
    render->add_option("--out", r_out, "output PFM")->required();
    render->add_option("--png", r_png, "also write a tonemapped PNG");
    render->add_option("--samples", r_samples, "rays per Gaussian");
    render->add_option("--seed", r_seed);
    render->add_option("--sd", r_sd, "direct-light scaling factor");
    render->add_option("--sd-map", r_sd_map,
                       "1-channel PFM averaged into the scaling factor");
    render->add_option("--shadow", r_shadow, "soft|hard");
    render->add_flag("--diffuse-only", r_diffuse_only);

    // normals
    auto* normals = app.add_subcommand(
        "normals", "depth map to camera-facing normal map");
    std::string n_depth, n_camera, n_out, n_delta;
    normals->add_option("--depth", n_depth)->required();
    normals->add_option("--camera", n_camera)->required();
    normals->add_option("--out", n_out)->required();
    normals->add_option("--delta", n_delta, "3-channel refinement offsets");

    // bake
    auto* bake = app.add_subcommand(
        "bake", "bake visibility or one-bounce indirect light into a scene");
    std::string b_scene, b_what, b_out, b_env;
    int b_dirs = 256;
    double b_k_sigma = 1.0, b_sd = 1.0;
    bake->add_option("--scene", b_scene)->required();
    bake->add_option("--what", b_what, "visibility|indirect")->required();
    bake->add_option("--out", b_out)->required();
    bake->add_option("--dirs", b_dirs, "ray directions per point");
    bake->add_option("--k-sigma", b_k_sigma, "occluder ellipsoid scale");
    bake->add_option("--env", b_env, "prefiltered environment (indirect)");
    bake->add_option("--sd", b_sd, "direct-light scaling (indirect)");

    // metrics
    auto* metrics = app.add_subcommand("metrics", "compare two images");
    std::string m_pred, m_gt, m_metric, m_mask;
    metrics->add_option("--pred", m_pred)->required();
    metrics->add_option("--gt", m_gt)->required();
    metrics->add_option("--metric", m_metric, "psnr|mae|l1")->required();
    metrics->add_option("--mask", m_mask, "1-channel foreground mask PFM");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (prefilter->parsed()) {
        auto env = load_image(pf_env);
        gsr_image* out = nullptr;
        if (gsr_prefilter(env.get(), pf_exp, pf_w, pf_h, &out) != GSR_OK)
            die();
        ImagePtr guard(out, gsr_image_free);
        if (gsr_image_save_pfm(out, pf_out.c_str()) != GSR_OK) die();
        return kExitOk;
    }

    if (render->parsed()) {
        if (r_shadow != "soft" && r_shadow != "hard") {
            std::fprintf(stderr, "error: --shadow must be soft or hard\n");
            return kExitUsage;
        }
        auto scene = load_scene(r_scene);
        auto camera = load_camera(r_camera);
        ImagePtr env(nullptr, gsr_image_free);
        if (!r_env.empty()) env = load_image(r_env);

        gsr_render_opts opts;
        gsr_render_opts_default(&opts);
        opts.sample_count = r_samples;
        opts.seed = r_seed;
        opts.diffuse_only = r_diffuse_only ? 1 : 0;
        opts.hard_shadow = r_shadow == "hard" ? 1 : 0;
        opts.s_d = r_sd;
        if (!r_sd_map.empty()) {
            auto sd_map = load_image(r_sd_map);
            if (gsr_average_scaling(sd_map.get(), &opts.s_d) != GSR_OK) die();
        }

        gsr_image* out = nullptr;
        if (gsr_render(scene.get(), camera.get(), env.get(), r_mode.c_str(),
                       &opts, &out) != GSR_OK)
            die();
        ImagePtr guard(out, gsr_image_free);
        if (gsr_image_save_pfm(out, r_out.c_str()) != GSR_OK) die();
        if (!r_png.empty() && gsr_image_save_png(out, r_png.c_str()) != GSR_OK)
            die();
        return kExitOk;
    }

    if (normals->parsed()) {
        auto depth = load_image(n_depth);
        auto camera = load_camera(n_camera);
        ImagePtr delta(nullptr, gsr_image_free);
        if (!n_delta.empty()) delta = load_image(n_delta);
        gsr_image* out = nullptr;
        if (gsr_normals_from_depth(depth.get(), camera.get(), delta.get(),
                                   &out) != GSR_OK)
            die();
        ImagePtr guard(out, gsr_image_free);
        if (gsr_image_save_pfm(out, n_out.c_str()) != GSR_OK) die();
        return kExitOk;
    }

    if (bake->parsed()) {
        auto scene = load_scene(b_scene);
        ImagePtr env(nullptr, gsr_image_free);
        if (!b_env.empty()) env = load_image(b_env);
        if (gsr_bake(scene.get(), b_what.c_str(), b_dirs, b_k_sigma,
                     env.get(), b_sd) != GSR_OK)
            die();
        if (gsr_scene_save(scene.get(), b_out.c_str()) != GSR_OK) die();
        return kExitOk;
    }

    if (metrics->parsed()) {
        auto pred = load_image(m_pred);
        auto gt = load_image(m_gt);
        ImagePtr mask(nullptr, gsr_image_free);
        if (!m_mask.empty()) mask = load_image(m_mask);
        double value = 0.0;
        if (gsr_metric(pred.get(), gt.get(), mask.get(), m_metric.c_str(),
                       &value) != GSR_OK)
            die();
        std::printf("%.9g\n", value);
        return kExitOk;
    }

    return kExitUsage;
}
