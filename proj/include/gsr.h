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

/* C API of the gsr relightable-Gaussian toolkit. Opaque handles, status
 * codes, thread-local error strings. All functions returning gsr_status
 * leave their outputs untouched on failure. */

#ifndef GSR_H
#define GSR_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gsr_status {
    GSR_OK = 0,
    GSR_ERROR = 1 /* IO or validation failure; see gsr_last_error() */
} gsr_status;

typedef struct gsr_scene gsr_scene;
typedef struct gsr_camera gsr_camera;
typedef struct gsr_image gsr_image; /* float image, optional mask */

/* Message of the last failure on this thread; empty string if none. */
const char* gsr_last_error(void);

/* ---- scenes (gsc text format) ---- */
gsr_status gsr_scene_load(const char* path, gsr_scene** out);
gsr_status gsr_scene_save(const gsr_scene* scene, const char* path);
size_t gsr_scene_size(const gsr_scene* scene);
void gsr_scene_free(gsr_scene* scene);

/* ---- cameras (labeled text format) ---- */
gsr_status gsr_camera_load(const char* path, gsr_camera** out);
void gsr_camera_free(gsr_camera* cam);

/* ---- images (PFM in/out, PNG out) ---- */
gsr_status gsr_image_load_pfm(const char* path, gsr_image** out);
gsr_status gsr_image_save_pfm(const gsr_image* img, const char* path);
gsr_status gsr_image_save_png(const gsr_image* img, const char* path);
int gsr_image_width(const gsr_image* img);
int gsr_image_height(const gsr_image* img);
int gsr_image_channels(const gsr_image* img);
const float* gsr_image_data(const gsr_image* img);
void gsr_image_free(gsr_image* img);

/* ---- pipeline operations ---- */

/* Cosine-power prefilter of an RGB environment map. */
gsr_status gsr_prefilter(const gsr_image* env, double exponent, int out_width,
                         int out_height, gsr_image** out);

/* Mean of a 1-channel scaling map over all pixels (or its mask). */
gsr_status gsr_average_scaling(const gsr_image* sd_map, double* out);

typedef struct gsr_render_opts {
    int sample_count;       /* rays per Gaussian, default 40 */
    unsigned long long seed;
    int hard_shadow;        /* 0 soft, 1 binarized visibility */
    double hard_threshold;  /* default 0.5 */
    int diffuse_only;
    double s_d;             /* direct-light scaling, default 1.0 */
} gsr_render_opts;

void gsr_render_opts_default(gsr_render_opts* opts);

/* mode: "pbr", "albedo", "normal", "ao", "roughness", "direct",
 * "indirect". env (a prefiltered map) may be NULL except for
 * pbr/direct/indirect. */
gsr_status gsr_render(const gsr_scene* scene, const gsr_camera* cam,
                      const gsr_image* env, const char* mode,
                      const gsr_render_opts* opts, gsr_image** out);

/* Depth map (1 channel; depth <= 0 is background) to a camera-facing
 * normal map. delta: optional 3-channel refinement offsets. */
gsr_status gsr_normals_from_depth(const gsr_image* depth,
                                  const gsr_camera* cam,
                                  const gsr_image* delta, gsr_image** out);

/* what: "visibility" or "indirect". env/s_d are only used for
 * "indirect". Rewrites the per-point SH attributes in place. */
gsr_status gsr_bake(gsr_scene* scene, const char* what, int dir_count,
                    double k_sigma, const gsr_image* env, double s_d);

/* metric: "psnr", "mae" (normal maps, degrees) or "l1". The optional
 * 1-channel mask marks foreground with values > 0.5. */
gsr_status gsr_metric(const gsr_image* pred, const gsr_image* gt,
                      const gsr_image* mask, const char* metric, double* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* GSR_H */
