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

#ifndef GSR_DEMO_HPP
#define GSR_DEMO_HPP

#include "gsr/envlight.hpp"
#include "gsr/types.hpp"

namespace gsr {

// Two touching spheres of surface splats (lower centered at the origin,
// upper resting on top along +Y), outward normals, tangential discs.
// points_per_sphere defaults to ~2500 each for the bundled demo.
GaussianScene make_two_sphere_scene(int points_per_sphere = 2500);

// Soft 64x32 gradient sky, bright toward +Y. Intended to be used
// directly as a prefiltered map in the demo pipeline.
EnvMap make_demo_env(int width = 64, int height = 32);

// Camera looking at the two-sphere scene from the +Z side.
Camera make_demo_camera(int width = 512, int height = 512);

}  // namespace gsr

#endif  // GSR_DEMO_HPP
