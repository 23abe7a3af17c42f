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

// Writes the bundled two-sphere demo inputs (scene.gsc, env.pfm,
// camera.txt) into a target directory.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "gsr/demo.hpp"
#include "gsr/image_io.hpp"
#include "gsr/scene_io.hpp"

int main(int argc, char** argv) {
    if (argc != 2) {
        std::fprintf(stderr, "usage: %s <output-directory>\n", argv[0]);
        return 2;
    }
    try {
        const std::filesystem::path dir = argv[1];
        std::filesystem::create_directories(dir);

        const auto scene = gsr::make_two_sphere_scene();
        std::ofstream((dir / "scene.gsc").string(), std::ios::trunc)
            << gsr::serialize_scene(scene);

        gsr::write_pfm_file((dir / "env.pfm").string(),
                            gsr::image_from_env(gsr::make_demo_env()));

        std::ofstream((dir / "camera.txt").string(), std::ios::trunc)
            << gsr::serialize_camera(gsr::make_demo_camera());
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
