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

// End-to-end checks of the command-line binaries. The paths come in via
// the GSR_CLI and GSR_MKDEMO environment variables set by CTest.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "gsr/image_io.hpp"

namespace {

namespace fs = std::filesystem;

std::string cli() {
    const char* p = std::getenv("GSR_CLI");
    REQUIRE(p != nullptr);
    return p;
}

std::string mkdemo() {
    const char* p = std::getenv("GSR_MKDEMO");
    REQUIRE(p != nullptr);
    return p;
}

int run(const std::string& cmd) {
    const int rc = std::system((cmd + " >/dev/null 2>&1").c_str());
    REQUIRE(rc != -1);
    return WEXITSTATUS(rc);
}

fs::path work_dir() {
    const auto dir = fs::temp_directory_path() / "gsr_cli_tests";
    fs::create_directories(dir);
    return dir;
}

std::string make_env_pfm(const fs::path& dir, float value) {
    gsr::AttributeImage img(32, 16, 3);
    for (float& f : img.data) f = value;
    const auto path = (dir / "env.pfm").string();
    gsr::write_pfm_file(path, img);
    return path;
}

}  // namespace

TEST_CASE("cli: usage errors exit with 2") {
    CHECK(run(cli()) == 2);
    CHECK(run(cli() + " frobnicate") == 2);
    CHECK(run(cli() + " prefilter") == 2);          // missing required options
    CHECK(run(cli() + " render --scene a") == 2);   // missing camera/out
}

TEST_CASE("cli: IO failures exit with 1") {
    const auto dir = work_dir();
    CHECK(run(cli() + " prefilter --env " + (dir / "missing.pfm").string() +
              " --out " + (dir / "o.pfm").string()) == 1);
    CHECK(run(cli() + " metrics --pred /nope.pfm --gt /nope.pfm --metric l1") ==
          1);
}

TEST_CASE("cli: prefilter writes a readable result") {
    const auto dir = work_dir();
    const auto env = make_env_pfm(dir, 1.0f);
    const auto out = (dir / "pre.pfm").string();
    CHECK(run(cli() + " prefilter --env " + env + " --out " + out +
              " --exponent 16 --width 8 --height 4") == 0);
    const auto img = gsr::read_pfm_file(out);
    CHECK(img.width == 8);
    CHECK(img.height == 4);
    CHECK(img.channels == 3);
    for (float f : img.data) CHECK(f > 0.0f);
}

TEST_CASE("cli: invalid shadow mode is a usage error") {
    const auto dir = work_dir();
    // the option is validated before any file is touched
    CHECK(run(cli() + " render --scene " + (dir / "s.gsc").string() +
              " --camera " + (dir / "c.txt").string() + " --out " +
              (dir / "o.pfm").string() + " --shadow crisp") == 2);
}

TEST_CASE("cli: demo generator and render pipeline") {
    const auto dir = work_dir() / "demo";
    CHECK(run(mkdemo() + " " + dir.string()) == 0);
    CHECK(fs::exists(dir / "scene.gsc"));
    CHECK(fs::exists(dir / "env.pfm"));
    CHECK(fs::exists(dir / "camera.txt"));
    CHECK(run(mkdemo()) == 2);

    // attribute render needs no environment and is cheap
    const auto out = (dir / "albedo.pfm").string();
    const auto png = (dir / "albedo.png").string();
    CHECK(run(cli() + " render --scene " + (dir / "scene.gsc").string() +
              " --camera " + (dir / "camera.txt").string() +
              " --mode albedo --out " + out + " --png " + png) == 0);
    const auto img = gsr::read_pfm_file(out);
    CHECK(img.width == 512);
    CHECK(img.channels == 3);
    CHECK(fs::file_size(png) > 0);
}

TEST_CASE("cli: metrics prints the value") {
    const auto dir = work_dir();
    const auto env = make_env_pfm(dir, 0.5f);
    const auto txt = (dir / "metric.txt").string();
    const int rc = std::system((cli() + " metrics --pred " + env + " --gt " +
                                env + " --metric psnr > " + txt + " 2>/dev/null")
                                   .c_str());
    REQUIRE(rc != -1);
    CHECK(WEXITSTATUS(rc) == 0);
    std::ifstream in(txt);
    double value = -1.0;
    in >> value;
    CHECK(value == 99.0);
}
