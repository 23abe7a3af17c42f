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

#include "gsr/scene_io.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace gsr {

namespace {

constexpr int kRecordNumbers = 82;  // 3+4+3+1+3+3+1+16+48
constexpr double kRenormTol = 1e-3;

[[noreturn]] void fail(const std::string& msg) {
    throw std::runtime_error(msg);
}

void append_number(std::string& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    out += buf;
}

double parse_number(std::istringstream& in, const char* what, size_t line) {
    double v;
    if (!(in >> v)) {
        fail("scene: missing or malformed " + std::string(what) +
             " on record line " + std::to_string(line));
    }
    if (!std::isfinite(v)) {
        fail("scene: non-finite " + std::string(what) + " on record line " +
             std::to_string(line));
    }
    return v;
}

// Renormalize to unit length if within tol, else report an invariant
// violation.
template <typename V>
V renormalized(const V& v, const char* what, size_t line) {
    double n = v.norm();
    if (std::abs(n - 1.0) > kRenormTol) {
        fail("scene: invariant violation, |" + std::string(what) + "| = " +
             std::to_string(n) + " on record line " + std::to_string(line));
    }
    return v / n;
}

}  // namespace

void GaussianScene::recompute_bbox() {
    if (points.empty()) {
        bbox_min = bbox_max = Vec3::Zero();
        return;
    }
    bbox_min = bbox_max = points.front().position;
    for (const auto& g : points) {
        bbox_min = bbox_min.cwiseMin(g.position);
        bbox_max = bbox_max.cwiseMax(g.position);
    }
}

void validate_point(const GaussianPoint& g) {
    if (!g.position.allFinite()) fail("point: non-finite position");
    if (std::abs(g.rotation.norm() - 1.0) > 1e-6)
        fail("point: invariant violation, quaternion not unit");
    if (!(g.scale.minCoeff() > 0.0))
        fail("point: invariant violation, scale must be positive");
    if (!(g.opacity >= 0.0 && g.opacity <= 1.0))
        fail("point: invariant violation, opacity outside [0,1]");
    if (std::abs(g.normal.norm() - 1.0) > 1e-6)
        fail("point: invariant violation, normal not unit");
    if (!(g.albedo.minCoeff() >= 0.0 && g.albedo.maxCoeff() <= 1.0))
        fail("point: invariant violation, albedo outside [0,1]^3");
    if (!(g.roughness >= 0.0 && g.roughness <= 1.0))
        fail("point: invariant violation, roughness outside [0,1]");
}

GaussianScene parse_scene(const std::string& text) {
    std::istringstream in(text);
    std::string magic;
    int version = 0;
    if (!(in >> magic >> version) || magic != "gsc" || version != 1)
        fail("scene: expected header \"gsc 1\"");
    long long count = -1;
    if (!(in >> count) || count < 0) fail("scene: bad point count");

    GaussianScene scene;
    scene.points.reserve(static_cast<size_t>(count));
    std::string line;
    std::getline(in, line);  // rest of the count line
    size_t records = 0;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        // skip blank lines
        {
            std::string probe;
            std::istringstream p(line);
            if (!(p >> probe)) continue;
        }
        if (static_cast<long long>(records) >= count)
            fail("scene: more records than the declared count");
        size_t ln = records + 1;
        GaussianPoint g;
        for (int i = 0; i < 3; ++i)
            g.position[i] = parse_number(ls, "position", ln);
        double qw = parse_number(ls, "rotation", ln);
        double qx = parse_number(ls, "rotation", ln);
        double qy = parse_number(ls, "rotation", ln);
        double qz = parse_number(ls, "rotation", ln);
        g.rotation = Quat(qw, qx, qy, qz);
        for (int i = 0; i < 3; ++i)
            g.scale[i] = parse_number(ls, "scale", ln);
        g.opacity = parse_number(ls, "opacity", ln);
        for (int i = 0; i < 3; ++i)
            g.normal[i] = parse_number(ls, "normal", ln);
        for (int i = 0; i < 3; ++i)
            g.albedo[i] = parse_number(ls, "albedo", ln);
        g.roughness = parse_number(ls, "roughness", ln);
        for (int i = 0; i < 16; ++i)
            g.visibility[i] = parse_number(ls, "visibility", ln);
        for (int ch = 0; ch < 3; ++ch)
            for (int i = 0; i < 16; ++i)
                g.indirect[static_cast<size_t>(ch)][i] =
                    parse_number(ls, "indirect", ln);
        double extra;
        if (ls >> extra)
            fail("scene: record line " + std::to_string(ln) + " has more than " +
                 std::to_string(kRecordNumbers) + " numbers");

        Eigen::Vector4d q(g.rotation.w(), g.rotation.x(), g.rotation.y(),
                          g.rotation.z());
        q = renormalized(q, "r", ln);
        g.rotation = Quat(q[0], q[1], q[2], q[3]);
        g.normal = renormalized(g.normal, "n", ln);
        validate_point(g);
        scene.points.push_back(g);
        ++records;
    }
    if (static_cast<long long>(records) != count)
        fail("scene: declared " + std::to_string(count) + " records, found " +
             std::to_string(records));
    scene.recompute_bbox();
    return scene;
}

std::string serialize_scene(const GaussianScene& scene) {
    std::string out = "gsc 1\n" + std::to_string(scene.points.size()) + "\n";
    for (const auto& g : scene.points) {
        double rec[kRecordNumbers];
        int k = 0;
        for (int i = 0; i < 3; ++i) rec[k++] = g.position[i];
        rec[k++] = g.rotation.w();
        rec[k++] = g.rotation.x();
        rec[k++] = g.rotation.y();
        rec[k++] = g.rotation.z();
        for (int i = 0; i < 3; ++i) rec[k++] = g.scale[i];
        rec[k++] = g.opacity;
        for (int i = 0; i < 3; ++i) rec[k++] = g.normal[i];
        for (int i = 0; i < 3; ++i) rec[k++] = g.albedo[i];
        rec[k++] = g.roughness;
        for (int i = 0; i < 16; ++i) rec[k++] = g.visibility[i];
        for (int ch = 0; ch < 3; ++ch)
            for (int i = 0; i < 16; ++i)
                rec[k++] = g.indirect[static_cast<size_t>(ch)][i];
        for (int i = 0; i < kRecordNumbers; ++i) {
            if (i) out += ' ';
            append_number(out, rec[i]);
        }
        out += '\n';
    }
    return out;
}

void validate_camera(const Camera& cam) {
    Mat3 gram = cam.R.transpose() * cam.R;
    if ((gram - Mat3::Identity()).cwiseAbs().maxCoeff() > 1e-4)
        fail("camera: R is not orthonormal");
    if (std::abs(cam.R.determinant() - 1.0) > 1e-4)
        fail("camera: det R != 1");
    if (!(cam.fx > 0.0 && cam.fy > 0.0))
        fail("camera: focal lengths must be positive");
    if (cam.width < 0 || cam.height < 0) fail("camera: negative size");
}

Camera parse_camera(const std::string& text) {
    std::istringstream in(text);
    Camera cam;
    bool have_k = false, have_r = false, have_t = false, have_size = false;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string label;
        if (!(ls >> label)) continue;
        if (label == "fx") {
            std::string l2, l3, l4;
            if (!(ls >> l2 >> l3 >> l4) || l2 != "fy" || l3 != "cx" ||
                l4 != "cy")
                fail("camera: malformed intrinsics label");
            if (!(ls >> cam.fx >> cam.fy >> cam.cx >> cam.cy))
                fail("camera: malformed intrinsics values");
            have_k = true;
        } else if (label == "R") {
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c)
                    if (!(ls >> cam.R(r, c))) fail("camera: malformed R");
            have_r = true;
        } else if (label == "t") {
            for (int i = 0; i < 3; ++i)
                if (!(ls >> cam.t[i])) fail("camera: malformed t");
            have_t = true;
        } else if (label == "size") {
            if (!(ls >> cam.width >> cam.height))
                fail("camera: malformed size");
            have_size = true;
        } else {
            fail("camera: unknown label \"" + label + "\"");
        }
    }
    if (!(have_k && have_r && have_t && have_size))
        fail("camera: missing one of fx/R/t/size");
    validate_camera(cam);
    return cam;
}

std::string serialize_camera(const Camera& cam) {
    std::string out = "fx fy cx cy";
    for (double v : {cam.fx, cam.fy, cam.cx, cam.cy}) {
        out += ' ';
        append_number(out, v);
    }
    out += "\nR";
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            out += ' ';
            append_number(out, cam.R(r, c));
        }
    out += "\nt";
    for (int i = 0; i < 3; ++i) {
        out += ' ';
        append_number(out, cam.t[i]);
    }
    out += "\nsize " + std::to_string(cam.width) + ' ' +
           std::to_string(cam.height) + '\n';
    return out;
}

}  // namespace gsr
