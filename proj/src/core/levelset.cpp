// Copyright (c) 2026 The cutbddc authors
// SPDX-License-Identifier: Apache-2.0

#include "core/levelset.hpp"

#include <cmath>
#include <numbers>

namespace cutbddc {

namespace {

double get(const std::map<std::string, double>& p, const std::string& key, double dflt) {
  auto it = p.find(key);
  return it == p.end() ? dflt : it->second;
}

Vec3 getv(const std::map<std::string, double>& p, const std::string& key, const Vec3& dflt) {
  return Vec3(get(p, key + "_x", dflt[0]), get(p, key + "_y", dflt[1]), get(p, key + "_z", dflt[2]));
}

LevelSet make_sphere(int dim, const std::map<std::string, double>& p) {
  const double r = get(p, "radius", 0.7);
  const Vec3 c = getv(p, "center", Vec3::Zero());
  LevelSet ls;
  ls.name = dim == 2 ? "disk" : "sphere";
  ls.phi = [r, c, dim](const Vec3& x) {
    Vec3 d = x - c;
    if (dim == 2) d[2] = 0.0;
    return d.norm() - r;
  };
  ls.grad = [c, dim](const Vec3& x) {
    Vec3 d = x - c;
    if (dim == 2) d[2] = 0.0;
    double n = d.norm();
    return n > 0 ? Vec3(d / n) : Vec3(1, 0, 0);
  };
  return ls;
}

// Classic popcorn flake: sphere of radius r0 with Gaussian bumps placed at
// the twelve dodecahedral directions.
LevelSet make_popcorn(const std::map<std::string, double>& p) {
  const double r0 = get(p, "r0", 0.6);
  const double sigma = get(p, "sigma", 0.2);
  const double amp = get(p, "amplitude", 2.0);
  std::vector<Vec3> centers;
  const double pi = std::numbers::pi;
  for (int k = 0; k < 5; ++k)
    centers.push_back(r0 / std::sqrt(5.0) * Vec3(2 * std::cos(2 * k * pi / 5), 2 * std::sin(2 * k * pi / 5), 1.0));
  for (int k = 0; k < 5; ++k)
    centers.push_back(r0 / std::sqrt(5.0) *
                      Vec3(2 * std::cos((2 * k - 1) * pi / 5), 2 * std::sin((2 * k - 1) * pi / 5), -1.0));
  centers.push_back(Vec3(0, 0, r0));
  centers.push_back(Vec3(0, 0, -r0));
  LevelSet ls;
  ls.name = "popcorn";
  ls.phi = [=](const Vec3& x) {
    double v = x.norm() - r0;
    for (const auto& c : centers) v -= amp * std::exp(-(x - c).squaredNorm() / (sigma * sigma));
    return v;
  };
  ls.grad = [=](const Vec3& x) {
    double n = x.norm();
    Vec3 g = n > 0 ? Vec3(x / n) : Vec3(1, 0, 0);
    for (const auto& c : centers)
      g += amp * std::exp(-(x - c).squaredNorm() / (sigma * sigma)) * 2.0 / (sigma * sigma) * (x - c);
    return g;
  };
  return ls;
}

double box_phi(const Vec3& x, const Vec3& c, const Vec3& half) {
  Vec3 d = (x - c).cwiseAbs() - half;
  return d.maxCoeff();
}

Vec3 box_grad(const Vec3& x, const Vec3& c, const Vec3& half) {
  Vec3 d = (x - c).cwiseAbs() - half;
  int k = 0;
  d.maxCoeff(&k);
  Vec3 g = Vec3::Zero();
  g[k] = x[k] >= c[k] ? 1.0 : -1.0;
  return g;
}

// Cuboid with a square through-hole along z.
LevelSet make_block(const std::map<std::string, double>& p, const Vec3& center) {
  const Vec3 outer = getv(p, "outer", Vec3(1.6, 1.6, 0.7));
  const Vec3 hole = getv(p, "hole", Vec3(0.8, 0.8, 0.0));
  LevelSet ls;
  ls.name = "block";
  ls.phi = [=](const Vec3& x) {
    double outer_phi = box_phi(x, center, outer);
    Vec3 d2((x - center).cwiseAbs()[0] - hole[0], (x - center).cwiseAbs()[1] - hole[1], 0.0);
    double hole_phi = std::max(d2[0], d2[1]);
    return std::max(outer_phi, -hole_phi);
  };
  ls.grad = [=](const Vec3& x) {
    double outer_phi = box_phi(x, center, outer);
    Vec3 dabs = (x - center).cwiseAbs();
    double hole_phi = std::max(dabs[0] - hole[0], dabs[1] - hole[1]);
    if (outer_phi >= -hole_phi) return box_grad(x, center, outer);
    Vec3 g = Vec3::Zero();
    int k = (dabs[0] - hole[0] >= dabs[1] - hole[1]) ? 0 : 1;
    g[k] = x[k] >= center[k] ? -1.0 : 1.0;
    return g;
  };
  return ls;
}

LevelSet make_block_array(const std::map<std::string, double>& p) {
  const double spacing = get(p, "spacing", 3.65);
  std::map<std::string, double> q = p;
  if (!q.count("outer_x")) {
    q["outer_x"] = q["outer_y"] = 1.6;
    q["outer_z"] = 0.7;
  }
  if (!q.count("hole_x")) {
    q["hole_x"] = q["hole_y"] = 0.8;
    q["hole_z"] = 0.0;
  }
  std::vector<LevelSet> parts;
  for (int i = -1; i <= 1; ++i)
    for (int j = -1; j <= 1; ++j)
      for (int k = -1; k <= 1; ++k) parts.push_back(make_block(q, spacing * Vec3(i, j, k)));
  LevelSet ls;
  ls.name = "block-array";
  ls.phi = [parts](const Vec3& x) {
    double v = parts[0].phi(x);
    for (size_t i = 1; i < parts.size(); ++i) v = std::min(v, parts[i].phi(x));
    return v;
  };
  ls.grad = [parts](const Vec3& x) {
    double v = parts[0].phi(x);
    size_t arg = 0;
    for (size_t i = 1; i < parts.size(); ++i) {
      double w = parts[i].phi(x);
      if (w < v) {
        v = w;
        arg = i;
      }
    }
    return parts[arg].grad(x);
  };
  return ls;
}

// Helical tube of given pitch, truncated to |z| <= zmax: the distance to
// the helix is minimized over the unwrapped branches (a boolean min), and
// the truncation is a boolean max with two planes.
LevelSet make_spiral(const std::map<std::string, double>& p) {
  const double rh = get(p, "helix_radius", 0.65);
  const double rt = get(p, "tube_radius", 0.24);
  const double rise = get(p, "rise_per_radian", 0.143);
  const double zmax = get(p, "zmax", 0.9);
  const double pi = std::numbers::pi;
  auto branch = [=](const Vec3& x) {
    double rho = std::hypot(x[0], x[1]);
    double theta = std::atan2(x[1], x[0]);
    // nearest unwrapped branch of z = rise * (theta + 2 pi k)
    double k = std::round((x[2] / rise - theta) / (2 * pi));
    double dz = x[2] - rise * (theta + 2 * pi * k);
    double tube = std::sqrt((rho - rh) * (rho - rh) + dz * dz) - rt;
    return tube;
  };
  LevelSet ls;
  ls.name = "spiral";
  ls.phi = [=](const Vec3& x) { return std::max(branch(x), std::abs(x[2]) - zmax); };
  ls.grad = [=](const Vec3& x) {
    // numerical gradient is fine here: only used for diagnostics
    const double h = 1e-7;
    Vec3 g;
    for (int a = 0; a < 3; ++a) {
      Vec3 xp = x, xm = x;
      xp[a] += h;
      xm[a] -= h;
      g[a] = (std::max(branch(xp), std::abs(xp[2]) - zmax) - std::max(branch(xm), std::abs(xm[2]) - zmax)) / (2 * h);
    }
    return g;
  };
  return ls;
}

// 2D rectangle whose left side sits at x = interface - offset; used by the
// preconditioner breakdown study. The other three sides coincide with the
// bounding box.
LevelSet make_rect_offset(const std::map<std::string, double>& p) {
  const double interface_x = get(p, "interface_x", 0.5);
  const double offset = get(p, "offset", 0.05);
  const double edge = interface_x - offset;
  LevelSet ls;
  ls.name = "rect-offset";
  ls.phi = [edge](const Vec3& x) { return edge - x[0]; };
  ls.grad = [](const Vec3&) { return Vec3(-1, 0, 0); };
  return ls;
}

LevelSet make_all_inside() {
  LevelSet ls;
  ls.name = "all-inside";
  ls.phi = [](const Vec3&) { return -1.0; };
  ls.grad = [](const Vec3&) { return Vec3(1, 0, 0); };
  return ls;
}

}  // namespace

bool GeometryCatalog::known(const std::string& name) {
  return name == "sphere" || name == "popcorn" || name == "block" || name == "block-array" ||
         name == "spiral" || name == "rect-offset" || name == "box";
}

LevelSet GeometryCatalog::make(const std::string& name, int dim, const std::map<std::string, double>& params) {
  if (name == "sphere") return make_sphere(dim, params);
  if (name == "popcorn") return make_popcorn(params);
  if (name == "block") return make_block(params, getv(params, "center", Vec3::Zero()));
  if (name == "block-array") return make_block_array(params);
  if (name == "spiral") return make_spiral(params);
  if (name == "rect-offset") return make_rect_offset(params);
  if (name == "box") return make_all_inside();
  fail(ErrorCode::Config, "unknown geometry '" + name + "'");
}

BoundingBox GeometryCatalog::default_box(const std::string& name, int dim, const std::map<std::string, double>& params) {
  BoundingBox bb;
  if (name == "sphere" || name == "popcorn") {
    bb.lo = Vec3(-1, -1, dim == 2 ? 0 : -1);
    bb.hi = Vec3(1, 1, dim == 2 ? 0 : 1);
  } else if (name == "block") {
    bb.lo = Vec3(-1.85, -1.85, -1.85);
    bb.hi = Vec3(1.85, 1.85, 1.85);
  } else if (name == "block-array") {
    bb.lo = Vec3(-5.45, -5.45, -5.45);
    bb.hi = Vec3(5.45, 5.45, 5.45);
  } else if (name == "spiral") {
    bb.lo = Vec3(-1.2, -1.2, -1.2);
    bb.hi = Vec3(1.2, 1.2, 1.2);
  } else if (name == "rect-offset") {
    bb.lo = Vec3(0, 0, 0);
    bb.hi = Vec3(2, 1, 0);
  } else if (name == "box") {
    bb.lo = Vec3(0, 0, 0);
    bb.hi = Vec3(1, 1, dim == 2 ? 0 : 1);
  } else {
    fail(ErrorCode::Config, "unknown geometry '" + name + "'");
  }
  (void)params;
  return bb;
}

}  // namespace cutbddc
