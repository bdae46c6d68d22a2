// Copyright (c) 2026 The cutbddc authors
// SPDX-License-Identifier: Apache-2.0

#ifndef CUTBDDC_LEVELSET_HPP
#define CUTBDDC_LEVELSET_HPP

#include <functional>
#include <map>
#include <string>

#include "core/common.hpp"

namespace cutbddc {

// Implicit geometry: the domain is { x : phi(x) < 0 }.
struct LevelSet {
  std::string name;
  std::function<double(const Vec3&)> phi;
  std::function<Vec3(const Vec3&)> grad;
};

struct BoundingBox {
  Vec3 lo = Vec3::Zero();
  Vec3 hi = Vec3::Zero();
};

// Named shapes with their default bounding boxes. Shape parameters come
// from the experiment config ("geometry.*" keys); defaults are chosen so
// the solver studies run out of the box and are documented in the README.
struct GeometryCatalog {
  // dim is 2 or 3; params override the documented defaults.
  static LevelSet make(const std::string& name, int dim, const std::map<std::string, double>& params);
  static BoundingBox default_box(const std::string& name, int dim, const std::map<std::string, double>& params);
  static bool known(const std::string& name);
};

}  // namespace cutbddc

#endif
