#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "csgamma/cone.hpp"
#include "csgamma/holder.hpp"
#include "csgamma/space.hpp"
#include "csgamma/subspace.hpp"

namespace csgamma {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parsed problem description: one space, optional measure, and named
/// vectors, subspaces, and cones.  See formats.md for the JSON layout.
class ProblemFile {
 public:
  static ProblemFile parse_file(const std::string& path);
  static ProblemFile parse_text(const std::string& text);

  const Space& space() const { return *space_; }
  const std::optional<MeasureSpace>& measure() const { return measure_; }

  bool has_vector(const std::string& name) const { return vectors_.count(name) > 0; }
  bool has_subspace(const std::string& name) const { return subspaces_.count(name) > 0; }
  bool has_cone(const std::string& name) const { return cones_.count(name) > 0; }

  const Vector& vector(const std::string& name) const;
  /// Subspace with the named generators orthonormalized.
  Subspace subspace(const std::string& name) const;
  /// Cone over the real coordinate space.  For a complex problem space the
  /// generators pass through the real 2n embedding that preserves Re(x, y).
  UnionCone cone(const std::string& name) const;

  /// The space cones live in: the problem space itself when real, otherwise
  /// its real 2n embedding.
  const Space& cone_space() const { return *cone_space_; }
  bool cones_embedded() const { return cones_embedded_; }

 private:
  std::optional<Space> space_;
  std::optional<Space> cone_space_;
  bool cones_embedded_ = false;
  std::optional<MeasureSpace> measure_;
  std::map<std::string, Vector> vectors_;
  std::map<std::string, Mat> subspaces_;
  std::map<std::string, std::vector<Mat>> cones_;
};

}  // namespace csgamma
