#pragma once

#include <stdexcept>
#include <string>

namespace auvms {

/// Euler pitch within tolerance of +-pi/2: the rate transform and the ZYX
/// extraction both degenerate there.
struct SingularPitch : std::runtime_error {
  explicit SingularPitch(const std::string& what) : std::runtime_error(what) {}
};

/// A bounded joint sits at or beyond a limit, where the limit cost is
/// undefined.
struct OutOfRange : std::domain_error {
  explicit OutOfRange(const std::string& what) : std::domain_error(what) {}
};

/// J W^-1 J^T is numerically singular at this configuration.
struct SingularJacobian : std::runtime_error {
  explicit SingularJacobian(const std::string& what)
      : std::runtime_error(what) {}
};

struct InvalidScenario : std::runtime_error {
  explicit InvalidScenario(const std::string& what)
      : std::runtime_error(what) {}
};

struct InvalidPath : std::runtime_error {
  explicit InvalidPath(const std::string& what) : std::runtime_error(what) {}
};

struct DegeneratePath : std::runtime_error {
  explicit DegeneratePath(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace auvms
