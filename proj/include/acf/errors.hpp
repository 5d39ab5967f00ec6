// SPDX-License-Identifier: Apache-2.0
#ifndef ACF_ERRORS_HPP
#define ACF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace acf {

// Point outside the admissible spatial domain (hexagon, crypt surface).
class DomainError : public std::runtime_error {
public:
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid user-supplied parameter or configuration file.
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Mesh generation or periodic identification failure.
class MeshError : public std::runtime_error {
public:
  explicit MeshError(const std::string& msg) : std::runtime_error(msg) {}
};

// Linear solver breakdown, non-convergence or null-space mismatch.
class SolverError : public std::runtime_error {
public:
  explicit SolverError(const std::string& msg) : std::runtime_error(msg) {}
};

// Incompatible inputs to a post-processing step (meshes, time grids).
class ProtocolError : public std::runtime_error {
public:
  explicit ProtocolError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace acf

#endif
