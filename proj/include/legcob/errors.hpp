#pragma once

#include <stdexcept>
#include <string>

namespace legcob {

// All failures funnel through these so the CLI can map them to exit codes:
// bad input -> 2, everything the tool itself detects as false/failed -> 1.
struct SyntaxError : std::runtime_error {
  explicit SyntaxError(const std::string& m) : std::runtime_error(m) {}
};

struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& m) : std::runtime_error(m) {}
};

struct InvalidSite : std::runtime_error {
  explicit InvalidSite(const std::string& m) : std::runtime_error(m) {}
};

struct StepError : std::runtime_error {
  explicit StepError(const std::string& m) : std::runtime_error(m) {}
};

struct CrossingCapExceeded : std::runtime_error {
  explicit CrossingCapExceeded(const std::string& m) : std::runtime_error(m) {}
};

struct NonterminationGuard : std::runtime_error {
  explicit NonterminationGuard(const std::string& m) : std::runtime_error(m) {}
};

struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& m) : std::runtime_error(m) {}
};

struct DegenerateSample : std::runtime_error {
  explicit DegenerateSample(const std::string& m) : std::runtime_error(m) {}
};

struct PreconditionError : std::runtime_error {
  explicit PreconditionError(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace legcob
