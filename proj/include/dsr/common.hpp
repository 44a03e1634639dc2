#pragma once

#include <stdexcept>
#include <string>

namespace dsr {

// Contract violations surface as typed exceptions so callers (and the CLI
// exit-code mapping) can tell data problems from numerical ones.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NonPositiveDepth : Error {
  explicit NonPositiveDepth(const std::string& m = "depth must be > 0") : Error(m) {}
};
struct UnnormalizedDirection : Error {
  explicit UnnormalizedDirection(const std::string& m = "direction must be unit length") : Error(m) {}
};
struct InsufficientCorrespondences : Error {
  explicit InsufficientCorrespondences(const std::string& m) : Error(m) {}
};
struct DegenerateConfiguration : Error {
  explicit DegenerateConfiguration(const std::string& m) : Error(m) {}
};
struct ShapeMismatch : Error {
  explicit ShapeMismatch(const std::string& m) : Error(m) {}
};
struct NonScalarOutput : Error {
  explicit NonScalarOutput(const std::string& m = "backward requires a scalar output") : Error(m) {}
};
struct FrameOutOfRange : Error {
  explicit FrameOutOfRange(const std::string& m) : Error(m) {}
};
struct InvalidRange : Error {
  explicit InvalidRange(const std::string& m) : Error(m) {}
};
struct NotOnSurface : Error {
  explicit NotOnSurface(const std::string& m) : Error(m) {}
};
struct DegenerateNormal : Error {
  explicit DegenerateNormal(const std::string& m = "sdf gradient vanishes at anchor") : Error(m) {}
};
struct NoSilhouettes : Error {
  explicit NoSilhouettes(const std::string& m) : Error(m) {}
};
struct MissingPoseFile : Error {
  explicit MissingPoseFile(const std::string& m) : Error(m) {}
};
struct MissingChannel : Error {
  explicit MissingChannel(const std::string& m) : Error(m) {}
};
struct CorruptFile : Error {
  explicit CorruptFile(const std::string& m) : Error(m) {}
};
struct InconsistentFrameCount : Error {
  explicit InconsistentFrameCount(const std::string& m) : Error(m) {}
};
struct DegeneratePrimitive : Error {
  explicit DegeneratePrimitive(const std::string& m) : Error(m) {}
};
struct NoValidPixels : Error {
  explicit NoValidPixels(const std::string& m) : Error(m) {}
};
struct ImageTooSmall : Error {
  explicit ImageTooSmall(const std::string& m) : Error(m) {}
};
struct NumericalFailure : Error {
  explicit NumericalFailure(const std::string& m) : Error(m) {}
};

}  // namespace dsr
