#pragma once

#include <stdexcept>
#include <string>

namespace fanogw {

// Base of every error raised by the library. name() is the stable
// machine-readable identifier (e.g. "NonExactDivision") that the CLI
// reports alongside the pipeline stage.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(what), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

#define FANOGW_DEFINE_ERROR(Type)                                   \
  class Type : public Error {                                       \
   public:                                                          \
    explicit Type(const std::string& what) : Error(#Type, what) {} \
  }

// exactmath
FANOGW_DEFINE_ERROR(DivisionByZero);
FANOGW_DEFINE_ERROR(NonExactDivision);
// grassmann
FANOGW_DEFINE_ERROR(AsymmetricSeries);
// lefschetz
FANOGW_DEFINE_ERROR(NotFano);
// relations
FANOGW_DEFINE_ERROR(GateViolation);
// solver
FANOGW_DEFINE_ERROR(ConsistencyCheckFailed);
FANOGW_DEFINE_ERROR(DegenerateLocus);
FANOGW_DEFINE_ERROR(NoRationalSolution);
FANOGW_DEFINE_ERROR(AmbiguousSolution);
// d3
FANOGW_DEFINE_ERROR(NotLeftDivisible);
FANOGW_DEFINE_ERROR(ObstructedRecursion);
FANOGW_DEFINE_ERROR(InvalidLevel);
// inputs that violate a documented precondition
FANOGW_DEFINE_ERROR(InvalidInput);

#undef FANOGW_DEFINE_ERROR

// An error surfaced by run_pipeline, tagged with the stage that raised it.
class StageError : public Error {
 public:
  StageError(std::string stage, const Error& inner)
      : Error(inner.name(), stage + ": " + inner.name() + ": " + inner.what()),
        stage_(std::move(stage)),
        detail_(inner.what()) {}

  const std::string& stage() const noexcept { return stage_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string stage_;
  std::string detail_;
};

}  // namespace fanogw
