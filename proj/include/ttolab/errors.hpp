#pragma once

#include <stdexcept>
#include <string>

namespace ttolab {

// Base class for every error raised by this library. The CLI maps these to
// exit code 2 together with a machine-readable error object.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define TTOLAB_DEFINE_ERROR(NAME)                                     \
    class NAME : public Error {                                       \
    public:                                                           \
        explicit NAME(const std::string& message)                     \
            : Error(#NAME, message) {}                                \
    }

TTOLAB_DEFINE_ERROR(InvalidArgument);
TTOLAB_DEFINE_ERROR(PoleProximity);
TTOLAB_DEFINE_ERROR(IndexOutOfRange);
TTOLAB_DEFINE_ERROR(EmptySubset);
TTOLAB_DEFINE_ERROR(DuplicateZeros);
TTOLAB_DEFINE_ERROR(GridMismatch);
TTOLAB_DEFINE_ERROR(DimensionMismatch);
TTOLAB_DEFINE_ERROR(IllConditionedGram);
TTOLAB_DEFINE_ERROR(BasisMismatch);
TTOLAB_DEFINE_ERROR(NotTTO);
TTOLAB_DEFINE_ERROR(NotInModelSpace);
TTOLAB_DEFINE_ERROR(DegenerateConstraints);
TTOLAB_DEFINE_ERROR(SeparationTooSmall);
TTOLAB_DEFINE_ERROR(GenerationExhausted);

#undef TTOLAB_DEFINE_ERROR

}  // namespace ttolab
