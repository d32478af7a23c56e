#pragma once

#include <stdexcept>

namespace qbcap {

// Validation failures are typed so callers/tests can match on the category.

struct NonHermitian : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct BadDimension : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotTracePreserving : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotPositiveSemidefinite : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotNormalized : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotPure : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct LengthMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct InvalidXState : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotMajorized : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct GammaOutOfRange : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct GammaAtHalf : std::domain_error {
    using std::domain_error::domain_error;
};
struct StepTooCoarse : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnknownRelation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct InvalidParams : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct InvalidConfig : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace qbcap
