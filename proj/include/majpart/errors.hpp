#pragma once

#include <stdexcept>
#include <string>

namespace majpart {

// Base for all errors raised at the library's API boundary. Internal
// invariants use assert(); callers only ever see these named types.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SelfLoop : Error {
    using Error::Error;
};
struct DuplicateEdge : Error {
    using Error::Error;
};
struct VertexOutOfRange : Error {
    using Error::Error;
};
struct SyntaxError : Error {
    using Error::Error;
};
struct InvariantViolation : Error {
    using Error::Error;
};
struct EmptyGraph : Error {
    using Error::Error;
};
struct SizeMismatch : Error {
    using Error::Error;
};
struct WrongK : Error {
    using Error::Error;
};
struct NotProperSubset : Error {
    using Error::Error;
};
struct StructureMismatch : Error {
    using Error::Error;
};
struct AnchorCollision : Error {
    using Error::Error;
};
struct MalformedFormula : Error {
    using Error::Error;
};
struct WitnessInvalid : Error {
    using Error::Error;
};
struct PartitionInvalid : Error {
    using Error::Error;
};
struct BadParity : Error {
    using Error::Error;
};
struct BadArgs : Error {
    using Error::Error;
};

}  // namespace majpart
