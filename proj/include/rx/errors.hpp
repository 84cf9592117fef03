#ifndef RX_ERRORS_HPP
#define RX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rx {

// Geometry and engine precondition failures. The CLI maps these to exit code 2.
struct GeometryError : std::runtime_error {
    explicit GeometryError(const std::string& msg) : std::runtime_error(msg) {}
};

struct EmptyInputError : GeometryError {
    explicit EmptyInputError(const std::string& msg = "empty input") : GeometryError(msg) {}
};
struct NotFullDimensionalError : GeometryError {
    explicit NotFullDimensionalError(const std::string& msg = "point set is not full-dimensional")
        : GeometryError(msg) {}
};
struct OriginNotInteriorError : GeometryError {
    explicit OriginNotInteriorError(const std::string& msg = "origin is not strictly interior")
        : GeometryError(msg) {}
};
struct UnboundedDirectionError : GeometryError {
    explicit UnboundedDirectionError(const std::string& msg = "ray does not leave the polytope")
        : GeometryError(msg) {}
};
struct FaceNotInPolytopeError : GeometryError {
    explicit FaceNotInPolytopeError(const std::string& msg = "point is not a boundary point of the polytope")
        : GeometryError(msg) {}
};
struct NotUnimodularError : GeometryError {
    explicit NotUnimodularError(const std::string& msg = "matrix is not unimodular") : GeometryError(msg) {}
};
struct DirectionNotInDualConeError : GeometryError {
    explicit DirectionNotInDualConeError(const std::string& msg = "direction pairs nonpositively with the ray")
        : GeometryError(msg) {}
};
struct ZeroVolumeError : GeometryError {
    explicit ZeroVolumeError(const std::string& msg = "density integrates to zero") : GeometryError(msg) {}
};
struct InconsistentBarycentersError : GeometryError {
    explicit InconsistentBarycentersError(const std::string& msg) : GeometryError(msg) {}
};
struct DegenerateBoundingBoxError : GeometryError {
    explicit DegenerateBoundingBoxError(const std::string& msg = "bounding box has empty interior")
        : GeometryError(msg) {}
};
struct UnsupportedDimensionError : GeometryError {
    explicit UnsupportedDimensionError(const std::string& msg = "operation only supports dimension 2")
        : GeometryError(msg) {}
};
struct DivisionByZeroError : GeometryError {
    explicit DivisionByZeroError(const std::string& msg = "rational division by zero") : GeometryError(msg) {}
};

// Input document failures. The CLI maps these to exit code 1.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};
struct JsonSyntaxError : InputError {
    explicit JsonSyntaxError(const std::string& msg) : InputError(msg) {}
};
struct SchemaError : InputError {
    std::string path;
    SchemaError(std::string where, const std::string& msg)
        : InputError(where + ": " + msg), path(std::move(where)) {}
};
struct RationalParseError : InputError {
    explicit RationalParseError(const std::string& msg) : InputError(msg) {}
};

} // namespace rx

#endif
