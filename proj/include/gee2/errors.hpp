#ifndef GEE2_ERRORS_HPP
#define GEE2_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gee2 {

// Domain error kinds. The CLI maps these to JSON error objects; library
// callers can switch on code().
enum class Errc {
    NonPure,
    EmptyInput,
    InvalidSimplex,
    DimensionOutOfRange,
    FaceNotPresent,
    UnknownVertex,
    VertexOverlap,
    NotNormal,
    ResourceBound,
    NotDimension3,
    LinkNotQuadrilateral,
    EdgeNotMissing,
    LinkNotBoundaryOfSimplex,
    TauPresent,
    RidgeNotInterior,
    EdgePresent,
    PatternMismatch,
    LinkConditionFailed,
    MinimumVertices,
    NotSeparating,
    DiscDecompositionFailed,
    NotABall,
    ApexCollision,
    LinkNotStacked,
    InteriorFacePresent,
    VertexMissing,
    FreshVertexCollision,
    TauNotMissing,
    LinkNotSphere,
    NotAFacet,
    DimensionMismatch,
    IdentificationCollision,
    MissingCoordinate,
    HypothesisViolation,
    SearchExhausted,
    Usage,
    Io,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

} // namespace gee2

#endif
