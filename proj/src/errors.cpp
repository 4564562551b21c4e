#include "gee2/errors.hpp"

namespace gee2 {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NonPure: return "NonPure";
        case Errc::EmptyInput: return "EmptyInput";
        case Errc::InvalidSimplex: return "InvalidSimplex";
        case Errc::DimensionOutOfRange: return "DimensionOutOfRange";
        case Errc::FaceNotPresent: return "FaceNotPresent";
        case Errc::UnknownVertex: return "UnknownVertex";
        case Errc::VertexOverlap: return "VertexOverlap";
        case Errc::NotNormal: return "NotNormal";
        case Errc::ResourceBound: return "ResourceBound";
        case Errc::NotDimension3: return "NotDimension3";
        case Errc::LinkNotQuadrilateral: return "LinkNotQuadrilateral";
        case Errc::EdgeNotMissing: return "EdgeNotMissing";
        case Errc::LinkNotBoundaryOfSimplex: return "LinkNotBoundaryOfSimplex";
        case Errc::TauPresent: return "TauPresent";
        case Errc::RidgeNotInterior: return "RidgeNotInterior";
        case Errc::EdgePresent: return "EdgePresent";
        case Errc::PatternMismatch: return "PatternMismatch";
        case Errc::LinkConditionFailed: return "LinkConditionFailed";
        case Errc::MinimumVertices: return "MinimumVertices";
        case Errc::NotSeparating: return "NotSeparating";
        case Errc::DiscDecompositionFailed: return "DiscDecompositionFailed";
        case Errc::NotABall: return "NotABall";
        case Errc::ApexCollision: return "ApexCollision";
        case Errc::LinkNotStacked: return "LinkNotStacked";
        case Errc::InteriorFacePresent: return "InteriorFacePresent";
        case Errc::VertexMissing: return "VertexMissing";
        case Errc::FreshVertexCollision: return "FreshVertexCollision";
        case Errc::TauNotMissing: return "TauNotMissing";
        case Errc::LinkNotSphere: return "LinkNotSphere";
        case Errc::NotAFacet: return "NotAFacet";
        case Errc::DimensionMismatch: return "DimensionMismatch";
        case Errc::IdentificationCollision: return "IdentificationCollision";
        case Errc::MissingCoordinate: return "MissingCoordinate";
        case Errc::HypothesisViolation: return "HypothesisViolation";
        case Errc::SearchExhausted: return "SearchExhausted";
        case Errc::Usage: return "Usage";
        case Errc::Io: return "Io";
    }
    return "Unknown";
}

} // namespace gee2
