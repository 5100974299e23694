#include "hbill/error.hpp"

namespace hbill {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidModel: return "invalid-model";
        case ErrorCode::Domain: return "domain";
        case ErrorCode::GeometryViolation: return "geometry-violation";
        case ErrorCode::Tangency: return "tangency";
        case ErrorCode::DegenerateCrossing: return "degenerate-crossing";
        case ErrorCode::DegenerateOrbit: return "degenerate-orbit";
        case ErrorCode::Construction: return "construction";
        case ErrorCode::Insertion: return "insertion";
        case ErrorCode::NotAdmissible: return "not-admissible";
        case ErrorCode::Convergence: return "convergence";
        case ErrorCode::InvalidMinimizer: return "invalid-minimizer";
        case ErrorCode::Obstructed: return "obstructed";
        case ErrorCode::OutOfGuarantee: return "out-of-guarantee";
        case ErrorCode::Parse: return "parse";
    }
    return "unknown";
}

}  // namespace hbill
